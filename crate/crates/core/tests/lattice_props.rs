//! Structural laws of the triple intersection products on the bundle `P`
//! and the cover `Y`: symmetry, trilinearity, agreement with an independent
//! closed form, integrality on the cover, and probe positivity across the
//! admissible family.

mod common;

use common::{coefficients, symbolic_classes};
use noetherline::doublecover::{self, curve_probes, triple_intersect_y, CoverDivisorClass};
use noetherline::family::{admissible_regions, enumerate};
use noetherline::pbundle::{BundleDivisorClass, BundleGeometry};
use noetherline::Coefficient;
use proptest::prelude::*;

fn bundle_classes() -> impl Strategy<Value = BundleDivisorClass> {
    (coefficients(), symbolic_classes())
        .prop_map(|(epsilon, base)| BundleDivisorClass::new(epsilon, base))
}

fn cover_classes() -> impl Strategy<Value = CoverDivisorClass> {
    (coefficients(), symbolic_classes()).prop_map(|(mu, base)| CoverDivisorClass::new(mu, base))
}

/// Independent evaluation of the triple product on `P`: the fully expanded
/// closed form, never touching the rewrite loop in the implementation.
fn closed_form_triple(
    geom: &BundleGeometry,
    d1: &BundleDivisorClass,
    d2: &BundleDivisorClass,
    d3: &BundleDivisorClass,
) -> Coefficient {
    let e = geom.e();
    let d0 = geom.d0();
    let pair = |x: &noetherline::SurfaceDivisorClass, y: &noetherline::SurfaceDivisorClass| {
        x.intersect(y, e)
    };
    let (e1, e2, e3) = (&d1.epsilon, &d2.epsilon, &d3.epsilon);
    let (c1, c2, c3) = (&d1.base, &d2.base, &d3.base);
    let mut total = &(&(e1 * e2) * e3) * &pair(&d0, &d0);
    total = &total + &(&(e1 * e2) * &pair(&d0, c3));
    total = &total + &(&(e1 * e3) * &pair(&d0, c2));
    total = &total + &(&(e2 * e3) * &pair(&d0, c1));
    total = &total + &(e1 * &pair(c2, c3));
    total = &total + &(e2 * &pair(c1, c3));
    total = &total + &(e3 * &pair(c1, c2));
    total
}

proptest! {
    #[test]
    fn bundle_triple_product_is_symmetric(
        d1 in bundle_classes(), d2 in bundle_classes(), d3 in bundle_classes()
    ) {
        let g = BundleGeometry::symbolic();
        let base = g.triple_intersect(&d1, &d2, &d3);
        prop_assert_eq!(&g.triple_intersect(&d1, &d3, &d2), &base);
        prop_assert_eq!(&g.triple_intersect(&d2, &d1, &d3), &base);
        prop_assert_eq!(&g.triple_intersect(&d2, &d3, &d1), &base);
        prop_assert_eq!(&g.triple_intersect(&d3, &d1, &d2), &base);
        prop_assert_eq!(&g.triple_intersect(&d3, &d2, &d1), &base);
    }

    #[test]
    fn bundle_triple_product_is_linear_in_each_slot(
        d1 in bundle_classes(), d1b in bundle_classes(),
        d2 in bundle_classes(), d3 in bundle_classes()
    ) {
        let g = BundleGeometry::symbolic();
        let joint = g.triple_intersect(&(&d1 + &d1b), &d2, &d3);
        let split = &g.triple_intersect(&d1, &d2, &d3) + &g.triple_intersect(&d1b, &d2, &d3);
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn reduction_agrees_with_the_closed_form(
        d1 in bundle_classes(), d2 in bundle_classes(), d3 in bundle_classes()
    ) {
        let g = BundleGeometry::symbolic();
        prop_assert_eq!(
            g.triple_intersect(&d1, &d2, &d3),
            closed_form_triple(&g, &d1, &d2, &d3)
        );
    }

    #[test]
    fn cover_triple_product_is_integral_and_symmetric(
        d1 in cover_classes(), d2 in cover_classes(), d3 in cover_classes()
    ) {
        // `triple_intersect_y` panics if the division by 4 is not exact, so
        // a clean return on arbitrary lattice classes is the integrality
        // claim itself.
        let g = BundleGeometry::symbolic();
        let base = triple_intersect_y(&g, &d1, &d2, &d3);
        prop_assert_eq!(&triple_intersect_y(&g, &d3, &d1, &d2), &base);
        prop_assert_eq!(&triple_intersect_y(&g, &d2, &d3, &d1), &base);
    }

    #[test]
    fn cover_pullback_scales_by_covering_degree(
        d1 in bundle_classes(), d2 in bundle_classes(), d3 in bundle_classes()
    ) {
        let g = BundleGeometry::symbolic();
        let upstairs = triple_intersect_y(
            &g,
            &CoverDivisorClass::pullback(&d1),
            &CoverDivisorClass::pullback(&d2),
            &CoverDivisorClass::pullback(&d3),
        );
        prop_assert_eq!(upstairs, &g.triple_intersect(&d1, &d2, &d3) * 2);
    }
}

/// Probe positivity across every admissible member with `e <= 8`, `a <= 14`:
/// `H` meets the cover fibers once, misses the fibers of `E_0`, and is
/// positive on the section probe, while `3H - K_Y` is positive on all three.
#[test]
fn probe_positivity_across_the_admissible_family() {
    let certificates = enumerate(0..=8, 0..=14, &admissible_regions()).unwrap();
    assert!(!certificates.is_empty());
    for cert in &certificates {
        let geom = BundleGeometry::concrete(cert.e, cert.a);
        let probes = curve_probes(&geom).unwrap();
        assert_eq!(probes["H.C"], 1, "at ({}, {})", cert.e, cert.a);
        assert_eq!(probes["H.l_E0"], 0, "at ({}, {})", cert.e, cert.a);
        assert!(probes["H.s_E0"] >= 1, "at ({}, {})", cert.e, cert.a);
        for probe in ["3H-K_Y.C", "3H-K_Y.l_E0", "3H-K_Y.s_E0"] {
            assert!(
                probes[probe] >= 1,
                "{probe} = {} at ({}, {})",
                probes[probe],
                cert.e,
                cert.a
            );
        }
    }
}

/// The dualizing pushforward is semipositive against both rulings exactly
/// on the admissible family (`a >= e` makes the section degrees
/// nonnegative).
#[test]
fn pushforward_degrees_are_semipositive_for_admissible_members() {
    let certificates = enumerate(0..=8, 0..=14, &admissible_regions()).unwrap();
    for cert in &certificates {
        let geom = BundleGeometry::concrete(cert.e, cert.a);
        let report = doublecover::pushforward_dualizing(&geom);
        for (ds, dl) in &report.degrees {
            assert!(ds.as_i64().unwrap() >= 0, "at ({}, {})", cert.e, cert.a);
            assert!(dl.as_i64().unwrap() >= 0, "at ({}, {})", cert.e, cert.a);
        }
    }
}
