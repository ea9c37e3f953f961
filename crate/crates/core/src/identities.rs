//! The symbolic identity suite: every closed-form invariant of the family,
//! proved for all parameters at once by exact polynomial cancellation in the
//! indeterminates `e` and `a`.
//!
//! Each identity is recomputed from the intersection theory of the tower
//! `Sigma_e -> P -> Y` and compared against its closed form; a residual
//! other than the literal zero polynomial (or zero lattice class) fails the
//! check. The suite backs the `verify-identities` CLI subcommand.

use serde::Serialize;

use crate::doublecover::{
    self, canonical_class_y, class_h, class_m, triple_intersect_y, CoverData, CoverDivisorClass,
};
use crate::exactring::Coefficient;
use crate::hirzebruch::SurfaceDivisorClass;
use crate::pbundle::{BundleDivisorClass, BundleGeometry};

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn named(name: &'static str, passed: bool, detail: String) -> Self {
        Check {
            name,
            passed,
            detail,
        }
    }

    pub fn from_zero_poly(name: &'static str, residual: &Coefficient) -> Self {
        Check::named(
            name,
            residual.is_zero(),
            if residual.is_zero() {
                "residual 0".to_string()
            } else {
                format!("residual {residual}")
            },
        )
    }

    pub fn from_zero_surface_class(name: &'static str, residual: &SurfaceDivisorClass) -> Self {
        Check::named(
            name,
            residual.is_zero(),
            if residual.is_zero() {
                "residual 0".to_string()
            } else {
                format!("residual {residual}")
            },
        )
    }

    pub fn from_zero_bundle_class(name: &'static str, residual: &BundleDivisorClass) -> Self {
        Check::named(
            name,
            residual.is_zero(),
            if residual.is_zero() {
                "residual 0".to_string()
            } else {
                format!("residual {residual}")
            },
        )
    }

    pub fn from_zero_cover_class(name: &'static str, residual: &CoverDivisorClass) -> Self {
        Check::named(
            name,
            residual.is_zero(),
            if residual.is_zero() {
                "residual 0".to_string()
            } else {
                format!("residual {residual}")
            },
        )
    }
}

fn poly(text: &str) -> Coefficient {
    text.parse().expect("literal polynomial")
}

/// Run the whole identity suite over symbolic parameters.
pub fn verify_identities() -> Vec<Check> {
    let g = BundleGeometry::symbolic();
    let h = class_h(&g);
    let m = class_m(&g);
    let e0 = CoverDivisorClass::section_e0();
    let k_y = canonical_class_y(&g);
    let k_p = g.canonical_class();
    let data = CoverData::new(&g);
    let k_sigma = SurfaceDivisorClass::canonical_class(g.e());
    let mut checks = Vec::new();

    // Degree of the canonical model on the Noether line.
    let h3 = triple_intersect_y(&g, &h, &h, &h);
    checks.push(Check::from_zero_poly(
        "h_cubed_matches_formula",
        &(&h3 - &poly("8*a - 4*e - 6")),
    ));
    // 3K^3 - 4p_g + 10 = 0 with denominators cleared.
    checks.push(Check::from_zero_poly(
        "noether_line_membership",
        &(&(&(&h3 * 3) - &(&poly("6*a - 3*e - 2") * 4)) + &Coefficient::constant(10)),
    ));
    checks.push(Check::from_zero_poly(
        "e0_cubed_matches_formula",
        &(&triple_intersect_y(&g, &e0, &e0, &e0) - &poly("2*a - e")),
    ));
    checks.push(Check::from_zero_poly(
        "h_squared_e0_vanishes",
        &triple_intersect_y(&g, &h, &h, &e0),
    ));
    checks.push(Check::from_zero_poly(
        "h_m_e0_matches_formula",
        &(&triple_intersect_y(&g, &h, &m, &e0) - &poly("2*a - e - 2")),
    ));
    checks.push(Check::from_zero_poly(
        "m_squared_e0_matches_formula",
        &(&triple_intersect_y(&g, &m, &m, &e0) - &poly("6*a - 3*e - 4")),
    ));

    // Adjunction down both steps of the tower.
    checks.push(Check::from_zero_surface_class(
        "adjunction_on_e0",
        &(&(&k_y + &e0).restrict_to_e0(&g) - &k_sigma),
    ));
    checks.push(Check::from_zero_surface_class(
        "adjunction_on_e",
        &(&(&k_p + &BundleDivisorClass::section_e()).restrict_to_e(&g) - &k_sigma),
    ));

    // Branch bookkeeping.
    checks.push(Check::from_zero_bundle_class(
        "branch_is_twice_half",
        &(&data.branch - &(&data.half * 2)),
    ));
    checks.push(Check::from_zero_surface_class(
        "residual_branch_restricts_to_zero_on_e",
        &data.residual().restrict_to_e(&g),
    ));
    checks.push(Check::from_zero_cover_class(
        "canonical_class_is_pullback_of_adjoint",
        &(&CoverDivisorClass::pullback(&(&k_p + &data.half)) - &k_y),
    ));
    checks.push(Check::from_zero_surface_class(
        "canonical_bundle_base_consistency",
        &(&k_p.base - &(&k_sigma + &g.d0())),
    ));

    // Genus bookkeeping: p_g = 2k + e + 2 with k = 3a - 2e - 2.
    let k_param = poly("3*a - 2*e - 2");
    let bookkeeping = &(&(&k_param * 2) + g.e()) + &Coefficient::constant(2);
    checks.push(Check::from_zero_poly(
        "genus_parameter_consistency",
        &(&bookkeeping - &poly("6*a - 3*e - 2")),
    ));

    // The two dualizing-sheaf summands differ by the twist d0.
    let pushforward = doublecover::pushforward_dualizing(&g);
    checks.push(Check::from_zero_surface_class(
        "pushforward_summands_differ_by_twist",
        &(&(&pushforward.summands[0] + &g.d0()) - &pushforward.summands[1]),
    ));

    // psi^* scales triple products by the covering degree 2, checked on all
    // triples from a generating set.
    let generators = [
        ("E", BundleDivisorClass::section_e()),
        (
            "tau*s",
            BundleDivisorClass::pullback(SurfaceDivisorClass::section()),
        ),
        (
            "tau*l",
            BundleDivisorClass::pullback(SurfaceDivisorClass::fiber()),
        ),
        ("K_P", k_p.clone()),
    ];
    let mut projection_failures = Vec::new();
    for (n1, d1) in &generators {
        for (n2, d2) in &generators {
            for (n3, d3) in &generators {
                let upstairs = triple_intersect_y(
                    &g,
                    &CoverDivisorClass::pullback(d1),
                    &CoverDivisorClass::pullback(d2),
                    &CoverDivisorClass::pullback(d3),
                );
                let downstairs = g.triple_intersect(d1, d2, d3);
                if upstairs != &downstairs * 2 {
                    projection_failures.push(format!("({n1}, {n2}, {n3})"));
                }
            }
        }
    }
    checks.push(Check::named(
        "projection_formula_degree_two",
        projection_failures.is_empty(),
        if projection_failures.is_empty() {
            format!("verified on {} generator triples", generators.len().pow(3))
        } else {
            format!("failed on {}", projection_failures.join(", "))
        },
    ));

    // Normalization of the reduction rules: E.tau*s.tau*l = s.l = 1.
    let fiber_degree = g.triple_intersect(
        &BundleDivisorClass::section_e(),
        &BundleDivisorClass::pullback(SurfaceDivisorClass::section()),
        &BundleDivisorClass::pullback(SurfaceDivisorClass::fiber()),
    );
    checks.push(Check::from_zero_poly(
        "section_fiber_normalization",
        &(&fiber_degree - &Coefficient::one()),
    ));

    checks
}
