//! Exhaustive cohomology sweeps on the Hirzebruch surfaces: duality,
//! Riemann-Roch consistency, an independent route to h1, and the
//! positivity ladder.

use noetherline::{Coefficient, SurfaceDivisorClass};

const PARAM_RANGE: std::ops::RangeInclusive<i64> = 0..=5;
const COORD_RANGE: std::ops::RangeInclusive<i64> = -6..=6;

#[test]
fn duality_and_riemann_roch_hold_across_the_grid() {
    let mut cases = 0;
    for e in PARAM_RANGE {
        let e_poly = Coefficient::constant(e);
        let k = SurfaceDivisorClass::canonical_class(&e_poly);
        for alpha in COORD_RANGE {
            for beta in COORD_RANGE {
                let d = SurfaceDivisorClass::from_ints(alpha, beta);
                let table = d.cohomology(e).unwrap();
                let dual = (&k - &d).cohomology(e).unwrap();
                assert_eq!(
                    table.h0, dual.h2,
                    "h0/h2 duality at ({alpha}, {beta}), e = {e}"
                );
                assert_eq!(
                    table.h1, dual.h1,
                    "h1 self-duality at ({alpha}, {beta}), e = {e}"
                );
                assert_eq!(
                    table.h2, dual.h0,
                    "h2/h0 duality at ({alpha}, {beta}), e = {e}"
                );
                // chi from the table against Riemann-Roch recomputed here.
                let pairing = d.intersect(&(&d - &k), &e_poly).as_i64().unwrap();
                assert_eq!(pairing % 2, 0);
                assert_eq!(table.chi, 1 + pairing / 2);
                assert_eq!(
                    table.chi,
                    table.h0 as i64 - table.h1 as i64 + table.h2 as i64
                );
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 1014);
}

/// h1 recomputed without duality or Riemann-Roch: for `alpha >= 0` the
/// ruling pushforward splits as `sum O_{P^1}(beta - i*e)` with vanishing
/// higher direct image, so `h1 = sum max(0, i*e - beta - 1)`.
#[test]
fn first_cohomology_matches_the_ruling_route() {
    for e in PARAM_RANGE {
        for alpha in 0..=6 {
            for beta in -8i64..=8 {
                let table = SurfaceDivisorClass::from_ints(alpha, beta)
                    .cohomology(e)
                    .unwrap();
                let direct: i64 = (0..=alpha).map(|i| (i * e - beta - 1).max(0)).sum();
                assert_eq!(
                    table.h1 as i64, direct,
                    "h1 mismatch at ({alpha}, {beta}), e = {e}"
                );
            }
        }
    }
}

#[test]
fn positivity_ladder_and_its_cohomological_shadows() {
    for e in PARAM_RANGE {
        for alpha in COORD_RANGE {
            for beta in COORD_RANGE {
                let d = SurfaceDivisorClass::from_ints(alpha, beta);
                let very_ample = d.is_very_ample(e).unwrap();
                let bpf = d.is_base_point_free(e).unwrap();
                let nef = d.is_nef(e).unwrap();
                assert_eq!(bpf, nef, "bpf and nef agree on Hirzebruch surfaces");
                if very_ample {
                    assert!(bpf, "very ample implies base point free");
                }
                let table = d.cohomology(e).unwrap();
                if nef {
                    // Nef classes have no higher cohomology here.
                    assert_eq!((table.h1, table.h2), (0, 0));
                    assert_eq!(table.h0 as i64, table.chi);
                }
                if very_ample {
                    // A very ample class embeds the surface, so at least P^3.
                    assert!(table.h0 >= 4);
                }
            }
        }
    }
}
