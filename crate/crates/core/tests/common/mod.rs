//! Shared proptest strategies for the integration suites.

use noetherline::{Coefficient, SurfaceDivisorClass};
use proptest::prelude::*;

/// Sparse polynomials with up to four terms, exponents at most 2 and
/// coefficients in [-50, 50].
pub fn coefficients() -> impl Strategy<Value = Coefficient> {
    proptest::collection::vec((0u32..=2, 0u32..=2, -50i64..=50), 0..4).prop_map(|terms| {
        let mut acc = Coefficient::zero();
        for (e_exp, a_exp, c) in terms {
            acc = &acc + &Coefficient::monomial(c, e_exp, a_exp);
        }
        acc
    })
}

/// Surface classes with polynomial coordinates. Not every suite draws
/// from this strategy, hence the per-target allowance.
#[allow(dead_code)]
pub fn symbolic_classes() -> impl Strategy<Value = SurfaceDivisorClass> {
    (coefficients(), coefficients()).prop_map(|(alpha, beta)| SurfaceDivisorClass::new(alpha, beta))
}
