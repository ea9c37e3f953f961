//! Exact computation engine for a family of canonically polarized 3-folds
//! on the Noether line `K^3 = (4/3) p_g - 10/3`.
//!
//! Every member of the family is cut out by a pair of integers `(e, a)`:
//! a double cover of the P^1-bundle `P(O + O(-2s - 2al))` over the
//! Hirzebruch surface `Sigma_e`, branched along a smooth member of
//! `|6E + tau^*(10s + 10al)|`. The crate computes the intersection theory
//! of that tower exactly, in two modes sharing one code path:
//!
//! * **symbolic**: coefficients are sparse polynomials in the indeterminates
//!   `e` and `a` over arbitrary-precision integers, so closed-form identities
//!   such as `K^3 = 8a - 4e - 6` are verified as polynomial cancellations;
//! * **concrete**: coefficients are constants, yielding the numerical
//!   invariants of a single member.
//!
//! Module map:
//!
//! * [`exactring`]: canonical sparse polynomials in `e`, `a` over `BigInt`.
//! * [`hirzebruch`]: divisor classes, intersection form, cohomology and
//!   positivity on `Sigma_e`.
//! * [`pbundle`]: the P^1-bundle `P`, its canonical class, restriction to the
//!   distinguished section `E`, and triple intersection numbers.
//! * [`doublecover`]: the 3-fold `Y`, pullback and pushforward along the
//!   cover, curve probes, and the per-member construction certificate.
//! * [`family`]: admissibility regions in the `(e, a)` plane, enumeration,
//!   Noether-line membership, and the inequality-chain audit.
//! * [`identities`]: the symbolic identity suite behind `verify-identities`.
//!
//! All computations are exact; floating point is never used.

pub mod doublecover;
pub mod error;
pub mod exactring;
pub mod family;
pub mod hirzebruch;
pub mod identities;
pub mod pbundle;
pub mod rational;

pub use doublecover::{
    CheckMode, ConstructionCertificate, CoverData, CoverDivisorClass, PushforwardReport,
};
pub use error::Error;
pub use exactring::Coefficient;
pub use family::{AdmissibilityClass, ChainAuditReport, ChainLink, Region};
pub use hirzebruch::{CohomologyTable, SurfaceDivisorClass};
pub use pbundle::{BundleDivisorClass, BundleGeometry};
pub use rational::Fraction;
