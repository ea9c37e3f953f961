//! Divisor classes and intersection theory on the Hirzebruch surface
//! `Sigma_e = P(O_{P^1} + O_{P^1}(-e))`, `e >= 0`.
//!
//! `Pic(Sigma_e)` is free on the negative section `s` (`s^2 = -e`) and a
//! fiber `l` of the ruling (`l^2 = 0`, `s.l = 1`); the canonical class is
//! `K = -2s - (e+2)l`. Coefficients may be symbolic, so identities in `e`
//! and `a` are checked as polynomial cancellations; the positivity
//! predicates and cohomology require concrete classes on a concrete surface.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::Error;
use crate::exactring::Coefficient;

/// A divisor class `alpha*s + beta*l` on `Sigma_e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceDivisorClass {
    pub alpha: Coefficient,
    pub beta: Coefficient,
}

impl SurfaceDivisorClass {
    pub fn new(alpha: Coefficient, beta: Coefficient) -> Self {
        SurfaceDivisorClass { alpha, beta }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        SurfaceDivisorClass::new(Coefficient::constant(alpha), Coefficient::constant(beta))
    }

    /// The zero class.
    pub fn zero() -> Self {
        SurfaceDivisorClass::from_ints(0, 0)
    }

    /// The negative section `s`.
    pub fn section() -> Self {
        SurfaceDivisorClass::from_ints(1, 0)
    }

    /// A fiber `l` of the ruling.
    pub fn fiber() -> Self {
        SurfaceDivisorClass::from_ints(0, 1)
    }

    /// `K_{Sigma_e} = -2s - (e+2)l`.
    pub fn canonical_class(e: &Coefficient) -> Self {
        SurfaceDivisorClass::new(Coefficient::constant(-2), -&(e + &Coefficient::constant(2)))
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// Both coordinates as integers, `None` if either is symbolic.
    pub fn concrete_pair(&self) -> Option<(i64, i64)> {
        Some((self.alpha.as_i64()?, self.beta.as_i64()?))
    }

    /// The intersection number `(a1*s + b1*l).(a2*s + b2*l) =
    /// -e*a1*a2 + a1*b2 + a2*b1`.
    pub fn intersect(&self, other: &SurfaceDivisorClass, e: &Coefficient) -> Coefficient {
        let cross = &(&self.alpha * &other.beta) + &(&other.alpha * &self.beta);
        &cross - &(&(e * &self.alpha) * &other.alpha)
    }

    /// Degree of the restriction to the negative section, `D.s = -e*alpha + beta`.
    pub fn restriction_degree_to_section(&self, e: &Coefficient) -> Coefficient {
        &self.beta - &(e * &self.alpha)
    }

    /// Scalar multiple with a polynomial coefficient.
    pub fn scale(&self, c: &Coefficient) -> Self {
        SurfaceDivisorClass::new(c * &self.alpha, c * &self.beta)
    }

    fn require_concrete(&self, op: &str) -> Result<(i64, i64), Error> {
        self.concrete_pair().ok_or_else(|| {
            Error::SymbolicInput(format!("{op} needs integer coordinates, got `{self}`"))
        })
    }

    /// Nef test: `alpha >= 0` and `beta >= alpha*e`. Concrete classes only.
    pub fn is_nef(&self, e: i64) -> Result<bool, Error> {
        assert!(e >= 0, "Hirzebruch parameter must be nonnegative");
        let (alpha, beta) = self.require_concrete("is_nef")?;
        Ok(alpha >= 0 && beta >= alpha * e)
    }

    /// Base-point-freeness coincides with nefness on a Hirzebruch surface.
    pub fn is_base_point_free(&self, e: i64) -> Result<bool, Error> {
        self.is_nef(e)
    }

    /// Very-ampleness test: `alpha > 0` and `beta > alpha*e`. Concrete only.
    pub fn is_very_ample(&self, e: i64) -> Result<bool, Error> {
        assert!(e >= 0, "Hirzebruch parameter must be nonnegative");
        let (alpha, beta) = self.require_concrete("is_very_ample")?;
        Ok(alpha > 0 && beta > alpha * e)
    }

    /// Full cohomology of `O(alpha*s + beta*l)` on a concrete `Sigma_e`.
    ///
    /// `h0` comes from the ruling pushforward, `h2` from duality against
    /// `K - D`, `chi` independently from `1 + D.(D-K)/2`, and
    /// `h1 = h0 + h2 - chi`. A negative `h1` is arithmetically impossible,
    /// so it panics rather than returning an error.
    pub fn cohomology(&self, e: i64) -> Result<CohomologyTable, Error> {
        if e < 0 {
            return Err(Error::InvalidParameter(format!(
                "Hirzebruch parameter must be nonnegative, got {e}"
            )));
        }
        let (alpha, beta) = self.require_concrete("cohomology")?;
        let h0 = sections_via_ruling(alpha, beta, e);
        // K - D has coordinates (-2 - alpha, -e - 2 - beta).
        let h2 = sections_via_ruling(-2 - alpha, -e - 2 - beta, e);
        // D.(D - K) with D - K = (alpha + 2, beta + e + 2).
        let pairing = -e * alpha * (alpha + 2) + alpha * (beta + e + 2) + (alpha + 2) * beta;
        assert!(pairing % 2 == 0, "D.(D-K) must be even");
        let chi = 1 + pairing / 2;
        let h1 = h0 + h2 - chi;
        assert!(h1 >= 0, "negative h1 for ({alpha}, {beta}) on Sigma_{e}");
        Ok(CohomologyTable {
            h0: h0 as u64,
            h1: h1 as u64,
            h2: h2 as u64,
            chi,
        })
    }
}

/// `h^0(Sigma_e, O(alpha*s + beta*l))`.
///
/// Pushing forward along the ruling gives `sum_{i=0..alpha} O_{P^1}(beta - i*e)`
/// for `alpha >= 0` and no sections otherwise.
fn sections_via_ruling(alpha: i64, beta: i64, e: i64) -> i64 {
    if alpha < 0 {
        return 0;
    }
    (0..=alpha).map(|i| (beta - i * e + 1).max(0)).sum()
}

/// Cohomology dimensions of a line bundle, with its Euler characteristic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CohomologyTable {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub chi: i64,
}

// ---- Lattice algebra ----

impl Add for &SurfaceDivisorClass {
    type Output = SurfaceDivisorClass;
    fn add(self, rhs: &SurfaceDivisorClass) -> SurfaceDivisorClass {
        SurfaceDivisorClass::new(&self.alpha + &rhs.alpha, &self.beta + &rhs.beta)
    }
}

impl Sub for &SurfaceDivisorClass {
    type Output = SurfaceDivisorClass;
    fn sub(self, rhs: &SurfaceDivisorClass) -> SurfaceDivisorClass {
        SurfaceDivisorClass::new(&self.alpha - &rhs.alpha, &self.beta - &rhs.beta)
    }
}

impl Neg for &SurfaceDivisorClass {
    type Output = SurfaceDivisorClass;
    fn neg(self) -> SurfaceDivisorClass {
        SurfaceDivisorClass::new(-&self.alpha, -&self.beta)
    }
}

impl Mul<i64> for &SurfaceDivisorClass {
    type Output = SurfaceDivisorClass;
    fn mul(self, n: i64) -> SurfaceDivisorClass {
        self.scale(&Coefficient::constant(n))
    }
}

// ---- Rendering ----

/// One summand `p * sym` of a lattice class, as (leading-sign, body) so the
/// caller can join summands with ` + ` and ` - `. `None` when `p = 0`.
pub(crate) fn signed_symbol_part(p: &Coefficient, sym: &str) -> Option<(bool, String)> {
    if p.is_zero() {
        return None;
    }
    let neg = p.is_leading_negative();
    let magnitude = if neg { -p } else { p.clone() };
    let body = if magnitude.is_single_term() {
        if magnitude == Coefficient::one() {
            sym.to_string()
        } else {
            format!("{magnitude}*{sym}")
        }
    } else {
        format!("({magnitude})*{sym}")
    };
    Some((neg, body))
}

/// Join rendered summands, e.g. `[(false, "s"), (true, "4*l")]` to `s - 4*l`.
pub(crate) fn join_signed_parts(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SurfaceDivisorClass {
    /// Canonical text form `alpha*s + beta*l`, e.g. `-2*s - (e + 2)*l`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            signed_symbol_part(&self.alpha, "s"),
            signed_symbol_part(&self.beta, "l"),
        ]
        .into_iter()
        .flatten()
        .collect();
        f.write_str(&join_signed_parts(parts))
    }
}
