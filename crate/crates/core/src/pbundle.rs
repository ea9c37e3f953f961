//! The P^1-bundle `P = P(O + O(-2s - 2al))` over the Hirzebruch surface
//! `Sigma_e`, with projection `tau`.
//!
//! `Pic(P)` is free on the section `E` of `tau` with normal bundle
//! `O_E(E) = O(-2s - 2al)` and on pullbacks of `Pic(Sigma_e)`. Writing
//! `d0 = -2s - 2al`, triple intersection numbers follow from three rules:
//! `E^2 = E.tau^*(d0)`, `E.tau^*(C).tau^*(C') = C.C'`, and the vanishing of
//! any pure `tau^*`-degree-3 product. The reduction is confluent, so the
//! expansion below evaluates each product in one pass.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactring::Coefficient;
use crate::hirzebruch::{join_signed_parts, signed_symbol_part, SurfaceDivisorClass};

/// The base-and-twist parameters `(e, a)` of the bundle, symbolic or concrete.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleGeometry {
    e: Coefficient,
    a: Coefficient,
}

impl BundleGeometry {
    /// Geometry with indeterminate parameters; identities proved here hold
    /// for every member of the family at once.
    pub fn symbolic() -> Self {
        BundleGeometry {
            e: Coefficient::var_e(),
            a: Coefficient::var_a(),
        }
    }

    /// Geometry of a single member. The Hirzebruch parameter must be
    /// nonnegative; `a` is unrestricted here (admissibility is the family
    /// module's concern).
    pub fn concrete(e: i64, a: i64) -> Self {
        assert!(e >= 0, "Hirzebruch parameter must be nonnegative");
        BundleGeometry {
            e: Coefficient::constant(e),
            a: Coefficient::constant(a),
        }
    }

    pub fn e(&self) -> &Coefficient {
        &self.e
    }

    pub fn a(&self) -> &Coefficient {
        &self.a
    }

    /// Both parameters as integers, `None` in symbolic mode.
    pub fn concrete_pair(&self) -> Option<(i64, i64)> {
        Some((self.e.as_i64()?, self.a.as_i64()?))
    }

    /// `d0 = -2s - 2al`, the divisor with `O_E(E) = O(d0)`.
    pub fn d0(&self) -> SurfaceDivisorClass {
        SurfaceDivisorClass::new(Coefficient::constant(-2), &(-&self.a) * 2)
    }

    /// `K_P = -2E + tau^*(-4s - (2a + e + 2)l)`.
    ///
    /// The pullback part is `K_{Sigma_e} + d0`, as relative duality for
    /// `tau` demands.
    pub fn canonical_class(&self) -> BundleDivisorClass {
        let base = &SurfaceDivisorClass::canonical_class(&self.e) + &self.d0();
        BundleDivisorClass::new(Coefficient::constant(-2), base)
    }

    /// Triple intersection number on `P`.
    ///
    /// Expands the product over the `E`/`tau^*` split of each factor, then
    /// trades `E^2` for `E.tau^*(d0)` until at most one `E` remains; a lone
    /// `E` against two pullbacks evaluates on `Sigma_e`, and three pullbacks
    /// die for dimension reasons.
    pub fn triple_intersect(
        &self,
        d1: &BundleDivisorClass,
        d2: &BundleDivisorClass,
        d3: &BundleDivisorClass,
    ) -> Coefficient {
        let d0 = self.d0();
        let mut total = Coefficient::zero();
        for mask in 0u8..8 {
            let mut scalar = Coefficient::one();
            let mut e_power = 0usize;
            let mut bases: Vec<SurfaceDivisorClass> = Vec::new();
            for (bit, d) in [d1, d2, d3].into_iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    scalar = &scalar * &d.epsilon;
                    e_power += 1;
                } else {
                    bases.push(d.base.clone());
                }
            }
            if scalar.is_zero() {
                continue;
            }
            while e_power >= 2 {
                e_power -= 1;
                bases.push(d0.clone());
            }
            if e_power == 1 {
                total += &(&scalar * &bases[0].intersect(&bases[1], &self.e));
            }
            // e_power == 0 leaves three pullbacks, which intersect to zero.
        }
        total
    }
}

/// A divisor class `epsilon*E + tau^*(alpha*s + beta*l)` on `P`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleDivisorClass {
    pub epsilon: Coefficient,
    pub base: SurfaceDivisorClass,
}

impl BundleDivisorClass {
    pub fn new(epsilon: Coefficient, base: SurfaceDivisorClass) -> Self {
        BundleDivisorClass { epsilon, base }
    }

    /// The section `E` itself.
    pub fn section_e() -> Self {
        BundleDivisorClass::new(Coefficient::one(), SurfaceDivisorClass::zero())
    }

    /// `tau^*` of a class on the base.
    pub fn pullback(base: SurfaceDivisorClass) -> Self {
        BundleDivisorClass::new(Coefficient::zero(), base)
    }

    pub fn zero() -> Self {
        BundleDivisorClass::pullback(SurfaceDivisorClass::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.epsilon.is_zero() && self.base.is_zero()
    }

    /// Restriction to `E`, identified with `Sigma_e`:
    /// `(epsilon*E + tau^*C)|_E = epsilon*d0 + C`.
    pub fn restrict_to_e(&self, geom: &BundleGeometry) -> SurfaceDivisorClass {
        &geom.d0().scale(&self.epsilon) + &self.base
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        BundleDivisorClass::new(c * &self.epsilon, self.base.scale(c))
    }
}

impl Add for &BundleDivisorClass {
    type Output = BundleDivisorClass;
    fn add(self, rhs: &BundleDivisorClass) -> BundleDivisorClass {
        BundleDivisorClass::new(&self.epsilon + &rhs.epsilon, &self.base + &rhs.base)
    }
}

impl Sub for &BundleDivisorClass {
    type Output = BundleDivisorClass;
    fn sub(self, rhs: &BundleDivisorClass) -> BundleDivisorClass {
        BundleDivisorClass::new(&self.epsilon - &rhs.epsilon, &self.base - &rhs.base)
    }
}

impl Neg for &BundleDivisorClass {
    type Output = BundleDivisorClass;
    fn neg(self) -> BundleDivisorClass {
        BundleDivisorClass::new(-&self.epsilon, -&self.base)
    }
}

impl Mul<i64> for &BundleDivisorClass {
    type Output = BundleDivisorClass;
    fn mul(self, n: i64) -> BundleDivisorClass {
        self.scale(&Coefficient::constant(n))
    }
}

impl fmt::Display for BundleDivisorClass {
    /// Canonical text form, e.g. `-2*E + tau*(-4*s - 11*l)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> =
            signed_symbol_part(&self.epsilon, "E").into_iter().collect();
        if !self.base.is_zero() {
            parts.push((false, format!("tau*({})", self.base)));
        }
        f.write_str(&join_signed_parts(parts))
    }
}
