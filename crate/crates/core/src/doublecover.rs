//! The 3-fold `Y`: a double cover `psi: Y -> P` branched along the disjoint
//! union of the section `E` and a smooth `T in |5E + tau^*(10s + 10al)|`,
//! i.e. along a member of `|6E + tau^*(10s + 10al)| = |2L|` with
//! `L = 3E + tau^*(5s + 5al)`.
//!
//! `psi^*E = 2E_0` for the reduced preimage `E_0` of `E`, so the lattice
//! tracked here is spanned by `E_0` and pullbacks `psi^*tau^*` from the
//! Hirzebruch base. The canonical class is `K_Y = psi^*(K_P + L)`, the key
//! polarizing class is `H = K_Y - E_0 = M + E_0` with
//! `M = psi^*tau^*(s + (3a - e - 2)l)`, and all invariants of the family
//! (`K_Y^3 = 8a - 4e - 6`, `p_g = 6a - 3e - 2`, ...) fall out of the triple
//! intersection numbers computed on `P` through the degree-2 projection
//! formula.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::Error;
use crate::exactring::Coefficient;
use crate::family::{self, Region};
use crate::hirzebruch::{join_signed_parts, signed_symbol_part, SurfaceDivisorClass};
use crate::identities::Check;
use crate::pbundle::{BundleDivisorClass, BundleGeometry};
use crate::rational::Fraction;

/// A divisor class `mu*E_0 + psi^*tau^*(alpha*s + beta*l)` on `Y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverDivisorClass {
    pub mu: Coefficient,
    pub base: SurfaceDivisorClass,
}

impl CoverDivisorClass {
    pub fn new(mu: Coefficient, base: SurfaceDivisorClass) -> Self {
        CoverDivisorClass { mu, base }
    }

    /// The reduced preimage `E_0` of the branch component `E`.
    pub fn section_e0() -> Self {
        CoverDivisorClass::new(Coefficient::one(), SurfaceDivisorClass::zero())
    }

    /// `psi^*` of a class on `P`: `psi^*E = 2E_0`, pullbacks pass through.
    pub fn pullback(d: &BundleDivisorClass) -> Self {
        CoverDivisorClass::new(&d.epsilon * 2, d.base.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.mu.is_zero() && self.base.is_zero()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        CoverDivisorClass::new(c * &self.mu, self.base.scale(c))
    }

    /// Restriction to `E_0`, identified with `Sigma_e`.
    ///
    /// The cover is ramified along `E_0` with `O_{E_0}(E_0) = O(-s - al)`
    /// (half of `d0`), and pullbacks restrict to themselves.
    pub fn restrict_to_e0(&self, geom: &BundleGeometry) -> SurfaceDivisorClass {
        let half_d0 = SurfaceDivisorClass::new(Coefficient::constant(-1), -geom.a());
        &half_d0.scale(&self.mu) + &self.base
    }
}

impl Add for &CoverDivisorClass {
    type Output = CoverDivisorClass;
    fn add(self, rhs: &CoverDivisorClass) -> CoverDivisorClass {
        CoverDivisorClass::new(&self.mu + &rhs.mu, &self.base + &rhs.base)
    }
}

impl Sub for &CoverDivisorClass {
    type Output = CoverDivisorClass;
    fn sub(self, rhs: &CoverDivisorClass) -> CoverDivisorClass {
        CoverDivisorClass::new(&self.mu - &rhs.mu, &self.base - &rhs.base)
    }
}

impl Neg for &CoverDivisorClass {
    type Output = CoverDivisorClass;
    fn neg(self) -> CoverDivisorClass {
        CoverDivisorClass::new(-&self.mu, -&self.base)
    }
}

impl Mul<i64> for &CoverDivisorClass {
    type Output = CoverDivisorClass;
    fn mul(self, n: i64) -> CoverDivisorClass {
        self.scale(&Coefficient::constant(n))
    }
}

impl fmt::Display for CoverDivisorClass {
    /// Canonical text form, e.g. `2*E0 + psi*tau*(s + 4*l)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> =
            signed_symbol_part(&self.mu, "E0").into_iter().collect();
        if !self.base.is_zero() {
            parts.push((false, format!("psi*tau*({})", self.base)));
        }
        f.write_str(&join_signed_parts(parts))
    }
}

/// Branch data of the cover: the branch class `6E + tau^*(10s + 10al)` and
/// the half `L = 3E + tau^*(5s + 5al)` with `branch = 2L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverData {
    pub branch: BundleDivisorClass,
    pub half: BundleDivisorClass,
}

impl CoverData {
    pub fn new(geom: &BundleGeometry) -> Self {
        let branch = BundleDivisorClass::new(
            Coefficient::constant(6),
            SurfaceDivisorClass::new(Coefficient::constant(10), geom.a() * 10),
        );
        let half = BundleDivisorClass::new(
            Coefficient::constant(3),
            SurfaceDivisorClass::new(Coefficient::constant(5), geom.a() * 5),
        );
        let data = CoverData { branch, half };
        debug_assert!((&data.branch - &(&data.half * 2)).is_zero());
        data
    }

    /// The residual branch component `T = branch - E`.
    pub fn residual(&self) -> BundleDivisorClass {
        &self.branch - &BundleDivisorClass::section_e()
    }
}

// ---- Named classes of the construction ----

/// `m = s + (3a - e - 2)l`, the base class under both `M` and `K_Y`.
fn base_m(geom: &BundleGeometry) -> SurfaceDivisorClass {
    let beta = &(&(geom.a() * 3) - geom.e()) - &Coefficient::constant(2);
    SurfaceDivisorClass::new(Coefficient::one(), beta)
}

/// `M = psi^*tau^*(s + (3a - e - 2)l)`.
pub fn class_m(geom: &BundleGeometry) -> CoverDivisorClass {
    CoverDivisorClass::new(Coefficient::zero(), base_m(geom))
}

/// `H = K_Y - E_0 = E_0 + M`, the class computing `K^3` of the canonical
/// model.
pub fn class_h(geom: &BundleGeometry) -> CoverDivisorClass {
    CoverDivisorClass::new(Coefficient::one(), base_m(geom))
}

/// `K_Y = 2E_0 + psi^*tau^*(s + (3a - e - 2)l) = psi^*(K_P + L)`.
pub fn canonical_class_y(geom: &BundleGeometry) -> CoverDivisorClass {
    CoverDivisorClass::new(Coefficient::constant(2), base_m(geom))
}

/// `3H - K_Y = E_0 + psi^*tau^*(2s + (6a - 2e - 4)l)`.
pub fn three_h_minus_canonical(geom: &BundleGeometry) -> CoverDivisorClass {
    let h = class_h(geom);
    &h.scale(&Coefficient::constant(3)) - &canonical_class_y(geom)
}

// ---- Intersection theory on Y ----

/// Triple intersection number on `Y`.
///
/// `2D = psi^*(mu*E + 2*tau^*C)` for every lattice class
/// `D = mu*E_0 + psi^*tau^*C`, so `8*(D1.D2.D3)` equals twice the triple
/// product of the doubled classes on `P` (degree-2 projection formula); the
/// quotient by 4 is exact for every lattice input, and a failure there is a
/// bug, not bad data.
pub fn triple_intersect_y(
    geom: &BundleGeometry,
    d1: &CoverDivisorClass,
    d2: &CoverDivisorClass,
    d3: &CoverDivisorClass,
) -> Coefficient {
    let double = |d: &CoverDivisorClass| {
        BundleDivisorClass::new(d.mu.clone(), d.base.scale(&Coefficient::constant(2)))
    };
    // (2D1).(2D2).(2D3) on P is twice the product on Y of the same classes,
    // so the product on Y is the P-side value over 4; the quotient is exact
    // because d0.d0 = 8a - 4e and d0 pairs evenly with every lattice class.
    geom.triple_intersect(&double(d1), &double(d2), &double(d3))
        .div_exact(4)
        .expect("triple product on the cover must be an integer class")
}

/// `h^0(Y, K_Y)` for a concrete member, via the rank-2 pushforward of the
/// dualizing sheaf: `h^0(Sigma_e, s + (3a-e-2)l) + h^0(Sigma_e, -s + (a-e-2)l)`
/// (the second summand never has sections).
pub fn geometric_genus(e: i64, a: i64) -> i64 {
    let first = SurfaceDivisorClass::from_ints(1, 3 * a - e - 2);
    let second = SurfaceDivisorClass::from_ints(-1, a - e - 2);
    let h0 = |d: &SurfaceDivisorClass| {
        d.cohomology(e)
            .expect("concrete class on a concrete surface")
            .h0 as i64
    };
    h0(&first) + h0(&second)
}

/// Pushforward of the dualizing sheaf to `Sigma_e`: the two line-bundle
/// summands `3s + 3al` and `s + al`, with the degree of each against the
/// negative section `s` and a fiber `l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PushforwardReport {
    pub summands: [SurfaceDivisorClass; 2],
    /// `(degree vs s, degree vs l)` per summand; both are nonnegative for
    /// every admissible member, which is the semipositivity the family needs.
    pub degrees: [(Coefficient, Coefficient); 2],
}

pub fn pushforward_dualizing(geom: &BundleGeometry) -> PushforwardReport {
    let a = geom.a();
    let big = SurfaceDivisorClass::new(Coefficient::constant(3), a * 3);
    let small = SurfaceDivisorClass::new(Coefficient::one(), a.clone());
    let degrees_of =
        |d: &SurfaceDivisorClass| (d.restriction_degree_to_section(geom.e()), d.alpha.clone());
    PushforwardReport {
        degrees: [degrees_of(&big), degrees_of(&small)],
        summands: [big, small],
    }
}

/// Consistency checks for the branch construction at the given parameters.
///
/// The first three are lattice identities (they hold for every `(e, a)`);
/// the last compares the genus bookkeeping `p_g = 2k + e + 2`,
/// `k = 3a - 2e - 2` against `geometric_genus` (concrete mode) or against
/// the closed form `6a - 3e - 2` (symbolic mode), and detects parameters
/// outside the family's range.
pub fn branch_checks(geom: &BundleGeometry) -> Vec<Check> {
    let data = CoverData::new(geom);
    let mut checks = Vec::new();

    let twice = &data.branch - &(&data.half * 2);
    checks.push(Check::from_zero_bundle_class(
        "branch_is_twice_half",
        &twice,
    ));

    let residual_restricted = data.residual().restrict_to_e(geom);
    checks.push(Check::from_zero_surface_class(
        "residual_branch_restricts_to_zero_on_E",
        &residual_restricted,
    ));

    // psi^*E = 2E_0 must restrict to the full normal class d0 on E_0.
    let cover_restriction = &CoverDivisorClass::pullback(&BundleDivisorClass::section_e())
        .restrict_to_e0(geom)
        - &geom.d0();
    checks.push(Check::from_zero_surface_class(
        "cover_restriction_consistency",
        &cover_restriction,
    ));

    let k_param = &(&(geom.a() * 3) - &(geom.e() * 2)) - &Coefficient::constant(2);
    let bookkeeping = &(&(&k_param * 2) + geom.e()) + &Coefficient::constant(2);
    match geom.concrete_pair() {
        Some((e, a)) => {
            let lhs = bookkeeping.as_i64().expect("concrete bookkeeping value");
            let rhs = geometric_genus(e, a);
            checks.push(Check::named(
                "genus_parameter_agreement",
                lhs == rhs,
                format!("2k + e + 2 = {lhs}, geometric genus = {rhs}"),
            ));
        }
        None => {
            let residual = &bookkeeping - &"6*a - 3*e - 2".parse::<Coefficient>().unwrap();
            checks.push(Check::from_zero_poly(
                "genus_parameter_agreement",
                &residual,
            ));
        }
    }
    checks
}

// ---- Curve probes ----

/// The five divisor classes probed on every member.
pub fn probe_divisors(geom: &BundleGeometry) -> Vec<(&'static str, CoverDivisorClass)> {
    vec![
        ("H", class_h(geom)),
        ("M", class_m(geom)),
        ("E0", CoverDivisorClass::section_e0()),
        ("K_Y", canonical_class_y(geom)),
        ("3H-K_Y", three_h_minus_canonical(geom)),
    ]
}

/// Intersection numbers of the standard divisors against the three probe
/// curves: a fiber `C` of `Y -> Sigma_e` (degree = `mu`), and the images in
/// `E_0` of a fiber `l` and the negative section `s`.
///
/// Keys are `"<divisor>.<probe>"`, e.g. `"H.s_E0"`. Concrete mode only.
pub fn curve_probes(geom: &BundleGeometry) -> Result<BTreeMap<String, i64>, Error> {
    geom.concrete_pair()
        .ok_or_else(|| Error::SymbolicInput("curve probes need concrete parameters".to_string()))?;
    let s = SurfaceDivisorClass::section();
    let l = SurfaceDivisorClass::fiber();
    let mut table = BTreeMap::new();
    for (name, d) in probe_divisors(geom) {
        let restricted = d.restrict_to_e0(geom);
        let entries = [
            ("C", d.mu.clone()),
            ("l_E0", restricted.intersect(&l, geom.e())),
            ("s_E0", restricted.intersect(&s, geom.e())),
        ];
        for (probe, value) in entries {
            let value = value
                .as_i64()
                .expect("probe pairing of concrete classes is a desk-scale integer");
            table.insert(format!("{name}.{probe}"), value);
        }
    }
    Ok(table)
}

// ---- Construction certificate ----

/// Strictness of certificate checks.
///
/// `Strict` demands an admissible member and verifies the full invariant
/// package. `Explore` computes the same numbers for any `e >= 0` (including
/// the boundary pair and inadmissible parameters), keeping only the
/// parameter-independent lattice checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckMode {
    Strict,
    Explore,
}

/// Integer coordinates of a surface class inside a certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClassCoords {
    pub alpha: i64,
    pub beta: i64,
}

impl ClassCoords {
    fn from_class(d: &SurfaceDivisorClass) -> Self {
        let (alpha, beta) = d.concrete_pair().expect("certificate classes are concrete");
        ClassCoords { alpha, beta }
    }
}

impl fmt::Display for ClassCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            SurfaceDivisorClass::from_ints(self.alpha, self.beta)
        )
    }
}

/// The verified numerical record of one member of the family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConstructionCertificate {
    pub e: i64,
    pub a: i64,
    pub region: Region,
    pub kobayashi: bool,
    #[serde(rename = "K_cubed")]
    pub k_cubed: i64,
    pub p_g: i64,
    pub k: i64,
    #[serde(rename = "deg_Sigma")]
    pub deg_sigma: i64,
    #[serde(rename = "E0_cubed")]
    pub e0_cubed: i64,
    #[serde(rename = "H2E0")]
    pub h2e0: i64,
    #[serde(rename = "HME0")]
    pub hme0: i64,
    #[serde(rename = "M2E0")]
    pub m2e0: i64,
    #[serde(rename = "H_restricted_to_E0")]
    pub h_restricted_to_e0: ClassCoords,
    #[serde(rename = "E0_restricted_to_E0")]
    pub e0_restricted_to_e0: ClassCoords,
    #[serde(rename = "M_restricted_to_E0")]
    pub m_restricted_to_e0: ClassCoords,
    #[serde(rename = "T_restricted_to_E")]
    pub t_restricted_to_e: ClassCoords,
    pub pushforward_summands: [ClassCoords; 2],
    pub noether_slack: Fraction,
    pub curve_probe_table: BTreeMap<String, i64>,
}

impl ConstructionCertificate {
    /// Compute and verify the certificate of the member at `(e, a)`.
    pub fn compute(e: i64, a: i64, mode: CheckMode) -> Result<Self, Error> {
        if e < 0 {
            return Err(Error::InvalidParameter(format!(
                "Hirzebruch parameter must be nonnegative, got {e}"
            )));
        }
        let admissibility = family::classify(e, a)?;
        if mode == CheckMode::Strict && !admissibility.region.is_admissible() {
            return Err(Error::CertificateFailure {
                check: "admissible_region",
                e,
                a,
                detail: format!(
                    "({e}, {a}) classifies as {}, outside the admissible regions",
                    admissibility.region
                ),
            });
        }

        let geom = BundleGeometry::concrete(e, a);
        let int = |c: &Coefficient| c.as_i64().expect("desk-scale certificate integer");

        let h = class_h(&geom);
        let m = class_m(&geom);
        let e0 = CoverDivisorClass::section_e0();
        let k_cubed = int(&triple_intersect_y(&geom, &h, &h, &h));
        let e0_cubed = int(&triple_intersect_y(&geom, &e0, &e0, &e0));
        let h2e0 = int(&triple_intersect_y(&geom, &h, &h, &e0));
        let hme0 = int(&triple_intersect_y(&geom, &h, &m, &e0));
        let m2e0 = int(&triple_intersect_y(&geom, &m, &m, &e0));

        let p_g = geometric_genus(e, a);
        let k = 3 * a - 2 * e - 2;
        let deg_sigma = p_g - 2;
        let noether_slack = family::noether_membership(k_cubed, p_g);

        let data = CoverData::new(&geom);
        let pushforward = pushforward_dualizing(&geom);
        let certificate = ConstructionCertificate {
            e,
            a,
            region: admissibility.region,
            kobayashi: admissibility.kobayashi_subfamily,
            k_cubed,
            p_g,
            k,
            deg_sigma,
            e0_cubed,
            h2e0,
            hme0,
            m2e0,
            h_restricted_to_e0: ClassCoords::from_class(&h.restrict_to_e0(&geom)),
            e0_restricted_to_e0: ClassCoords::from_class(&e0.restrict_to_e0(&geom)),
            m_restricted_to_e0: ClassCoords::from_class(&m.restrict_to_e0(&geom)),
            t_restricted_to_e: ClassCoords::from_class(&data.residual().restrict_to_e(&geom)),
            pushforward_summands: [
                ClassCoords::from_class(&pushforward.summands[0]),
                ClassCoords::from_class(&pushforward.summands[1]),
            ],
            noether_slack,
            curve_probe_table: curve_probes(&geom)?,
        };
        certificate.verify(mode, &geom)?;
        Ok(certificate)
    }

    fn verify(&self, mode: CheckMode, geom: &BundleGeometry) -> Result<(), Error> {
        let fail = |check: &'static str, detail: String| Error::CertificateFailure {
            check,
            e: self.e,
            a: self.a,
            detail,
        };
        for check in branch_checks(geom) {
            let lattice_only = check.name != "genus_parameter_agreement";
            if !check.passed && (mode == CheckMode::Strict || lattice_only) {
                return Err(fail(check.name, check.detail));
            }
        }
        if mode == CheckMode::Strict {
            if !self.noether_slack.is_zero() {
                return Err(fail(
                    "noether_slack_zero",
                    format!(
                        "slack {} for K^3 = {}, p_g = {}",
                        self.noether_slack, self.k_cubed, self.p_g
                    ),
                ));
            }
            if self.p_g < 7 {
                return Err(fail(
                    "geometric_genus_floor",
                    format!("p_g = {} < 7", self.p_g),
                ));
            }
        }
        Ok(())
    }
}
