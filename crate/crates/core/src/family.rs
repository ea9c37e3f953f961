//! The `(e, a)` parameter plane: which pairs give a member of the family,
//! enumeration over rectangles, Noether-line membership, and the audit of
//! the inequality chain that pins the family to the line.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::doublecover::{CheckMode, ConstructionCertificate};
use crate::error::Error;
use crate::rational::Fraction;

/// Where a parameter pair sits relative to the family.
///
/// The admissible regions are disjoint by their `e`-ranges:
/// `RegionA` is `a >= e >= 3`, `RegionB` is `1 <= e <= 2, a >= e + 1`,
/// `RegionC` is `e = 0, a >= 2`. The pair `(0, 1)` is the boundary case
/// whose member has `(K^3, p_g) = (2, 4)`; everything else with `e >= 0`
/// is `Inadmissible`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Region {
    RegionA,
    RegionB,
    RegionC,
    BoundaryPair01,
    Inadmissible,
}

impl Region {
    /// The three regions whose members carry the full invariant package.
    pub fn is_admissible(self) -> bool {
        matches!(self, Region::RegionA | Region::RegionB | Region::RegionC)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::RegionA => "RegionA",
            Region::RegionB => "RegionB",
            Region::RegionC => "RegionC",
            Region::BoundaryPair01 => "BoundaryPair01",
            Region::Inadmissible => "Inadmissible",
        })
    }
}

/// Classification of one parameter pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AdmissibilityClass {
    pub region: Region,
    /// `a = e >= 3`: the corner members realizing the historical examples
    /// with `K^3 = 4e - 6`, `p_g = 3e - 2`.
    pub kobayashi_subfamily: bool,
}

/// Classify `(e, a)`. There is no Hirzebruch surface with `e < 0`.
pub fn classify(e: i64, a: i64) -> Result<AdmissibilityClass, Error> {
    if e < 0 {
        return Err(Error::InvalidParameter(format!(
            "Hirzebruch parameter must be nonnegative, got {e}"
        )));
    }
    let region = if e >= 3 && a >= e {
        Region::RegionA
    } else if (1..=2).contains(&e) && a > e {
        Region::RegionB
    } else if e == 0 && a >= 2 {
        Region::RegionC
    } else if e == 0 && a == 1 {
        Region::BoundaryPair01
    } else {
        Region::Inadmissible
    };
    Ok(AdmissibilityClass {
        region,
        kobayashi_subfamily: e >= 3 && a == e,
    })
}

/// Signed distance from the Noether line: `K^3 - (4*p_g - 10)/3`, reduced.
/// Zero exactly when `(K^3, p_g)` sits on the line.
pub fn noether_membership(k_cubed: i64, p_g: i64) -> Fraction {
    Fraction::new(3 * k_cubed - 4 * p_g + 10, 3)
}

/// Certificates for every pair in the rectangle whose region is in
/// `filter`, in lexicographic `(e, a)` order.
///
/// Admissible pairs are verified strictly; boundary and inadmissible pairs
/// (reachable only when `filter` includes them) are computed in explore
/// mode. Ranges must be nonempty and `e` must stay nonnegative.
pub fn enumerate(
    e_range: RangeInclusive<i64>,
    a_range: RangeInclusive<i64>,
    filter: &[Region],
) -> Result<Vec<ConstructionCertificate>, Error> {
    for (name, range) in [("e", &e_range), ("a", &a_range)] {
        if range.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "empty {name} range {}..{}",
                range.start(),
                range.end()
            )));
        }
    }
    let mut certificates = Vec::new();
    for e in e_range {
        for a in a_range.clone() {
            let class = classify(e, a)?;
            if !filter.contains(&class.region) {
                continue;
            }
            let mode = if class.region.is_admissible() {
                CheckMode::Strict
            } else {
                CheckMode::Explore
            };
            certificates.push(ConstructionCertificate::compute(e, a, mode)?);
        }
    }
    Ok(certificates)
}

/// The default enumeration filter: admissible members only.
pub fn admissible_regions() -> [Region; 3] {
    [Region::RegionA, Region::RegionB, Region::RegionC]
}

/// Every region, for exploration.
pub fn all_regions() -> [Region; 5] {
    [
        Region::RegionA,
        Region::RegionB,
        Region::RegionC,
        Region::BoundaryPair01,
        Region::Inadmissible,
    ]
}

/// One inequality in the chain, evaluated: `left >= right`, with
/// `slack = left - right` and `tight` meaning equality.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ChainLink {
    pub name: &'static str,
    pub left: Fraction,
    pub right: Fraction,
    pub slack: Fraction,
    pub tight: bool,
}

impl ChainLink {
    fn evaluate(name: &'static str, left: Fraction, right: Fraction) -> Self {
        let slack = left - right;
        ChainLink {
            name,
            left,
            right,
            slack,
            tight: slack.is_zero(),
        }
    }
}

/// The audited chain for one set of fibration data.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ChainAuditReport {
    pub p_g: i64,
    pub links: Vec<ChainLink>,
    pub all_tight: bool,
}

/// Audit the inequality chain that forces the family onto the Noether line.
///
/// * `sigma_degree_bound`: the image surface degree satisfies
///   `d_Sigma >= p_g - 2`;
/// * `gamma_degree_bound`: the canonical pairing term satisfies
///   `gamma >= (d_Sigma - 2)/3`;
/// * `noether_line_bound`: assembled,
///   `d_Sigma + gamma + remainder >= (4*p_g - 10)/3`.
///
/// At the family's values `d_Sigma = p_g - 2`, `gamma = (p_g - 4)/3`,
/// `remainder = 0` every link is tight, which is exactly membership in the
/// line. Requires `p_g >= 3` so the canonical image is a surface.
pub fn audit_noether_chain(
    p_g: i64,
    d_sigma: i64,
    gamma: Fraction,
    remainder: Fraction,
) -> Result<ChainAuditReport, Error> {
    if p_g < 3 {
        return Err(Error::InvalidParameter(format!(
            "chain audit needs p_g >= 3, got {p_g}"
        )));
    }
    let d = Fraction::from(d_sigma);
    let links = vec![
        ChainLink::evaluate("sigma_degree_bound", d, Fraction::from(p_g - 2)),
        ChainLink::evaluate("gamma_degree_bound", gamma, Fraction::new(d_sigma - 2, 3)),
        ChainLink::evaluate(
            "noether_line_bound",
            d + gamma + remainder,
            Fraction::new(4 * p_g - 10, 3),
        ),
    ];
    let all_tight = links.iter().all(|l| l.tight);
    Ok(ChainAuditReport {
        p_g,
        links,
        all_tight,
    })
}
