//! Shared helpers for the criterion benches.

use noetherline::family::{admissible_regions, enumerate};
use noetherline::ConstructionCertificate;

/// The standard sweep rectangle used by the benches: `e` in `[0, 8]`,
/// `a` in `[0, 14]`, admissible members only (95 certificates).
pub fn standard_sweep() -> Vec<ConstructionCertificate> {
    enumerate(0..=8, 0..=14, &admissible_regions()).expect("sweep rectangle is valid")
}
