//! Error type shared across the engine.

/// Errors surfaced by the engine.
///
/// Internal arithmetic impossibilities (a triple product on the cover that
/// fails to be divisible by 4, a negative cohomology dimension) are bugs,
/// not user errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A concrete-mode operation received a symbolic (non-constant) input.
    #[error("concrete-mode operation on symbolic input: {0}")]
    SymbolicInput(String),

    /// A parameter is outside the domain of the requested operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Text input did not match the expected grammar.
    #[error("parse error: {0}")]
    Parse(String),

    /// A construction certificate check failed.
    #[error("certificate check `{check}` failed for (e, a) = ({e}, {a}): {detail}")]
    CertificateFailure {
        check: &'static str,
        e: i64,
        a: i64,
        detail: String,
    },
}
