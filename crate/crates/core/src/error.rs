use thiserror::Error;

/// Errors produced by the evaluation, scanning and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The function has a pole at the requested point.
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    /// The requested tolerance cannot be met within the term budget.
    #[error("series did not reach tolerance {tol:e} within {budget} terms (best bound {best:e})")]
    Convergence { tol: f64, budget: usize, best: f64 },

    /// `1 - 2^(1-s)` vanishes, so zeta cannot be recovered from eta.
    #[error("factor 1 - 2^(1-s) vanishes at s = {0}")]
    FactorZero(String),

    /// The polar form of zero has no argument.
    #[error("polar form undefined: modulus is zero at s = {0}")]
    UndefinedPolar(String),

    /// Result would leave the binary64 range.
    #[error("|beta| = {beta} is outside the representable range (guard {limit})")]
    Overflow { beta: f64, limit: f64 },

    /// A value that must be finite was NaN or infinite.
    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    /// The rotated zeta value was expected to be real but is not.
    #[error("realness violated at t = {t}: imaginary part {imag:e} exceeds {limit:e}")]
    RealnessViolation { t: f64, imag: f64, limit: f64 },

    /// A bracket handed to the root finder has no sign change.
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// A scan or grid configuration violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
