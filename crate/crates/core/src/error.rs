use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by state validation, representation conversions,
/// superposition, and measurement simulation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A NaN or infinity reached a public constructor or operation.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// A component bound or ball constraint was violated.
    #[error("{0}")]
    ConstraintViolation(String),

    /// A raw 2x2 matrix failed the unit-trace or positivity checks.
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    /// An operation that requires a pure state received a mixed one.
    #[error("state is not pure: |m|^2 = {norm_sqr} differs from 1/4 by more than {tolerance:e}")]
    NotPure { norm_sqr: f64, tolerance: f64 },

    /// The spinor norm is too small to normalize.
    #[error("spinor norm^2 = {0:e} is indistinguishable from zero")]
    ZeroSpinor(f64),

    /// Superposition coefficients must satisfy |c1|^2 + |c2|^2 = 1.
    #[error("coefficients are not normalized: |c1|^2 + |c2|^2 = {0}")]
    NotNormalized(f64),

    /// The first superposition coefficient must be real and non-negative.
    #[error("c1 carries a phase of {0:e} rad; rotate both coefficients so that c1 is real first")]
    NonzeroC1Phase(f64),

    /// An input state sits too close to the sz = -1/2 parametrization pole.
    #[error("{which} is too close to the sz = -1/2 pole: 1/2 + sz = {margin:e}")]
    PoleError { which: &'static str, margin: f64 },

    /// The superposed spinor vanished (complete destructive interference).
    #[error("superposed state vanishes: norm^2 = {0:e}")]
    DegenerateSuperposition(f64),

    /// The closed-form and oracle routes disagree beyond tolerance.
    #[error(
        "closed form and oracle disagree: means deviate by {means_deviation:e}, \
         T by {normalization_deviation:e}"
    )]
    CrossCheckMismatch {
        means_deviation: f64,
        normalization_deviation: f64,
    },

    /// Shot records must cover the axes x, y, z exactly once.
    #[error("shot records do not cover axes x, y, z exactly once")]
    MissingAxis,

    /// The three shot records carry different shot counts.
    #[error("shot records have different shot counts per axis")]
    ShotCountMismatch,

    /// The zero vector has no direction and cannot be projected to a pure state.
    #[error("mean spin vector is numerically zero and has no projection direction")]
    ZeroVector,
}
