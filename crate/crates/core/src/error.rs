use thiserror::Error;

/// Errors raised by the algebra, transform and spinor operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("axis index {0} is outside 1..=3")]
    AxisOutOfRange(u8),
    #[error("axis is not a unit vector (|c|^2 = {norm_sq})")]
    NonUnitAxis { norm_sq: f64 },
    #[error("quaternion is not unit (|q|^2 = {norm_sq})")]
    NonUnitQuaternion { norm_sq: f64 },
    #[error("multivector has odd-grade parts and is not a quaternion")]
    NotEven,
    #[error("mirror must be a unit {expected}")]
    BadMirror { expected: &'static str },
    #[error("reflection in a non-basis mirror does not permute structure elements")]
    NonBasisMirror,
    #[error("multivector lies outside the {basis} span (residual norm {residual})")]
    OutOfSpan { basis: &'static str, residual: f64 },
    #[error("spinor ideals do not match ({left} vs {right})")]
    IdealMismatch {
        left: &'static str,
        right: &'static str,
    },
    #[error("expected a {expected} spinor")]
    VarianceMismatch { expected: &'static str },
    #[error("value is not in the {0} right ideal")]
    NotInIdeal(&'static str),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("result is not finite")]
    NonFinite,
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
