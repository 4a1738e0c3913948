use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// `Invalid*` variants are caller-side validation failures; the remaining
/// variants mean a numerical or contract check did not hold.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be an even integer >= 2 or infinity")]
    InvalidModulus(i64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(String, String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("invalid degree class: {0}")]
    InvalidDegree(String),
    #[error("invalid index class: {0}")]
    InvalidIndex(String),
    #[error("infinite set cannot be enumerated: {0}")]
    Infinite(String),
    #[error("enumeration too large: {0} elements exceeds the limit {1}")]
    TooLarge(u128, u128),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("pair is not in the realizable set Z: {0}")]
    NotInZ(String),
    #[error("winding: zero sample at position {0}")]
    ZeroSample(usize),
    #[error("winding: argument jump {jump:.6} at position {at} (undersampled loop)")]
    Undersampled { at: usize, jump: f64 },
    #[error("winding residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("immersion is not totally real on the sampled grid (min |J| = {min_j:.3e})")]
    NotTotallyReal { min_j: f64 },
}

impl Error {
    /// True for errors caused by malformed caller input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidModulus(_)
                | Error::ModulusMismatch(..)
                | Error::InvalidSurface(_)
                | Error::InvalidTarget(_)
                | Error::InvalidDegree(_)
                | Error::InvalidIndex(_)
                | Error::Infinite(_)
                | Error::TooLarge(..)
                | Error::InvalidArgument(_)
                | Error::Unsupported(_)
                | Error::NotInZ(_)
        )
    }
}
