//! Exact combinatorics of power sums over arithmetic progressions:
//! generalized Stirling, Eulerian, Bernoulli and Lah numbers, the Sheffer
//! arrays behind them, and a verifier that checks every identity by
//! several independent routes.
//!
//! The series, polynomial and triangle kernels are generic over
//! [`Scalar`]; the number families are computed over [`ExactRational`].

pub mod bernoulli;
pub mod error;
pub mod eulerian;
pub mod exact;
pub mod format;
pub mod fps;
pub mod lah;
pub mod poly;
pub mod powersum;
pub mod scalar;
pub mod sheffer;
pub mod stirling;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exact::ProgressionParams;
pub use fps::{BorelDirection, Fps};
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use sheffer::{Family, ShefferPair, Triangle};

/// Arbitrary-precision rational, the default scalar.
pub type ExactRational = num_rational::BigRational;
/// Machine-word rational; overflows on anything but small inputs.
pub type SmallRational = num_rational::Ratio<i64>;

pub type RationalFps = Fps<ExactRational>;
pub type RationalPoly = Polynomial<ExactRational>;
pub type RationalTriangle = Triangle<ExactRational>;
pub type RationalPair = ShefferPair<ExactRational>;

/// Rows `0..=size` of a named family by its canonical construction.
pub fn family_triangle(family: Family, params: ProgressionParams, size: usize) -> Result<RationalTriangle> {
    Ok(match family {
        Family::S2 => stirling::s2_triangle(params, size),
        Family::S2Hat => stirling::s2hat_triangle(params, size),
        Family::S2Fac => stirling::s2fac_triangle(params, size),
        Family::S1 => stirling::s1_triangle(params, size),
        Family::S1p => stirling::s1p_triangle(params, size),
        Family::S1pHat => stirling::s1phat_triangle(params, size),
        Family::REu => eulerian::reu_triangle(params, size),
        Family::Lah => lah::lah_triangle(params, size),
        Family::LahInv => lah::lah_inverse(params, size),
        Family::Generic => return Err(Error::InvalidParams("no canonical triangle for generic".into())),
    })
}
