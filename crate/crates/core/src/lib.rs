//! Bessel-function asymptotics for Legendre, Jacobi and rotation functions of
//! large degree, with extended-precision reference implementations.

pub mod approx;
pub mod coeffs;
pub mod dd;
pub mod error;
pub mod harness;
pub mod jacobi;
pub mod legendre;
pub mod oracle;
pub mod rotation;
mod series;
pub mod special;

pub use approx::{Approximant, LogApproximant, TruncationLevel, Warning};
pub use error::{Error, Result};
