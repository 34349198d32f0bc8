//! Brute-force references in double-double precision.
//!
//! Every function here is slow and independent of the asymptotic code: direct
//! hypergeometric summation, three-term recurrences, principal-value
//! quadrature and the symmetric epsilon limit at integer orders. Where two
//! methods exist they are cross-checked by [`agree`].

use serde::Serialize;

use crate::error::{Error, Result};

pub mod bessel_series;
pub mod hyp;
pub mod jacobi;
pub mod legendre;
pub mod limit;
pub mod quad;
pub mod wigner;

pub use hyp::{hyp2f1, hyp2f1_dd, hyp2f1_regularized_dd};
pub use jacobi::{jacobi_p_oracle, jacobi_q_cut_oracle, jacobi_q_oracle};
pub use legendre::{legendre_p_oracle, legendre_q_mu_oracle, legendre_q_oracle};
pub use wigner::wigner_d_factorial_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Series,
    Recurrence,
    Quadrature,
    ClosedForm,
    EpsilonLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    /// Estimated decimal digits lost to cancellation (out of about 32).
    pub precision_loss: f64,
    pub method: Method,
}

impl OracleResult {
    pub(crate) fn new(value: f64, precision_loss: f64, method: Method) -> Self {
        OracleResult {
            value,
            precision_loss: precision_loss.max(0.0),
            method,
        }
    }
}

/// Relative difference with a floor for values near zero.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

/// Fails with `OracleInconsistency` when two paths disagree beyond `tol`.
pub fn agree(what: &str, a: f64, b: f64, tol: f64) -> Result<f64> {
    let d = rel_diff(a, b);
    if d <= tol && a.is_finite() && b.is_finite() {
        Ok(d)
    } else {
        Err(Error::OracleInconsistency {
            what: what.to_string(),
            rel_diff: d,
        })
    }
}

/// Agreement threshold for dual-path oracles.
pub const DUAL_PATH_TOL: f64 = 1e-10;
