//! Return types shared by every expansion.

use serde::Serialize;

use crate::error::{Error, Result};

/// Number of `1/N^m` correction groups kept, `0..=2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TruncationLevel(u8);

impl TruncationLevel {
    pub const L0: Self = TruncationLevel(0);
    pub const L1: Self = TruncationLevel(1);
    pub const L2: Self = TruncationLevel(2);
    pub const MAX: u8 = 2;

    pub fn new(m: u8) -> Result<Self> {
        if m > Self::MAX {
            return Err(Error::Truncation(format!("level {m} above the highest level {}", Self::MAX)));
        }
        Ok(TruncationLevel(m))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u8> for TruncationLevel {
    type Error = Error;
    fn try_from(m: u8) -> Result<Self> {
        TruncationLevel::new(m)
    }
}

impl std::fmt::Display for TruncationLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Conditions under which a value is returned but should be read with care.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Warning {
    /// `|sin(pi a)|` is small but nonzero, so `1/sin(pi a)` terms cancel badly.
    NearIntegerOrder { order: f64, sin_pi: f64 },
    /// Integer order handled by the symmetric epsilon limit.
    EpsilonLimit { order: f64 },
}

/// An asymptotic value with the size of the first omitted group.
///
/// `err_estimate` is an estimate, not a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Approximant {
    pub value: f64,
    pub err_estimate: f64,
    /// Bessel terms summed.
    pub terms_used: usize,
    pub warning: Option<Warning>,
}

impl Approximant {
    pub(crate) fn new(value: f64, err_estimate: f64, terms_used: usize) -> Self {
        Approximant {
            value,
            err_estimate: err_estimate.abs(),
            terms_used,
            warning: None,
        }
    }

    pub(crate) fn with_warning(mut self, w: Option<Warning>) -> Self {
        self.warning = w;
        self
    }

    pub(crate) fn scaled(self, f: f64) -> Self {
        Approximant {
            value: self.value * f,
            err_estimate: self.err_estimate * f.abs(),
            ..self
        }
    }
}

/// Value carried as `sign * exp(log_abs)` for prefactors that overflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogApproximant {
    pub sign: f64,
    pub log_abs: f64,
    /// `ln` of the error estimate.
    pub log_err: f64,
    pub terms_used: usize,
}

impl LogApproximant {
    /// Exponentiated; overflows to infinity when the magnitude does.
    pub fn to_approximant(self) -> Approximant {
        Approximant::new(self.sign * self.log_abs.exp(), self.log_err.exp(), self.terms_used)
    }

    pub(crate) fn shifted(self, log_factor: f64, sign: f64) -> Self {
        LogApproximant {
            sign: self.sign * sign,
            log_abs: self.log_abs + log_factor,
            log_err: self.log_err + log_factor,
            ..self
        }
    }
}

/// `1/sin(pi a)` conditioning check shared by the integer-order paths.
pub(crate) fn near_integer_warning(order: f64) -> Option<Warning> {
    let s = crate::special::sin_pi(order);
    (s != 0.0 && s.abs() < 1e-6).then_some(Warning::NearIntegerOrder { order, sin_pi: s })
}
