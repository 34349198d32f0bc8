//! Our expansion against MacDonald's at fixed degree over small angles.

use serde::Serialize;

use super::fit::{fit_loglog, Fit};
use crate::approx::TruncationLevel;
use crate::error::Result;
use crate::legendre::{legendre_p_asym, legendre_p_macdonald, LegendreParams};
use crate::oracle::legendre_p_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MacdonaldRow {
    pub theta: f64,
    pub oracle: f64,
    pub ours_err: f64,
    pub macdonald_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MacdonaldReport {
    pub j: f64,
    pub level: TruncationLevel,
    pub rows: Vec<MacdonaldRow>,
    /// Error against `sin(theta/2)`.
    pub ours: Fit,
    pub macdonald: Fit,
}

impl MacdonaldReport {
    pub fn slope_gain(&self) -> f64 {
        self.ours.slope - self.macdonald.slope
    }

    pub fn ours_smaller_everywhere(&self) -> bool {
        self.rows.iter().all(|r| r.ours_err < r.macdonald_err)
    }
}

pub fn compare_macdonald(j: f64, thetas: &[f64], level: TruncationLevel) -> Result<MacdonaldReport> {
    let mut rows = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let x = theta.cos();
        let oracle = legendre_p_oracle(j, 0.0, x)?.value;
        let ours = legendre_p_asym(LegendreParams::new(j, 0.0, x)?, level)?.value;
        let mac = legendre_p_macdonald(j, x, level)?.value;
        rows.push(MacdonaldRow {
            theta,
            oracle,
            ours_err: (ours - oracle).abs(),
            macdonald_err: (mac - oracle).abs(),
        });
    }
    let s: Vec<f64> = rows.iter().map(|r| (0.5 * r.theta).sin()).collect();
    let ours = fit_loglog(&s, &rows.iter().map(|r| r.ours_err).collect::<Vec<_>>())?;
    let macdonald = fit_loglog(&s, &rows.iter().map(|r| r.macdonald_err).collect::<Vec<_>>())?;
    Ok(MacdonaldReport { j, level, rows, ours, macdonald })
}
