//! Partial-wave sum against the impact-parameter integral for a Gaussian
//! eikonal `chi(b) = i chi0 exp(-b^2 / 2B^2)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::oracle::quad::integrate;
use crate::special::bessel_j;

/// Partial waves below this magnitude are dropped.
pub const TAIL_TOL: f64 = 1e-12;
const INTEGRAND_TAIL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EikonalModel {
    /// Momentum, in inverse length.
    pub p: f64,
    pub chi0: f64,
    /// Profile width `B`.
    pub width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EikonalRow {
    pub t: f64,
    pub partial_wave: Complex64,
    pub eikonal: Complex64,
    pub rel_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EikonalReport {
    pub model: EikonalModel,
    pub j_max: usize,
    pub rows: Vec<EikonalRow>,
}

impl EikonalReport {
    pub fn max_rel_diff(&self) -> f64 {
        self.rows.iter().map(|r| r.rel_diff).fold(0.0, f64::max)
    }

    /// `(4 pi / p) Im f(s, 0)` from the partial-wave row at `t = 0`, if sampled.
    pub fn sigma_tot(&self) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.t == 0.0)
            .map(|r| 4.0 * PI / self.model.p * r.partial_wave.im)
    }
}

impl EikonalModel {
    pub fn new(p: f64, chi0: f64, width: f64) -> Result<Self> {
        if !(p > 0.0 && width > 0.0 && chi0.is_finite()) {
            return Err(domain("eikonal model needs p > 0, B > 0 and finite chi0"));
        }
        Ok(EikonalModel { p, chi0, width })
    }

    pub fn chi(&self, b: f64) -> Complex64 {
        Complex64::new(0.0, self.chi0 * (-0.5 * (b / self.width).powi(2)).exp())
    }

    /// `(e^{i chi(b_j)} - 1) / 2ip` with `b_j = sqrt(j(j+1))/p`.
    pub fn partial_wave(&self, j: usize) -> Complex64 {
        let jf = j as f64;
        let b = (jf * (jf + 1.0)).sqrt() / self.p;
        ((Complex64::i() * self.chi(b)).exp() - 1.0) / Complex64::new(0.0, 2.0 * self.p)
    }

    /// Smallest `J` with `|f_j| < TAIL_TOL` for all `j >= J` (the profile decreases).
    pub fn j_max(&self) -> Result<usize> {
        (0..1_000_000)
            .find(|&j| self.partial_wave(j).norm() < TAIL_TOL)
            .ok_or_else(|| Error::Truncation("no partial-wave cutoff below 1e6".into()))
    }

    fn check_tail(&self, j_max: usize) -> Result<()> {
        for j in j_max..j_max + 64 {
            let f = self.partial_wave(j).norm();
            if f >= TAIL_TOL {
                return Err(Error::Truncation(format!("|f_{j}| = {f:e} >= {TAIL_TOL:e} beyond j_max = {j_max}")));
            }
        }
        Ok(())
    }

    fn cos_theta(&self, t: f64) -> Result<f64> {
        let c = 1.0 + t / (2.0 * self.p * self.p);
        if !(t <= 0.0 && c > -1.0) {
            return Err(domain(format!("t = {t} must satisfy -4p^2 < t <= 0")));
        }
        Ok(c)
    }

    /// `sum_{j < j_max} (2j+1) f_j P_j(cos theta)`.
    pub fn partial_wave_sum(&self, t: f64, j_max: usize) -> Result<Complex64> {
        let x = self.cos_theta(t)?;
        let (mut p0, mut p1) = (1.0, x);
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..j_max {
            let pj = if j == 0 { p0 } else { p1 };
            sum += self.partial_wave(j) * (2 * j + 1) as f64 * pj;
            if j >= 1 {
                let jf = j as f64;
                let next = ((2.0 * jf + 1.0) * x * p1 - jf * p0) / (jf + 1.0);
                p0 = p1;
                p1 = next;
            }
        }
        Ok(sum)
    }

    /// Upper limit where `b |1 - e^{i chi}|` falls below the tail tolerance.
    fn b_cut(&self) -> f64 {
        let mut b = self.width;
        while b * (Complex64::new(1.0, 0.0) - (Complex64::i() * self.chi(b)).exp()).norm() >= INTEGRAND_TAIL {
            b += 0.25 * self.width;
        }
        b
    }

    /// `i p int_0^inf b (1 - e^{i chi(b)}) J_0(b sqrt(-t)) db`.
    pub fn eikonal(&self, t: f64) -> Result<Complex64> {
        self.cos_theta(t)?;
        let q = (-t).sqrt();
        let w = |b: f64| (Complex64::new(1.0, 0.0) - (Complex64::i() * self.chi(b)).exp()) * b * bessel_j(0.0, q * b).unwrap_or(f64::NAN);
        let bc = self.b_cut();
        let re = integrate(|b| w(b).re, 0.0, bc, 1e-16, 1e-13)?.value;
        let im = integrate(|b| w(b).im, 0.0, bc, 1e-16, 1e-13)?.value;
        Ok(Complex64::i() * self.p * Complex64::new(re, im))
    }
}

/// Both amplitudes on a `t` grid. `j_max` defaults to the tail cutoff and is
/// checked either way.
pub fn eikonal_demo(model: EikonalModel, ts: &[f64], j_max: Option<usize>) -> Result<EikonalReport> {
    let j_max = match j_max {
        Some(j) => j,
        None => model.j_max()?,
    };
    model.check_tail(j_max)?;
    let rows = ts
        .iter()
        .map(|&t| {
            let partial_wave = model.partial_wave_sum(t, j_max)?;
            let eikonal = model.eikonal(t)?;
            let rel_diff = (partial_wave - eikonal).norm() / partial_wave.norm().max(1e-300);
            Ok(EikonalRow { t, partial_wave, eikonal, rel_diff })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EikonalReport { model, j_max, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_amplitude_is_absorptive() {
        let m = EikonalModel::new(10.0, 1.0, 1.0).unwrap();
        let r = eikonal_demo(m, &[0.0, -1.0], None).unwrap();
        assert!(r.rows[0].partial_wave.im > 0.0);
        assert!(r.sigma_tot().unwrap() > 0.0);
        assert!(r.max_rel_diff() < 2e-3, "{r:?}");
    }

    #[test]
    fn weak_phase_is_linear() {
        let (a, b) = (EikonalModel::new(10.0, 1e-6, 1.0).unwrap(), EikonalModel::new(10.0, 2e-6, 1.0).unwrap());
        let fa = a.partial_wave_sum(-0.5, 60).unwrap();
        let fb = b.partial_wave_sum(-0.5, 60).unwrap();
        assert!(((fb / fa).re - 2.0).abs() < 1e-5);
        let ratio = (a.eikonal(-0.5).unwrap() / fa).norm();
        assert!((ratio - 1.0).abs() < 2e-3);
    }

    #[test]
    fn short_cutoff_is_rejected() {
        let m = EikonalModel::new(10.0, 1.0, 1.0).unwrap();
        assert!(matches!(eikonal_demo(m, &[0.0], Some(5)), Err(Error::Truncation(_))));
    }
}
