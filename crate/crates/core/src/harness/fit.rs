//! Log-log least squares for convergence orders.

use std::str::FromStr;

use serde::Serialize;

use super::grid::lookup;
use super::record::ErrorRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points: usize,
}

/// Least-squares line through `(ln x, ln y)`.
pub fn fit_loglog(xs: &[f64], ys: &[f64]) -> Result<Fit> {
    if xs.len() != ys.len() || xs.len() < 4 {
        return Err(Error::InvalidGrid(format!("a fit needs >= 4 paired points, got {}", xs.len().min(ys.len()))));
    }
    if xs.iter().chain(ys).any(|v| !(v.is_finite() && *v > 0.0)) {
        return Err(Error::InvalidGrid("fit points must be finite and positive".into()));
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(Fit {
        slope,
        intercept: my - slope * mx,
        r2,
        points: lx.len(),
    })
}

/// The abscissa of a convergence fit, computed from record parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Abscissa {
    Param(String),
    /// `j(j+1)`
    JJ1,
    /// `(j-mp)(j+mp+1)`
    Rotation,
    /// `sin(theta/2)`
    SinHalfTheta,
    /// `|1-x|`
    OneMinusX,
}

impl FromStr for Abscissa {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace(' ', "").as_str() {
            "j(j+1)" => Abscissa::JJ1,
            "(j-mp)(j+mp+1)" => Abscissa::Rotation,
            "sin(theta/2)" => Abscissa::SinHalfTheta,
            "1-x" => Abscissa::OneMinusX,
            p if !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') => Abscissa::Param(p.into()),
            _ => return Err(Error::InvalidGrid(format!("unknown abscissa {s:?}"))),
        })
    }
}

impl Abscissa {
    pub fn eval(&self, params: &[(String, f64)]) -> Result<f64> {
        let need = |n: &str| lookup(params, n).ok_or_else(|| Error::InvalidGrid(format!("abscissa needs parameter {n}")));
        Ok(match self {
            Abscissa::Param(n) => need(n)?,
            Abscissa::JJ1 => {
                let j = need("j")?;
                j * (j + 1.0)
            }
            Abscissa::Rotation => {
                let (j, mp) = (need("j")?, need("mp")?);
                (j - mp) * (j + mp + 1.0)
            }
            Abscissa::SinHalfTheta => (0.5 * need("theta")?).sin(),
            Abscissa::OneMinusX => (1.0 - need("x")?).abs(),
        })
    }
}

/// Fit of `abs_err` against the abscissa over the successful records.
pub fn fit_convergence(records: &[ErrorRecord], abscissa: &Abscissa) -> Result<Fit> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for r in records.iter().filter(|r| r.is_ok()) {
        xs.push(abscissa.eval(&r.params)?);
        ys.push(r.abs_err);
    }
    fit_loglog(&xs, &ys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let xs: Vec<f64> = (1..=6).map(|i| 10.0 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|u| 2.5 * u.powi(-3)).collect();
        let f = fit_loglog(&xs, &ys).unwrap();
        assert!((f.slope + 3.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        assert!((f.intercept - 2.5f64.ln()).abs() < 1e-12);
        assert!(fit_loglog(&xs[..3], &ys[..3]).is_err());
    }

    #[test]
    fn abscissa_parsing() {
        assert_eq!("j(j+1)".parse::<Abscissa>().unwrap(), Abscissa::JJ1);
        assert_eq!("sin(theta/2)".parse::<Abscissa>().unwrap(), Abscissa::SinHalfTheta);
        assert_eq!("j".parse::<Abscissa>().unwrap(), Abscissa::Param("j".into()));
        assert!("j**2".parse::<Abscissa>().is_err());
    }
}
