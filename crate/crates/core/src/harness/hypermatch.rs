//! Residual of the Bessel series against the truncated hypergeometric
//! expansion in powers of `1-x`, both in double-double.

use serde::Serialize;

use super::fit::{fit_loglog, Fit};
use crate::coeffs::{jacobi_coeff_table_exact, Rational, MAX_ORDER};
use crate::dd::Dd;
use crate::error::{domain, Result};

/// Which terms of the Bessel series to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesCut {
    /// Every order in `1/N` whose Bessel offset is at most `kmax`.
    BesselIndex(usize),
    /// Orders `m <= level`, all offsets.
    Level(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperMatch {
    pub j: f64,
    pub mu: f64,
    pub cut: SeriesCut,
    /// `(1-x, |series - truncated 2F1|)`
    pub points: Vec<(f64, f64)>,
    pub fit: Fit,
}

fn dd_of(r: &Rational) -> Dd {
    Dd::from(*r.numer() as f64) / Dd::from(*r.denom() as f64)
}

/// `(z/2)^{-nu} J_nu(z)` in terms of `w = (z/2)^2`.
fn reduced_j_dd(nu: Dd, w: Dd) -> Dd {
    // nu stays in double-double: k + mu rounded to f64 would leave an O(t) residual
    let mut term = (nu + 1.0).rgamma();
    let mut sum = term;
    for n in 1..400 {
        let nf = n as f64;
        term = -(term * w) / ((nu + nf) * nf);
        sum += term;
        if term.abs().to_f64() < 1e-34 * sum.abs().to_f64() {
            break;
        }
    }
    sum
}

/// `(1+x)/(1-x))^{mu/2} P_j^{-mu}(x)` from the Bessel series.
pub fn series_dd(j: f64, mu: f64, one_minus_x: f64, cut: SeriesCut) -> Dd {
    let t = Dd::from(one_minus_x).scale2(-1);
    let w = Dd::from(j) * (j + 1.0) * t;
    let table = jacobi_coeff_table_exact(Rational::from_integer(1), MAX_ORDER);
    let mut sum = reduced_j_dd(Dd::from(mu), w);
    for ((m, k), c) in table.entries() {
        let keep = match cut {
            SeriesCut::BesselIndex(kmax) => k <= kmax,
            SeriesCut::Level(l) => m <= l,
        };
        if keep {
            sum -= dd_of(c) * t.powi(m as i32) * w.powi((k - m) as i32) * reduced_j_dd(Dd::from(mu) + k as f64, w);
        }
    }
    sum
}

/// `2F1(-j, j+1; 1+mu; t) / Γ(1+mu)` through `t^smax`.
pub fn truncated_hyp_dd(j: f64, mu: f64, one_minus_x: f64, smax: usize) -> Dd {
    let t = Dd::from(one_minus_x).scale2(-1);
    let mut term = (Dd::from(mu) + 1.0).rgamma();
    let mut sum = term;
    for s in 0..smax {
        let sf = s as f64;
        term = term * (Dd::from(sf) - j) * (j + 1.0 + sf) * t / ((Dd::from(mu) + 1.0 + sf) * (sf + 1.0));
        sum += term;
    }
    sum
}

/// Residuals at the given `1-x` and the log-log slope. The hypergeometric
/// series is cut at the power the Bessel series is expected to reproduce.
pub fn hypergeometric_match(j: f64, mu: f64, cut: SeriesCut, one_minus_xs: &[f64]) -> Result<HyperMatch> {
    if one_minus_xs.iter().any(|&u| !(u > 0.0 && u < 2.0)) {
        return Err(domain("1-x must lie in (0, 2)"));
    }
    let smax = match cut {
        SeriesCut::BesselIndex(k) => k,
        SeriesCut::Level(_) => 6,
    };
    let points: Vec<(f64, f64)> = one_minus_xs
        .iter()
        .map(|&u| (u, (series_dd(j, mu, u, cut) - truncated_hyp_dd(j, mu, u, smax)).abs().to_f64()))
        .collect();
    let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().copied().unzip();
    let fit = fit_loglog(&xs, &ys)?;
    Ok(HyperMatch { j, mu, cut, points, fit })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_degree_is_exact() {
        // P_2 is a polynomial of degree 2 in t: the truncated 2F1 is exact
        let u = 0.3;
        let t = 0.5 * u;
        let p2 = 1.0 - 6.0 * t + 6.0 * t * t;
        assert!((truncated_hyp_dd(2.0, 0.0, u, 6).to_f64() - p2).abs() < 1e-15);
    }

    #[test]
    fn bessel_index_order_seven() {
        let h = hypergeometric_match(5.0, 0.0, SeriesCut::BesselIndex(6), &[2e-3, 1e-3, 5e-4, 2.5e-4]).unwrap();
        assert!(h.fit.slope > 6.5, "{h:?}");
    }
}
