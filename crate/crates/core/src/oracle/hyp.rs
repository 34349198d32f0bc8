//! Gauss hypergeometric series summed in double-double.

use super::{Method, OracleResult};
use crate::dd::Dd;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 200_000;
const TERM_TOL: f64 = 1e-25;

fn is_nonpositive_integer(v: Dd) -> bool {
    v.hi <= 0.0 && v.lo == 0.0 && v.hi == v.hi.floor()
}

/// Sum of the series from a given first term, with the digit loss estimate.
fn sum_from(a: Dd, b: Dd, c: Dd, w: Dd, n0: usize, first: Dd) -> Result<(Dd, f64)> {
    let mut term = first;
    let mut sum = first;
    let mut largest = first.abs().to_f64();
    let mut n = n0 as f64;
    for _ in 0..MAX_TERMS {
        let num = (a + n) * (b + n);
        if num.hi == 0.0 {
            return Ok((sum, loss(largest, sum)));
        }
        term = term * num * w / ((c + n) * (n + 1.0));
        sum += term;
        largest = largest.max(sum.abs().to_f64());
        n += 1.0;
        let t = term.abs().to_f64();
        if t <= TERM_TOL * sum.abs().to_f64() || t == 0.0 {
            return Ok((sum, loss(largest, sum)));
        }
    }
    Err(Error::NonConvergence(format!("2F1 with w = {} did not converge", w.hi)))
}

fn loss(largest: f64, sum: Dd) -> f64 {
    let s = sum.abs().to_f64();
    if s == 0.0 {
        return 32.0;
    }
    (largest / s).log10().max(0.0)
}

fn check_domain(a: Dd, b: Dd, w: Dd) -> Result<()> {
    let terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if w.hi.abs() >= 1.0 && !terminating {
        return Err(Error::NonConvergence(format!("2F1 series needs |w| < 1, got {}", w.hi)));
    }
    Ok(())
}

/// `2F1(a, b; c; w)` and the digits lost to cancellation.
pub fn hyp2f1_dd(a: Dd, b: Dd, c: Dd, w: Dd) -> Result<(Dd, f64)> {
    check_domain(a, b, w)?;
    if is_nonpositive_integer(c) {
        // allowed only when the series terminates before the pole
        let cut = -c.hi;
        let ends = |v: Dd| is_nonpositive_integer(v) && -v.hi < cut;
        if !(ends(a) || ends(b)) {
            return Err(Error::Domain(format!("2F1 with c = {} a non-positive integer", c.hi)));
        }
    }
    sum_from(a, b, c, w, 0, Dd::ONE)
}

/// `2F1(a, b; c; w) / Γ(c)`, finite for every c.
pub fn hyp2f1_regularized_dd(a: Dd, b: Dd, c: Dd, w: Dd) -> Result<(Dd, f64)> {
    check_domain(a, b, w)?;
    if !is_nonpositive_integer(c) {
        let (s, l) = sum_from(a, b, c, w, 0, Dd::ONE)?;
        return Ok((s * c.rgamma(), l));
    }
    // the first 1-c terms vanish; start at n0 = 1-c where Γ(c+n0) = 1
    let n0 = (1.0 - c.hi) as usize;
    let mut first = Dd::ONE;
    for k in 0..n0 {
        first = first * (a + k as f64) * (b + k as f64) * w / (k as f64 + 1.0);
    }
    if first.hi == 0.0 {
        return Ok((Dd::ZERO, 0.0));
    }
    sum_from(a, b, c, w, n0, first)
}

/// `2F1(a, b; c; w)` in double-double, rounded to f64.
pub fn hyp2f1(a: f64, b: f64, c: f64, w: f64) -> Result<OracleResult> {
    let (v, l) = hyp2f1_dd(a.into(), b.into(), c.into(), w.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

/// Same function through the Euler transformation, for dual-path checks.
pub fn hyp2f1_euler(a: f64, b: f64, c: f64, w: f64) -> Result<OracleResult> {
    let (a, b, c, w) = (Dd::from(a), Dd::from(b), Dd::from(c), Dd::from(w));
    let (v, l) = hyp2f1_dd(c - a, c - b, c, w)?;
    let f = (Dd::ONE - w).powf(c - a - b);
    Ok(OracleResult::new((v * f).to_f64(), l, Method::Series))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_and_terminating() {
        let v = hyp2f1(0.5, 2.0, 2.0, 0.3).unwrap().value;
        assert!((v - 0.7f64.powf(-0.5)).abs() < 1e-15);
        // 1 - 6w + 10w^2 - 5w^3 for (-3, 4; 2)
        let w = 0.5;
        let p = 1.0 - 6.0 * w + 10.0 * w * w - 5.0 * w * w * w;
        assert!((hyp2f1(-3.0, 4.0, 2.0, w).unwrap().value - p).abs() < 1e-16);
        assert!(hyp2f1(-3.0, 4.0, 2.0, 3.0).is_ok());
    }

    #[test]
    fn euler_path_agrees() {
        let a = hyp2f1(0.3, 1.7, 2.4, 0.6).unwrap().value;
        let b = hyp2f1_euler(0.3, 1.7, 2.4, 0.6).unwrap().value;
        assert!(((a - b) / a).abs() < 1e-15);
    }

    #[test]
    fn rejects_divergent_and_poles() {
        assert!(hyp2f1(0.5, 0.5, 1.0, 1.2).is_err());
        assert!(hyp2f1(0.5, 0.5, -2.0, 0.2).is_err());
        assert!(hyp2f1(-1.0, 0.5, -2.0, 0.2).is_ok());
    }

    #[test]
    fn regularized_at_pole_matches_limit() {
        // F(a,b;-1;w)/Γ(-1) = (a)_2 (b)_2 w^2 / 2 * 2F1(a+2, b+2; 3; w)
        let (a, b, w) = (Dd::from(0.3), Dd::from(1.1), Dd::from(0.4));
        let (r, _) = hyp2f1_regularized_dd(a, b, Dd::from(-1.0), w).unwrap();
        let (f, _) = hyp2f1_dd(a + 2.0, b + 2.0, Dd::from(3.0), w).unwrap();
        let want = a * (a + 1.0) * b * (b + 1.0) * w * w / 2.0 * f;
        assert!((r - want).abs().to_f64() < 1e-28);
    }
}
