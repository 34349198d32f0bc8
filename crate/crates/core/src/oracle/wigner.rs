//! The classical factorial sum for Wigner's d, a cross-check at small j.

use super::{Method, OracleResult};
use crate::dd::Dd;
use crate::error::{Error, Result};

fn factorial(n: i64) -> Dd {
    let mut f = Dd::ONE;
    for k in 2..=n {
        f *= k as f64;
    }
    f
}

/// `d^j_{m'm}(theta)` with all indices given doubled (`2j`, `2m'`, `2m`):
/// `sum_s (-1)^s sqrt((j+m')!(j-m')!(j+m)!(j-m)!) / ((j+m-s)! s! (m'-m+s)! (j-m'-s)!)
///  cos^{2j+m-m'-2s}(theta/2) sin^{m'-m+2s}(theta/2)`.
pub fn wigner_d_factorial_oracle(j2: i64, mp2: i64, m2: i64, theta: f64) -> Result<OracleResult> {
    if j2 < 0 || mp2.abs() > j2 || m2.abs() > j2 || (j2 - mp2) % 2 != 0 || (j2 - m2) % 2 != 0 {
        return Err(Error::InvalidIndex(format!("(2j, 2m', 2m) = ({j2}, {mp2}, {m2})")));
    }
    if j2 > 30 {
        return Err(Error::Domain("factorial sum is kept for j <= 15".into()));
    }
    let jpmp = (j2 + mp2) / 2;
    let jmmp = (j2 - mp2) / 2;
    let jpm = (j2 + m2) / 2;
    let jmm = (j2 - m2) / 2;
    let dm = (mp2 - m2) / 2;
    let root = (factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm)).sqrt();
    let (s_half, c_half) = Dd::from(0.5 * theta).sin_cos();
    let mut sum = Dd::ZERO;
    let mut largest = 0.0f64;
    for s in 0..=j2 {
        if jpm - s < 0 || dm + s < 0 || jmmp - s < 0 {
            continue;
        }
        let den = factorial(jpm - s) * factorial(s) * factorial(dm + s) * factorial(jmmp - s);
        let pc = j2 + (m2 - mp2) / 2 - 2 * s;
        let ps = dm + 2 * s;
        let mut t = root / den * c_half.powi(pc as i32) * s_half.powi(ps as i32);
        if s % 2 == 1 {
            t = -t;
        }
        largest = largest.max(t.abs().to_f64());
        sum += t;
    }
    let loss = if sum.hi == 0.0 { 0.0 } else { (largest / sum.abs().to_f64()).log10() };
    Ok(OracleResult::new(sum.to_f64(), loss, Method::Series))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let th = 0.7;
        let v = wigner_d_factorial_oracle(1, 1, 1, th).unwrap().value;
        assert!((v - (0.5 * th).cos()).abs() < 1e-16);
        let c = th.cos();
        let v = wigner_d_factorial_oracle(4, 0, 0, th).unwrap().value;
        assert!((v - 0.5 * (3.0 * c * c - 1.0)).abs() < 1e-15);
        let v = wigner_d_factorial_oracle(2, 2, 0, th).unwrap().value;
        assert!((v - th.sin() / 2f64.sqrt()).abs() < 1e-15);
        assert!(wigner_d_factorial_oracle(2, 1, 0, th).is_err());
    }
}
