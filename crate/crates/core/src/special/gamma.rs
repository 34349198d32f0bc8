//! Gamma, reciprocal gamma and digamma for real arguments.
//!
//! Arguments below the Stirling threshold are shifted upward with the
//! recurrence; negative arguments go through the reflection formula.

use std::f64::consts::PI;

// Taylor coefficients of 1/Γ(1+x) about 0
pub(crate) const RGAMMA_TAYLOR: [f64; 29] = [
    1.0,
    5.772_156_649_015_329e-1,
    -6.558_780_715_202_539e-1,
    -4.200_263_503_409_524e-2,
    1.665_386_113_822_914_8e-1,
    -4.219_773_455_554_433e-2,
    -9.621_971_527_876_973e-3,
    7.218_943_246_663_1e-3,
    -1.165_167_591_859_065_2e-3,
    -2.152_416_741_149_509_8e-4,
    1.280_502_823_881_162e-4,
    -2.013_485_478_078_824e-5,
    -1.250_493_482_142_670_6e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_506_6e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_8e-16,
    1.186_692_254_751_600_4e-18,
    1.412_380_655_318_031_9e-18,
    -2.298_745_684_435_37e-19,
];

const STIRLING_MIN: f64 = 15.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)), k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

// B_{2k} / (2k), k = 1..7
const DIGAMMA_ASY: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// `sin(pi x)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// `cos(pi x)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn stirling(y: f64) -> f64 {
    let r = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = 1.0 / y;
    for c in STIRLING {
        series += c * p;
        p *= r;
    }
    (y - 0.5) * y.ln() - y + LN_SQRT_2PI + series
}

/// `ln|Γ(x)|`. NaN at the poles.
pub fn log_gamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x < 0.5 {
        // Γ(x)Γ(1-x) = π / sin(πx)
        return PI.ln() - sin_pi(x).abs().ln() - log_gamma(1.0 - x);
    }
    if x == x.floor() && x <= 23.0 {
        return gamma(x).ln();
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < STIRLING_MIN {
        prod *= y;
        y += 1.0;
    }
    stirling(y) - prod.ln()
}

/// `Γ(x)` for real `x`; infinite at the poles.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x == x.floor() && x <= 23.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return f;
    }
    if x >= STIRLING_MIN {
        return stirling(x).exp();
    }
    // Γ(1+t) prod_{k<n} (1+t+k) with |t| <= 1/2
    let n = (x - 0.5).floor();
    let t = x - 1.0 - n;
    let mut prod = 1.0 / rgamma_near_one(t);
    let mut k = 0.0;
    while k < n {
        prod *= 1.0 + t + k;
        k += 1.0;
    }
    prod
}

fn rgamma_near_one(t: f64) -> f64 {
    RGAMMA_TAYLOR.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// `1/Γ(x)`, entire: zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        return sin_pi(x) * gamma(1.0 - x) / PI;
    }
    if x > 171.0 {
        return (-stirling(x)).exp();
    }
    1.0 / gamma(x)
}

/// `ψ(x) = Γ'(x)/Γ(x)`. NaN at the poles.
pub fn digamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x < 0.0 {
        return digamma(1.0 - x) - PI * cos_pi(x) / sin_pi(x);
    }
    let mut y = x;
    let mut acc = 0.0;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let r = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = r;
    for c in DIGAMMA_ASY {
        series += c * p;
        p *= r;
    }
    acc + y.ln() - 0.5 / y - series
}

/// `Γ(a)/Γ(b)` for positive arguments.
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    if a == b {
        return 1.0;
    }
    if a.max(b) < 150.0 {
        return gamma(a) * rgamma(b);
    }
    (log_gamma(a) - log_gamma(b)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_forms() {
        assert!(log_gamma(1.0).abs() < 1e-14);
        assert!(log_gamma(2.0).abs() < 1e-14);
        assert!(rel(gamma(0.5), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(5.0), 24.0) == 0.0);
        assert!(rel(gamma(-0.5), -2.0 * PI.sqrt()) < 1e-14);
        assert!(rel(digamma(1.0), -0.577_215_664_901_532_9) < 1e-14);
        assert_eq!(rgamma(-3.0), 0.0);
        assert_eq!(gamma_ratio(3.0, 1.0), 2.0);
        assert!(rel(gamma_ratio(50.5, 49.5), 49.5) < 1e-12);
    }

    #[test]
    fn digamma_recurrence() {
        let mut psi = digamma(1.0);
        for k in 1..51 {
            psi += 1.0 / k as f64;
        }
        assert!(rel(digamma(51.0), psi) < 1e-14);
    }

    #[test]
    fn log_gamma_large_matches_factorial_sum() {
        let mut lf = 0.0;
        for k in 2..300 {
            lf += (k as f64).ln();
        }
        assert!(rel(log_gamma(300.0), lf) < 1e-14);
    }

    #[test]
    fn sin_pi_exact_zeros() {
        for k in -5..6 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert!((sin_pi(0.5) - 1.0).abs() < 1e-16);
        assert_eq!(cos_pi(0.5), 0.0);
    }
}
