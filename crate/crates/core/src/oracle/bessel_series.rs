//! Ascending Bessel series in double-double, the reference for the
//! native-precision Bessel routines.

use num_complex::Complex64;

use crate::dd::Dd;

const EULER: Dd = Dd::new(0.577_215_664_901_532_9, -4.942_915_152_430_645e-18);

fn psi_int(k: usize) -> Dd {
    // ψ(k+1) = -γ + H_k
    let mut h = -EULER;
    for i in 1..=k {
        h += Dd::ONE / i as f64;
    }
    h
}

fn factorial(n: usize) -> Dd {
    let mut f = Dd::ONE;
    for k in 2..=n {
        f *= k as f64;
    }
    f
}

/// `sum_k s^k (x/2)^{2k+nu} / (k! Γ(k+nu+1))` with `s = -1` for J, `+1` for I.
fn power_series(nu: f64, x: f64, sign: f64) -> Dd {
    let h = Dd::from(x).scale2(-1);
    let q = h * h * sign;
    let mut term = h.powf(Dd::from(nu)) * Dd::from(nu + 1.0).rgamma();
    let mut sum = term;
    for k in 1..2000 {
        let kf = k as f64;
        term = term * q / (Dd::from(kf) * (nu + kf));
        sum += term;
        if term.abs().to_f64() < 1e-34 * sum.abs().to_f64() && k as f64 > x {
            break;
        }
    }
    sum
}

pub fn j_series(nu: f64, x: f64) -> Dd {
    power_series(nu, x, -1.0)
}

pub fn i_series(nu: f64, x: f64) -> Dd {
    power_series(nu, x, 1.0)
}

/// The two finite sums of the integer-order log series:
/// `A = sum_{k<n} (n-k-1)!/k! (s x^2/4)^k` and
/// `B = sum_k (ψ(k+1)+ψ(n+k+1)) (t x^2/4)^k / (k!(n+k)!)`.
fn log_series_parts(n: usize, x: f64, s: f64, t: f64) -> (Dd, Dd) {
    let q = Dd::from(x) * x / 4.0;
    let mut a = Dd::ZERO;
    let mut p = Dd::ONE;
    for k in 0..n {
        a += factorial(n - k - 1) / factorial(k) * p;
        p = p * q * s;
    }
    let mut b = Dd::ZERO;
    let mut term = factorial(n).recip();
    for k in 0..3000 {
        let add = (psi_int(k) + psi_int(n + k)) * term;
        b += add;
        term = term * q * t / ((k + 1) as f64 * (n + k + 1) as f64);
        if add.abs().to_f64() < 1e-34 * b.abs().to_f64() && (k as f64) > x {
            break;
        }
    }
    (a, b)
}

/// `Y_n(x)`, integer order, from the log series.
pub fn y_int_series(n: usize, x: f64) -> Dd {
    let h = Dd::from(x).scale2(-1);
    let (a, b) = log_series_parts(n, x, 1.0, -1.0);
    let jn = j_series(n as f64, x);
    -(h.powi(-(n as i32)) * a) / Dd::PI + (jn * h.ln()).scale2(1) / Dd::PI - h.powi(n as i32) * b / Dd::PI
}

/// `K_n(x)`, integer order, from the log series.
pub fn k_int_series(n: usize, x: f64) -> Dd {
    let h = Dd::from(x).scale2(-1);
    let (a, b) = log_series_parts(n, x, -1.0, 1.0);
    let sgn = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    (h.powi(-(n as i32)) * a).scale2(-1) - i_series(n as f64, x) * h.ln() * sgn + (h.powi(n as i32) * b).scale2(-1) * sgn
}

/// `K_nu(i x)` from the ascending series continued to the imaginary axis.
pub fn k_imaginary(nu: f64, x: f64) -> Complex64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    if nu == nu.floor() {
        let n = nu.abs() as usize;
        // K_n(ix): ln(ix/2) = ln(x/2) + i pi/2, I_n(ix) = i^n J_n(x)
        let h = Dd::from(x).scale2(-1);
        let (a, b) = log_series_parts(n, x, 1.0, -1.0);
        let ipow = |p: i32| Complex64::i().powi(p);
        let sgn = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let jn = j_series(n as f64, x).to_f64();
        let first = ipow(-(n as i32)) * (h.powi(-(n as i32)) * a).scale2(-1).to_f64();
        let log = Complex64::new(h.ln().to_f64(), half_pi);
        let second = -log * ipow(n as i32) * jn * sgn;
        let third = ipow(n as i32) * (h.powi(n as i32) * b).scale2(-1).to_f64() * sgn;
        return first + second + third;
    }
    // (pi/2)(I_{-nu}(ix) - I_nu(ix)) / sin(nu pi), I_nu(ix) = e^{i nu pi/2} J_nu(x)
    let s = Dd::from(nu).sin_pi().to_f64();
    let im = Complex64::from_polar(1.0, -half_pi * nu) * j_series(-nu, x).to_f64();
    let ip = Complex64::from_polar(1.0, half_pi * nu) * j_series(nu, x).to_f64();
    (im - ip) * (half_pi / s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        // J_0(1), Y_0(1), K_0(1), I_1(1)
        assert!((j_series(0.0, 1.0).to_f64() - 0.765_197_686_557_966_6).abs() < 1e-16);
        assert!((y_int_series(0, 1.0).to_f64() - 0.088_256_964_215_676_96).abs() < 1e-16);
        assert!((k_int_series(0, 1.0).to_f64() - 0.421_024_438_240_708_3).abs() < 1e-16);
        assert!((k_int_series(2, 1.0).to_f64() - 1.624_838_898_635_177_5).abs() < 1e-15);
        assert!((y_int_series(3, 2.0).to_f64() + 1.127_783_776_840_427_8).abs() < 1e-15);
        assert!((i_series(1.0, 1.0).to_f64() - 0.565_159_103_992_485).abs() < 1e-16);
    }
}
