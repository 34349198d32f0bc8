//! Bessel functions J, Y, I, K of real order and non-negative real argument.
//!
//! For `x < 2` the order is reduced to `|mu| <= 1/2` and Temme's series gives
//! Y_mu and K_mu (the gamma-difference functions come from the Taylor series
//! of 1/Γ, which makes the integer-order limit analytic). For `x >= 2` Steed's
//! continued fractions are used. The ratio J'/J and I'/I come from the first
//! continued fraction, with recurrence to connect the orders.
//!
//! Besides the plain functions this module provides the combinations the
//! expansions need without 0/0 or overflow: the reduced forms
//! `(z/2)^{-nu} J_nu(z)`, scaled forms multiplied by `Γ(nu+1)`, and the
//! logarithm-free parts of integer-order Y and K.

use std::f64::consts::PI;

use super::gamma::{cos_pi, digamma, rgamma, sin_pi, RGAMMA_TAYLOR};
use crate::error::{domain, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-290;
const MAXIT: usize = 200_000;
const XMIN: f64 = 2.0;
const RESCALE: f64 = 1e250;
const HANKEL_MIN: f64 = 20.0;

/// Values and derivatives of J and Y at one order.
#[derive(Debug, Clone, Copy)]
pub struct JyPair {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

/// Values and derivatives of I and K at one order.
#[derive(Debug, Clone, Copy)]
pub struct IkPair {
    pub i: f64,
    pub k: f64,
    pub ip: f64,
    pub kp: f64,
}

// (gam1, gam2, 1/Γ(1+x), 1/Γ(1-x)) for |x| <= 1/2, with
// gam1 = (1/Γ(1-x) - 1/Γ(1+x)) / 2x and gam2 = (1/Γ(1-x) + 1/Γ(1+x)) / 2
fn temme_gammas(x: f64) -> (f64, f64, f64, f64) {
    let mut gampl = 0.0;
    let mut gammi = 0.0;
    let mut even = 0.0;
    let mut gam1 = 0.0;
    let mut p = 1.0;
    for (k, c) in RGAMMA_TAYLOR.iter().enumerate() {
        let t = c * p;
        gampl += t;
        if k % 2 == 0 {
            gammi += t;
            even += t;
        } else {
            gammi -= t;
        }
        p *= x;
    }
    let x2 = x * x;
    let mut q = 1.0;
    for c in RGAMMA_TAYLOR.iter().skip(1).step_by(2) {
        gam1 -= c * q;
        q *= x2;
    }
    (gam1, even, gampl, gammi)
}

// Large-argument expansion: J + iY = sqrt(2/(pi x)) (P + iQ) e^{i omega},
// summed until the terms reach roundoff or start to grow. None when the
// smallest term or the cancellation among large terms costs accuracy.
fn hankel_jy(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    let mut largest = 1.0f64;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        // terms rise while (2k-1)^2 < mu; growth after that is divergence
        if (term.abs() >= last && odd * odd > mu) || term == 0.0 {
            break;
        }
        last = term.abs();
        largest = largest.max(last);
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
    }
    if last > 1e-16 * p.abs().max(q.abs()) || largest > 4.0 {
        return None;
    }
    // omega = x - (nu/2 + 1/4) pi
    let (sx, cx) = x.sin_cos();
    let phi = 0.5 * nu + 0.25;
    let (sp, cp) = (sin_pi(phi), cos_pi(phi));
    let (so, co) = (sx * cp - cx * sp, cx * cp + sx * sp);
    let amp = (2.0 / (PI * x)).sqrt();
    Some((amp * (p * co - q * so), amp * (p * so + q * co)))
}

/// J_nu, Y_nu and derivatives for `nu >= 0`, `x > 0`.
pub fn bessel_jy(nu: f64, x: f64) -> JyPair {
    debug_assert!(nu >= 0.0 && x > 0.0);
    if x > HANKEL_MIN && nu < x {
        // fractional order from the expansion, then forward recurrence,
        // which is stable in the oscillatory region nu < x
        let n = nu.floor();
        let mu = nu - n;
        if let Some(((mut j0, mut y0), (mut j1, mut y1))) = hankel_jy(mu, x).zip(hankel_jy(mu + 1.0, x)) {
            let mut k = 0.0;
            while k < n {
                let c = 2.0 * (mu + k + 1.0) / x;
                (j0, j1) = (j1, c * j1 - j0);
                (y0, y1) = (y1, c * y1 - y0);
                k += 1.0;
            }
            return JyPair {
                j: j0,
                y: y0,
                jp: nu / x * j0 - j1,
                yp: nu / x * y0 - y1,
            };
        }
    }
    let nl = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_nu / J_nu
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE {
            rjl /= RESCALE;
            rjpl /= RESCALE;
            rjl1 /= RESCALE;
            rjp1 /= RESCALE;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                break;
            }
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for i in 2..MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di = -di / den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                break;
            }
        }
        let gam = (p - f) / q;
        let mag = (w / ((p - f) * gam + q)).sqrt();
        rjmu = mag.copysign(rjl);
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let fact = rjmu / rjl;
    let j = rjl1 * fact;
    let jp = rjp1 * fact;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    JyPair {
        j,
        y: rymu,
        jp,
        yp: nu * xi * rymu - ry1,
    }
}

/// I_nu, K_nu and derivatives for `nu >= 0`, `x > 0`.
pub fn bessel_ik(nu: f64, x: f64) -> IkPair {
    debug_assert!(nu >= 0.0 && x > 0.0);
    let nl = (nu + 0.5) as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    let mut ril = FPMIN;
    let mut ripl = h * ril;
    let mut ril1 = ril;
    let mut rip1 = ripl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
        if ril.abs() > RESCALE {
            ril /= RESCALE;
            ripl /= RESCALE;
            ril1 /= RESCALE;
            rip1 /= RESCALE;
        }
    }
    let f = ripl / ril;

    let (mut rkmu, mut rk1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let e = e.exp();
        let mut p = 0.5 * e / gampl;
        let mut q = 0.5 / (e * gammi);
        let mut c = 1.0;
        let d = x2 * x2;
        let mut sum1 = p;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - fi * ff);
            sum1 += del1;
            if del.abs() < sum.abs() * EPS {
                break;
            }
        }
        rkmu = sum;
        rk1 = sum1 * xi2;
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        for i in 2..MAXIT {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                break;
            }
        }
        h *= a1;
        rkmu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    }
    let rkmup = xmu * xi * rkmu - rk1;
    let rimu = xi / (f * rkmu - rkmup);
    let i = rimu * ril1 / ril;
    let ip = rimu * rip1 / ril;
    for k in 1..=nl {
        let rktemp = (xmu + k as f64) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    IkPair {
        i,
        k: rkmu,
        ip,
        kp: nu * xi * rkmu - rk1,
    }
}

fn check(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || !x.is_finite() {
        return Err(domain(format!("non-finite input nu={nu}, x={x}")));
    }
    if x < 0.0 {
        return Err(domain(format!("negative argument x={x}")));
    }
    Ok(())
}

fn is_integer(v: f64) -> bool {
    v == v.round()
}

pub(crate) fn j_raw(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 || is_integer(nu) {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if nu >= 0.0 {
        return bessel_jy(nu, x).j;
    }
    let v = -nu;
    if is_integer(v) {
        let r = bessel_jy(v, x).j;
        return if (v as i64) % 2 == 0 { r } else { -r };
    }
    let p = bessel_jy(v, x);
    cos_pi(v) * p.j - sin_pi(v) * p.y
}

pub(crate) fn y_raw(nu: f64, x: f64) -> f64 {
    if nu >= 0.0 {
        return bessel_jy(nu, x).y;
    }
    let v = -nu;
    let p = bessel_jy(v, x);
    if is_integer(v) {
        return if (v as i64) % 2 == 0 { p.y } else { -p.y };
    }
    sin_pi(v) * p.j + cos_pi(v) * p.y
}

pub(crate) fn i_raw(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 {
            1.0
        } else if nu > 0.0 || is_integer(nu) {
            0.0
        } else {
            f64::INFINITY
        };
    }
    if nu >= 0.0 {
        return bessel_ik(nu, x).i;
    }
    let v = -nu;
    let p = bessel_ik(v, x);
    if is_integer(v) {
        return p.i;
    }
    p.i + 2.0 / PI * sin_pi(v) * p.k
}

pub(crate) fn k_raw(nu: f64, x: f64) -> f64 {
    bessel_ik(nu.abs(), x).k
}

/// J_nu(x) for real order and `x >= 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(j_raw(nu, x))
}

/// Y_nu(x) for real order and `x > 0`.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Err(domain("Y is singular at x = 0"));
    }
    Ok(y_raw(nu, x))
}

/// I_nu(x) for real order and `x >= 0`.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(i_raw(nu, x))
}

/// K_nu(x) for real order and `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Err(domain("K is singular at x = 0"));
    }
    Ok(k_raw(nu, x))
}

// sum_k s^k / (k! Γ(nu+k+1)) with s = ±z²/4
fn reduced_series(nu: f64, s: f64) -> f64 {
    let mut sum = 0.0;
    let mut fact = 1.0;
    let mut pow = 1.0;
    for k in 0..500 {
        let t = pow / fact * rgamma(nu + k as f64 + 1.0);
        sum += t;
        if k as f64 > -nu && t.abs() < EPS * sum.abs() {
            break;
        }
        pow *= s;
        fact *= (k + 1) as f64;
    }
    sum
}

// sum_k s^k / (k! (nu+1)_k), nu > -1
fn scaled_series(nu: f64, s: f64) -> f64 {
    let mut sum = 1.0;
    let mut t = 1.0;
    for k in 1..2000 {
        let fk = k as f64;
        t *= s / (fk * (nu + fk));
        sum += t;
        if t.abs() < EPS * sum.abs() {
            break;
        }
    }
    sum
}

fn use_series(nu: f64, z: f64) -> bool {
    z <= 2.0 || z * z <= 4.0 * (nu + 1.0)
}

/// `(z/2)^{-nu} J_nu(z)`, finite at `z = 0` (value `1/Γ(nu+1)`).
pub fn reduced_j(nu: f64, z: f64) -> f64 {
    if use_series(nu, z) {
        reduced_series(nu, -0.25 * z * z)
    } else {
        j_raw(nu, z) * (0.5 * z).powf(-nu)
    }
}

/// `(z/2)^{-nu} I_nu(z)`, finite at `z = 0`.
pub fn reduced_i(nu: f64, z: f64) -> f64 {
    if z <= 2.0 || z * z <= 16.0 * (nu.abs() + 1.0) {
        reduced_series(nu, 0.25 * z * z)
    } else {
        i_raw(nu, z) * (0.5 * z).powf(-nu)
    }
}

/// `Γ(nu+1) (z/2)^{-nu} J_nu(z)` for `nu > -1`; stays O(1) at large order.
pub fn scaled_j(nu: f64, z: f64) -> f64 {
    if use_series(nu, z) {
        scaled_series(nu, -0.25 * z * z)
    } else {
        let j = j_raw(nu, z);
        j.signum() * (super::gamma::log_gamma(nu + 1.0) - nu * (0.5 * z).ln() + j.abs().ln()).exp()
    }
}

/// `Γ(nu+1) (z/2)^{-nu} I_nu(z)` for `nu > -1`.
pub fn scaled_i(nu: f64, z: f64) -> f64 {
    if z <= 2.0 || z * z <= 16.0 * (nu + 1.0) {
        scaled_series(nu, 0.25 * z * z)
    } else {
        let i = i_raw(nu, z);
        (super::gamma::log_gamma(nu + 1.0) - nu * (0.5 * z).ln() + i.ln()).exp()
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `(z/2)^n [K_n(z) + (-1)^n ln(z/2) I_n(z)]`: the K_n part that is free of
/// the logarithm, finite at `z = 0`.
pub fn zk_reg(n: usize, z: f64) -> f64 {
    let h = 0.5 * z;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    if z <= 4.0 {
        let q = h * h;
        let mut head = 0.0;
        let mut p = 1.0;
        for k in 0..n {
            head += factorial(n - k - 1) / factorial(k) * p;
            p *= -q;
        }
        let mut tail = 0.0;
        let mut psi_a = digamma(1.0);
        let mut psi_b = digamma(n as f64 + 1.0);
        let mut t = 1.0 / factorial(n);
        for k in 0..400 {
            let term = (psi_a + psi_b) * t;
            tail += term;
            if k > 2 && term.abs() < EPS * tail.abs() {
                break;
            }
            let fk = (k + 1) as f64;
            psi_a += 1.0 / fk;
            psi_b += 1.0 / (n as f64 + fk);
            t *= q / (fk * (n as f64 + fk));
        }
        0.5 * head + sign * 0.5 * h.powi(2 * n as i32) * tail
    } else {
        let nu = n as f64;
        h.powi(n as i32) * (k_raw(nu, z) + sign * h.ln() * i_raw(nu, z))
    }
}

/// `(z/2)^n [Y_n(z) - (2/π) ln(z/2) J_n(z)]`, finite at `z = 0`.
pub fn zy_reg(n: usize, z: f64) -> f64 {
    let h = 0.5 * z;
    if z <= 4.0 {
        let q = h * h;
        let mut head = 0.0;
        let mut p = 1.0;
        for k in 0..n {
            head += factorial(n - k - 1) / factorial(k) * p;
            p *= q;
        }
        let mut tail = 0.0;
        let mut psi_a = digamma(1.0);
        let mut psi_b = digamma(n as f64 + 1.0);
        let mut t = 1.0 / factorial(n);
        for k in 0..400 {
            let term = (psi_a + psi_b) * t;
            tail += term;
            if k > 2 && term.abs() < EPS * tail.abs().max(1e-300) {
                break;
            }
            let fk = (k + 1) as f64;
            psi_a += 1.0 / fk;
            psi_b += 1.0 / (n as f64 + fk);
            t *= -q / (fk * (n as f64 + fk));
        }
        -(head + h.powi(2 * n as i32) * tail) / PI
    } else {
        let nu = n as f64;
        h.powi(n as i32) * (y_raw(nu, z) - 2.0 / PI * h.ln() * j_raw(nu, z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        let x = PI / 2.0;
        assert!(rel(bessel_j(0.5, x).unwrap(), 2.0 / PI) < 1e-14);
        assert!(rel(bessel_k(0.5, 1.0).unwrap(), (PI / 2.0).sqrt() * (-1.0f64).exp()) < 1e-14);
        assert_eq!(bessel_i(0.0, 0.0).unwrap(), 1.0);
        // J_{-1/2}(x) = sqrt(2/(πx)) cos x
        let x = 3.7;
        assert!(rel(bessel_j(-0.5, x).unwrap(), (2.0 / (PI * x)).sqrt() * x.cos()) < 1e-14);
        assert!(rel(bessel_y(0.5, x).unwrap(), -(2.0 / (PI * x)).sqrt() * x.cos()) < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bessel_j(1.0, -1.0).is_err());
        assert!(bessel_y(1.0, 0.0).is_err());
        assert!(bessel_k(0.0, 0.0).is_err());
        assert!(bessel_i(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn temme_gammas_match_rgamma() {
        for &x in &[-0.5, -0.3, -1e-9, 0.0, 1e-9, 0.2, 0.5] {
            let (g1, g2, gp, gm) = temme_gammas(x);
            assert!((gp - rgamma(1.0 + x)).abs() < 1e-15);
            assert!((gm - rgamma(1.0 - x)).abs() < 1e-15);
            assert!((g2 - 0.5 * (gp + gm)).abs() < 1e-15);
            if x.abs() > 1e-3 {
                assert!((g1 - (gm - gp) / (2.0 * x)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn reduced_forms_agree_with_direct() {
        for &nu in &[0.0, 0.4, 1.0, 2.5, 7.0] {
            for &z in &[0.5, 1.9, 3.0, 8.0] {
                let direct = j_raw(nu, z) * (0.5 * z).powf(-nu);
                assert!((reduced_j(nu, z) - direct).abs() < 1e-14 * (1.0 + direct.abs()));
                let direct = i_raw(nu, z) * (0.5 * z).powf(-nu);
                assert!(rel(reduced_i(nu, z), direct) < 1e-13);
            }
        }
        assert!(rel(reduced_j(0.5, 0.0), rgamma(1.5)) < 1e-15);
    }

    #[test]
    fn regular_parts_continuous_across_switch() {
        for n in 0..5 {
            let a = zk_reg(n, 4.0);
            let b = zk_reg(n, 4.0 + 1e-12);
            assert!((a - b).abs() < 1e-11 * (1.0 + a.abs()), "K n={n}: {a} {b}");
            let a = zy_reg(n, 4.0);
            let b = zy_reg(n, 4.0 + 1e-12);
            assert!((a - b).abs() < 1e-11 * (1.0 + a.abs()), "Y n={n}: {a} {b}");
        }
        // K_0 + ln(z/2) I_0 -> -γ at z = 0
        assert!((zk_reg(0, 0.0) + 0.577_215_664_901_532_9).abs() < 1e-15);
    }
}
