//! Wigner rotation functions `d^j_{m'm}` and their second-kind partners
//! `e^j_{m'm}`, built on the Jacobi expansions with degree `j-m'` and
//! orders `(m'-m, m'+m)`.
//!
//! Conventions follow Edmonds (passive rotations); Rose's differs by
//! `(-1)^{m'-m}`, selectable through [`Convention`].

use std::fmt;

use serde::Serialize;

use crate::approx::{Approximant, LogApproximant, TruncationLevel};
use crate::dd::Dd;
use crate::error::{domain, region, Error, Result};
use crate::jacobi::{self, JacobiParams};
use crate::legendre::first_kind;
use crate::oracle::hyp2f1_dd;
use crate::oracle::jacobi::jacobi_p_recurrence_dd;
use crate::special::log_gamma;

/// An integer or half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Exact for integers and half-integers; anything else is an index error.
    pub fn from_f64(v: f64) -> Result<Self> {
        let t = 2.0 * v;
        if !t.is_finite() || t != t.round() || t.abs() > 1e15 {
            return Err(Error::InvalidIndex(format!("{v} is not a multiple of 1/2")));
        }
        Ok(HalfInt { twice: t as i64 })
    }

    pub fn value(self) -> f64 {
        self.twice as f64 * 0.5
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Canonical indices `j >= m' >= |m|` with the sign picked up on the way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RotationIndices {
    pub j: HalfInt,
    pub m_prime: HalfInt,
    pub m: HalfInt,
    pub phase: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Convention {
    #[default]
    Edmonds,
    Rose,
}

/// Map `(j, m', m)` to canonical form using
/// `d_{m'm} = d_{-m,-m'} = (-1)^{m'-m} d_{mm'}`.
pub fn canonicalize(j: HalfInt, m_prime: HalfInt, m: HalfInt) -> Result<RotationIndices> {
    let bad = |why: &str| Error::InvalidIndex(format!("(j, m', m) = ({j}, {m_prime}, {m}): {why}"));
    if j.twice < 0 {
        return Err(bad("j must be >= 0"));
    }
    if m_prime.twice.abs() > j.twice || m.twice.abs() > j.twice {
        return Err(bad("|m|, |m'| must not exceed j"));
    }
    if (j.twice - m_prime.twice) % 2 != 0 || (j.twice - m.twice) % 2 != 0 {
        return Err(bad("j - m and j - m' must be integers"));
    }
    // (m'-m) is an integer here, so its parity fixes the swap sign
    let swap = if ((m_prime.twice - m.twice) / 2) % 2 == 0 { 1 } else { -1 };
    let candidates = [(m_prime, m, 1), (m, m_prime, swap), (-m, -m_prime, 1), (-m_prime, -m, swap)];
    let (mp, mm, phase) = candidates
        .into_iter()
        .find(|(a, b, _)| a.twice >= b.twice.abs())
        .expect("one arrangement puts the largest magnitude first with a positive sign");
    Ok(RotationIndices { j, m_prime: mp, m: mm, phase })
}

impl RotationIndices {
    pub fn new(j: f64, m_prime: f64, m: f64) -> Result<Self> {
        canonicalize(HalfInt::from_f64(j)?, HalfInt::from_f64(m_prime)?, HalfInt::from_f64(m)?)
    }

    /// Jacobi degree `j-m'` and orders `(m'-m, m'+m)`.
    fn jacobi(&self) -> (f64, f64, f64) {
        let (j, mp, m) = (self.j.value(), self.m_prime.value(), self.m.value());
        (j - mp, mp - m, mp + m)
    }

    /// `ln sqrt(G(j+m'+1) G(j-m'+1) / (G(j+m+1) G(j-m+1)))`.
    fn log_root(&self) -> f64 {
        let (j, mp, m) = (self.j.value(), self.m_prime.value(), self.m.value());
        0.5 * (log_gamma(j + mp + 1.0) + log_gamma(j - mp + 1.0) - log_gamma(j + m + 1.0) - log_gamma(j - m + 1.0))
    }

    fn sign(&self, convention: Convention) -> f64 {
        let rose = match convention {
            Convention::Rose if ((self.m_prime.twice - self.m.twice) / 2) % 2 != 0 => -1.0,
            _ => 1.0,
        };
        self.phase as f64 * rose
    }
}

fn factorial_dd(n: i64) -> Dd {
    (2..=n).fold(Dd::ONE, |f, k| f * k as f64)
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(domain(format!("theta = {theta} must lie in (0, pi)")));
    }
    Ok(())
}

/// `d^j_{m'm}(theta) = sqrt((j+m')!(j-m')!/((j+m)!(j-m)!)) cos^{m'+m}(theta/2)
/// sin^{m'-m}(theta/2) P_{j-m'}^{(m'-m, m'+m)}(cos theta)`, in double-double.
pub fn wigner_d_exact(idx: RotationIndices, theta: f64) -> Result<f64> {
    wigner_d_exact_with(idx, theta, Convention::Edmonds)
}

pub fn wigner_d_exact_with(idx: RotationIndices, theta: f64, convention: Convention) -> Result<f64> {
    check_theta(theta)?;
    let (j2, mp2, m2) = (idx.j.twice, idx.m_prime.twice, idx.m.twice);
    let root = (factorial_dd((j2 + mp2) / 2) * factorial_dd((j2 - mp2) / 2)
        / (factorial_dd((j2 + m2) / 2) * factorial_dd((j2 - m2) / 2)))
    .sqrt();
    let (s, c) = Dd::from(0.5 * theta).sin_cos();
    let x = Dd::ONE - s.sqr().scale2(1);
    let (n, a, b) = idx.jacobi();
    let p = jacobi_p_recurrence_dd(n as usize, a, b, x);
    let v = root * c.powi(((mp2 + m2) / 2) as i32) * s.powi(((mp2 - m2) / 2) as i32) * p;
    Ok(v.to_f64() * idx.sign(convention))
}

/// Prefactor linking the Jacobi functions to `d` and `e`:
/// `sqrt(ratio) |(1-x)/2|^{(m'-m)/2} ((1+x)/2)^{(m'+m)/2}`, in logs.
fn log_link(idx: &RotationIndices, x: f64) -> f64 {
    let (_, a, b) = idx.jacobi();
    idx.log_root() + 0.5 * a * (0.5 * (1.0 - x).abs()).ln() + 0.5 * b * (0.5 * (1.0 + x)).ln()
}

fn check_cut(x: f64) -> Result<()> {
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(format!("x = {x} must lie in (-1, 1)")));
    }
    Ok(())
}

/// `d^j_{m'm}` at `x = cos theta` from the first-kind Jacobi series with
/// `z = sqrt(2[j(j+1) - m'(m'+1)](1-x))`.
pub fn wigner_d_asym(idx: RotationIndices, x: f64, level: TruncationLevel) -> Result<Approximant> {
    check_cut(x)?;
    let (n, a, b) = idx.jacobi();
    let p = jacobi::jacobi_p_asym(JacobiParams::new(n, a, b, x)?, level)?;
    Ok(p.scaled(idx.sign(Convention::Edmonds) * log_link(&idx, x).exp()))
}

/// The same series with the rejected argument
/// `z = sqrt(2[j(j+1) - (m'(m'+1) + m(m+1))/2](1-x))`.
pub fn wigner_d_asym_footnote(idx: RotationIndices, x: f64, level: TruncationLevel) -> Result<Approximant> {
    check_cut(x)?;
    let (n, a, b) = idx.jacobi();
    let (j, mp, m) = (idx.j.value(), idx.m_prime.value(), idx.m.value());
    let t = 0.5 * (1.0 - x);
    let w = (j * (j + 1.0) - 0.5 * (mp * (mp + 1.0) + m * (m + 1.0))) * t;
    let table = crate::coeffs::jacobi_coeff_table(a + b + 1.0);
    let g = (log_gamma(n + a + 1.0) - log_gamma(n + 1.0)).exp();
    let p = first_kind(&table, a, w, t, level.get(), g);
    Ok(p.scaled(idx.sign(Convention::Edmonds) * log_link(&idx, x).exp()))
}

fn check_large(x: f64) -> Result<()> {
    if 0.5 * (x - 1.0) <= 1.0 || x.is_nan() {
        return Err(region(format!("(x-1)/2 must exceed 1, got x = {x}")));
    }
    Ok(())
}

/// `e^j_{m'm}(x)` for `x > 3` from the `2/(1-x)` hypergeometric series in
/// double-double, returned as `(sign, ln|e|)`.
pub fn wigner_e_exact_large_log(idx: RotationIndices, x: f64) -> Result<(f64, f64)> {
    check_large(x)?;
    let (n, a, b) = idx.jacobi();
    let (nd, ad, bd, xd) = (Dd::from(n), Dd::from(a), Dd::from(b), Dd::from(x));
    let (f, _) = hyp2f1_dd(nd + 1.0, nd + ad + 1.0, nd * 2.0 + ad + bd + 2.0, Dd::from(2.0) / (Dd::ONE - xd))?;
    let ln_q = Dd::LN2 * (nd + ad + bd) - (xd - 1.0).ln() * (nd + ad + 1.0) - (xd + 1.0).ln() * bd
        + (nd + ad + 1.0).lgamma()
        + (nd + bd + 1.0).lgamma()
        - (nd * 2.0 + ad + bd + 2.0).lgamma();
    let ln_link = ((xd - 1.0).scale2(-1)).ln() * (ad * 0.5) + ((xd + 1.0).scale2(-1)).ln() * (bd * 0.5);
    let ln_abs = (ln_q + ln_link).to_f64() + idx.log_root() + f.abs().ln().to_f64();
    Ok((f.hi.signum() * idx.phase as f64, ln_abs))
}

pub fn wigner_e_exact_large(idx: RotationIndices, x: f64) -> Result<f64> {
    let (s, l) = wigner_e_exact_large_log(idx, x)?;
    Ok(s * l.exp())
}

/// `e^j_{m'm}(x)`, `x > 3`: the large-x Jacobi form with `nu = 2j+1`,
/// `j1 = j-m'+1`, `j2 = j-m+1`, in log-magnitude.
pub fn wigner_e_asym_large_log(idx: RotationIndices, x: f64, level: TruncationLevel) -> Result<LogApproximant> {
    check_large(x)?;
    let (n, a, b) = idx.jacobi();
    let q = jacobi::jacobi_q_asym_far_log(JacobiParams::new(n, a, b, x)?, level)?;
    Ok(q.shifted(log_link(&idx, x), idx.phase as f64))
}

pub fn wigner_e_asym_large(idx: RotationIndices, x: f64, level: TruncationLevel) -> Result<Approximant> {
    Ok(wigner_e_asym_large_log(idx, x, level)?.to_approximant())
}

/// On-cut `e^j_{m'm}(x)` from the leading on-cut Jacobi form.
pub fn wigner_e_cut_asym(idx: RotationIndices, x: f64) -> Result<Approximant> {
    check_cut(x)?;
    let (n, a, b) = idx.jacobi();
    let q = jacobi::jacobi_q_cut(JacobiParams::new(n, a, b, x)?)?;
    Ok(q.scaled(idx.phase as f64 * log_link(&idx, x).exp()))
}

/// On-cut `e` with the printed `2m'(m'-m)/(j-m'+1)` and `cot(pi(m'-m))`
/// terms, evaluated by the epsilon limit since `m'-m` is an integer.
pub fn wigner_e_cut_asym_printed(idx: RotationIndices, x: f64) -> Result<Approximant> {
    check_cut(x)?;
    let (n, a, b) = idx.jacobi();
    let q = jacobi::jacobi_q_cut_printed(JacobiParams::new(n, a, b, x)?)?;
    Ok(q.scaled(idx.phase as f64 * log_link(&idx, x).exp()))
}

/// Exact on-cut `e` from the on-cut Jacobi Q oracle.
pub fn wigner_e_cut_exact(idx: RotationIndices, x: f64) -> Result<f64> {
    check_cut(x)?;
    let (n, a, b) = idx.jacobi();
    let q = crate::oracle::jacobi_q_cut_oracle(n, a, b, x)?.value;
    Ok(q * idx.phase as f64 * log_link(&idx, x).exp())
}

/// Exact `d` through the same link from the Jacobi recurrence, for `x` given.
pub fn wigner_d_exact_at(idx: RotationIndices, x: f64) -> Result<f64> {
    check_cut(x)?;
    wigner_d_exact(idx, x.acos())
}
