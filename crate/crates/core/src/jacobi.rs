//! Bessel-function expansions of Jacobi functions.
//!
//! The first kind uses `N = j(j+b)`, `b = alpha+beta+1`, in the argument
//! `z = sqrt(2N(1-x))` and the general-b coefficient table. For the second
//! kind three forms are provided: near `x = 1` (and on the cut), and two
//! large-`x` forms in the Bessel order `nu = 2j+alpha+beta+1` whose
//! prefactors are carried in log-magnitude.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use serde::Serialize;

use crate::approx::{near_integer_warning, Approximant, LogApproximant, TruncationLevel, Warning};
use crate::coeffs::{jacobi_coeff_table, product_groups};
use crate::dd::Dd;
use crate::error::{domain, region, Error, Result};
use crate::legendre::first_kind;
use crate::oracle::limit::symmetric_limit;
use crate::special::{bessel_i, bessel_j, bessel_k, bessel_y, cos_pi, gamma, gamma_ratio, log_gamma, rgamma, scaled_i, scaled_j, sin_pi};

pub use crate::coeffs::jacobi_coeff_table as coefficient_table;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiParams {
    pub j: f64,
    pub alpha: f64,
    pub beta: f64,
    pub x: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeTag {
    /// `1 < x < 3`
    NearOne,
    /// `-1 < x < 1`
    OnCut,
    /// `x > 3`, expansion in `2/(x-1)`
    FarLarge,
    /// `x > 1`, expansion in `2/(x+1)`
    FarAlt,
}

impl JacobiParams {
    pub fn new(j: f64, alpha: f64, beta: f64, x: f64) -> Result<Self> {
        if !(j.is_finite() && alpha.is_finite() && beta.is_finite() && x.is_finite()) {
            return Err(domain("Jacobi parameters must be finite"));
        }
        if j < 0.0 {
            return Err(domain(format!("degree j = {j} must be >= 0")));
        }
        if alpha <= -1.0 || beta <= -1.0 {
            return Err(domain(format!("alpha = {alpha}, beta = {beta} must exceed -1")));
        }
        if x <= -1.0 {
            return Err(domain(format!("x = {x} must be > -1")));
        }
        Ok(JacobiParams { j, alpha, beta, x })
    }

    pub fn b(&self) -> f64 {
        self.alpha + self.beta + 1.0
    }

    /// `j(j+b)`
    pub fn n(&self) -> f64 {
        self.j * (self.j + self.b())
    }

    /// The natural regime for `x`; `FarAlt` is only ever requested explicitly.
    pub fn regime(&self) -> RegimeTag {
        if self.x <= 1.0 {
            RegimeTag::OnCut
        } else if self.x < 3.0 {
            RegimeTag::NearOne
        } else {
            RegimeTag::FarLarge
        }
    }
}

/// `Γ(a)/Γ(b)` for arguments of any sign.
fn gamma_quotient(a: f64, b: f64) -> f64 {
    if a > 0.0 && b > 0.0 {
        gamma_ratio(a, b)
    } else {
        gamma(a) * rgamma(b)
    }
}

// First-kind series without the parameter checks; the connection formulas
// need it at degree j+a+b and orders -a, -b.
fn p_series(j: f64, a: f64, b: f64, x: f64, level: usize) -> Result<Approximant> {
    let bb = a + b + 1.0;
    let t = 0.5 * (1.0 - x);
    if t <= -1.0 {
        return Err(region(format!("(x-1)/2 = {} >= 1 is outside the series region", -t)));
    }
    let w = j * (j + bb) * t;
    let table = jacobi_coeff_table(bb);
    Ok(first_kind(&table, a, w, t, level, gamma_quotient(j + a + 1.0, j + 1.0)))
}

/// `P_j^{(a,b)}(x)` for `-1 < x < 3`.
pub fn jacobi_p_asym(p: JacobiParams, level: TruncationLevel) -> Result<Approximant> {
    p_series(p.j, p.alpha, p.beta, p.x, level.get())
}

fn is_integer(a: f64) -> bool {
    a == a.floor()
}

/// `f(a)` with the symmetric epsilon limit when `a` is an integer.
fn at_order(f: impl Fn(f64) -> Result<f64>, a: f64) -> Result<(f64, Option<Warning>)> {
    if is_integer(a) {
        let (v, _) = symmetric_limit(|e| f(e.to_f64()).map(Dd::from), a)?;
        Ok((v.to_f64(), Some(Warning::EpsilonLimit { order: a })))
    } else {
        Ok((f(a)?, near_integer_warning(a)))
    }
}

/// Connection of two level-2 first-kind series, used as the estimate
/// reference of the leading second-kind terms.
fn connection(p: &JacobiParams) -> Result<f64> {
    let (j, b, x) = (p.j, p.beta, p.x);
    let on_cut = x < 1.0;
    let f = |a: f64| -> Result<f64> {
        let p1 = p_series(j, a, b, x, 2)?.value;
        let p2 = p_series(j + a + b, -a, -b, x, 2)?.value;
        let w = (0.5 * (1.0 - x).abs()).powf(-a) * (0.5 * (1.0 + x)).powf(-b);
        let c1 = if on_cut { cos_pi(a) } else { 1.0 };
        Ok(PI / (2.0 * sin_pi(a)) * (w * p2 - c1 * p1))
    };
    Ok(at_order(f, p.alpha)?.0)
}

fn near_argument(p: &JacobiParams) -> Result<f64> {
    if !(p.x > 1.0 && p.x < 3.0) {
        return Err(region(format!("near form needs 1 < x < 3, got {}", p.x)));
    }
    if p.n() <= 0.0 {
        return Err(domain("near form needs j(j+b) > 0"));
    }
    Ok((2.0 * p.n() * (p.x - 1.0)).sqrt())
}

fn cut_argument(p: &JacobiParams) -> Result<f64> {
    if !(p.x > -1.0 && p.x < 1.0) {
        return Err(domain(format!("on-cut form needs -1 < x < 1, got {}", p.x)));
    }
    if p.n() <= 0.0 {
        return Err(domain("on-cut form needs j(j+b) > 0"));
    }
    Ok((2.0 * p.n() * (1.0 - p.x)).sqrt())
}

/// `Q_j^{(a,b)}(x)` near `x = 1`: `(Γ(j+a+1)/Γ(j+1)) (Z/2)^{-a} K_a(Z)`.
///
/// The `a(a+b)/(j+1)` terms of the printed form cancel against the
/// expansion of the gamma ratio, so the leading term is the pure
/// `K_a`; see [`jacobi_q_asym_near_printed`]. The estimate is the distance
/// to the connection of the level-2 first-kind series.
pub fn jacobi_q_asym_near(p: JacobiParams) -> Result<Approximant> {
    let z = near_argument(&p)?;
    let g = gamma_quotient(p.j + p.alpha + 1.0, p.j + 1.0);
    let value = g * (0.5 * z).powf(-p.alpha) * bessel_k(p.alpha, z)?;
    let conn = connection(&p)?;
    Ok(Approximant::new(value, conn - value, 1).with_warning(near_integer_warning(p.alpha)))
}

/// The printed near form with the `a(a+b)/(j+1)` terms; epsilon limit at
/// integer `a`. Its error is `O(1/j)`. A vanishing `a(a+b)` leaves the
/// plain leading term, without passing through the limit.
pub fn jacobi_q_asym_near_printed(p: JacobiParams) -> Result<Approximant> {
    near_argument(&p)?;
    if p.alpha * (p.alpha + p.beta) == 0.0 {
        return jacobi_q_asym_near(p);
    }
    let (j, b, x) = (p.j, p.beta, p.x);
    let f = |a: f64| -> Result<f64> {
        let n = j * (j + a + b + 1.0);
        let z = (2.0 * n * (x - 1.0)).sqrt();
        let g = gamma_quotient(j + a + 1.0, j + 1.0) * (0.5 * z).powf(-a);
        let c = a * (a + b) / (j + 1.0);
        let i_term = PI / (2.0 * sin_pi(a)) * c * bessel_i(a, z)?;
        Ok(g * (bessel_k(a, z)? * (1.0 + c) + i_term))
    };
    let (value, warning) = at_order(f, p.alpha)?;
    let conn = connection(&p)?;
    Ok(Approximant::new(value, conn - value, 2).with_warning(warning))
}

/// On-cut `𝖰_j^{(a,b)}(x) ~ -(pi/2)(Γ(j+a+1)/Γ(j+1)) (z/2)^{-a} Y_a(z)`.
pub fn jacobi_q_cut(p: JacobiParams) -> Result<Approximant> {
    let z = cut_argument(&p)?;
    let g = gamma_quotient(p.j + p.alpha + 1.0, p.j + 1.0);
    let value = -FRAC_PI_2 * g * (0.5 * z).powf(-p.alpha) * bessel_y(p.alpha, z)?;
    let conn = connection(&p)?;
    Ok(Approximant::new(value, conn - value, 1).with_warning(near_integer_warning(p.alpha)))
}

/// The printed on-cut form with the `a(a+b)/(j+1)` and `cot(pi a)` terms.
pub fn jacobi_q_cut_printed(p: JacobiParams) -> Result<Approximant> {
    cut_argument(&p)?;
    if p.alpha * (p.alpha + p.beta) == 0.0 {
        return jacobi_q_cut(p);
    }
    let (j, b, x) = (p.j, p.beta, p.x);
    let f = |a: f64| -> Result<f64> {
        let n = j * (j + a + b + 1.0);
        let z = (2.0 * n * (1.0 - x)).sqrt();
        let g = gamma_quotient(j + a + 1.0, j + 1.0) * (0.5 * z).powf(-a);
        let c = a * (a + b) / (j + 1.0);
        let j_term = cos_pi(a) / sin_pi(a) * c * bessel_j(a, z)?;
        Ok(-FRAC_PI_2 * g * (bessel_y(a, z)? * (1.0 + c) - j_term))
    };
    let (value, warning) = at_order(f, p.alpha)?;
    let conn = connection(&p)?;
    Ok(Approximant::new(value, conn - value, 2).with_warning(warning))
}

/// Groups of the large-argument bracket in the printed arrangement:
/// level 1 adds the `s(s-1)` term, level 2 the rest of the second degree,
/// and the third degree is the level-2 estimate.
fn printed_groups(u: f64, v: f64) -> [Vec<(usize, f64)>; 3] {
    let mut d = product_groups(u, v, 3).into_iter();
    let (d1, d2, d3) = (d.next().unwrap_or_default(), d.next().unwrap_or_default(), d.next().unwrap_or_default());
    let mut g1 = d1;
    let mut g2 = Vec::new();
    for (k, a) in d2 {
        match g1.iter_mut().find(|e| e.0 == k) {
            Some(e) => e.1 += a,
            None => g2.push((k, a)),
        }
    }
    [g1, g2, d3]
}

/// `sum_k s_k a_k (y/2)^k C_{nu+k}(y) / ((y/2)^nu Γ... )` relative to `1/Γ(nu+1)`:
/// terms are `a_k (y/2)^{2k} scaled(nu+k)/(nu+1)_k` with sign `(-1)^k` for J.
fn large_bracket(nu: f64, y: f64, level: usize, u: f64, v: f64, oscillating: bool) -> (f64, f64, usize) {
    let scaled = |n: f64| if oscillating { scaled_j(n, y) } else { scaled_i(n, y) };
    let h2 = 0.25 * y * y;
    let term = |k: usize, a: f64| -> f64 {
        let mut poch = 1.0;
        for i in 1..=k {
            poch *= nu + i as f64;
        }
        let sign = if oscillating && k % 2 == 1 { -1.0 } else { 1.0 };
        sign * a * h2.powi(k as i32) / poch * scaled(nu + k as f64)
    };
    let groups = printed_groups(u, v);
    let mut value = scaled(nu);
    let mut used = 1;
    for g in &groups[..level] {
        value += g.iter().map(|&(k, a)| term(k, a)).sum::<f64>();
        used += g.len();
    }
    let next: f64 = groups[level].iter().map(|&(k, a)| term(k, a)).sum();
    (value, next.abs(), used)
}

fn log_result(log_pref: f64, bracket: (f64, f64, usize)) -> LogApproximant {
    let (v, e, n) = bracket;
    LogApproximant {
        sign: v.signum(),
        log_abs: log_pref + v.abs().ln(),
        log_err: log_pref + e.ln(),
        terms_used: n,
    }
}

/// Large-x form in log-magnitude: `(1/2) ((x-1)/2)^{-j-a-1} ((x+1)/2)^{-b}
/// Γ(j+a+1)Γ(j+b+1) (Z''/2)^{-nu} {J_nu(Z'') + ...}`, `Z'' = sqrt(8 j1 j2/(x-1))`.
pub fn jacobi_q_asym_far_log(p: JacobiParams, level: TruncationLevel) -> Result<LogApproximant> {
    let (j, a, b, x) = (p.j, p.alpha, p.beta, p.x);
    if 0.5 * (x - 1.0) <= 1.0 {
        return Err(region(format!("far form needs (x-1)/2 > 1, got x = {x}")));
    }
    let (j1, j2) = (j + 1.0, j + a + 1.0);
    let nu = 2.0 * j + a + b + 1.0;
    let y = (8.0 * j1 * j2 / (x - 1.0)).sqrt();
    let log_pref = -LN_2 - (j + a + 1.0) * (0.5 * (x - 1.0)).ln() - b * (0.5 * (x + 1.0)).ln()
        + log_gamma(j + a + 1.0)
        + log_gamma(j + b + 1.0)
        - log_gamma(nu + 1.0);
    Ok(log_result(log_pref, large_bracket(nu, y, level.get(), 1.0 / j1, 1.0 / j2, true)))
}

pub fn jacobi_q_asym_far(p: JacobiParams, level: TruncationLevel) -> Result<Approximant> {
    Ok(jacobi_q_asym_far_log(p, level)?.to_approximant())
}

/// The `2/(x+1)` form in log-magnitude: `(1/2) ((x-1)/2)^{-a} ((x+1)/2)^{-j-b-1}
/// Γ(j+a+1)Γ(j+b+1) (Y/2)^{-nu} {I_nu(Y) + ...}`, `Y = sqrt(8(j+1)(j+b+1)/(x+1))`.
pub fn jacobi_q_asym_alt_log(p: JacobiParams, level: TruncationLevel) -> Result<LogApproximant> {
    let (j, a, b, x) = (p.j, p.alpha, p.beta, p.x);
    if x <= 1.0 {
        return Err(region(format!("alternate form needs x > 1, got {x}")));
    }
    let (j1, j2) = (j + 1.0, j + b + 1.0);
    let nu = 2.0 * j + a + b + 1.0;
    let y = (8.0 * j1 * j2 / (x + 1.0)).sqrt();
    let log_pref = -LN_2 - a * (0.5 * (x - 1.0)).ln() - (j + b + 1.0) * (0.5 * (x + 1.0)).ln()
        + log_gamma(j + a + 1.0)
        + log_gamma(j + b + 1.0)
        - log_gamma(nu + 1.0);
    Ok(log_result(log_pref, large_bracket(nu, y, level.get(), 1.0 / j1, 1.0 / j2, false)))
}

pub fn jacobi_q_asym_alt(p: JacobiParams, level: TruncationLevel) -> Result<Approximant> {
    Ok(jacobi_q_asym_alt_log(p, level)?.to_approximant())
}

/// Dispatch on the natural regime of `x`.
pub fn jacobi_q_asym(p: JacobiParams, level: TruncationLevel) -> Result<Approximant> {
    match p.regime() {
        RegimeTag::OnCut => jacobi_q_cut(p),
        RegimeTag::NearOne => jacobi_q_asym_near(p),
        RegimeTag::FarLarge => jacobi_q_asym_far(p, level),
        RegimeTag::FarAlt => Err(Error::Region("unreachable regime".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::legendre::{legendre_p_asym, LegendreParams};
    use crate::oracle;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn degree_zero_is_one() {
        for x in [0.3, 0.99, 1.4] {
            let a = jacobi_p_asym(JacobiParams::new(0.0, 0.7, 1.2, x).unwrap(), TruncationLevel::L2).unwrap();
            assert!((a.value - 1.0).abs() < 1e-14, "{x}: {a:?}");
        }
    }

    #[test]
    fn legendre_reduction() {
        let (j, mu, x) = (9.0, 0.5, 0.98f64);
        let a = jacobi_p_asym(JacobiParams::new(j, mu, -mu, x).unwrap(), TruncationLevel::L2).unwrap();
        let l = legendre_p_asym(LegendreParams::new(j, mu, x).unwrap(), TruncationLevel::L2).unwrap();
        let f = gamma(j + 1.0) / gamma(j + mu + 1.0) * ((1.0 - x) / (1.0 + x)).powf(0.5 * mu);
        assert!(rel(f * a.value, l.value) < 1e-12);
    }

    #[test]
    fn first_kind_against_recurrence() {
        let o = oracle::jacobi_p_oracle(5.0, 1.0, 2.0, 0.99).unwrap().value;
        let a = jacobi_p_asym(JacobiParams::new(5.0, 1.0, 2.0, 0.99).unwrap(), TruncationLevel::L2).unwrap();
        assert!((a.value - o).abs() < 3.0 * a.err_estimate.max(1e-15 * o.abs()), "{a:?} {o}");
    }

    #[test]
    fn near_form_order_j_squared() {
        let mut prev = f64::INFINITY;
        for j in [10.0, 20.0, 40.0] {
            let x = 1.0 + 2.0 / (j * (j + 2.0));
            let o = oracle::jacobi_q_oracle(j, 0.5, 0.5, x).unwrap().value;
            let a = jacobi_q_asym_near(JacobiParams::new(j, 0.5, 0.5, x).unwrap()).unwrap();
            let e = rel(a.value, o);
            assert!(e < prev / 3.0, "j={j}: {e}");
            prev = e;
        }
    }

    #[test]
    fn cut_form_matches_oracle() {
        let x = 0.1f64.cos();
        let o = oracle::jacobi_q_cut_oracle(12.0, 0.5, 0.5, x).unwrap().value;
        let a = jacobi_q_cut(JacobiParams::new(12.0, 0.5, 0.5, x).unwrap()).unwrap();
        assert!((a.value - o).abs() < 1.5 * a.err_estimate, "{a:?} vs {o}");
    }

    #[test]
    fn far_closed_form() {
        let want = 0.5 * 1.5f64.ln();
        let a = jacobi_q_asym_far(JacobiParams::new(0.0, 0.0, 0.0, 5.0).unwrap(), TruncationLevel::L2).unwrap();
        assert!((a.value - want).abs() < 3.0 * a.err_estimate, "{a:?}");
        let b = jacobi_q_asym_alt(JacobiParams::new(0.0, 0.0, 0.0, 3.0).unwrap(), TruncationLevel::L2).unwrap();
        assert!((b.value - 0.5 * LN_2).abs() < 3.0 * b.err_estimate, "{b:?}");
    }

    #[test]
    fn far_and_alt_against_oracle() {
        let p = JacobiParams::new(6.0, 0.5, 1.5, 6.0).unwrap();
        let o = oracle::jacobi_q_oracle(6.0, 0.5, 1.5, 6.0).unwrap().value;
        let f = jacobi_q_asym_far(p, TruncationLevel::L2).unwrap();
        assert!((f.value - o).abs() < 3.0 * f.err_estimate, "{f:?} {o}");
        let p3 = JacobiParams { x: 3.0, ..p };
        let o3 = oracle::jacobi_q_oracle(6.0, 0.5, 1.5, 3.0).unwrap().value;
        let g = jacobi_q_asym_alt(p3, TruncationLevel::L2).unwrap();
        assert!((g.value - o3).abs() < 3.0 * g.err_estimate, "{g:?} {o3}");
    }

    #[test]
    fn printed_forms_reduce_when_correction_vanishes() {
        let x = 0.1f64.cos();
        let p = JacobiParams::new(12.0, 0.5, -0.5, x).unwrap();
        assert_eq!(jacobi_q_cut(p).unwrap().value, jacobi_q_cut_printed(p).unwrap().value);
        let q = JacobiParams::new(10.0, 0.5, -0.5, 1.02).unwrap();
        assert_eq!(jacobi_q_asym_near(q).unwrap().value, jacobi_q_asym_near_printed(q).unwrap().value);
    }

    #[test]
    fn far_overflow_guard() {
        let p = JacobiParams::new(150.0, 0.5, 0.5, 4.0).unwrap();
        let l = jacobi_q_asym_far_log(p, TruncationLevel::L2).unwrap();
        assert!(l.log_abs.is_finite() && l.log_abs < -300.0, "{l:?}");
    }

    #[test]
    fn far_and_alt_agree() {
        let p = JacobiParams::new(8.0, 0.25, 0.25, 6.0).unwrap();
        let f = jacobi_q_asym_far(p, TruncationLevel::L2).unwrap();
        let g = jacobi_q_asym_alt(p, TruncationLevel::L2).unwrap();
        assert!((f.value - g.value).abs() < 3.0 * f.err_estimate.max(g.err_estimate), "{f:?} {g:?}");
    }

    #[test]
    fn large_x_power_law() {
        let p = JacobiParams::new(5.0, 0.5, 0.25, 50.0).unwrap();
        let lo = jacobi_q_asym_far_log(p, TruncationLevel::L0).unwrap().log_abs;
        let hi = jacobi_q_asym_far_log(JacobiParams { x: 500.0, ..p }, TruncationLevel::L0).unwrap().log_abs;
        let slope = (hi - lo) / 10f64.ln();
        assert!((slope + 6.75).abs() < 0.01, "{slope}");
    }

    #[test]
    fn cut_reduces_to_legendre_up_to_log_term() {
        // the Legendre leading form carries J_0(z)(ln(z'/2) - psi(j+1)) on top of -(pi/2)Y_0
        let (j, x) = (20.0, 0.2f64.cos());
        let a = jacobi_q_cut(JacobiParams::new(j, 0.0, 0.0, x).unwrap()).unwrap();
        let l = crate::legendre::legendre_q_cut(j, x, TruncationLevel::L0).unwrap();
        let n = j * (j + 1.0);
        let (z, zp) = ((2.0 * n * (1.0 - x)).sqrt(), (2.0 * n * (1.0 + x)).sqrt());
        let log_term = bessel_j(0.0, z).unwrap() * ((0.5 * zp).ln() - crate::special::digamma(j + 1.0));
        assert!((a.value + log_term - l.value).abs() < 1e-13, "{} {} {log_term}", a.value, l.value);
    }
}
