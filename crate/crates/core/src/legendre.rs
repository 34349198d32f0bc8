//! Bessel-function expansions of Legendre functions of large degree.
//!
//! With `N = j(j+1)`, `z = sqrt(2N(1-x))` on the cut and `Z = sqrt(2N(x-1))`
//! above it, the first-kind function is
//!
//! ```text
//! P_j^{-mu}(x) ~ ((1-x)/(1+x))^{mu/2} (z/2)^{-mu} { J_mu(z) - sum_m N^{-m} sum_k c_{m,k} (z/2)^k J_{k+mu}(z) }
//! ```
//!
//! and the second kind follows from it by the order derivative at `mu = 0`.
//! `Q_j^mu` is returned without its `e^{i pi mu}` phase.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::approx::{near_integer_warning, Approximant, TruncationLevel};
use crate::coeffs::{legendre_f64, legendre_f64_full, CoefficientTable, MAX_ORDER};
use crate::error::{domain, region, Error, Result};
use crate::series::{bessel_index_sum, groups};
use crate::special::{bessel_i, bessel_j, bessel_k, digamma, gamma, reduced_i, reduced_j, rgamma, sin_pi, zk_reg, zy_reg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// `-1 < x <= 1`
    OnCut,
    /// `x > 1`
    OffCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LegendreParams {
    pub j: f64,
    pub mu: f64,
    pub x: f64,
}

impl LegendreParams {
    pub fn new(j: f64, mu: f64, x: f64) -> Result<Self> {
        if !(j.is_finite() && mu.is_finite() && x.is_finite()) {
            return Err(domain("Legendre parameters must be finite"));
        }
        if j < 0.0 {
            return Err(domain(format!("degree j = {j} must be >= 0")));
        }
        if x <= -1.0 {
            return Err(domain(format!("x = {x} must be > -1")));
        }
        Ok(LegendreParams { j, mu, x })
    }

    pub fn region(&self) -> Region {
        if self.x > 1.0 {
            Region::OffCut
        } else {
            Region::OnCut
        }
    }

    /// `j(j+1)`
    pub fn n(&self) -> f64 {
        self.j * (self.j + 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    J,
    I,
}

/// `w = (z/2)^2` (negative above the cut) and `t = (1-x)/2`.
fn argument(p: &LegendreParams) -> Result<(f64, f64)> {
    let t = 0.5 * (1.0 - p.x);
    if t <= -1.0 {
        return Err(region(format!("(x-1)/2 = {} >= 1 is outside the series region", -t)));
    }
    Ok((p.n() * t, t))
}

fn bessel_arg(w: f64) -> f64 {
    2.0 * w.abs().sqrt()
}

fn ratio_power(p: &LegendreParams) -> f64 {
    ((1.0 - p.x).abs() / (1.0 + p.x)).powf(0.5 * p.mu)
}

// The second kind accepts the boundary x = 3 itself.
fn q_argument(p: &LegendreParams) -> Result<(f64, f64)> {
    let t = 0.5 * (p.x - 1.0);
    if t > 1.0 {
        return Err(region(format!("(x-1)/2 = {t} > 1 is outside the series region")));
    }
    Ok((2.0 * (p.n() * t).sqrt(), t))
}

/// `P_j^{-mu}(x)` (Ferrers `𝖯_j^{-mu}` on the cut), for `x < 3`.
pub fn legendre_p_asym(p: LegendreParams, level: TruncationLevel) -> Result<Approximant> {
    let (w, t) = argument(&p)?;
    Ok(first_kind(legendre_f64(), p.mu, w, t, level.get(), ratio_power(&p)))
}

pub(crate) fn first_kind(table: &CoefficientTable<f64>, mu: f64, w: f64, t: f64, level: usize, pref: f64) -> Approximant {
    let g = groups(table, mu, w, t, level + 1);
    let (v, est, n) = g.truncate(level);
    Approximant::new(pref * v, pref * est, n)
}

/// Highest Bessel offset for which [`legendre_p_bessel_index`] keeps every order.
pub const BESSEL_INDEX_MAX: usize = MAX_ORDER + 1;

/// The series truncated by Bessel index: every coefficient with `k <= kmax`,
/// all orders in `1/N`. Matches the `(1-x)` expansion of the hypergeometric
/// function through `(1-x)^kmax`.
pub fn legendre_p_bessel_index(p: LegendreParams, kmax: usize) -> Result<Approximant> {
    if kmax > BESSEL_INDEX_MAX {
        return Err(Error::Truncation(format!("kmax = {kmax} above {BESSEL_INDEX_MAX}")));
    }
    let (w, t) = argument(&p)?;
    let (v, est, n) = bessel_index_sum(legendre_f64_full(), p.mu, w, t, kmax);
    let pref = ratio_power(&p);
    Ok(Approximant::new(pref * v, pref * est, n))
}

/// MacDonald's expansion in `1/(j+1/2)` with `z'' = (j+1/2) sqrt(2(1-x))`.
///
/// Level 1 has no printed next group; its estimate is the distance to the
/// level-2 [`legendre_p_asym`] value.
pub fn legendre_p_macdonald(j: f64, x: f64, level: TruncationLevel) -> Result<Approximant> {
    let p = LegendreParams::new(j, 0.0, x)?;
    if x > 1.0 {
        return Err(region("MacDonald's series is for -1 < x <= 1"));
    }
    let h = j + 0.5;
    let z = h * (2.0 * (1.0 - x)).sqrt();
    let q = 0.5 * z;
    let j0 = bessel_j(0.0, z)?;
    let corr = (0.25 * q * bessel_j(1.0, z)? - q * q * bessel_j(2.0, z)? + q.powi(3) / 3.0 * bessel_j(3.0, z)?) / (h * h);
    match level.get() {
        0 => Ok(Approximant::new(j0, corr, 1)),
        1 => {
            let v = j0 + corr;
            let ours = legendre_p_asym(p, TruncationLevel::L2)?;
            Ok(Approximant::new(v, ours.value - v, 4))
        }
        _ => Err(Error::Truncation("MacDonald's series is given through level 1".into())),
    }
}

/// `(z/2)^n J_n(z)` or `(z/2)^n I_n(z)` through the reduced form.
fn zpow_bessel(branch: Branch, n: usize, z: f64) -> f64 {
    let h2 = 0.25 * z * z;
    let r = match branch {
        Branch::J => reduced_j(n as f64, z),
        Branch::I => reduced_i(n as f64, z),
    };
    h2.powi(n as i32) * r
}

fn falling(n: usize, k: usize) -> f64 {
    ((n - k + 1)..=n).map(|i| i as f64).product()
}

/// Order-derivative blocks at `mu = 0`.
///
/// Off the cut, `T_n = (-Z/2)^n K_n + (Z/2)^n I_n L - 1/2 sum_k (-1)^k/k n!/(n-k)! (Z/2)^{n-k} I_{n-k}`
/// with `L = ln(Z'/2) - psi(j+1)`. On the cut the average of the two
/// boundary values replaces `K_n` by `-(pi/2) Y_n` and `I_n` by `J_n`, with
/// the `(-1)` powers of the rotation. The logarithms of `z/2` are combined
/// analytically so the blocks are finite at `z = 0`.
fn second_kind_blocks(branch: Branch, n_max: usize, z: f64, log_ratio: f64, psi: f64) -> Vec<f64> {
    let lr = log_ratio - psi;
    let sgn = |n: usize| if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    (0..=n_max)
        .map(|n| {
            let mut tail = 0.0;
            for k in 1..=n {
                let w = sgn(k) / k as f64 * falling(n, k);
                tail += match branch {
                    Branch::I => w * zpow_bessel(branch, n - k, z),
                    Branch::J => w * sgn(n - k) * zpow_bessel(branch, n - k, z),
                };
            }
            match branch {
                Branch::I => sgn(n) * zk_reg(n, z) + zpow_bessel(branch, n, z) * lr - 0.5 * tail,
                Branch::J => sgn(n) * (-FRAC_PI_2 * zy_reg(n, z) + zpow_bessel(branch, n, z) * lr) - 0.5 * tail,
            }
        })
        .collect()
}

/// `mu = 0` second kind from blocks: `B_0 - sum_m N^{-m} sum_k c_{m,k} (-1)^k B_k`.
fn second_kind_series(n: f64, blocks: &[f64], level: usize) -> Approximant {
    let table = legendre_f64();
    let group = |m: usize| -> f64 {
        let s: f64 = table
            .order(m)
            .map(|(k, &c)| if k % 2 == 0 { c * blocks[k] } else { -c * blocks[k] })
            .sum();
        s / n.powi(m as i32)
    };
    let value = blocks[0] - (1..=level).map(group).sum::<f64>();
    let terms = 1 + (1..=level).map(|m| table.order(m).count()).sum::<usize>();
    Approximant::new(value, group(level + 1), terms)
}

fn order_zero_q_level(p: &LegendreParams, level: TruncationLevel) -> Result<usize> {
    let l = level.get();
    if l > 1 {
        return Err(Error::Truncation("the mu = 0 second-kind series is given through level 1".into()));
    }
    if p.n() == 0.0 && l > 0 {
        return Err(domain("level 1 needs j > 0"));
    }
    Ok(l)
}

/// `e^{-i pi mu} Q_j^mu(x)` for `1 < x < 3`.
///
/// `mu = 0`: levels 0 and 1. `mu > 0` non-integer: level 0, the leading term
/// `(Z'/2)^mu [K_mu(Z) + (pi mu / 2 sin(pi mu)) ((x-1)/2 - 1/(3(j+1)^2)) I_mu(Z)]`;
/// its estimate is the distance to the level-1 first-kind series combined
/// through `pi/(2 sin pi mu) [P^mu - Γ(j+mu+1)/Γ(j-mu+1) P^{-mu}]`.
pub fn legendre_q_asym(j: f64, mu: f64, x: f64, level: TruncationLevel) -> Result<Approximant> {
    let p = LegendreParams::new(j, mu, x)?;
    if x <= 1.0 {
        return Err(region("legendre_q_asym needs x > 1; use legendre_q_cut on the cut"));
    }
    let (z, t) = q_argument(&p)?;
    if mu < 0.0 {
        return Err(domain("negative order is not supported for the second kind"));
    }
    if mu == 0.0 {
        let l = order_zero_q_level(&p, level)?;
        let log_ratio = 0.5 * ((x + 1.0) / (x - 1.0)).ln();
        let blocks = second_kind_blocks(Branch::I, 3 * (l + 1), z, log_ratio, digamma(j + 1.0));
        return Ok(second_kind_series(p.n(), &blocks, l));
    }
    if level.get() > 0 {
        return Err(Error::Truncation("mu != 0 second kind is given at level 0 only".into()));
    }
    let s = sin_pi(mu);
    if s == 0.0 {
        return Err(domain(format!("integer order mu = {mu} is not supported for mu != 0")));
    }
    let (k_part, i_part) = k_and_i(mu, x, z)?;
    let c = PI * mu / (2.0 * s) * (t - 1.0 / (3.0 * (j + 1.0) * (j + 1.0)));
    let value = k_part + c * i_part;
    mu_connection_estimate(p, value, s)
}

/// `(Z'/2)^mu K_mu(Z)` and `(Z'/2)^mu I_mu(Z)`.
fn k_and_i(mu: f64, x: f64, z: f64) -> Result<(f64, f64)> {
    // (Z'/2)^mu = ((x+1)/(x-1))^{mu/2} (Z/2)^mu
    let w = ((x + 1.0) / (x - 1.0)).powf(0.5 * mu);
    if z == 0.0 {
        return Ok((0.5 * w * gamma(mu), 0.0));
    }
    let h = 0.5 * z;
    Ok((w * h.powf(mu) * bessel_k(mu, z)?, w * h.powf(mu) * bessel_i(mu, z)?))
}

fn mu_connection_estimate(p: LegendreParams, value: f64, s: f64) -> Result<Approximant> {
    let (j, mu) = (p.j, p.mu);
    let plus = legendre_p_asym(LegendreParams { mu: -mu, ..p }, TruncationLevel::L1)?;
    let minus = legendre_p_asym(p, TruncationLevel::L1)?;
    let ratio = gamma(j + mu + 1.0) * rgamma(j - mu + 1.0);
    let conn = PI / (2.0 * s) * (plus.value - ratio * minus.value);
    Ok(Approximant::new(value, conn - value, 2).with_warning(near_integer_warning(mu)))
}

/// The bare leading term `(Z'/2)^mu K_mu(Z)` of `e^{-i pi mu} Q_j^mu`,
/// `mu > 0` non-integer, `1 < x <= 3`. The `I_mu` piece kept by
/// [`legendre_q_asym`] is one part of the `1/N` order; alone it is usually
/// the larger error when `I_mu(Z) >> K_mu(Z)`.
pub fn legendre_q_mu_leading(j: f64, mu: f64, x: f64) -> Result<Approximant> {
    let p = LegendreParams::new(j, mu, x)?;
    if x <= 1.0 {
        return Err(region("legendre_q_mu_leading needs x > 1"));
    }
    let (z, _) = q_argument(&p)?;
    let s = sin_pi(mu);
    if mu <= 0.0 || s == 0.0 {
        return Err(domain(format!("mu = {mu} must be positive and non-integer")));
    }
    let (k_part, _) = k_and_i(mu, x, z)?;
    mu_connection_estimate(p, k_part, s)
}

/// Ferrers `𝖯_j^mu(x)`, `-1 < x <= 1`, positive order convention.
///
/// `mu <= 0` is the first-kind series at any level. `mu > 0` is the leading
/// form `(z'/2)^mu J_{-mu}(z)` (level 0 only), which for integer `mu` is
/// `(-1)^mu (z'/2)^mu J_mu(z)` and carries the Condon-Shortley phase.
pub fn legendre_p_cut(p: LegendreParams, level: TruncationLevel) -> Result<Approximant> {
    if p.region() != Region::OnCut {
        return Err(region("legendre_p_cut needs -1 < x <= 1"));
    }
    if p.mu > 0.0 && level.get() > 0 {
        return Err(Error::Truncation("positive order on the cut is given at level 0 only".into()));
    }
    legendre_p_asym(LegendreParams { mu: -p.mu, ..p }, level)
}

/// Ferrers `𝖰_j(x)` on `-1 < x < 1`, levels 0 and 1.
pub fn legendre_q_cut(j: f64, x: f64, level: TruncationLevel) -> Result<Approximant> {
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(format!("x = {x} outside (-1, 1)")));
    }
    let p = LegendreParams::new(j, 0.0, x)?;
    let l = order_zero_q_level(&p, level)?;
    let z = bessel_arg(argument(&p)?.0);
    let log_ratio = 0.5 * ((1.0 + x) / (1.0 - x)).ln();
    let blocks = second_kind_blocks(Branch::J, 3 * (l + 1), z, log_ratio, digamma(j + 1.0));
    Ok(second_kind_series(p.n(), &blocks, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn lv(m: u8) -> TruncationLevel {
        TruncationLevel::new(m).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn p1_is_x() {
        let a = legendre_p_asym(LegendreParams::new(1.0, 0.0, 0.99).unwrap(), lv(2)).unwrap();
        // the omitted tail is the next group plus a 1e-12 remainder
        assert!((a.value - 0.99).abs() <= 1.01 * a.err_estimate, "{a:?}");
    }

    #[test]
    fn small_degree_limit() {
        let x: f64 = 1.5;
        let a = legendre_p_asym(LegendreParams::new(0.0, 0.5, x).unwrap(), lv(2)).unwrap();
        let want = ((x - 1.0) / (x + 1.0)).powf(0.25) / gamma(1.5);
        assert!(rel(a.value, want) < 1e-12);
    }

    #[test]
    fn degree_fifty_on_cut() {
        let x = 0.1f64.cos();
        let a = legendre_p_asym(LegendreParams::new(50.0, 0.0, x).unwrap(), lv(2)).unwrap();
        let o = oracle::legendre_p_oracle(50.0, 0.0, x).unwrap().value;
        assert!(rel(a.value, o) < 1e-6, "{} vs {o}", a.value);
    }

    #[test]
    fn off_cut_and_order() {
        for (j, mu, x) in [(12.0, 0.4, 1.01), (7.2, 0.0, 1.05), (20.0, 1.0, 0.97), (15.5, 0.7, 1.002)] {
            let o = oracle::legendre_p_oracle(j, -mu, x).unwrap().value;
            for m in 0..=2u8 {
                let a = legendre_p_asym(LegendreParams::new(j, mu, x).unwrap(), lv(m)).unwrap();
                let err = (a.value - o).abs();
                assert!(err < 5.0 * a.err_estimate + 1e-14 * o.abs(), "{j} {mu} {x} level {m}: {err:e} vs {:e}", a.err_estimate);
            }
        }
    }

    #[test]
    fn region_error_past_three() {
        let r = legendre_p_asym(LegendreParams::new(5.0, 0.0, 3.5).unwrap(), lv(0));
        assert!(matches!(r, Err(Error::Region(_))));
    }

    #[test]
    fn q_closed_forms() {
        let a = legendre_q_asym(0.0, 0.0, 3.0, lv(0)).unwrap();
        assert!((a.value - 0.5 * 2f64.ln()).abs() < 1e-14);
        let c = legendre_q_cut(0.0, 0.0, lv(0)).unwrap();
        assert!(c.value.abs() < 1e-14);
    }

    #[test]
    fn q_order_zero_against_recurrence() {
        let o = oracle::legendre_q_oracle(10, 1.05).unwrap().value;
        let a0 = legendre_q_asym(10.0, 0.0, 1.05, lv(0)).unwrap();
        let a1 = legendre_q_asym(10.0, 0.0, 1.05, lv(1)).unwrap();
        assert!((a1.value - o).abs() < (a0.value - o).abs() / 10.0);
        assert!((a1.value - o).abs() < 3.0 * a1.err_estimate, "{a1:?} {o}");
    }

    #[test]
    fn q_on_cut_level_one() {
        let o = oracle::legendre_q_oracle(10, 0.98).unwrap().value;
        let a0 = legendre_q_cut(10.0, 0.98, lv(0)).unwrap();
        let a1 = legendre_q_cut(10.0, 0.98, lv(1)).unwrap();
        assert!((a1.value - o).abs() < 3e-5, "{} vs {o}", a1.value);
        assert!((a1.value - o).abs() < (a0.value - o).abs() / 10.0);
    }

    #[test]
    fn q_nonzero_order() {
        let (j, mu, x) = (30.0, 0.4, 1.004);
        let o = oracle::legendre_q_mu_oracle(j, mu, x).unwrap().value;
        let a = legendre_q_asym(j, mu, x, lv(0)).unwrap();
        assert!((a.value - o).abs() < 3.0 * a.err_estimate);
        let b = legendre_q_mu_leading(j, mu, x).unwrap();
        assert!(rel(b.value, o) < 1e-3, "{} vs {o}", b.value);
        assert!((b.value - o).abs() < 3.0 * b.err_estimate);
    }

    #[test]
    fn positive_order_on_cut() {
        let x = 0.05f64.cos();
        let a = legendre_p_cut(LegendreParams::new(20.0, 1.0, x).unwrap(), lv(0)).unwrap();
        let o = oracle::legendre_p_oracle(20.0, 1.0, x).unwrap().value;
        assert!(rel(a.value, o) < 1e-2, "{} vs {o}", a.value);
        assert!(legendre_p_cut(LegendreParams::new(20.0, 1.0, x).unwrap(), lv(1)).is_err());
    }

    #[test]
    fn macdonald_at_one() {
        for m in 0..=1 {
            assert_eq!(legendre_p_macdonald(1.0, 1.0, lv(m)).unwrap().value, 1.0);
        }
    }
}
