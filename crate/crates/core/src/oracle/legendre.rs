//! Legendre functions of both kinds: recurrences at integer degree and
//! hypergeometric sums at real degree.

use super::hyp::hyp2f1_regularized_dd;
use super::{Method, OracleResult};
use crate::dd::Dd;
use crate::error::{domain, Error, Result};

fn is_int(v: f64) -> bool {
    v == v.floor()
}

/// `P_n^m(x)` by upward recurrence in n. Ferrers (with the `(-1)^m` phase)
/// for `|x| < 1`, `(x^2-1)^{m/2} d^m P_n/dx^m` for `x > 1`.
pub fn legendre_p_recurrence_dd(n: usize, m: usize, x: Dd) -> Dd {
    if m > n {
        return Dd::ZERO;
    }
    let on_cut = x.hi.abs() < 1.0;
    let s = if on_cut { Dd::ONE - x * x } else { x * x - 1.0 };
    let mut pmm = Dd::ONE;
    for k in 0..m {
        pmm *= (2 * k + 1) as f64;
    }
    if m > 0 {
        pmm *= s.sqrt().powi(m as i32);
        if on_cut && m % 2 == 1 {
            pmm = -pmm;
        }
    }
    if n == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * pmm * (2 * m + 1) as f64;
    for k in (m + 1)..n {
        let next = (x * cur * (2 * k + 1) as f64 - prev * (k + m) as f64) / (k - m + 1) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_j^mu(x)` from the 2F1 in `(1-x)/2`, for `-1 < x < 3`.
pub fn legendre_p_hyp_dd(j: f64, mu: f64, x: Dd) -> Result<(Dd, f64)> {
    if x.hi <= -1.0 || x.hi >= 3.0 {
        return Err(domain(format!("hypergeometric Legendre P needs -1 < x < 3, got {}", x.hi)));
    }
    let jd = Dd::from(j);
    let w = (Dd::ONE - x).scale2(-1);
    let (f, loss) = hyp2f1_regularized_dd(-jd, jd + 1.0, Dd::ONE - mu, w)?;
    let ratio = if x.hi < 1.0 {
        (Dd::ONE + x) / (Dd::ONE - x)
    } else {
        (x + 1.0) / (x - 1.0)
    };
    Ok((ratio.powf(Dd::from(0.5 * mu)) * f, loss))
}

pub fn legendre_p_recurrence(n: usize, m: usize, x: f64) -> OracleResult {
    OracleResult::new(legendre_p_recurrence_dd(n, m, x.into()).to_f64(), 0.0, Method::Recurrence)
}

pub fn legendre_p_hyp(j: f64, mu: f64, x: f64) -> Result<OracleResult> {
    let (v, l) = legendre_p_hyp_dd(j, mu, x.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

/// `P_j^mu(x)`: recurrence when j and mu are integers, otherwise the 2F1.
/// Negative integer orders go through `P^{-m} = (-1)^m (n-m)!/(n+m)! P^m` on
/// the cut and the same without the sign for `x > 1`.
pub fn legendre_p_oracle(j: f64, mu: f64, x: f64) -> Result<OracleResult> {
    if !(j.is_finite() && mu.is_finite() && x.is_finite()) || x <= -1.0 {
        return Err(domain("legendre_p_oracle needs finite j, mu and x > -1"));
    }
    if is_int(j) && is_int(mu) && (0.0..=200.0).contains(&j) && mu.abs() <= j && x != 1.0 {
        let n = j as usize;
        let m = mu.abs() as usize;
        let mut v = legendre_p_recurrence_dd(n, m, x.into());
        if mu < 0.0 {
            let mut f = Dd::ONE;
            for k in (n - m + 1)..=(n + m) {
                f *= k as f64;
            }
            v = v / f;
            if x < 1.0 && m % 2 == 1 {
                v = -v;
            }
        }
        return Ok(OracleResult::new(v.to_f64(), 0.0, Method::Recurrence));
    }
    legendre_p_hyp(j, mu, x)
}

/// `Q_n(x)` by forward recurrence from the closed forms of `Q_0`, `Q_1`.
/// Off the cut the recurrence runs against the minimal solution; the loss
/// estimate is the growth of `P_n` relative to `Q_n`.
pub fn legendre_q_recurrence_dd(n: usize, x: Dd) -> Result<(Dd, f64)> {
    if x.hi.abs() == 1.0 || x.hi <= -1.0 {
        return Err(domain(format!("Legendre Q needs |x| != 1, x > -1, got {}", x.hi)));
    }
    let q0 = if x.hi < 1.0 {
        ((Dd::ONE + x) / (Dd::ONE - x)).ln().scale2(-1)
    } else {
        ((x + 1.0) / (x - 1.0)).ln().scale2(-1)
    };
    let mut prev = q0;
    let mut cur = x * q0 - 1.0;
    let (mut pp, mut pc) = (Dd::ONE, x);
    if n == 0 {
        return Ok((q0, 0.0));
    }
    let mut largest = q0.abs().to_f64().max(cur.abs().to_f64());
    for k in 1..n {
        let kf = k as f64;
        let next = (x * cur * (2.0 * kf + 1.0) - prev * kf) / (kf + 1.0);
        prev = cur;
        cur = next;
        let pn = (x * pc * (2.0 * kf + 1.0) - pp * kf) / (kf + 1.0);
        pp = pc;
        pc = pn;
        largest = largest.max(cur.abs().to_f64());
    }
    let c = cur.abs().to_f64();
    let loss = if x.hi > 1.0 {
        (pc.abs().to_f64() * q0.abs().to_f64() / c).log10()
    } else {
        (largest / c).log10()
    };
    Ok((cur, loss))
}

/// `e^{-i pi mu} Q_j^mu(x)` for `x > 1` from the 2F1 in `1/x^2`.
pub fn legendre_q_hyp_dd(j: f64, mu: f64, x: Dd) -> Result<(Dd, f64)> {
    if x.hi <= 1.0 {
        return Err(domain(format!("hypergeometric Legendre Q needs x > 1, got {}", x.hi)));
    }
    let (jd, md) = (Dd::from(j), Dd::from(mu));
    let a = (jd + md).scale2(-1) + 1.0;
    let b = (jd + md + 1.0).scale2(-1);
    let (f, loss) = hyp2f1_regularized_dd(a, b, jd + 1.5, (x * x).recip())?;
    let pre = Dd::PI.sqrt() * (jd + md + 1.0).gamma() * (x * x - 1.0).powf(md.scale2(-1))
        / (Dd::from(2.0).powf(jd + 1.0) * x.powf(jd + md + 1.0));
    Ok((pre * f, loss))
}

/// `e^{-i pi mu} Q_j^mu(x)` for `1 < x < 3`, non-integer mu, from the two P's.
pub fn legendre_q_connection_dd(j: f64, mu: f64, x: Dd) -> Result<(Dd, f64)> {
    let s = Dd::from(mu).sin_pi();
    if s.hi == 0.0 {
        return Err(domain("connection form needs non-integer mu"));
    }
    let (pp, l1) = legendre_p_hyp_dd(j, mu, x)?;
    let (pm, l2) = legendre_p_hyp_dd(j, -mu, x)?;
    let g = (Dd::from(j) + mu + 1.0).gamma() * (Dd::from(j) - mu + 1.0).rgamma();
    let v = Dd::PI / (s * 2.0) * (pp - g * pm);
    let loss = l1.max(l2) + (pp.abs().to_f64().max((g * pm).abs().to_f64()) / v.abs().to_f64()).log10().max(0.0);
    Ok((v, loss))
}

pub fn legendre_q_hyp(j: f64, mu: f64, x: f64) -> Result<OracleResult> {
    let (v, l) = legendre_q_hyp_dd(j, mu, x.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

pub fn legendre_q_connection(j: f64, mu: f64, x: f64) -> Result<OracleResult> {
    let (v, l) = legendre_q_connection_dd(j, mu, x.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

pub fn legendre_q_recurrence(n: usize, x: f64) -> Result<OracleResult> {
    let (v, l) = legendre_q_recurrence_dd(n, x.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Recurrence))
}

/// Digits the forward Q recurrence may lose before the 2F1 takes over.
const RECURRENCE_MAX_LOSS: f64 = 12.0;

/// `Q_n(x)` off the cut or `𝖰_n(x)` on it, integer n. The recurrence is used
/// unless it loses more than 12 digits (large n at x well above 1), where the
/// 2F1 in `1/x^2` takes over.
pub fn legendre_q_oracle(n: usize, x: f64) -> Result<OracleResult> {
    if n > 200 {
        return Err(domain("legendre_q_oracle supports n <= 200"));
    }
    let r = legendre_q_recurrence(n, x)?;
    if r.precision_loss <= RECURRENCE_MAX_LOSS {
        return Ok(r);
    }
    if x > 1.0 {
        return legendre_q_hyp(n as f64, 0.0, x);
    }
    Err(Error::NonConvergence(format!(
        "Q_{n}({x}) recurrence lost {:.1} digits",
        r.precision_loss
    )))
}

/// `e^{-i pi mu} Q_j^mu(x)` for real j, mu and `x > 1`.
pub fn legendre_q_mu_oracle(j: f64, mu: f64, x: f64) -> Result<OracleResult> {
    if mu == 0.0 && is_int(j) && (0.0..=200.0).contains(&j) {
        if let Ok(r) = legendre_q_oracle(j as usize, x) {
            return Ok(r);
        }
    }
    legendre_q_hyp(j, mu, x)
}
