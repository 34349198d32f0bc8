//! Jacobi functions of both kinds: recurrence, hypergeometric sums, the
//! two-term connection form, and principal-value quadrature on the cut.

use num_complex::Complex64;

use super::hyp::{hyp2f1_dd, hyp2f1_regularized_dd};
use super::limit::symmetric_limit;
use super::quad::{gauss_fixed, integrate};
use super::{agree, Method, OracleResult};
use crate::dd::Dd;
use crate::error::{domain, Error, Result};

fn check_ab(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite()) {
        return Err(domain(format!("Jacobi indices need alpha, beta > -1, got ({alpha}, {beta})")));
    }
    Ok(())
}

/// `P_n^{(a,b)}(x)` by the three-term recurrence in n.
pub fn jacobi_p_recurrence_dd(n: usize, alpha: f64, beta: f64, x: Dd) -> Dd {
    let (a, b) = (Dd::from(alpha), Dd::from(beta));
    let p0 = Dd::ONE;
    if n == 0 {
        return p0;
    }
    let p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0).scale2(-1);
    let (mut prev, mut cur) = (p0, p1);
    for k in 2..=n {
        let k = k as f64;
        let s = a + b + 2.0 * k;
        let c1 = (k + a + b) * (s - 2.0) * 2.0 * k;
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = (k - 1.0 + a) * (k - 1.0 + b) * s * 2.0;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_j^{(a,b)}(x) = Γ(j+a+1)/Γ(j+1) F_reg(-j, j+a+b+1; a+1; (1-x)/2)`.
/// Converges for `-1 < x < 3`; terminating (any x) at integer j.
pub fn jacobi_p_hyp_dd(j: Dd, a: Dd, b: Dd, x: Dd) -> Result<(Dd, f64)> {
    let (f, loss) = hyp2f1_regularized_dd(-j, j + a + b + 1.0, a + 1.0, (Dd::ONE - x).scale2(-1))?;
    Ok(((j + a + 1.0).gamma() * (j + 1.0).rgamma() * f, loss))
}

pub fn jacobi_p_recurrence(n: usize, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    let v = jacobi_p_recurrence_dd(n, alpha, beta, x.into());
    Ok(OracleResult::new(v.to_f64(), 0.0, Method::Recurrence))
}

pub fn jacobi_p_hyp(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    let (v, l) = jacobi_p_hyp_dd(j.into(), alpha.into(), beta.into(), x.into())?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

/// `P_j^{(a,b)}(x)`: recurrence at integer `j <= 200`, 2F1 otherwise.
pub fn jacobi_p_oracle(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    if j == j.floor() && (0.0..=200.0).contains(&j) {
        return jacobi_p_recurrence(j as usize, alpha, beta, x);
    }
    jacobi_p_hyp(j, alpha, beta, x)
}

fn gammas(j: Dd, a: Dd, b: Dd) -> Dd {
    (j + a + 1.0).gamma() * (j + b + 1.0).gamma() * (j * 2.0 + a + b + 2.0).rgamma()
}

/// `Q_j^{(a,b)}(x)` from the 2F1 in `2/(1-x)`, `x > 3`.
pub fn jacobi_q_series_minus(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    if x <= 3.0 {
        return Err(Error::NonConvergence(format!("2/(1-x) series needs x > 3, got {x}")));
    }
    let (jd, a, b, xd) = (Dd::from(j), Dd::from(alpha), Dd::from(beta), Dd::from(x));
    let (f, loss) = hyp2f1_dd(jd + 1.0, jd + a + 1.0, jd * 2.0 + a + b + 2.0, Dd::from(2.0) / (Dd::ONE - xd))?;
    let pre = Dd::from(2.0).powf(jd + a + b) / ((xd - 1.0).powf(jd + a + 1.0) * (xd + 1.0).powf(b));
    Ok(OracleResult::new((pre * gammas(jd, a, b) * f).to_f64(), loss, Method::Series))
}

/// `Q_j^{(a,b)}(x)` from the 2F1 in `2/(x+1)`, any `x > 1`.
pub fn jacobi_q_series_plus(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    if x <= 1.0 {
        return Err(domain(format!("2/(x+1) series needs x > 1, got {x}")));
    }
    let (jd, a, b, xd) = (Dd::from(j), Dd::from(alpha), Dd::from(beta), Dd::from(x));
    let (f, loss) = hyp2f1_dd(jd + 1.0, jd + b + 1.0, jd * 2.0 + a + b + 2.0, Dd::from(2.0) / (xd + 1.0))?;
    let pre = ((xd - 1.0).scale2(-1)).powf(-a) * ((xd + 1.0).scale2(-1)).powf(-(jd + b + 1.0)) * 0.5;
    Ok(OracleResult::new((pre * gammas(jd, a, b) * f).to_f64(), loss, Method::Series))
}

/// Connection form with the weight `w = ((x-1)/2)^a ((x+1)/2)^b`:
/// `Q = pi/(2 sin pi a) [-P_j^{(a,b)} + w^{-1} P_{j+a+b}^{(-a,-b)}]`, `1 < x < 3`.
fn q_connection_dd(j: Dd, a: Dd, b: Dd, x: Dd) -> Result<(Dd, f64)> {
    let (p1, l1) = jacobi_p_hyp_dd(j, a, b, x)?;
    let (p2, l2) = jacobi_p_hyp_dd(j + a + b, -a, -b, x)?;
    let w = ((x - 1.0).scale2(-1)).powf(a) * ((x + 1.0).scale2(-1)).powf(b);
    let t2 = p2 / w;
    let v = Dd::PI / (a.sin_pi() * 2.0) * (t2 - p1);
    let cancel = (p1.abs().to_f64().max(t2.abs().to_f64()) / v.abs().to_f64()).log10().max(0.0);
    Ok((v, l1.max(l2) + cancel))
}

pub fn jacobi_q_connection(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    if !(1.0 < x && x < 3.0) {
        return Err(domain(format!("connection form needs 1 < x < 3, got {x}")));
    }
    let (jd, b, xd) = (Dd::from(j), Dd::from(beta), Dd::from(x));
    if alpha == alpha.floor() {
        let (v, _) = symmetric_limit(|a| Ok(q_connection_dd(jd, a, b, xd)?.0), alpha)?;
        return Ok(OracleResult::new(v.to_f64(), 6.0, Method::EpsilonLimit));
    }
    let (v, l) = q_connection_dd(jd, alpha.into(), b, xd)?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

/// `Q_j^{(a,b)}(x)` for `x > 1`. Close to `x = 1` the `2/(x+1)` series
/// converges too slowly and the connection form takes over.
pub fn jacobi_q_oracle(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    if x > 3.0 {
        jacobi_q_series_minus(j, alpha, beta, x)
    } else if x >= 1.5 {
        jacobi_q_series_plus(j, alpha, beta, x)
    } else {
        jacobi_q_connection(j, alpha, beta, x)
    }
}

/// On-cut weight `w = ((1-x)/2)^a ((1+x)/2)^b`.
fn cut_weight(a: Dd, b: Dd, x: Dd) -> Dd {
    ((Dd::ONE - x).scale2(-1)).powf(a) * ((Dd::ONE + x).scale2(-1)).powf(b)
}

/// `𝖰 = pi/(2 sin pi a) [-cos(pi a) 𝖯_j^{(a,b)} + w^{-1} 𝖯_{j+a+b}^{(-a,-b)}]`.
fn q_cut_formula_dd(j: Dd, a: Dd, b: Dd, x: Dd) -> Result<(Dd, f64)> {
    let (p1, l1) = jacobi_p_hyp_dd(j, a, b, x)?;
    let (p2, l2) = jacobi_p_hyp_dd(j + a + b, -a, -b, x)?;
    let t1 = a.cos_pi() * p1;
    let t2 = p2 / cut_weight(a, b, x);
    let v = Dd::PI / (a.sin_pi() * 2.0) * (t2 - t1);
    let cancel = (t1.abs().to_f64().max(t2.abs().to_f64()) / v.abs().to_f64()).log10().max(0.0);
    Ok((v, l1.max(l2) + cancel))
}

/// On-cut `𝖰_j^{(a,b)}` from the P-combination, epsilon limit at integer a.
pub fn jacobi_q_cut_formula(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    check_ab(alpha, beta)?;
    if !(-1.0 < x && x < 1.0) {
        return Err(domain(format!("on-cut Q needs -1 < x < 1, got {x}")));
    }
    let (jd, b, xd) = (Dd::from(j), Dd::from(beta), Dd::from(x));
    if alpha == alpha.floor() {
        let (v, _) = symmetric_limit(|a| Ok(q_cut_formula_dd(jd, a, b, xd)?.0), alpha)?;
        return Ok(OracleResult::new(v.to_f64(), 6.0, Method::EpsilonLimit));
    }
    let (v, l) = q_cut_formula_dd(jd, alpha.into(), b, xd)?;
    Ok(OracleResult::new(v.to_f64(), l, Method::Series))
}

fn jacobi_p_f64(n: usize, a: f64, b: f64, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + (a + b + 2.0) * 0.5 * (t - 1.0);
    for k in 2..=n {
        let k = k as f64;
        let s = a + b + 2.0 * k;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
        let c3 = 2.0 * (k - 1.0 + a) * (k - 1.0 + b) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Principal-value quadrature result for the on-cut second kind function.
#[derive(Debug, Clone, Copy)]
pub struct PvResult {
    pub value: f64,
    /// Relative change when every quadrature panel is split once more.
    pub doubled_delta: f64,
}

/// `𝖰_n^{(a,b)}(x) = (1/2)(1-x)^{-a}(1+x)^{-b} PV int (1-t)^a (1+t)^b P_n(t)/(x-t) dt`.
///
/// Around `t = x` the integral over `[x-h, x+h]` is folded onto
/// `int_0^h (f(x-u) - f(x+u))/u du`; the outer pieces use `1-t = R s^{1/(a+1)}`
/// and `1+t = L s^{1/(b+1)}`, which absorb the endpoint weights.
pub fn jacobi_q_cut_pv(n: usize, alpha: f64, beta: f64, x: f64) -> Result<PvResult> {
    check_ab(alpha, beta)?;
    if !(-1.0 < x && x < 1.0) {
        return Err(domain(format!("on-cut Q needs -1 < x < 1, got {x}")));
    }
    let (a, b) = (alpha, beta);
    let f = |t: f64| (1.0 - t).powf(a) * (1.0 + t).powf(b) * jacobi_p_f64(n, a, b, t);
    let h = 0.5 * (1.0 - x).min(1.0 + x);
    let tol = 1e-14;
    // the folded integrand is analytic on [0, h]; a fixed rule keeps its
    // nodes away from u = 0, where the difference is roundoff-dominated
    let g = |u: f64| (f(x - u) - f(x + u)) / u;
    let fold_value = gauss_fixed(g, 0.0, h, 32);
    let fold_doubled = gauss_fixed(g, 0.0, h, 64);
    let rr = 1.0 - x - h;
    let p = 1.0 / (a + 1.0);
    let right = integrate(
        |s| {
            let t = 1.0 - rr * s.powf(p);
            (1.0 + t).powf(b) * jacobi_p_f64(n, a, b, t) / (x - t)
        },
        0.0,
        1.0,
        0.0,
        tol,
    )?;
    let ll = 1.0 + x - h;
    let q = 1.0 / (b + 1.0);
    let left = integrate(
        |s| {
            let t = -1.0 + ll * s.powf(q);
            (1.0 - t).powf(a) * jacobi_p_f64(n, a, b, t) / (x - t)
        },
        0.0,
        1.0,
        0.0,
        tol,
    )?;
    let rw = rr.powf(a + 1.0) * p;
    let lw = ll.powf(b + 1.0) * q;
    let total = Dd::from(fold_doubled) + Dd::from(right.value) * rw + Dd::from(left.value) * lw;
    let scale = 0.5 * (1.0 - x).powf(-a) * (1.0 + x).powf(-b);
    let value = (total * scale).to_f64();
    let delta = ((fold_doubled - fold_value).abs() + right.doubled_delta * rw + left.doubled_delta * lw) * scale;
    Ok(PvResult {
        value,
        doubled_delta: delta / value.abs().max(1e-300),
    })
}

/// Tolerance between the two on-cut methods.
pub const CUT_AGREEMENT_TOL: f64 = 1e-8;

/// On-cut `𝖰_j^{(a,b)}(x)`. At integer j the P-combination and the PV
/// quadrature must agree to `CUT_AGREEMENT_TOL`, else an oracle
/// inconsistency is reported.
pub fn jacobi_q_cut_oracle(j: f64, alpha: f64, beta: f64, x: f64) -> Result<OracleResult> {
    let formula = jacobi_q_cut_formula(j, alpha, beta, x)?;
    if j == j.floor() && (0.0..=200.0).contains(&j) {
        let pv = jacobi_q_cut_pv(j as usize, alpha, beta, x)?;
        agree(
            &format!("on-cut Q^({alpha},{beta})_{j}({x}) formula vs PV quadrature"),
            formula.value,
            pv.value,
            CUT_AGREEMENT_TOL,
        )?;
    }
    Ok(formula)
}

/// `Q^{(a,b)}_j(x ± i0)` for `-1 < x < 1`, non-integer a, from the connection
/// form with `(x-1) = e^{±i pi}(1-x)`. Returns `(Q(x+i0), Q(x-i0))`.
pub fn jacobi_q_boundary_values(j: f64, alpha: f64, beta: f64, x: f64) -> Result<(Complex64, Complex64)> {
    check_ab(alpha, beta)?;
    let (jd, a, b, xd) = (Dd::from(j), Dd::from(alpha), Dd::from(beta), Dd::from(x));
    let s = a.sin_pi();
    if s.hi == 0.0 {
        return Err(domain("boundary values need non-integer alpha"));
    }
    let (p1, _) = jacobi_p_hyp_dd(jd, a, b, xd)?;
    let (p2, _) = jacobi_p_hyp_dd(jd + a + b, -a, -b, xd)?;
    let t2 = (p2 / cut_weight(a, b, xd)).to_f64();
    let c = (Dd::PI / (s * 2.0)).to_f64();
    let p1 = p1.to_f64();
    let phase = Complex64::from_polar(1.0, -std::f64::consts::PI * alpha);
    let plus = (phase * t2 - p1) * c;
    let minus = (phase.conj() * t2 - p1) * c;
    Ok((plus, minus))
}

/// `(𝖯, 𝖰)` rebuilt from the boundary values:
/// `𝖯 = (i/pi)(e^{i pi a} Q+ - e^{-i pi a} Q-)`, `𝖰 = (e^{i pi a} Q+ + e^{-i pi a} Q-)/2`.
pub fn cut_functions_from_boundary(alpha: f64, plus: Complex64, minus: Complex64) -> (Complex64, Complex64) {
    let e = Complex64::from_polar(1.0, std::f64::consts::PI * alpha);
    let i = Complex64::i();
    let p = i / std::f64::consts::PI * (e * plus - e.conj() * minus);
    let q = (e * plus + e.conj() * minus) * 0.5;
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn polynomial_paths() {
        assert_eq!(jacobi_p_oracle(0.0, 0.3, 0.2, 0.5).unwrap().value, 1.0);
        let (a, b, x) = (0.4, 1.3, 0.2);
        let p1 = jacobi_p_oracle(1.0, a, b, x).unwrap().value;
        assert!(rel(p1, (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0) < 1e-13);
        let r = jacobi_p_recurrence(7, 1.0, 2.0, 0.99).unwrap().value;
        let h = jacobi_p_hyp(7.0, 1.0, 2.0, 0.99).unwrap().value;
        assert!(rel(r, h) < 1e-14);
    }

    #[test]
    fn legendre_reduction() {
        let q = jacobi_q_oracle(0.0, 0.0, 0.0, 3.0).unwrap().value;
        assert!(rel(q, 0.5 * 2f64.ln()) < 1e-15);
        let q = jacobi_q_oracle(0.0, 0.0, 0.0, 5.0).unwrap().value;
        assert!(rel(q, 0.5 * 1.5f64.ln()) < 1e-15);
    }

    #[test]
    fn off_cut_paths_agree() {
        let a = jacobi_q_series_minus(5.0, 0.5, 0.5, 4.0).unwrap().value;
        let b = jacobi_q_series_plus(5.0, 0.5, 0.5, 4.0).unwrap().value;
        assert!(rel(a, b) < 1e-14, "{a} {b}");
        let c = jacobi_q_connection(5.0, 0.5, 0.5, 1.8).unwrap().value;
        let d = jacobi_q_series_plus(5.0, 0.5, 0.5, 1.8).unwrap().value;
        assert!(rel(c, d) < 1e-14, "{c} {d}");
        let e = jacobi_q_connection(4.0, 1.0, 0.5, 1.4).unwrap().value;
        let f = jacobi_q_series_plus(4.0, 1.0, 0.5, 1.4).unwrap().value;
        assert!(rel(e, f) < 1e-10, "{e} {f}");
    }

    #[test]
    fn pv_matches_legendre_and_formula() {
        let pv = jacobi_q_cut_pv(5, 0.0, 0.0, 0.98).unwrap();
        let rec = super::super::legendre::legendre_q_oracle(5, 0.98).unwrap().value;
        assert!(rel(pv.value, rec) < 1e-12, "{} {rec}", pv.value);
        for &(n, a, b, x) in &[(12usize, 0.5, 0.5, 0.995), (7, 0.4, 0.3, 0.95), (3, -0.5, 0.7, -0.6), (12, 1.0, 0.0, 0.99)] {
            let pv = jacobi_q_cut_pv(n, a, b, x).unwrap();
            let f = jacobi_q_cut_formula(n as f64, a, b, x).unwrap().value;
            assert!(rel(pv.value, f) < 1e-10, "{n} {a} {b} {x}: {} {f}", pv.value);
            assert!(pv.doubled_delta < 1e-9);
        }
    }

    #[test]
    fn boundary_values_rebuild_cut_functions() {
        let (j, a, b, x) = (7.0, 0.4, 0.3, 0.95);
        let (qp, qm) = jacobi_q_boundary_values(j, a, b, x).unwrap();
        let (p, q) = cut_functions_from_boundary(a, qp, qm);
        let pr = jacobi_p_oracle(j, a, b, x).unwrap().value;
        let qr = jacobi_q_cut_formula(j, a, b, x).unwrap().value;
        assert!(rel(p.re, pr) < 1e-9 && p.im.abs() < 1e-9 * pr.abs());
        assert!(rel(q.re, qr) < 1e-9 && q.im.abs() < 1e-9 * qr.abs());
    }
}
