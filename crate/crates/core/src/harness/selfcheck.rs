//! The oracle self-consistency gate: every pair of independent reference
//! paths must agree before any error map trusts them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{self, hyp, jacobi as oj, legendre as ol, rel_diff, DUAL_PATH_TOL};
use crate::rotation::{self, HalfInt};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualPath {
    pub name: String,
    pub first: f64,
    pub second: f64,
    pub rel_diff: f64,
    pub pass: bool,
    /// Set when a path failed to evaluate.
    pub error: Option<String>,
}

fn check(name: impl Into<String>, a: Result<f64>, b: Result<f64>) -> DualPath {
    let name = name.into();
    match (a, b) {
        (Ok(first), Ok(second)) => {
            let d = rel_diff(first, second);
            DualPath {
                name,
                first,
                second,
                rel_diff: d,
                pass: d <= DUAL_PATH_TOL && first.is_finite() && second.is_finite(),
                error: None,
            }
        }
        (a, b) => DualPath {
            name,
            first: a.as_ref().copied().unwrap_or(f64::NAN),
            second: b.as_ref().copied().unwrap_or(f64::NAN),
            rel_diff: f64::NAN,
            pass: false,
            error: Some(a.err().or(b.err()).map(|e| e.to_string()).unwrap_or_default()),
        },
    }
}

fn v(r: Result<oracle::OracleResult>) -> Result<f64> {
    r.map(|o| o.value)
}

/// All dual-path comparisons used by the acceptance points.
pub fn oracle_self_checks() -> Vec<DualPath> {
    let mut out = vec![
        check("2F1 direct vs Euler transform (0.3, 1.7; 2.4; 0.6)", v(hyp::hyp2f1(0.3, 1.7, 2.4, 0.6)), v(hyp::hyp2f1_euler(0.3, 1.7, 2.4, 0.6))),
        check("2F1 direct vs Euler transform (-0.4, 2.2; 1.3; -0.7)", v(hyp::hyp2f1(-0.4, 2.2, 1.3, -0.7)), v(hyp::hyp2f1_euler(-0.4, 2.2, 1.3, -0.7))),
    ];
    for (n, m, x) in [(5usize, 0usize, 0.9), (12, 3, 0.99), (50, 0, 0.995), (6, 1, 1.7)] {
        out.push(check(
            format!("Legendre P^{m}_{n}({x}) recurrence vs 2F1"),
            Ok(ol::legendre_p_recurrence(n, m, x).value),
            v(ol::legendre_p_hyp(n as f64, m as f64, x)),
        ));
    }
    for (n, x) in [(0usize, 3.0), (10, 1.05), (6, 4.0), (40, 1.2)] {
        out.push(check(format!("Legendre Q_{n}({x}) recurrence vs 2F1"), v(ol::legendre_q_recurrence(n, x)), v(ol::legendre_q_hyp(n as f64, 0.0, x))));
    }
    out.push(check("Legendre Q^0.4_7.2(1.5) 2F1 vs P connection", v(ol::legendre_q_hyp(7.2, 0.4, 1.5)), v(ol::legendre_q_connection(7.2, 0.4, 1.5))));
    for (n, a, b, x) in [(7usize, 1.0, 2.0, 0.99), (20, 0.5, 1.5, -0.3), (9, 0.25, 0.25, 1.4)] {
        out.push(check(
            format!("Jacobi P^({a},{b})_{n}({x}) recurrence vs 2F1"),
            v(oj::jacobi_p_recurrence(n, a, b, x)),
            v(oj::jacobi_p_hyp(n as f64, a, b, x)),
        ));
    }
    out.push(check("Jacobi Q^(0.5,0.5)_5(4) 2/(1-x) vs 2/(x+1) series", v(oj::jacobi_q_series_minus(5.0, 0.5, 0.5, 4.0)), v(oj::jacobi_q_series_plus(5.0, 0.5, 0.5, 4.0))));
    out.push(check("Jacobi Q^(0.5,0.5)_5(1.8) connection vs 2/(x+1) series", v(oj::jacobi_q_connection(5.0, 0.5, 0.5, 1.8)), v(oj::jacobi_q_series_plus(5.0, 0.5, 0.5, 1.8))));
    out.push(check("Jacobi Q^(0.25,0.25)_8(6) 2/(1-x) vs 2/(x+1) series", v(oj::jacobi_q_series_minus(8.0, 0.25, 0.25, 6.0)), v(oj::jacobi_q_series_plus(8.0, 0.25, 0.25, 6.0))));
    for (n, a, b, x) in [(5usize, 0.0, 0.0, 0.98), (12, 1.0, 1.0, 0.12f64.cos()), (11, 0.5, 0.5, 0.1f64.cos()), (7, 0.4, 0.3, 0.95)] {
        out.push(check(
            format!("on-cut Jacobi Q^({a},{b})_{n}({x:.6}) formula vs PV quadrature"),
            v(oj::jacobi_q_cut_formula(n as f64, a, b, x)),
            oj::jacobi_q_cut_pv(n, a, b, x).map(|p| p.value),
        ));
    }
    out.push(check("on-cut Q_5(0.98) Jacobi PV vs Legendre recurrence", oj::jacobi_q_cut_pv(5, 0.0, 0.0, 0.98).map(|p| p.value), v(ol::legendre_q_recurrence(5, 0.98))));
    let boundary = oj::jacobi_q_boundary_values(7.0, 0.4, 0.3, 0.95).map(|(p, m)| oj::cut_functions_from_boundary(0.4, p, m));
    out.push(check(
        "on-cut P^(0.4,0.3)_7(0.95) from boundary values vs 2F1",
        boundary.as_ref().map(|(p, _)| p.re).map_err(Clone::clone),
        v(oj::jacobi_p_hyp(7.0, 0.4, 0.3, 0.95)),
    ));
    out.push(check(
        "on-cut Q^(0.4,0.3)_7(0.95) from boundary values vs formula",
        boundary.as_ref().map(|(_, q)| q.re).map_err(Clone::clone),
        v(oj::jacobi_q_cut_formula(7.0, 0.4, 0.3, 0.95)),
    ));
    for (j2, mp2, m2, th) in [(8i64, 4i64, 2i64, 0.7), (7, 3, -1, 1.9), (20, 6, 0, 0.3), (25, 3, 1, 0.15)] {
        let exact = rotation::canonicalize(HalfInt::from_twice(j2), HalfInt::from_twice(mp2), HalfInt::from_twice(m2))
            .and_then(|i| rotation::wigner_d_exact(i, th));
        out.push(check(
            format!("d^{}/2_({}/2,{}/2)({th}) Jacobi form vs factorial sum", j2, mp2, m2),
            exact,
            v(oracle::wigner_d_factorial_oracle(j2, mp2, m2, th)),
        ));
    }
    let e = rotation::RotationIndices::new(2.0, 1.0, 0.0).and_then(|i| rotation::wigner_e_exact_large(i, 4.0));
    let q = v(oj::jacobi_q_series_plus(1.0, 1.0, 1.0, 4.0)).map(|q| q * (1.5f64).sqrt() * (1.5f64 * 2.5).sqrt());
    out.push(check("e^2_(1,0)(4) 2F1 vs Jacobi Q composition", e, q));
    out
}

/// Err with the first inconsistency.
pub fn oracle_gate() -> Result<Vec<DualPath>> {
    let checks = oracle_self_checks();
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(Error::OracleInconsistency {
            what: match &bad.error {
                Some(e) => format!("{} ({e})", bad.name),
                None => bad.name.clone(),
            },
            rel_diff: bad.rel_diff,
        });
    }
    Ok(checks)
}
