use bessel_asym::harness::fit_loglog;
use bessel_asym::legendre::{legendre_p_asym, legendre_q_asym, legendre_q_cut, LegendreParams};
use bessel_asym::oracle::{legendre_p_oracle, legendre_q_mu_oracle, legendre_q_oracle};
use bessel_asym::special::{gamma, gamma_ratio, sin_pi};
use bessel_asym::TruncationLevel;
use proptest::prelude::*;

const DEGREES: [f64; 4] = [10.0, 20.0, 40.0, 80.0];

fn p_err(j: f64, x: f64, level: u8) -> f64 {
    let a = legendre_p_asym(LegendreParams::new(j, 0.0, x).unwrap(), TruncationLevel::new(level).unwrap()).unwrap();
    (a.value - legendre_p_oracle(j, 0.0, x).unwrap().value).abs()
}

#[test]
fn error_order_at_fixed_z_for_each_level() {
    for level in 0..=2u8 {
        for z in [1.0, 3.0, 6.0] {
            let ns: Vec<f64> = DEGREES.iter().map(|j| j * (j + 1.0)).collect();
            let errs: Vec<f64> = DEGREES.iter().zip(&ns).map(|(&j, n)| p_err(j, 1.0 - z * z / (2.0 * n), level)).collect();
            let fit = fit_loglog(&ns, &errs).unwrap();
            let want = -(level as f64 + 1.0);
            assert!((fit.slope - want).abs() <= 0.4, "level {level} z={z}: slope {}", fit.slope);
        }
    }
}

#[test]
fn small_degree_limit() {
    for mu in [0.3, 1.0] {
        for x in [1.2, 0.5] {
            let a = legendre_p_asym(LegendreParams::new(1e-8, mu, x).unwrap(), TruncationLevel::L2).unwrap().value;
            let want = ((x - 1.0f64).abs() / (x + 1.0)).powf(0.5 * mu) / gamma(1.0 + mu);
            assert!((a - want).abs() < 1e-6 * want, "mu={mu} x={x}: {a} vs {want}");
        }
    }
    let x = 1.5f64;
    let a = legendre_p_asym(LegendreParams::new(0.0, 0.5, x).unwrap(), TruncationLevel::L2).unwrap().value;
    assert!((a - ((x - 1.0) / (x + 1.0)).powf(0.25) / gamma(1.5)).abs() < 1e-12);
}

#[test]
fn degree_one_and_fifty() {
    let a = legendre_p_asym(LegendreParams::new(1.0, 0.0, 0.99).unwrap(), TruncationLevel::L2).unwrap();
    assert!((a.value - 0.99).abs() <= 1.01 * a.err_estimate);
    assert!(p_err(50.0, 0.1f64.cos(), 2) < 1e-6);
}

#[test]
fn order_mu_connection_consistency() {
    let (j, mu, x) = (7.2, 0.4, 1.5);
    let plus = legendre_p_asym(LegendreParams::new(j, -mu, x).unwrap(), TruncationLevel::L2).unwrap();
    let minus = legendre_p_asym(LegendreParams::new(j, mu, x).unwrap(), TruncationLevel::L2).unwrap();
    let ratio = gamma_ratio(j + mu + 1.0, j - mu + 1.0);
    let conn = std::f64::consts::PI / (2.0 * sin_pi(mu)) * (plus.value - ratio * minus.value);
    let q = legendre_q_asym(j, mu, x, TruncationLevel::L0).unwrap();
    let conn_est = std::f64::consts::PI / (2.0 * sin_pi(mu)) * (plus.err_estimate + ratio * minus.err_estimate);
    assert!((conn - q.value).abs() <= q.err_estimate.max(conn_est), "{conn} vs {}", q.value);
    assert!(legendre_q_mu_oracle(j, mu, x).unwrap().value.is_finite());
}

#[test]
fn second_kind_level_one_gains_a_power() {
    let (j, x) = (40usize, 1.001);
    let o = legendre_q_oracle(j, x).unwrap().value;
    let e0 = (legendre_q_asym(j as f64, 0.0, x, TruncationLevel::L0).unwrap().value - o).abs();
    let e1 = (legendre_q_asym(j as f64, 0.0, x, TruncationLevel::L1).unwrap().value - o).abs();
    let n = (j * (j + 1)) as f64;
    assert!(e1 / e0 < 10.0 / n && e1 / e0 > 0.01 / n, "ratio {}", e1 / e0);

    let (j, x) = (60usize, 0.08f64.cos());
    let o = legendre_q_oracle(j, x).unwrap().value;
    let e0 = (legendre_q_cut(j as f64, x, TruncationLevel::L0).unwrap().value - o).abs();
    let e1 = (legendre_q_cut(j as f64, x, TruncationLevel::L1).unwrap().value - o).abs();
    let n = (j * (j + 1)) as f64;
    assert!(e1 / e0 < 10.0 / n, "ratio {}", e1 / e0);

    let q10 = legendre_q_asym(10.0, 0.0, 1.05, TruncationLevel::L1).unwrap();
    assert!((q10.value - legendre_q_oracle(10, 1.05).unwrap().value).abs() < 3.0 * q10.err_estimate);
    let c10 = legendre_q_cut(10.0, 0.98, TruncationLevel::L1).unwrap();
    assert!((c10.value - legendre_q_oracle(10, 0.98).unwrap().value).abs() < 1e-4);
}

#[test]
fn region_checks() {
    assert!(legendre_p_asym(LegendreParams::new(5.0, 0.0, 3.0).unwrap(), TruncationLevel::L0).is_err());
    assert!(legendre_q_asym(5.0, 0.0, 0.5, TruncationLevel::L0).is_err());
    assert!(LegendreParams::new(-1.0, 0.0, 0.5).is_err());
    assert!(LegendreParams::new(2.0, 0.0, -1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn level_two_within_a_few_estimates(j in 15.0f64..60.0, z in 0.3f64..4.0) {
        let x = 1.0 - z * z / (2.0 * j * (j + 1.0));
        let a = legendre_p_asym(LegendreParams::new(j, 0.0, x).unwrap(), TruncationLevel::L2).unwrap();
        let o = legendre_p_oracle(j, 0.0, x).unwrap().value;
        prop_assert!((a.value - o).abs() <= 3.0 * a.err_estimate + 1e-14, "err {} est {}", (a.value - o).abs(), a.err_estimate);
    }

    #[test]
    fn truncation_levels_improve(j in 20.0f64..80.0, z in 0.5f64..3.0) {
        let x = 1.0 - z * z / (2.0 * j * (j + 1.0));
        let e0 = p_err(j, x, 0);
        let e2 = p_err(j, x, 2);
        prop_assert!(e2 < e0);
    }
}
