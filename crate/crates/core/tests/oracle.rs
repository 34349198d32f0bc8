use bessel_asym::dd::Dd;
use bessel_asym::harness::oracle_gate;
use bessel_asym::oracle::hyp::{hyp2f1, hyp2f1_dd};
use bessel_asym::oracle::jacobi::jacobi_q_cut_pv;
use bessel_asym::oracle::{jacobi_p_oracle, legendre_p_oracle, legendre_q_oracle, wigner_d_factorial_oracle};
use bessel_asym::rotation::{wigner_d_exact, RotationIndices};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn f(a: Dd, b: f64, c: Dd, w: f64) -> Dd {
    hyp2f1_dd(a, Dd::from(b), c, Dd::from(w)).unwrap().0
}

#[test]
fn gauss_contiguous_relation() {
    // (c-a) F(a-1) + (2a - c + (b-a) w) F(a) + a (w-1) F(a+1) = 0
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..50 {
        let a = rng.gen_range(-2.0..3.0);
        let b = rng.gen_range(-2.0..3.0);
        let c = rng.gen_range(0.5..4.0);
        let w = rng.gen_range(-0.6..0.6);
        // shifted parameters in double-double: a - 1 rounded to f64 is a different function
        let (ad, cd) = (Dd::from(a), Dd::from(c));
        let terms = [
            (cd - ad) * f(ad - 1.0, b, cd, w),
            (ad.scale2(1) - cd + (Dd::from(b) - ad) * w) * f(ad, b, cd, w),
            ad * (Dd::from(w) - 1.0) * f(ad + 1.0, b, cd, w),
        ];
        let scale = terms.iter().map(|t| t.abs().to_f64()).fold(1.0, f64::max);
        let r = (terms[0] + terms[1] + terms[2]).abs().to_f64() / scale;
        assert!(r < 1e-18, "a={a} b={b} c={c} w={w}: {r:e}");
    }
}

#[test]
fn hypergeometric_closed_forms() {
    assert!((hyp2f1(0.5, 2.0, 2.0, 0.3).unwrap().value - 0.7f64.powf(-0.5)).abs() < 1e-15);
    // (-3, 4; 2; w) terminates after four terms
    let w = 0.5;
    let p = 1.0 - 6.0 * w + 10.0 * w * w - 5.0 * w * w * w;
    assert!((hyp2f1(-3.0, 4.0, 2.0, w).unwrap().value - p).abs() < 1e-15);
    // Euler transform in double-double
    let (a, b, c, w) = (0.3, 1.7, 2.4, 0.6);
    let (ad, bd, cd) = (Dd::from(a), Dd::from(b), Dd::from(c));
    let euler = (Dd::ONE - w).powf(cd - ad - bd) * hyp2f1_dd(cd - ad, cd - bd, cd, Dd::from(w)).unwrap().0;
    assert!((euler - f(ad, b, cd, w)).abs().to_f64() < 1e-20);
}

#[test]
fn low_degree_oracles() {
    for x in [-0.6, 0.2, 0.97, 1.5] {
        assert!((legendre_p_oracle(1.0, 0.0, x).unwrap().value - x).abs() < 1e-15);
        let (a, b) = (0.3, 1.2);
        assert_eq!(jacobi_p_oracle(0.0, a, b, x).unwrap().value, 1.0);
        let p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
        assert!((jacobi_p_oracle(1.0, a, b, x).unwrap().value - p1).abs() < 1e-15);
    }
    assert!((legendre_q_oracle(0, 3.0).unwrap().value - 0.5 * 2f64.ln()).abs() < 1e-16);
    let (r5, r9) = (
        legendre_p_oracle(5.0, 0.0, 0.9).unwrap().value,
        hyp2f1(-5.0, 6.0, 1.0, 0.05).unwrap().value,
    );
    assert!((r5 - r9).abs() < 1e-15);
}

#[test]
fn factorial_sum_oracle() {
    let th = 0.7f64;
    assert!((wigner_d_factorial_oracle(1, 1, 1, th).unwrap().value - (0.5 * th).cos()).abs() < 1e-15);
    let c = th.cos();
    assert!((wigner_d_factorial_oracle(4, 0, 0, th).unwrap().value - 0.5 * (3.0 * c * c - 1.0)).abs() < 1e-15);
    let exact = wigner_d_exact(RotationIndices::new(4.0, 2.0, 1.0).unwrap(), th).unwrap();
    assert!((wigner_d_factorial_oracle(8, 4, 2, th).unwrap().value - exact).abs() < 1e-12);
}

#[test]
fn pv_quadrature_is_converged_at_check_points() {
    for (n, a, b, x) in [(5, 0.0, 0.0, 0.98), (12, 1.0, 1.0, 0.12f64.cos()), (12, 0.5, 0.5, 0.1f64.cos()), (7, 0.4, 0.3, 0.95)] {
        let r = jacobi_q_cut_pv(n, a, b, x).unwrap();
        assert!(r.doubled_delta < 1e-9, "{n} {a} {b} {x}: {}", r.doubled_delta);
    }
}

#[test]
fn dual_paths_agree() {
    let checks = oracle_gate().unwrap();
    assert!(checks.len() >= 20);
}
