use std::f64::consts::{FRAC_PI_2, PI};

use bessel_asym::oracle::bessel_series::k_imaginary;
use bessel_asym::oracle::quad::integrate;
use bessel_asym::special::{bessel_i, bessel_j, bessel_k, bessel_y, digamma, gamma, gamma_ratio, log_gamma};
use num_complex::Complex64;

fn grid() -> impl Iterator<Item = (f64, f64)> {
    let nus = [0.0, 0.3, 1.0, 2.5, 4.75, 7.0, 10.0];
    let xs = [0.1, 0.7, 2.0, 5.5, 11.0, 19.9, 20.1, 31.0, 40.0];
    nus.into_iter().flat_map(move |nu| xs.into_iter().map(move |x| (nu, x)))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn wronskian_j_y() {
    // J Y' - J' Y with C' = (nu/x) C - C_{nu+1} reduces to J_{nu+1} Y - J Y_{nu+1}
    for (nu, x) in grid() {
        let (j, y) = (bessel_j(nu, x).unwrap(), bessel_y(nu, x).unwrap());
        let (j1, y1) = (bessel_j(nu + 1.0, x).unwrap(), bessel_y(nu + 1.0, x).unwrap());
        let dj = nu / x * j - j1;
        let dy = nu / x * y - y1;
        let w = j * dy - dj * y;
        assert!(rel(w, 2.0 / (PI * x)) < 1e-10, "nu={nu} x={x}: {w}");
    }
}

#[test]
fn wronskian_i_k() {
    for (nu, x) in grid() {
        let (i, k) = (bessel_i(nu, x).unwrap(), bessel_k(nu, x).unwrap());
        let (i1, k1) = (bessel_i(nu + 1.0, x).unwrap(), bessel_k(nu + 1.0, x).unwrap());
        let di = i1 + nu / x * i;
        let dk = nu / x * k - k1;
        let w = i * dk - di * k;
        assert!(rel(w, -1.0 / x) < 1e-10, "nu={nu} x={x}: {w}");
    }
}

#[test]
fn continuation_to_imaginary_argument() {
    // K_nu(i z) = -(i pi/2) e^{-i pi nu/2} (J_nu(z) - i Y_nu(z))
    for nu in [0.0, 1.0, 2.0, 0.5] {
        for z in [0.1, 0.9, 3.0, 7.5, 14.0, 20.0] {
            let h2 = Complex64::new(bessel_j(nu, z).unwrap(), -bessel_y(nu, z).unwrap());
            let from_hankel = -Complex64::i() * FRAC_PI_2 * Complex64::from_polar(1.0, -FRAC_PI_2 * nu) * h2;
            let series = k_imaginary(nu, z);
            let d = (from_hankel - series).norm() / from_hankel.norm();
            assert!(d < 1e-10, "nu={nu} z={z}: {from_hankel} vs {series}");
        }
    }
}

#[test]
fn integer_order_k_is_the_limit_of_the_i_difference() {
    let eps = 1e-4;
    for x in [0.3, 1.0, 2.0, 6.0] {
        let f = |nu: f64| FRAC_PI_2 * (bessel_i(-nu, x).unwrap() - bessel_i(nu, x).unwrap()) / (nu * PI).sin();
        let centred = 0.5 * (f(eps) + f(-eps));
        assert!(rel(centred, bessel_k(0.0, x).unwrap()) < 1e-6, "x={x}");
    }
}

#[test]
fn k0_by_quadrature() {
    let q = integrate(|t| (-2.0 * t.cosh()).exp(), 0.0, 8.0, 1e-18, 1e-14).unwrap();
    assert!(rel(bessel_k(0.0, 2.0).unwrap(), q.value) < 1e-13);
}

#[test]
fn special_values() {
    assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
    assert!(rel(bessel_j(0.5, FRAC_PI_2).unwrap(), 2.0 / PI) < 1e-15);
    assert!(rel(bessel_k(0.5, 1.0).unwrap(), FRAC_PI_2.sqrt() * (-1f64).exp()) < 1e-15);
    assert_eq!(bessel_i(0.0, 0.0).unwrap(), 1.0);
    assert_eq!(log_gamma(1.0), 0.0);
    assert!(rel(digamma(1.0), -0.577_215_664_901_532_9) < 1e-15);
    let psi51 = (1..=50).fold(digamma(1.0), |s, k| s + 1.0 / k as f64);
    assert!(rel(digamma(51.0), psi51) < 1e-14);
    assert!(rel(gamma_ratio(3.0, 1.0), 2.0) < 1e-15);
    assert!(rel(gamma_ratio(7.3, 7.3), 1.0) < 1e-15);
    assert!(rel(gamma_ratio(50.5, 49.5), 49.5) < 1e-13);
    assert!(rel(gamma(0.5), PI.sqrt()) < 1e-15);
}

#[test]
fn invalid_arguments_are_rejected() {
    assert!(bessel_j(0.5, -1.0).is_err());
    assert!(bessel_k(0.0, 0.0).is_err());
    assert!(bessel_j(f64::NAN, 1.0).is_err());
}
