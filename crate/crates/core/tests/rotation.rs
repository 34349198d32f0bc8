use bessel_asym::legendre::{legendre_p_asym, legendre_q_cut, LegendreParams};
use bessel_asym::oracle::legendre_p_oracle;
use bessel_asym::rotation::{
    canonicalize, wigner_d_asym, wigner_d_exact, wigner_e_asym_large, wigner_e_cut_asym, wigner_e_cut_asym_printed,
    wigner_e_cut_exact, wigner_e_exact_large, HalfInt, RotationIndices,
};
use bessel_asym::TruncationLevel;
use proptest::prelude::*;

fn d(j2: i64, mp2: i64, m2: i64, th: f64) -> f64 {
    let idx = canonicalize(HalfInt::from_twice(j2), HalfInt::from_twice(mp2), HalfInt::from_twice(m2)).unwrap();
    wigner_d_exact(idx, th).unwrap()
}

#[test]
fn canonical_examples() {
    let i = RotationIndices::new(1.0, 0.0, 1.0).unwrap();
    assert_eq!((i.j.value(), i.m_prime.value(), i.m.value(), i.phase), (1.0, 1.0, 0.0, -1));
    let i = RotationIndices::new(1.0, 1.0, 0.0).unwrap();
    assert_eq!(i.phase, 1);
    let i = RotationIndices::new(1.5, -1.5, 0.5).unwrap();
    assert_eq!((i.m_prime.value(), i.m.value(), i.phase), (1.5, -0.5, 1));
    assert!(RotationIndices::new(1.0, 2.0, 0.0).is_err());
    assert!(RotationIndices::new(1.0, 0.5, 0.0).is_err());
}

#[test]
fn exact_values() {
    for th in [0.2f64, 1.0, 2.9] {
        assert!((d(1, 1, 1, th) - (0.5 * th).cos()).abs() < 1e-15);
        assert!((d(2, 2, 0, th) - th.sin() / 2f64.sqrt()).abs() < 1e-15);
        assert!((d(14, 0, 0, th) - legendre_p_oracle(7.0, 0.0, th.cos()).unwrap().value).abs() < 1e-14);
    }
}

#[test]
fn rows_are_normalized() {
    for j2 in [2i64, 5, 20] {
        for th in [0.3, 1.2, 2.5] {
            for mp2 in (-j2..=j2).step_by(2) {
                let s: f64 = (-j2..=j2).step_by(2).map(|m2| d(j2, mp2, m2, th).powi(2)).sum();
                assert!((s - 1.0).abs() < 1e-10, "j2={j2} mp2={mp2}: {s}");
            }
        }
    }
}

#[test]
fn asymptotic_against_exact() {
    let i = RotationIndices::new(20.0, 2.0, 1.0).unwrap();
    let e = wigner_d_exact(i, 0.1).unwrap();
    let a = wigner_d_asym(i, 0.1f64.cos(), TruncationLevel::L1).unwrap().value;
    assert!((a - e).abs() < 1e-5 * e.abs());
    let i = RotationIndices::new(12.5, 1.5, 0.5).unwrap();
    let e = wigner_d_exact(i, 0.15).unwrap();
    let a = wigner_d_asym(i, 0.15f64.cos(), TruncationLevel::L1).unwrap().value;
    assert!((a - e).abs() < 1e-4 * e.abs());
}

#[test]
fn second_kind_above_the_cut() {
    let e0 = wigner_e_exact_large(RotationIndices::new(0.0, 0.0, 0.0).unwrap(), 5.0).unwrap();
    assert!((e0 - 0.5 * 1.5f64.ln()).abs() < 1e-15);
    let a0 = wigner_e_asym_large(RotationIndices::new(0.0, 0.0, 0.0).unwrap(), 5.0, TruncationLevel::L0).unwrap();
    assert!((a0.value - e0).abs() <= a0.err_estimate + 1e-15);
    assert!(wigner_e_exact_large(RotationIndices::new(0.5, 0.5, -0.5).unwrap(), 6.0).unwrap().is_finite());
    let i = RotationIndices::new(6.0, 1.0, 0.0).unwrap();
    let a = wigner_e_asym_large(i, 4.0, TruncationLevel::L2).unwrap();
    let e = wigner_e_exact_large(i, 4.0).unwrap();
    assert!((a.value - e).abs() < 3.0 * a.err_estimate, "{} {e} est {}", a.value, a.err_estimate);
    let i = RotationIndices::new(10.0, 2.0, 1.0).unwrap();
    let e = wigner_e_exact_large(i, 5.0).unwrap();
    let l0 = (wigner_e_asym_large(i, 5.0, TruncationLevel::L0).unwrap().value - e).abs();
    let l2 = (wigner_e_asym_large(i, 5.0, TruncationLevel::L2).unwrap().value - e).abs();
    assert!(l2 < l0 / 10.0, "{l0} {l2}");
}

#[test]
fn second_kind_on_the_cut() {
    let x = 0.12f64.cos();
    let i = RotationIndices::new(12.0, 1.0, 0.0).unwrap();
    let a = wigner_e_cut_asym(i, x).unwrap();
    let e = wigner_e_cut_exact(i, x).unwrap();
    assert!((a.value - e).abs() < 1.5 * a.err_estimate);
    let i = RotationIndices::new(10.0, 1.0, 1.0).unwrap();
    assert_eq!(wigner_e_cut_asym(i, 0.98).unwrap().value, wigner_e_cut_asym_printed(i, 0.98).unwrap().value);
    // m' = m = 0: the Y_0 leading term of the Legendre on-cut form, up to its log piece
    let i = RotationIndices::new(20.0, 0.0, 0.0).unwrap();
    let e = wigner_e_cut_asym(i, 0.995).unwrap().value;
    let q = legendre_q_cut(20.0, 0.995, TruncationLevel::L0).unwrap().value;
    assert!((e - q).abs() < 0.1 * q.abs());
}

proptest! {
    #[test]
    fn symmetry_closure(j2 in 0i64..=16, a in 0i64..=16, b in 0i64..=16, th in 0.05f64..3.09) {
        let (mp2, m2) = (2 * (a % (j2 + 1)) - j2, 2 * (b % (j2 + 1)) - j2);
        let sign = if ((mp2 - m2) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let v = d(j2, mp2, m2, th);
        prop_assert!((v - sign * d(j2, m2, mp2, th)).abs() < 1e-12);
        prop_assert!((v - d(j2, -m2, -mp2, th)).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_reduces_bitwise(j in 1u32..150, x in -0.5f64..0.9999) {
        let j = j as f64;
        let d = wigner_d_asym(RotationIndices::new(j, 0.0, 0.0).unwrap(), x, TruncationLevel::L2).unwrap();
        let l = legendre_p_asym(LegendreParams::new(j, 0.0, x).unwrap(), TruncationLevel::L2).unwrap();
        prop_assert_eq!(d.value.to_bits(), l.value.to_bits());
    }
}
