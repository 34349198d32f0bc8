//! Adaptive Gauss-Kronrod (7/15) quadrature with double-double accumulation.

use std::collections::BinaryHeap;

use crate::dd::Dd;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn kronrod(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let d = h * XGK[i];
        let s = f(c - d) + f(c + d);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    Panel {
        a,
        b,
        value: k * h,
        err: ((k - g) * h).abs(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    /// Change in the result when every final panel is split once more.
    pub doubled_delta: f64,
    pub panels: usize,
}

/// `int_a^b f` to `max(abs_tol, rel_tol |I|)`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<QuadResult> {
    const MAX_PANELS: usize = 20_000;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_err: 0.0,
            doubled_delta: 0.0,
            panels: 0,
        });
    }
    let mut heap = BinaryHeap::new();
    let first = kronrod(&mut f, a, b);
    let mut total = first.value;
    let mut err = first.err;
    heap.push(first);
    // roundoff floor: Kronrod error estimates are noise below ~500 ulp of the panel sums
    let floor = |heap: &BinaryHeap<Panel>| 1e-13 * heap.iter().map(|p: &Panel| p.value.abs()).sum::<f64>();
    while err > abs_tol.max(rel_tol * total.abs()) && err > floor(&heap) {
        if heap.len() >= MAX_PANELS {
            return Err(Error::NonConvergence(format!(
                "quadrature on [{a}, {b}] stalled at error {err:e}"
            )));
        }
        let p = heap.pop().expect("non-empty");
        let m = 0.5 * (p.a + p.b);
        if m <= p.a || m >= p.b {
            return Err(Error::NonConvergence(format!("quadrature panel near {m} underflowed")));
        }
        let l = kronrod(&mut f, p.a, m);
        let r = kronrod(&mut f, m, p.b);
        total += l.value + r.value - p.value;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
    }
    let panels: Vec<Panel> = heap.into_vec();
    let value: Dd = panels.iter().map(|p| Dd::from(p.value)).sum();
    let abs_err: f64 = panels.iter().map(|p| p.err).sum();
    let doubled: Dd = panels
        .iter()
        .map(|p| {
            let m = 0.5 * (p.a + p.b);
            Dd::from(kronrod(&mut f, p.a, m).value) + kronrod(&mut f, m, p.b).value
        })
        .sum();
    Ok(QuadResult {
        value: value.to_f64(),
        abs_err,
        doubled_delta: (doubled - value).abs().to_f64(),
        panels: panels.len(),
    })
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Fixed n-point Gauss-Legendre rule on [a, b], accumulated in double-double.
pub fn gauss_fixed(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let s: Dd = x.iter().zip(&w).map(|(xi, wi)| Dd::from(wi * f(c + h * xi))).sum();
    (s * h).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smooth_and_endpoint_singular() {
        let r = integrate(|x| x.exp(), 0.0, 1.0, 0.0, 1e-14).unwrap();
        assert!((r.value - (1f64.exp() - 1.0)).abs() < 1e-14);
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 0.0, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() < 1e-11, "{r:?}");
        assert!(r.doubled_delta < 1e-11);
    }

    #[test]
    fn gauss_rule_exact_for_polynomials() {
        let v = gauss_fixed(|x| x.powi(9) + x * x, 0.0, 2.0, 5);
        assert!((v - (2f64.powi(10) / 10.0 + 8.0 / 3.0)).abs() < 1e-12);
        let (_, w) = gauss_legendre(64);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }
}
