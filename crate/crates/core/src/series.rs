//! The reduced Bessel series shared by the first-kind expansions.
//!
//! A correction term `N^{-m} (z/2)^k J_{k+mu}(z)` times the leading
//! `(z/2)^{-mu}` is written as `t^m w^{k-m} jr(k+mu, z)` with `w = (z/2)^2`,
//! `t = w/N = (1-x)/2` and `jr(nu, z) = (z/2)^{-nu} J_nu(z)`. Everything
//! depends on `w` and `t` only: `w < 0` turns `jr` into the modified
//! `(Z/2)^{-nu} I_nu(Z)` with `Z = 2 sqrt(-w)`, which is the `x > 1`
//! continuation with its alternating signs. Since `t` is known without
//! forming `N`, `j -> 0` is finite.

use crate::coeffs::CoefficientTable;
use crate::special::{reduced_i, reduced_j};

/// `(z/2)^{-nu} J_nu(z)` as a function of `w = (z/2)^2` of either sign.
pub(crate) fn reduced(nu: f64, w: f64) -> f64 {
    if w >= 0.0 {
        reduced_j(nu, 2.0 * w.sqrt())
    } else {
        reduced_i(nu, 2.0 * (-w).sqrt())
    }
}

/// Group values. `value = g[0] - g[1] - ... - g[level]`.
pub(crate) struct Groups {
    pub g: Vec<f64>,
    pub counts: Vec<usize>,
}

impl Groups {
    /// Value through `level`, the magnitude of group `level + 1`, terms used.
    pub fn truncate(&self, level: usize) -> (f64, f64, usize) {
        let value = self.g[0] - self.g[1..=level].iter().sum::<f64>();
        let est = self.g.get(level + 1).copied().unwrap_or(0.0).abs();
        (value, est, self.counts[..=level].iter().sum())
    }
}

pub(crate) fn groups(table: &CoefficientTable<f64>, mu: f64, w: f64, t: f64, max_order: usize) -> Groups {
    let mut g = vec![reduced(mu, w)];
    let mut counts = vec![1];
    for m in 1..=max_order {
        let mut sum = 0.0;
        let mut n = 0;
        for (k, &c) in table.order(m) {
            sum += c * w.powi((k - m) as i32) * reduced(k as f64 + mu, w);
            n += 1;
        }
        g.push(t.powi(m as i32) * sum);
        counts.push(n);
    }
    Groups { g, counts }
}

/// Every entry with Bessel offset `k <= kmax`; the `k = kmax+1` entries give the estimate.
pub(crate) fn bessel_index_sum(table: &CoefficientTable<f64>, mu: f64, w: f64, t: f64, kmax: usize) -> (f64, f64, usize) {
    let mut value = reduced(mu, w);
    let mut next = 0.0;
    let mut used = 1;
    for ((m, k), &c) in table.entries() {
        if k > kmax + 1 {
            continue;
        }
        let term = c * t.powi(m as i32) * w.powi((k - m) as i32) * reduced(k as f64 + mu, w);
        if k <= kmax {
            value -= term;
            used += 1;
        } else {
            next -= term;
        }
    }
    (value, next.abs(), used)
}
