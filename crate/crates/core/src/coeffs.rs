//! Coefficients of the `1/(j(j+b))^m` correction groups.
//!
//! The series has the shape
//!
//! ```text
//! J_mu(z) - sum_m N^{-m} sum_k c_{m,k} (z/2)^k J_{k+mu}(z),   N = j(j+b)
//! ```
//!
//! with `k` running over `m+1 ..= 3m`. The coefficients come out of the
//! hypergeometric terms `prod_{i<s} (1 - i(i+b)/N)` rewritten in falling
//! factorials of `s`: the `N^{-m}` part is a polynomial in `s` of degree
//! `3m`, and its Newton forward differences at `s = 0` give `c_{m,k}` up to
//! the sign `-(-1)^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

pub type Rational = Ratio<i128>;

/// Highest order the generator is exercised at; `i128` holds order 5 exactly
/// for `b` with small denominators.
pub const MAX_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable<T> {
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Clone + Num> CoefficientTable<T> {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), T)>) -> Self {
        CoefficientTable {
            entries: entries.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// `c_{m,k}`, zero when absent.
    pub fn get(&self, m: usize, k: usize) -> T {
        self.entries.get(&(m, k)).cloned().unwrap_or_else(T::zero)
    }

    pub fn max_order(&self) -> usize {
        self.entries.keys().map(|&(m, _)| m).max().unwrap_or(0)
    }

    /// Entries of order `m`, ordered by k.
    pub fn order(&self, m: usize) -> impl Iterator<Item = (usize, &T)> {
        self.entries.range((m, 0)..(m + 1, 0)).map(|(&(_, k), v)| (k, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        self.entries.iter().map(|(&key, v)| (key, v))
    }

    /// Restriction to orders `<= m`.
    pub fn truncated(&self, m: usize) -> Self {
        CoefficientTable {
            entries: self.entries.iter().filter(|((o, _), _)| *o <= m).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> CoefficientTable<U> {
        CoefficientTable::from_entries(self.entries.iter().map(|(k, v)| (*k, f(v))))
    }
}

impl<T: Clone + Num + FromPrimitive> CoefficientTable<T> {
    /// Coefficients through `max_order` for the product `i(i+b)`.
    pub fn generate(b: &T, max_order: usize) -> Self {
        let points = 3 * max_order + 1;
        let int = |n: usize| T::from_usize(n).expect("small integer");
        // poly[s][m] = coefficient of e^m in prod_{i<s} (1 - e i(i+b))
        let mut poly = vec![vec![T::zero(); max_order + 1]; points];
        poly[0][0] = T::one();
        for s in 1..points {
            let i = s - 1;
            let w = int(i) * (int(i) + b.clone());
            let prev = poly[s - 1].clone();
            for m in 0..=max_order {
                let mut v = prev[m].clone();
                if m > 0 {
                    v = v - w.clone() * prev[m - 1].clone();
                }
                poly[s][m] = v;
            }
        }
        let mut entries = BTreeMap::new();
        for m in 1..=max_order {
            let mut diffs: Vec<T> = poly.iter().map(|row| row[m].clone()).collect();
            let mut kfact = T::one();
            for k in 0..=3 * m {
                if k > 0 {
                    kfact = kfact * int(k);
                }
                let a = diffs[0].clone() / kfact.clone();
                if !a.is_zero() {
                    let c = if k % 2 == 0 { T::zero() - a } else { a };
                    entries.insert((m, k), c);
                }
                diffs = diffs.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
            }
        }
        CoefficientTable { entries }
    }
}

impl<T: fmt::Display> fmt::Display for CoefficientTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(m, k), v) in &self.entries {
            writeln!(f, "({m},{k}) {v}")?;
        }
        Ok(())
    }
}

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// The Legendre table through second order, as literal constants.
pub fn legendre_table() -> CoefficientTable<Rational> {
    CoefficientTable::from_entries([
        ((1, 2), r(1, 1)),
        ((1, 3), r(-1, 3)),
        ((2, 3), r(2, 1)),
        ((2, 4), r(-5, 2)),
        ((2, 5), r(11, 15)),
        ((2, 6), r(-1, 18)),
    ])
}

/// Closed forms of the general-b table through second order.
pub fn jacobi_table_closed<T>(b: &T) -> CoefficientTable<T>
where
    T: Clone + Num + FromPrimitive,
{
    let c = |n: i64| T::from_i64(n).expect("small integer");
    let b = b.clone();
    CoefficientTable::from_entries([
        ((1, 2), (b.clone() + c(1)) / c(2)),
        ((1, 3), c(-1) / c(3)),
        ((2, 3), (b.clone() + c(1)) * (b.clone() + c(2)) / c(3)),
        ((2, 4), c(0) - (c(11) + c(8) * b.clone() + b.clone() * b.clone()) / c(8)),
        ((2, 5), (c(17) + c(5) * b.clone()) / c(30)),
        ((2, 6), c(-1) / c(18)),
    ])
}

/// Exact generated table for rational `b`.
pub fn jacobi_coeff_table_exact(b: Rational, max_order: usize) -> CoefficientTable<Rational> {
    CoefficientTable::generate(&b, max_order)
}

/// Generated table for real `b` through order 3 (order 3 feeds the level-2 estimate).
pub fn jacobi_coeff_table(b: f64) -> CoefficientTable<f64> {
    if b == 1.0 {
        return legendre_f64().clone();
    }
    CoefficientTable::generate(&b, 3)
}

/// Generated table through `max_order` for real `b`.
pub fn jacobi_coeff_table_to(b: f64, max_order: usize) -> CoefficientTable<f64> {
    CoefficientTable::generate(&b, max_order)
}

/// The b=1 table through order 3, cached.
pub(crate) fn legendre_f64() -> &'static CoefficientTable<f64> {
    static TABLE: OnceLock<CoefficientTable<f64>> = OnceLock::new();
    TABLE.get_or_init(|| to_f64(&CoefficientTable::generate(&r(1, 1), 3)))
}

/// The b=1 table through `MAX_ORDER`, cached.
pub(crate) fn legendre_f64_full() -> &'static CoefficientTable<f64> {
    static TABLE: OnceLock<CoefficientTable<f64>> = OnceLock::new();
    TABLE.get_or_init(|| to_f64(&CoefficientTable::generate(&r(1, 1), MAX_ORDER)))
}

/// Groups of `prod_{i<s} (1 + i u)(1 + i v)` by total degree in `(u, v)`,
/// each in falling factorials of `s`: `out[d-1]` holds `(k, a_{d,k})` for
/// `s(s-1)...(s-k+1)`. Used by the large-argument second-kind forms with
/// `u = 1/j1`, `v = 1/j2`.
pub fn product_groups(u: f64, v: f64, max_degree: usize) -> Vec<Vec<(usize, f64)>> {
    let points = 2 * max_degree + 1;
    let mut poly = vec![vec![0.0; max_degree + 1]; points];
    poly[0][0] = 1.0;
    for s in 1..points {
        let i = (s - 1) as f64;
        let (lin, quad) = (i * (u + v), i * i * u * v);
        for d in 0..=max_degree {
            let mut c = poly[s - 1][d];
            if d >= 1 {
                c += lin * poly[s - 1][d - 1];
            }
            if d >= 2 {
                c += quad * poly[s - 1][d - 2];
            }
            poly[s][d] = c;
        }
    }
    (1..=max_degree)
        .map(|d| {
            let mut diffs: Vec<f64> = poly.iter().map(|row| row[d]).collect();
            let mut out = Vec::new();
            let mut kfact = 1.0;
            for k in 0..=2 * d {
                if k > 0 {
                    kfact *= k as f64;
                }
                let a = diffs[0] / kfact;
                if a != 0.0 && k >= 2 {
                    out.push((k, a));
                }
                diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
            }
            out
        })
        .collect()
}

pub fn to_f64(t: &CoefficientTable<Rational>) -> CoefficientTable<f64> {
    t.map(|v| *v.numer() as f64 / *v.denom() as f64)
}

/// One located difference between two tables.
#[derive(Debug, Clone, PartialEq)]
pub struct TableDiff<T> {
    pub m: usize,
    pub k: usize,
    pub left: T,
    pub right: T,
}

/// Entry-by-entry comparison; empty when equal.
pub fn diff_tables<T: Clone + Num + Signed>(a: &CoefficientTable<T>, b: &CoefficientTable<T>) -> Vec<TableDiff<T>> {
    let mut keys: Vec<(usize, usize)> = a.entries.keys().chain(b.entries.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(m, k)| {
            let (l, r) = (a.get(m, k), b.get(m, k));
            (l != r).then_some(TableDiff { m, k, left: l, right: r })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_b1_matches_literal_table() {
        let g = CoefficientTable::generate(&r(1, 1), 2);
        assert!(diff_tables(&g, &legendre_table()).is_empty(), "{g}");
    }

    #[test]
    fn generated_matches_closed_forms() {
        for b in [r(1, 1), r(2, 1), r(3, 2), r(-1, 3), r(7, 4)] {
            let g = CoefficientTable::generate(&b, 2);
            assert!(diff_tables(&g, &jacobi_table_closed(&b)).is_empty(), "b={b}");
        }
    }

    #[test]
    fn order_three_legendre() {
        let g = CoefficientTable::generate(&r(1, 1), 3);
        let want = [(4, r(6, 1)), (5, r(-66, 5)), (6, r(49, 6)), (7, r(-409, 210)), (8, r(17, 90)), (9, r(-1, 162))];
        for (k, v) in want {
            assert_eq!(g.get(3, k), v, "k={k}");
        }
    }

    #[test]
    fn k_range_per_order() {
        let g = CoefficientTable::generate(&r(5, 3), MAX_ORDER);
        for m in 1..=MAX_ORDER {
            let ks: Vec<usize> = g.order(m).map(|(k, _)| k).collect();
            assert_eq!(ks.first(), Some(&(m + 1)));
            assert_eq!(ks.last(), Some(&(3 * m)));
        }
    }

    #[test]
    fn product_group_closed_forms() {
        let (u, v) = (0.1, 0.03);
        let g = product_groups(u, v, 3);
        let want = [
            vec![(2, (u + v) / 2.0)],
            vec![(2, u * v / 2.0), (3, (u * u + 3.0 * u * v + v * v) / 3.0), (4, (u + v) * (u + v) / 8.0)],
            vec![
                (3, u * v * (u + v)),
                (4, (u + v) * (u * u + 6.0 * u * v + v * v) / 4.0),
                (5, (u + v) * (u * u + 3.0 * u * v + v * v) / 6.0),
                (6, (u + v).powi(3) / 48.0),
            ],
        ];
        for (got, want) in g.iter().zip(&want) {
            assert_eq!(got.len(), want.len());
            for (a, b) in got.iter().zip(want) {
                assert_eq!(a.0, b.0);
                assert!((a.1 - b.1).abs() <= 1e-13 * b.1.abs(), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn real_b_agrees_with_exact() {
        let e = to_f64(&CoefficientTable::generate(&r(3, 4), 3));
        let f = jacobi_coeff_table(0.75);
        for ((m, k), v) in e.entries() {
            assert!((f.get(m, k) - v).abs() <= 1e-14 * v.abs(), "({m},{k})");
        }
    }
}
