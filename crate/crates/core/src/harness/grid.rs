//! Parameter grids: `name=min:max:count:lin|log`, `name=v1,v2,...` or `name=v`.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub name: String,
    pub values: Vec<f64>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidGrid(msg.into())
}

/// Rounds to 15 significant digits so generated points print as typed (40, not 39.99999999999999).
fn tidy(v: f64) -> f64 {
    format!("{v:.14e}").parse().unwrap_or(v)
}

impl GridSpec {
    pub fn list(name: &str, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
            return Err(bad(format!("{name}: values must be finite and non-empty")));
        }
        Ok(GridSpec { name: name.to_string(), values })
    }

    pub fn single(name: &str, v: f64) -> Self {
        GridSpec { name: name.to_string(), values: vec![v] }
    }

    pub fn linear(name: &str, min: f64, max: f64, count: usize) -> Result<Self> {
        Self::check_range(name, min, max, count)?;
        let step = (max - min) / (count - 1) as f64;
        let mut values: Vec<f64> = (0..count).map(|i| tidy(min + step * i as f64)).collect();
        values[count - 1] = max;
        Ok(GridSpec { name: name.to_string(), values })
    }

    pub fn log(name: &str, min: f64, max: f64, count: usize) -> Result<Self> {
        Self::check_range(name, min, max, count)?;
        if min <= 0.0 {
            return Err(bad(format!("{name}: log grid needs min > 0")));
        }
        let ratio = max / min;
        let mut values: Vec<f64> = (0..count).map(|i| tidy(min * ratio.powf(i as f64 / (count - 1) as f64))).collect();
        values[0] = min;
        values[count - 1] = max;
        Ok(GridSpec { name: name.to_string(), values })
    }

    fn check_range(name: &str, min: f64, max: f64, count: usize) -> Result<()> {
        if count < 2 {
            return Err(bad(format!("{name}: count must be >= 2")));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(bad(format!("{name}: need finite min < max")));
        }
        Ok(())
    }
}

fn number(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| bad(format!("not a number: {s:?}")))
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rhs) = s.split_once('=').ok_or_else(|| bad(format!("expected name=..., got {s:?}")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(bad("empty parameter name"));
        }
        let parts: Vec<&str> = rhs.split(':').collect();
        match parts.as_slice() {
            [min, max, count, kind] => {
                let count = count.trim().parse::<usize>().map_err(|_| bad(format!("bad count {count:?}")))?;
                let (min, max) = (number(min)?, number(max)?);
                match kind.trim() {
                    "lin" => GridSpec::linear(name, min, max, count),
                    "log" => GridSpec::log(name, min, max, count),
                    k => Err(bad(format!("spacing must be lin or log, got {k:?}"))),
                }
            }
            [list] => GridSpec::list(name, list.split(',').map(number).collect::<Result<_>>()?),
            _ => Err(bad(format!("expected min:max:count:lin|log or a list, got {rhs:?}"))),
        }
    }
}

/// One grid point: parameter names with values, in grid order.
pub type Point = Vec<(String, f64)>;

/// Cartesian product, the first grid varying slowest.
pub fn points(grids: &[GridSpec]) -> Vec<Point> {
    let mut out: Vec<Point> = vec![Vec::new()];
    for g in grids {
        out = out
            .into_iter()
            .flat_map(|p| {
                g.values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push((g.name.clone(), v));
                    q
                })
            })
            .collect();
    }
    out
}

pub fn lookup(point: &[(String, f64)], name: &str) -> Option<f64> {
    point.iter().find(|(n, _)| n == name).map(|p| p.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        let g: GridSpec = "j=10:80:4:log".parse().unwrap();
        assert_eq!(g.values.len(), 4);
        assert_eq!((g.values[0], g.values[3]), (10.0, 80.0));
        assert!((g.values[1] - 20.0).abs() < 1e-12);
        let l: GridSpec = "x=0.1,0.2".parse().unwrap();
        assert_eq!(l.values, vec![0.1, 0.2]);
        assert_eq!("mu=0.4".parse::<GridSpec>().unwrap().values, vec![0.4]);
        for bad in ["j=1:2:1:lin", "j=2:1:3:lin", "j=0:1:3:log", "j=1:2:3:cubic", "=1", "j"] {
            assert!(bad.parse::<GridSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn product_order() {
        let p = points(&["a=1,2".parse().unwrap(), "b=3,4".parse().unwrap()]);
        let flat: Vec<(f64, f64)> = p.iter().map(|q| (q[0].1, q[1].1)).collect();
        assert_eq!(flat, vec![(1.0, 3.0), (1.0, 4.0), (2.0, 3.0), (2.0, 4.0)]);
    }
}
