//! Error-map records and their CSV / JSON-lines output.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::functions::{evaluate, reference, FunctionId};
use super::grid::{points, GridSpec, Point};
use crate::approx::{TruncationLevel, Warning};
use crate::error::{Error, Result};

/// Denominator floor of the relative error.
pub const REL_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord {
    pub function: FunctionId,
    pub level: TruncationLevel,
    pub params: Point,
    pub approx: f64,
    pub oracle: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub err_est: f64,
    pub status: String,
}

fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Region(_) => "region",
        Error::InvalidIndex(_) => "invalid-index",
        Error::NonConvergence(_) => "non-convergence",
        Error::OracleInconsistency { .. } => "oracle-inconsistency",
        Error::Truncation(_) => "truncation",
        Error::InvalidGrid(_) => "invalid-grid",
    }
}

fn warning_tag(w: &Warning) -> &'static str {
    match w {
        Warning::NearIntegerOrder { .. } => "warning:near-integer-order",
        Warning::EpsilonLimit { .. } => "warning:epsilon-limit",
    }
}

impl ErrorRecord {
    pub fn is_ok(&self) -> bool {
        !self.status.starts_with("error")
    }
}

/// One record. Only an oracle inconsistency is fatal; other failures become
/// an `error:` status with NaN numbers.
pub fn record_at(f: FunctionId, point: Point, level: TruncationLevel) -> Result<ErrorRecord> {
    let nan = f64::NAN;
    let mut rec = ErrorRecord {
        function: f,
        level,
        params: point,
        approx: nan,
        oracle: nan,
        abs_err: nan,
        rel_err: nan,
        err_est: nan,
        status: "ok".into(),
    };
    match evaluate(f, &rec.params, level) {
        Ok(a) => {
            rec.approx = a.value;
            rec.err_est = a.err_estimate;
            if let Some(w) = &a.warning {
                rec.status = warning_tag(w).into();
            }
        }
        Err(e @ Error::InvalidGrid(_)) => return Err(e),
        Err(e) => {
            rec.status = format!("error:approx:{}", error_tag(&e));
            return Ok(rec);
        }
    }
    match reference(f, &rec.params) {
        Ok(o) => {
            rec.oracle = o;
            rec.abs_err = (rec.approx - o).abs();
            rec.rel_err = rec.abs_err / o.abs().max(REL_FLOOR);
        }
        Err(e @ Error::OracleInconsistency { .. }) => return Err(e),
        Err(e) => rec.status = format!("error:oracle:{}", error_tag(&e)),
    }
    Ok(rec)
}

/// Records over the grid product, evaluated in parallel, returned in
/// lexicographic grid order.
pub fn run_error_map(f: FunctionId, grids: &[GridSpec], level: TruncationLevel) -> Result<Vec<ErrorRecord>> {
    points(grids)
        .into_par_iter()
        .map(|p| record_at(f, p, level))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidGrid(format!("format must be csv or json, got {s:?}"))),
        }
    }
}

/// Header line, `function,level,param:*,approx,oracle,abs_err,rel_err,err_est,status`.
pub fn csv_header(param_names: &[&str]) -> String {
    let mut cols = vec!["function".to_string(), "level".to_string()];
    cols.extend(param_names.iter().map(|n| format!("param:{n}")));
    cols.extend(["approx", "oracle", "abs_err", "rel_err", "err_est", "status"].map(String::from));
    cols.join(",")
}

/// Shortest round-trip decimal; exponent form outside `[1e-5, 1e16)`.
pub fn fmt_float(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

fn csv_line(r: &ErrorRecord) -> String {
    let mut cols = vec![r.function.to_string(), r.level.to_string()];
    cols.extend(r.params.iter().map(|&(_, v)| fmt_float(v)));
    cols.extend([r.approx, r.oracle, r.abs_err, r.rel_err, r.err_est].map(fmt_float));
    cols.push(r.status.clone());
    cols.join(",")
}

struct Params<'a>(&'a Point);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for ErrorRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(9))?;
        m.serialize_entry("function", &self.function)?;
        m.serialize_entry("level", &self.level)?;
        m.serialize_entry("params", &Params(&self.params))?;
        m.serialize_entry("approx", &self.approx)?;
        m.serialize_entry("oracle", &self.oracle)?;
        m.serialize_entry("abs_err", &self.abs_err)?;
        m.serialize_entry("rel_err", &self.rel_err)?;
        m.serialize_entry("err_est", &self.err_est)?;
        m.serialize_entry("status", &self.status)?;
        m.end()
    }
}

/// Writes the records; `meta` becomes a leading `#` comment line in CSV and
/// is omitted from JSON lines.
pub fn write_records(out: &mut impl Write, records: &[ErrorRecord], format: Format, meta: Option<&str>) -> io::Result<()> {
    match format {
        Format::Csv => {
            if let Some(m) = meta {
                writeln!(out, "# {m}")?;
            }
            let names: Vec<&str> = records.first().map(|r| r.params.iter().map(|(n, _)| n.as_str()).collect()).unwrap_or_default();
            writeln!(out, "{}", csv_header(&names))?;
            for r in records {
                writeln!(out, "{}", csv_line(r))?;
            }
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
