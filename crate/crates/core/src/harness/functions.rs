//! Named functions the harness can map: the asymptotic form and its oracle.
//!
//! Parameters come by name. The argument may be given as `x`, `theta`
//! (`x = cos theta`), `z` (on the cut, `x = 1 - z^2/2N`) or `Z` (off the
//! cut, `x = 1 + Z^2/2N`), with `N` the function's own `j(j+b)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::grid::lookup;
use crate::approx::{Approximant, TruncationLevel};
use crate::error::{Error, Result};
use crate::jacobi::{self, JacobiParams};
use crate::legendre::{self, LegendreParams};
use crate::oracle;
use crate::rotation::{self, RotationIndices};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionId {
    LegendreP,
    LegendrePBesselIndex,
    LegendrePMacdonald,
    LegendreQ,
    LegendreQCut,
    JacobiP,
    JacobiQNear,
    JacobiQNearPrinted,
    JacobiQCut,
    JacobiQCutPrinted,
    JacobiQFar,
    JacobiQAlt,
    WignerD,
    WignerDFootnote,
    WignerELarge,
    WignerECut,
    WignerECutPrinted,
}

use FunctionId::*;

impl FunctionId {
    pub const ALL: [FunctionId; 17] = [
        LegendreP,
        LegendrePBesselIndex,
        LegendrePMacdonald,
        LegendreQ,
        LegendreQCut,
        JacobiP,
        JacobiQNear,
        JacobiQNearPrinted,
        JacobiQCut,
        JacobiQCutPrinted,
        JacobiQFar,
        JacobiQAlt,
        WignerD,
        WignerDFootnote,
        WignerELarge,
        WignerECut,
        WignerECutPrinted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LegendreP => "legendre_p",
            LegendrePBesselIndex => "legendre_p_bessel_index",
            LegendrePMacdonald => "legendre_p_macdonald",
            LegendreQ => "legendre_q",
            LegendreQCut => "legendre_q_cut",
            JacobiP => "jacobi_p",
            JacobiQNear => "jacobi_q_near",
            JacobiQNearPrinted => "jacobi_q_near_printed",
            JacobiQCut => "jacobi_q_cut",
            JacobiQCutPrinted => "jacobi_q_cut_printed",
            JacobiQFar => "jacobi_q_far",
            JacobiQAlt => "jacobi_q_alt",
            WignerD => "wigner_d",
            WignerDFootnote => "wigner_d_footnote",
            WignerELarge => "wigner_e_large",
            WignerECut => "wigner_e_cut",
            WignerECutPrinted => "wigner_e_cut_printed",
        }
    }

    /// Parameters besides the argument, with defaults where one makes sense.
    pub fn params(self) -> &'static [(&'static str, Option<f64>)] {
        match self {
            LegendreP => &[("j", None), ("mu", Some(0.0))],
            LegendrePBesselIndex => &[("j", None), ("mu", Some(0.0)), ("kmax", Some(6.0))],
            LegendrePMacdonald | LegendreQCut => &[("j", None)],
            LegendreQ => &[("j", None), ("mu", Some(0.0))],
            JacobiP | JacobiQNear | JacobiQNearPrinted | JacobiQCut | JacobiQCutPrinted | JacobiQFar | JacobiQAlt => {
                &[("j", None), ("alpha", Some(0.0)), ("beta", Some(0.0))]
            }
            WignerD | WignerDFootnote | WignerELarge | WignerECut | WignerECutPrinted => {
                &[("j", None), ("mp", Some(0.0)), ("m", Some(0.0))]
            }
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = FunctionId::ALL.iter().map(|f| f.name()).collect();
                Error::InvalidGrid(format!("unknown function {s:?}; known: {}", names.join(", ")))
            })
    }
}

/// Resolved parameters of one grid point.
struct Args {
    get: Vec<(String, f64)>,
}

impl Args {
    fn new(f: FunctionId, point: &[(String, f64)]) -> Result<Self> {
        let mut get = Vec::new();
        for &(name, default) in f.params() {
            let v = lookup(point, name)
                .or(default)
                .ok_or_else(|| Error::InvalidGrid(format!("{f} needs parameter {name}")))?;
            get.push((name.to_string(), v));
        }
        Ok(Args { get })
    }

    fn v(&self, name: &str) -> f64 {
        lookup(&self.get, name).expect("declared parameter")
    }
}

fn natural_n(f: FunctionId, a: &Args) -> f64 {
    let j = a.v("j");
    match f {
        LegendreP | LegendrePBesselIndex | LegendrePMacdonald | LegendreQ | LegendreQCut => j * (j + 1.0),
        WignerD | WignerDFootnote | WignerELarge | WignerECut | WignerECutPrinted => {
            let mp = a.v("mp").abs().max(a.v("m").abs());
            (j - mp) * (j + mp + 1.0)
        }
        _ => j * (j + a.v("alpha") + a.v("beta") + 1.0),
    }
}

fn argument(f: FunctionId, a: &Args, point: &[(String, f64)]) -> Result<f64> {
    if let Some(x) = lookup(point, "x") {
        return Ok(x);
    }
    if let Some(t) = lookup(point, "theta") {
        return Ok(t.cos());
    }
    let n = natural_n(f, a);
    if let Some(z) = lookup(point, "z") {
        return Ok(1.0 - z * z / (2.0 * n));
    }
    if let Some(z) = lookup(point, "Z") {
        return Ok(1.0 + z * z / (2.0 * n));
    }
    Err(Error::InvalidGrid(format!("{f} needs one of x, theta, z, Z")))
}

fn integer_degree(j: f64) -> Result<usize> {
    if j >= 0.0 && j == j.floor() && j <= 200.0 {
        Ok(j as usize)
    } else {
        Err(Error::Domain(format!("this oracle needs an integer degree <= 200, got {j}")))
    }
}

/// Asymptotic value and oracle at one point.
pub fn evaluate(f: FunctionId, point: &[(String, f64)], level: TruncationLevel) -> Result<Approximant> {
    let a = Args::new(f, point)?;
    let x = argument(f, &a, point)?;
    let j = a.v("j");
    match f {
        LegendreP => legendre::legendre_p_asym(LegendreParams::new(j, a.v("mu"), x)?, level),
        LegendrePBesselIndex => legendre::legendre_p_bessel_index(LegendreParams::new(j, a.v("mu"), x)?, a.v("kmax") as usize),
        LegendrePMacdonald => legendre::legendre_p_macdonald(j, x, level),
        LegendreQ => legendre::legendre_q_asym(j, a.v("mu"), x, level),
        LegendreQCut => legendre::legendre_q_cut(j, x, level),
        JacobiP => jacobi::jacobi_p_asym(jp(&a, x)?, level),
        JacobiQNear => jacobi::jacobi_q_asym_near(jp(&a, x)?),
        JacobiQNearPrinted => jacobi::jacobi_q_asym_near_printed(jp(&a, x)?),
        JacobiQCut => jacobi::jacobi_q_cut(jp(&a, x)?),
        JacobiQCutPrinted => jacobi::jacobi_q_cut_printed(jp(&a, x)?),
        JacobiQFar => jacobi::jacobi_q_asym_far(jp(&a, x)?, level),
        JacobiQAlt => jacobi::jacobi_q_asym_alt(jp(&a, x)?, level),
        WignerD => rotation::wigner_d_asym(ri(&a)?, x, level),
        WignerDFootnote => rotation::wigner_d_asym_footnote(ri(&a)?, x, level),
        WignerELarge => rotation::wigner_e_asym_large(ri(&a)?, x, level),
        WignerECut => rotation::wigner_e_cut_asym(ri(&a)?, x),
        WignerECutPrinted => rotation::wigner_e_cut_asym_printed(ri(&a)?, x),
    }
}

pub fn reference(f: FunctionId, point: &[(String, f64)]) -> Result<f64> {
    let a = Args::new(f, point)?;
    let x = argument(f, &a, point)?;
    let j = a.v("j");
    Ok(match f {
        LegendreP | LegendrePBesselIndex => oracle::legendre_p_oracle(j, -a.v("mu"), x)?.value,
        LegendrePMacdonald => oracle::legendre_p_oracle(j, 0.0, x)?.value,
        LegendreQ => oracle::legendre_q_mu_oracle(j, a.v("mu"), x)?.value,
        LegendreQCut => oracle::legendre_q_oracle(integer_degree(j)?, x)?.value,
        JacobiP => oracle::jacobi_p_oracle(j, a.v("alpha"), a.v("beta"), x)?.value,
        JacobiQNear | JacobiQNearPrinted | JacobiQFar | JacobiQAlt => oracle::jacobi_q_oracle(j, a.v("alpha"), a.v("beta"), x)?.value,
        JacobiQCut | JacobiQCutPrinted => oracle::jacobi_q_cut_oracle(j, a.v("alpha"), a.v("beta"), x)?.value,
        WignerD | WignerDFootnote => rotation::wigner_d_exact_at(ri(&a)?, x)?,
        WignerELarge => rotation::wigner_e_exact_large(ri(&a)?, x)?,
        WignerECut | WignerECutPrinted => rotation::wigner_e_cut_exact(ri(&a)?, x)?,
    })
}

fn jp(a: &Args, x: f64) -> Result<JacobiParams> {
    JacobiParams::new(a.v("j"), a.v("alpha"), a.v("beta"), x)
}

fn ri(a: &Args) -> Result<RotationIndices> {
    RotationIndices::new(a.v("j"), a.v("mp"), a.v("m"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in FunctionId::ALL {
            assert_eq!(f.name().parse::<FunctionId>().unwrap(), f);
        }
        assert!("nope".parse::<FunctionId>().is_err());
    }

    #[test]
    fn fixed_z_argument() {
        let p = vec![("j".to_string(), 10.0), ("z".to_string(), 3.0)];
        let a = evaluate(LegendreP, &p, TruncationLevel::L2).unwrap();
        let o = reference(LegendreP, &p).unwrap();
        assert!((a.value - o).abs() < 1e-5);
        let missing = vec![("x".to_string(), 0.5)];
        assert!(matches!(evaluate(LegendreP, &missing, TruncationLevel::L0), Err(Error::InvalidGrid(_))));
    }
}
