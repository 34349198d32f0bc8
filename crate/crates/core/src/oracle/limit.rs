//! Symmetric epsilon limit at removable singularities in an order parameter.

use crate::dd::Dd;
use crate::error::{Error, Result};

pub const EPSILONS: [f64; 3] = [1e-3, 5e-4, 2.5e-4];

/// Limit of `f` at `a` from `(f(a+e) + f(a-e))/2` at the three `EPSILONS`,
/// Richardson-extrapolated twice in `e^2`. Returns the value and the size of
/// the last extrapolation step.
pub fn symmetric_limit(f: impl Fn(Dd) -> Result<Dd>, a: f64) -> Result<(Dd, f64)> {
    let ad = Dd::from(a);
    let g = |e: f64| -> Result<Dd> { Ok((f(ad + e)? + f(ad - e)?).scale2(-1)) };
    let [e0, e1, e2] = EPSILONS;
    let (g0, g1, g2) = (g(e0)?, g(e1)?, g(e2)?);
    let r0 = (g1 * 4.0 - g0) / 3.0;
    let r1 = (g2 * 4.0 - g1) / 3.0;
    let r = (r1 * 16.0 - r0) / 15.0;
    let step = (r - r1).abs().to_f64();
    if !r.is_finite() {
        return Err(Error::NonConvergence(format!("epsilon limit at {a} is not finite")));
    }
    Ok((r, step))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_limit() {
        // sin(pi a)/(pi a) at a=0, but from a shifted removable form
        let f = |a: Dd| Ok((a * Dd::PI).sin() / (a * Dd::PI));
        let (v, step) = symmetric_limit(f, 0.0).unwrap();
        assert!((v - 1.0).abs().to_f64() < 1e-15);
        assert!(step < 1e-12);
    }
}
