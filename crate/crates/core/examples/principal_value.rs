// The on-cut second kind Jacobi function as a principal-value integral,
// checked against the boundary-value formula.

use bessel_asym::oracle::jacobi::{jacobi_q_cut_formula, jacobi_q_cut_pv};
use bessel_asym::oracle::rel_diff;

pub fn run_example() -> bessel_asym::Result<()> {
    for (n, a, b, x) in [(5usize, 0.0, 0.0, 0.98), (11, 0.5, 0.5, f64::cos(0.1)), (7, 0.4, 0.3, 0.95)] {
        let pv = jacobi_q_cut_pv(n, a, b, x)?;
        let formula = jacobi_q_cut_formula(n as f64, a, b, x)?.value;
        println!(
            "Q^({a},{b})_{n}({x:.4}): PV {:.15e} (doubling change {:.1e}), formula {formula:.15e}, rel diff {:.1e}",
            pv.value,
            pv.doubled_delta,
            rel_diff(pv.value, formula)
        );
    }
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
