// Jacobi functions in every supported regime, with the dispatcher tag.

use bessel_asym::jacobi::{jacobi_p_asym, jacobi_q_asym, jacobi_q_asym_alt, jacobi_q_asym_far, JacobiParams};
use bessel_asym::oracle::{jacobi_p_oracle, jacobi_q_cut_oracle, jacobi_q_oracle};
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    let (j, a, b) = (24.0, 0.5, 0.5);
    let p = JacobiParams::new(j, a, b, f64::cos(0.1))?;
    let first = jacobi_p_asym(p, TruncationLevel::L2)?;
    println!("P^(.5,.5)_24(cos .1): asym {} oracle {}", first.value, jacobi_p_oracle(j, a, b, p.x)?.value);

    for x in [f64::cos(0.1), 1.0 + 2.0 / (j * (j + 2.0)), 6.0] {
        let p = JacobiParams::new(j, a, b, x)?;
        let q = jacobi_q_asym(p, TruncationLevel::L2)?;
        let exact = if x < 1.0 { jacobi_q_cut_oracle(j, a, b, x)? } else { jacobi_q_oracle(j, a, b, x)? };
        println!(
            "Q at x={x:.6} [{:?}]: asym {:.12e} (est {:.1e}), oracle {:.12e}",
            p.regime(),
            q.value,
            q.err_estimate,
            exact.value
        );
    }
    // two large-x representations of the same function
    let p = JacobiParams::new(8.0, 0.25, 0.25, 6.0)?;
    let far = jacobi_q_asym_far(p, TruncationLevel::L2)?;
    let alt = jacobi_q_asym_alt(p, TruncationLevel::L2)?;
    println!("far {:e} +- {:.1e}, alt {:e} +- {:.1e}", far.value, far.err_estimate, alt.value, alt.err_estimate);
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
