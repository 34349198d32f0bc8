// Second-kind Legendre functions off and on the cut, including the
// closed-form degree-zero cases.

use bessel_asym::legendre::{legendre_q_asym, legendre_q_cut};
use bessel_asym::oracle::{legendre_q_mu_oracle, legendre_q_oracle};
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    for j in [10usize, 20, 40, 80] {
        let n = (j * (j + 1)) as f64;
        let x_off = 1.0 + 4.0 / (2.0 * n); // Z = 2
        let x_on = 1.0 - 4.0 / (2.0 * n); // z = 2
        let off = legendre_q_asym(j as f64, 0.0, x_off, TruncationLevel::L1)?.value;
        let on = legendre_q_cut(j as f64, x_on, TruncationLevel::L1)?.value;
        let (o_off, o_on) = (legendre_q_oracle(j, x_off)?.value, legendre_q_oracle(j, x_on)?.value);
        println!("j={j:>2}: Q off-cut rel err {:.2e}, on-cut rel err {:.2e}", ((off - o_off) / o_off).abs(), ((on - o_on) / o_on).abs());
    }
    let q0 = legendre_q_asym(0.0, 0.0, 3.0, TruncationLevel::L0)?.value;
    println!("Q_0(3) = {q0} (ln 2 / 2 = {})", 0.5 * 2f64.ln());
    println!("Q_0(0) on the cut = {}", legendre_q_cut(0.0, 0.0, TruncationLevel::L0)?.value);
    let q = legendre_q_asym(30.0, 0.4, 1.004, TruncationLevel::L0)?;
    let o = legendre_q_mu_oracle(30.0, 0.4, 1.004)?.value;
    println!("e^(-i pi mu) Q_30^0.4(1.004): asym {} (est {:.1e}), oracle {o}", q.value, q.err_estimate);
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
