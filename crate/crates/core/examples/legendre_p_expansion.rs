// Legendre P at large degree: truncation levels against the oracle and
// MacDonald's classical series.

use bessel_asym::legendre::{legendre_p_asym, legendre_p_macdonald, LegendreParams};
use bessel_asym::oracle::legendre_p_oracle;
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    let (j, theta) = (40.0, 0.15);
    let x = f64::cos(theta);
    let exact = legendre_p_oracle(j, 0.0, x)?.value;
    println!("P_{j}(cos {theta}) = {exact:.16}");
    for l in 0..=2 {
        let level = TruncationLevel::new(l)?;
        let a = legendre_p_asym(LegendreParams::new(j, 0.0, x)?, level)?;
        let m = legendre_p_macdonald(j, x, TruncationLevel::new(l.min(1))?)?;
        println!(
            "level {l}: ours {:.16} err {:.2e} (est {:.2e});  MacDonald level {} err {:.2e}",
            a.value,
            (a.value - exact).abs(),
            a.err_estimate,
            l.min(1),
            (m.value - exact).abs()
        );
    }
    // order mu and the continuation above the cut
    let p = LegendreParams::new(25.5, 0.4, 1.002)?;
    let a = legendre_p_asym(p, TruncationLevel::L2)?;
    let o = legendre_p_oracle(p.j, -p.mu, p.x)?.value;
    println!("P_25.5^-0.4(1.002): asym {} oracle {o} rel err {:.1e}", a.value, ((a.value - o) / o).abs());
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
