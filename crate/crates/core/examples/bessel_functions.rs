// Real-order Bessel functions and the gamma family at a few points.

use bessel_asym::special::{bessel_i, bessel_j, bessel_k, bessel_y, digamma, gamma, log_gamma};

pub fn run_example() -> bessel_asym::Result<()> {
    println!("{:>6} {:>6} {:>22} {:>22} {:>22} {:>22}", "nu", "x", "J", "Y", "I", "K");
    for (nu, x) in [(0.0, 1.0), (0.5, 2.0), (2.0, 0.1), (7.25, 30.0), (40.0, 12.0)] {
        println!(
            "{nu:>6} {x:>6} {:>22.15e} {:>22.15e} {:>22.15e} {:>22.15e}",
            bessel_j(nu, x)?,
            bessel_y(nu, x)?,
            bessel_i(nu, x)?,
            bessel_k(nu, x)?
        );
    }
    // Wronskian J_{nu+1} Y_nu - J_nu Y_{nu+1} = 2/(pi x)
    let (nu, x) = (3.3, 8.0);
    let w = bessel_j(nu + 1.0, x)? * bessel_y(nu, x)? - bessel_j(nu, x)? * bessel_y(nu + 1.0, x)?;
    println!("Wronskian residual at nu={nu}, x={x}: {:e}", w - 2.0 / (std::f64::consts::PI * x));
    println!("gamma(4.5) = {}, ln gamma(100) = {}, digamma(1) = {}", gamma(4.5), log_gamma(100.0), digamma(1.0));
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
