// The Gauss hypergeometric oracle and its Euler-transform cross-check.

use bessel_asym::oracle::hyp::{hyp2f1, hyp2f1_euler};
use bessel_asym::oracle::rel_diff;

pub fn run_example() -> bessel_asym::Result<()> {
    for (a, b, c, w) in [(0.3, 1.7, 2.4, 0.6), (-0.4, 2.2, 1.3, -0.7), (1.0, 1.0, 2.0, 0.5)] {
        let direct = hyp2f1(a, b, c, w)?;
        let euler = hyp2f1_euler(a, b, c, w)?;
        println!(
            "2F1({a}, {b}; {c}; {w}) = {:.17} (Euler {:.17}, rel diff {:e}, digits lost {:.1})",
            direct.value,
            euler.value,
            rel_diff(direct.value, euler.value),
            direct.precision_loss
        );
    }
    // 2F1(1,1;2;w) = -ln(1-w)/w
    println!("closed form -ln(1-w)/w at w=0.5: {:.17}", -(0.5f64).ln() / 0.5);
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
