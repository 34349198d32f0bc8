// Double-double arithmetic: cancellation an f64 sum cannot survive.

use bessel_asym::dd::Dd;

pub fn run_example() -> bessel_asym::Result<()> {
    let big = 1e16;
    let naive = (big + 1.0) - big;
    let dd = (Dd::from(big) + 1.0) - big;
    println!("(1e16 + 1) - 1e16: f64 {naive}, double-double {}", dd.to_f64());

    // e^x - 1 - x at small x, where f64 keeps no digits
    let x = 1e-9_f64;
    let f64_val = x.exp() - 1.0 - x;
    let dd_val = (Dd::from(x).exp() - 1.0 - x).to_f64();
    println!("exp(x)-1-x at x=1e-9: f64 {f64_val:e}, double-double {dd_val:e}, exact ~{:e}", x * x / 2.0);
    println!("Gamma(0.5)^2 = {:?} (pi = {:?})", Dd::from(0.5).gamma().sqr(), Dd::PI);
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
