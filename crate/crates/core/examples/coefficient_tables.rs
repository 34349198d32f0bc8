// Exact rational coefficient tables and their b=1 reduction.

use bessel_asym::coeffs::{jacobi_coeff_table_exact, Rational};
use bessel_asym::harness::tables::verify_tables;

pub fn run_example() -> bessel_asym::Result<()> {
    let r = verify_tables();
    print!("{r}");
    let b = Rational::new(3, 2);
    let t = jacobi_coeff_table_exact(b, 2);
    println!("order-1 entries at b=3/2:");
    for (k, c) in t.order(1) {
        println!("  k={k}: {c}");
    }
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
