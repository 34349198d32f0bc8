// Every oracle with two evaluation paths, compared at fixed points.

use bessel_asym::harness::oracle_self_checks;

pub fn run_example() -> bessel_asym::Result<()> {
    let checks = oracle_self_checks();
    for c in &checks {
        println!("{} {}: {:e}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.rel_diff);
    }
    let bad = checks.iter().filter(|c| !c.pass).count();
    println!("{} of {} dual paths agree", checks.len() - bad, checks.len());
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
