// Fitted error orders: Legendre P at level 2 and the rotation function at
// level 1, both at a fixed Bessel argument.

use bessel_asym::harness::{fit_convergence, run_error_map, Abscissa, FunctionId, GridSpec};
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    let js = GridSpec::list("j", vec![10.0, 20.0, 40.0, 80.0])?;
    for z in [1.0, 3.0, 6.0] {
        let recs = run_error_map(FunctionId::LegendreP, &[js.clone(), GridSpec::single("z", z)], TruncationLevel::L2)?;
        let f = fit_convergence(&recs, &Abscissa::JJ1)?;
        println!("legendre_p level 2, z={z}: slope {:.3} in j(j+1), r2 {:.5}", f.slope, f.r2);
    }
    let grids = [js, GridSpec::single("mp", 2.0), GridSpec::single("m", 1.0), GridSpec::single("z", 3.0)];
    let recs = run_error_map(FunctionId::WignerD, &grids, TruncationLevel::L1)?;
    let f = fit_convergence(&recs, &"(j-mp)(j+mp+1)".parse()?)?;
    println!("wigner_d level 1, z=3: slope {:.3} in (j-m')(j+m'+1)", f.slope);
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
