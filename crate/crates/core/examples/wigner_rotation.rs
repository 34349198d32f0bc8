// Wigner rotation functions: exact values, the asymptotic form and the
// second-kind companion above the cut.

use bessel_asym::rotation::{
    wigner_d_asym, wigner_d_asym_footnote, wigner_d_exact, wigner_e_asym_large, wigner_e_exact_large, RotationIndices,
};
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    let idx = RotationIndices::new(20.0, 2.0, 1.0)?;
    for theta in [0.05, 0.1, 0.2] {
        let exact = wigner_d_exact(idx, theta)?;
        let a = wigner_d_asym(idx, theta.cos(), TruncationLevel::L1)?.value;
        let f = wigner_d_asym_footnote(idx, theta.cos(), TruncationLevel::L1)?.value;
        println!("d^20_(2,1)({theta}): exact {exact:.12}, asym err {:.1e}, footnote-argument err {:.1e}", (a - exact).abs(), (f - exact).abs());
    }
    // half-integer indices are canonicalized with the symmetry phase
    let half = RotationIndices::new(12.5, -0.5, 1.5)?;
    println!("d^12.5_(-0.5,1.5)(0.3) = {:.15}", wigner_d_exact(half, 0.3)?);

    let e_idx = RotationIndices::new(10.0, 1.0, 0.0)?;
    let x = 4.0;
    println!(
        "e^10_(1,0)(4): asym {:e}, exact {:e}",
        wigner_e_asym_large(e_idx, x, TruncationLevel::L2)?.value,
        wigner_e_exact_large(e_idx, x)?
    );
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
