// Partial-wave sum against the impact-parameter integral for a Gaussian
// eikonal profile.

use bessel_asym::harness::eikonal::{eikonal_demo, EikonalModel};

pub fn run_example() -> bessel_asym::Result<()> {
    let model = EikonalModel::new(10.0, 1.0, 1.0)?;
    let ts: Vec<f64> = (0..=4).map(|i| -2.0 + 0.5 * i as f64).collect();
    let r = eikonal_demo(model, &ts, None)?;
    println!("j_max = {}, sigma_tot = {:.6}", r.j_max, r.sigma_tot().unwrap_or(f64::NAN));
    for row in &r.rows {
        println!("t={:>5}: partial waves {:.6}, eikonal {:.6}, rel diff {:.2e}", row.t, row.partial_wave, row.eikonal, row.rel_diff);
    }
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
