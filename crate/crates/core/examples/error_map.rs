// An error map over a degree grid at fixed Bessel argument, written as CSV.

use bessel_asym::harness::{run_error_map, write_records, Format, FunctionId, GridSpec};
use bessel_asym::TruncationLevel;

pub fn run_example() -> bessel_asym::Result<()> {
    let grids: Vec<GridSpec> = ["j=10:80:4:log", "z=1,3"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let recs = run_error_map(FunctionId::LegendreP, &grids, TruncationLevel::L2)?;
    let mut out = std::io::stdout().lock();
    write_records(&mut out, &recs, Format::Csv, None).map_err(|e| bessel_asym::Error::Domain(e.to_string()))?;
    Ok(())
}

fn main() -> bessel_asym::Result<()> {
    run_example()
}
