//! One PASS/FAIL line per acceptance criterion. Exit status 2 when an oracle
//! disagrees with itself, 1 when any criterion fails.

use std::process::ExitCode;

use bessel_asym::harness::{oracle_gate, run_criterion, PRESETS};

fn main() -> ExitCode {
    let verbose = std::env::args().any(|a| a == "--verbose" || a == "-v");
    if let Err(e) = oracle_gate() {
        println!("FAIL criterion 10 (oracle-gate): {e}");
        println!("aborting: oracles must agree before any criterion consumes them");
        return ExitCode::from(2);
    }
    let mut failed = 0;
    let mut inconsistent = false;
    for (n, _, _) in PRESETS {
        let r = match run_criterion(n) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL criterion {n}: {e}");
                failed += 1;
                continue;
            }
        };
        println!("{} criterion {} ({}): {} [{:.2}s]", if r.pass { "PASS" } else { "FAIL" }, r.number, r.name, r.summary, r.seconds);
        if verbose {
            for d in &r.details {
                println!("    {d}");
            }
        }
        failed += usize::from(!r.pass);
        inconsistent |= r.oracle_inconsistency;
    }
    println!("{} of {} criteria pass", PRESETS.len() - failed, PRESETS.len());
    if inconsistent {
        ExitCode::from(2)
    } else if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
