//! Grid evaluation against the oracles, convergence fits and the named checks.

pub mod criteria;
pub mod eikonal;
pub mod fit;
pub mod functions;
pub mod grid;
pub mod hypermatch;
pub mod macdonald;
pub mod record;
pub mod selfcheck;
pub mod tables;

pub use criteria::{preset_number, run_criterion, CriterionReport, PRESETS};
pub use fit::{fit_convergence, fit_loglog, Abscissa, Fit};
pub use functions::{evaluate, reference, FunctionId};
pub use grid::{points, GridSpec, Point};
pub use record::{run_error_map, write_records, ErrorRecord, Format};
pub use selfcheck::{oracle_gate, oracle_self_checks, DualPath};
