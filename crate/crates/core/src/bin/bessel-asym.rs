use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use bessel_asym::harness::eikonal::{eikonal_demo, EikonalModel};
use bessel_asym::harness::macdonald::compare_macdonald;
use bessel_asym::harness::record::fmt_float as f;
use bessel_asym::harness::tables::verify_tables;
use bessel_asym::harness::{
    fit_convergence, oracle_gate, preset_number, run_criterion, run_error_map, write_records, Abscissa, Format, FunctionId,
    GridSpec, PRESETS,
};
use bessel_asym::{Error, TruncationLevel};

/// Asymptotic Bessel expansions checked against brute-force oracles.
#[derive(Parser)]
#[command(name = "bessel-asym", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    /// Run a named check instead of a subcommand.
    #[arg(long, global = true)]
    preset: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Clone)]
struct Output {
    /// Write to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    /// Omit the header comment with the version and a timestamp.
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    function: FunctionId,
    #[arg(long, default_value_t = 2)]
    level: u8,
    /// `name=min:max:count:lin|log`, `name=v1,v2,..` or `name=v`; repeatable.
    #[arg(long = "grid", required = true)]
    grids: Vec<GridSpec>,
}

#[derive(Subcommand)]
enum Command {
    /// One grid point per parameter, evaluated and compared with the oracle.
    Eval(MapArgs),
    /// Records over the product of the grids.
    ErrorMap(MapArgs),
    /// Log-log fit of the absolute error against an abscissa.
    Convergence {
        #[command(flatten)]
        map: MapArgs,
        /// `j(j+1)`, `(j-mp)(j+mp+1)`, `sin(theta/2)`, `1-x` or a parameter name.
        #[arg(long, default_value = "j(j+1)")]
        abscissa: String,
    },
    /// Level-0 errors of our expansion and MacDonald's at fixed degree.
    CompareMacdonald {
        #[arg(long, default_value_t = 50.0)]
        j: f64,
        #[arg(long, default_value_t = 0)]
        level: u8,
        #[arg(long, default_value = "theta=0.02:0.2:10:log")]
        grid: GridSpec,
    },
    /// Partial-wave sum against the eikonal integral for a Gaussian profile.
    EikonalDemo {
        #[arg(long, default_value_t = 10.0)]
        p: f64,
        #[arg(long, default_value_t = 1.0)]
        chi0: f64,
        /// Profile width B.
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long, default_value = "t=-2:0:21:lin")]
        grid: GridSpec,
        #[arg(long)]
        j_max: Option<usize>,
    },
    /// Exact comparison of the general coefficient table at b=1 with the Legendre one.
    VerifyTables,
    /// Run one named check, or `all`.
    Preset { name: Option<String> },
}

enum Failure {
    Oracle(String),
    Region(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OracleInconsistency { .. } => Failure::Oracle(e.to_string()),
            Error::Region(_) => Failure::Region(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn level(l: u8) -> Result<TruncationLevel, Failure> {
    Ok(TruncationLevel::new(l)?)
}

fn sink(o: &Output) -> io::Result<Box<dyn Write>> {
    Ok(match &o.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn meta(o: &Output, what: &str) -> Option<String> {
    (!o.no_meta).then(|| {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        format!("bessel-asym {} {what} unix_time={now}", env!("CARGO_PKG_VERSION"))
    })
}

fn gate() -> Result<(), Failure> {
    oracle_gate()?;
    Ok(())
}

fn error_map(m: &MapArgs, o: &Output, single: bool) -> Outcome {
    if single {
        if let Some(g) = m.grids.iter().find(|g| g.values.len() != 1) {
            return Err(Failure::Other(format!("eval takes one value per parameter; {} has {}", g.name, g.values.len())));
        }
    }
    gate()?;
    let recs = run_error_map(m.function, &m.grids, level(m.level)?)?;
    let mut w = sink(o)?;
    write_records(&mut w, &recs, o.format, meta(o, &format!("function={} level={}", m.function, m.level)).as_deref())?;
    w.flush()?;
    if single {
        if let Some(r) = recs.iter().find(|r| r.status.ends_with(":region")) {
            return Err(Failure::Region(format!("{} is outside the expansion region: {}", m.function, r.status)));
        }
    }
    Ok(true)
}

fn convergence(m: &MapArgs, abscissa: &str, o: &Output) -> Outcome {
    let ab: Abscissa = abscissa.parse()?;
    gate()?;
    let recs = run_error_map(m.function, &m.grids, level(m.level)?)?;
    let fit = fit_convergence(&recs, &ab)?;
    let mut w = sink(o)?;
    match o.format {
        Format::Csv => {
            if let Some(h) = meta(o, &format!("function={} level={}", m.function, m.level)) {
                writeln!(w, "# {h}")?;
            }
            writeln!(w, "function,level,abscissa,slope,intercept,r2,points")?;
            writeln!(w, "{},{},{abscissa},{},{},{},{}", m.function, m.level, f(fit.slope), f(fit.intercept), f(fit.r2), fit.points)?;
        }
        Format::Json => {
            let v = json!({"function": m.function.name(), "level": m.level, "abscissa": abscissa, "fit": fit});
            writeln!(w, "{v}")?;
        }
    }
    w.flush()?;
    Ok(true)
}

fn macdonald(j: f64, l: u8, grid: &GridSpec, o: &Output) -> Outcome {
    gate()?;
    let r = compare_macdonald(j, &grid.values, level(l)?)?;
    let mut w = sink(o)?;
    match o.format {
        Format::Csv => {
            if let Some(h) = meta(o, &format!("compare-macdonald j={j} level={l}")) {
                writeln!(w, "# {h}")?;
            }
            writeln!(w, "# ours slope={} r2={}; macdonald slope={} r2={}; gain={}", r.ours.slope, r.ours.r2, r.macdonald.slope, r.macdonald.r2, r.slope_gain())?;
            writeln!(w, "theta,oracle,ours_err,macdonald_err")?;
            for row in &r.rows {
                writeln!(w, "{},{},{},{}", f(row.theta), f(row.oracle), f(row.ours_err), f(row.macdonald_err))?;
            }
        }
        Format::Json => writeln!(w, "{}", serde_json::to_string(&r).map_err(|e| Failure::Other(e.to_string()))?)?,
    }
    w.flush()?;
    Ok(true)
}

fn eikonal(model: EikonalModel, grid: &GridSpec, j_max: Option<usize>, o: &Output) -> Outcome {
    let r = eikonal_demo(model, &grid.values, j_max)?;
    let mut w = sink(o)?;
    match o.format {
        Format::Csv => {
            if let Some(h) = meta(o, &format!("eikonal-demo p={} chi0={} width={}", model.p, model.chi0, model.width)) {
                writeln!(w, "# {h}")?;
            }
            writeln!(w, "# j_max={} sigma_tot={}", r.j_max, r.sigma_tot().unwrap_or(f64::NAN))?;
            writeln!(w, "t,partial_wave_re,partial_wave_im,eikonal_re,eikonal_im,rel_diff")?;
            for row in &r.rows {
                let (a, b) = (row.partial_wave, row.eikonal);
                writeln!(w, "{},{},{},{},{},{}", f(row.t), f(a.re), f(a.im), f(b.re), f(b.im), f(row.rel_diff))?;
            }
        }
        Format::Json => writeln!(w, "{}", serde_json::to_string(&r).map_err(|e| Failure::Other(e.to_string()))?)?,
    }
    w.flush()?;
    Ok(true)
}

fn tables(o: &Output) -> Outcome {
    let r = verify_tables();
    let mut w = sink(o)?;
    match o.format {
        Format::Csv => write!(w, "{r}")?,
        Format::Json => writeln!(w, "{}", json!({"pass": r.pass, "report": r.to_string()}))?,
    }
    w.flush()?;
    Ok(r.pass)
}

fn preset(name: &str, o: &Output) -> Outcome {
    let numbers: Vec<u8> = if name == "all" {
        PRESETS.iter().map(|p| p.0).collect()
    } else {
        vec![preset_number(name)?]
    };
    let mut w = sink(o)?;
    let mut all = true;
    let mut inconsistent = None;
    for n in numbers {
        let r = run_criterion(n)?;
        all &= r.pass;
        if r.oracle_inconsistency {
            inconsistent.get_or_insert_with(|| r.summary.clone());
        }
        match o.format {
            Format::Csv => {
                writeln!(w, "{} criterion {} ({}): {} [{:.2}s]", if r.pass { "PASS" } else { "FAIL" }, r.number, r.name, r.summary, r.seconds)?;
                for d in &r.details {
                    writeln!(w, "    {d}")?;
                }
            }
            Format::Json => writeln!(w, "{}", serde_json::to_string(&r).map_err(|e| Failure::Other(e.to_string()))?)?,
        }
    }
    w.flush()?;
    match inconsistent {
        Some(s) => Err(Failure::Oracle(s)),
        None => Ok(all),
    }
}

fn run(cli: &Cli) -> Outcome {
    let o = &cli.output;
    match (&cli.command, &cli.preset) {
        (Some(Command::Preset { name }), flag) => match name.as_ref().or(flag.as_ref()) {
            Some(n) => preset(n, o),
            None => {
                for (n, name, budget) in PRESETS {
                    println!("{n:>2} {name} (budget {budget} s)");
                }
                Ok(true)
            }
        },
        (_, Some(p)) => preset(p, o),
        (Some(Command::Eval(m)), None) => error_map(m, o, true),
        (Some(Command::ErrorMap(m)), None) => error_map(m, o, false),
        (Some(Command::Convergence { map, abscissa }), None) => convergence(map, abscissa, o),
        (Some(Command::CompareMacdonald { j, level, grid }), None) => macdonald(*j, *level, grid, o),
        (Some(Command::EikonalDemo { p, chi0, width, grid, j_max }), None) => eikonal(EikonalModel::new(*p, *chi0, *width)?, grid, *j_max, o),
        (Some(Command::VerifyTables), None) => tables(o),
        (None, None) => Err(Failure::Other("no subcommand given; see --help".into())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Oracle(e)) => {
            eprintln!("oracle inconsistency: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Region(e)) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
