use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use umbilic::scan::{run, write_csv, write_json, Format, Mode, RunConfig};
use umbilic::scenarios::{catalog, SPACETIME_NAMES, SURFACE_NAMES};

#[derive(Parser, Debug)]
#[command(
    name = "umbilic-scan",
    version,
    about = "Umbilical-type classification of spacelike surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample a surface on a grid and classify or verify every point.
    Analyze(AnalyzeArgs),
}

#[derive(clap::Args, Debug)]
struct AnalyzeArgs {
    /// Spacetime token, e.g. `schwarzschild:M=1`.
    #[arg(long, default_value = "minkowski")]
    spacetime: String,
    /// Surface token, e.g. `sphere:r=2,t0=0`.
    #[arg(long, default_value = "sphere")]
    surface: String,
    /// Cell counts `NxM` along u and v.
    #[arg(long, default_value = "16x16", value_parser = parse_grid)]
    grid: (usize, usize),
    /// Restrict u to `lo,hi`.
    #[arg(long, value_parser = parse_range)]
    u_range: Option<[f64; 2]>,
    /// Restrict v to `lo,hi`.
    #[arg(long, value_parser = parse_range)]
    v_range: Option<[f64; 2]>,
    #[arg(long, default_value = "classify")]
    mode: Mode,
    /// Constant boost applied to the canonical null frame.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    gauge: f64,
    #[arg(long)]
    tol_cls: Option<f64>,
    #[arg(long)]
    tol_ver: Option<f64>,
    /// Differentiate metric and immersion numerically with this step.
    #[arg(long)]
    fd_step: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the catalog and exit.
    #[arg(long)]
    list_catalog: bool,
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("grid `{s}` is not of the form NxM"))?;
    let n = a.trim().parse().map_err(|_| format!("bad grid count `{a}`"))?;
    let m = b.trim().parse().map_err(|_| format!("bad grid count `{b}`"))?;
    Ok((n, m))
}

fn parse_range(s: &str) -> Result<[f64; 2], String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("range `{s}` is not of the form lo,hi"))?;
    let lo = a.trim().parse().map_err(|_| format!("bad range bound `{a}`"))?;
    let hi = b.trim().parse().map_err(|_| format!("bad range bound `{b}`"))?;
    Ok([lo, hi])
}

fn list_catalog(out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "spacetimes:")?;
    for s in SPACETIME_NAMES {
        writeln!(out, "  {s}")?;
    }
    writeln!(out, "surfaces:")?;
    for s in SURFACE_NAMES {
        writeln!(out, "  {s}")?;
    }
    writeln!(out, "fixtures:")?;
    for entry in catalog() {
        for f in &entry.surfaces {
            writeln!(
                out,
                "  --spacetime {} --surface {}  # {}",
                entry.name, f.token, f.expectation.provenance
            )?;
        }
    }
    Ok(())
}

fn analyze(args: AnalyzeArgs) -> ExitCode {
    if args.list_catalog {
        return match list_catalog(&mut io::stdout().lock()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let config = RunConfig {
        spacetime: args.spacetime,
        surface: args.surface,
        grid: args.grid,
        u_range: args.u_range,
        v_range: args.v_range,
        gauge: args.gauge,
        tol_cls: args.tol_cls,
        tol_ver: args.tol_ver,
        fd_step: args.fd_step,
        mode: args.mode,
        format: args.format,
        seed: args.seed,
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &args.out {
        Some(path) => File::create(path).and_then(|f| emit(&report, config.format, BufWriter::new(f))),
        None => emit(&report, config.format, io::stdout().lock()),
    };
    if let Some(e) = written.err().filter(|e| e.kind() != io::ErrorKind::BrokenPipe) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    let s = &report.summary;
    eprintln!(
        "{} points, {} failing; fixture: {}",
        s.points,
        report.rows.iter().filter(|r| !r.failures.is_empty()).count(),
        s.fixture.as_deref().unwrap_or("none")
    );
    ExitCode::from(report.exit_code() as u8)
}

fn emit(report: &umbilic::scan::GridReport, format: Format, mut w: impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            write_json(report, &mut w)?;
            writeln!(w)?;
        }
        Format::Csv => write_csv(report, &mut w)?,
    }
    w.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Analyze(args) => analyze(args),
    }
}
