//! `etastrip`: evaluate eta and the functional-equation factor on the critical
//! strip, scan the critical line for zeros, and run the identity checks.

mod literal;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use etastrip::eta::{self, StripPoint, DEFAULT_TOL};
use etastrip::funceq;
use etastrip::verify::{self, GridSpec, IdentityId, Kind, Thresholds, Verdict, DEFAULT_SEED};
use etastrip::zeros::{self, ScanConfig, DEFAULT_REFINE_TOL, DEFAULT_SERIES_TOL, DEFAULT_STEP};

use literal::{complex12, parse_complex, sig12};

#[derive(Parser)]
#[command(
    name = "etastrip",
    version,
    about = "Dirichlet eta on the critical strip: evaluation, zero scanning, identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Eta,
    Zeta,
    Phi,
    Polar,
    Omega,
    Breakdown,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Write output to FILE (atomically) instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity at a complex point.
    Eval {
        /// Point as a+bi, e.g. 0.5+14i.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value = "eta")]
        what: What,
        /// Absolute series tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Find zeros on the critical line with ordinates in [T_LO, T_HI].
    Scan {
        #[arg(allow_negative_numbers = true)]
        t_lo: f64,
        #[arg(allow_negative_numbers = true)]
        t_hi: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        #[arg(long, default_value_t = DEFAULT_REFINE_TOL)]
        refine_tol: f64,
        #[arg(long, default_value_t = DEFAULT_SERIES_TOL)]
        series_tol: f64,
        /// Worker threads; 0 uses the available parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check catalog identities over grids and report residuals.
    Verify {
        /// Comma-separated identity names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        identities: Vec<String>,
        #[arg(long, default_value_t = 500)]
        beta_points: usize,
        #[arg(long, default_value_t = 0.05)]
        beta_lo: f64,
        #[arg(long, default_value_t = 60.0)]
        beta_hi: f64,
        #[arg(long, default_value_t = 200)]
        strip_points: usize,
        /// Seed for the random strip points.
        #[arg(long, env = "ETASTRIP_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1e-11)]
        series_tol: f64,
        /// Worker threads; 0 uses the available parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// A named output field.
enum Cell {
    F(f64),
    U(usize),
    B(bool),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::F(x) => sig12(*x),
            Cell::U(n) => n.to_string(),
            Cell::B(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::F(x) => json!(x),
            Cell::U(n) => json!(n),
            Cell::B(b) => json!(b),
        }
    }
}

type Row = Vec<(&'static str, Cell)>;

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("creating temporary file in {}", dir.display()))?;
            tmp.write_all(text.as_bytes())?;
            tmp.flush()?;
            tmp.persist(path)
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(
        w.into_inner().map_err(|e| e.into_error())?,
    )?)
}

fn pretty(value: &impl serde::Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn series_row(v: eta::SeriesValue) -> Row {
    vec![
        ("re", Cell::F(v.value.re)),
        ("im", Cell::F(v.value.im)),
        ("error_bound", Cell::F(v.error_bound)),
        ("terms_used", Cell::U(v.terms_used)),
    ]
}

fn strip(s: Complex64) -> Result<StripPoint> {
    Ok(StripPoint::from_complex(s)?)
}

fn eval_row(s: Complex64, what: What, tol: f64) -> Result<Row> {
    Ok(match what {
        What::Eta => series_row(eta::eta(s, tol)?),
        What::Zeta => series_row(eta::zeta_from_eta(s, tol)?),
        What::Phi => {
            let v = funceq::phi(strip(s)?)?;
            vec![("re", Cell::F(v.re)), ("im", Cell::F(v.im))]
        }
        What::Polar => {
            let p = funceq::polar(strip(s)?)?;
            vec![
                ("modulus", Cell::F(p.modulus)),
                ("arg", Cell::F(p.arg.value())),
            ]
        }
        What::Omega => {
            let p = strip(s)?;
            let r = funceq::omega_residual(p, tol)?;
            let m = funceq::omega_membership(p, tol)?;
            vec![
                ("series_re", Cell::F(r.series.value.re)),
                ("series_im", Cell::F(r.series.value.im)),
                ("series_error_bound", Cell::F(r.series.error_bound)),
                ("closed_form_re", Cell::F(r.closed_form.re)),
                ("closed_form_im", Cell::F(r.closed_form.im)),
                ("closed_form_bound", Cell::F(r.closed_form_bound)),
                ("rho_squared", Cell::F(r.rho_squared)),
                ("r1", Cell::F(m.r1)),
                ("r2", Cell::F(m.r2)),
                ("member", Cell::B(m.member)),
            ]
        }
        What::Breakdown => {
            if s.re != 0.5 {
                bail!(
                    "breakdown is defined on the critical line; need Re s = 0.5, got {}",
                    s.re
                );
            }
            let b = funceq::arg_breakdown(s.im);
            vec![
                ("beta", Cell::F(b.beta)),
                ("prefactor_arg", Cell::F(b.prefactor_arg.value())),
                ("pi_power_arg", Cell::F(b.pi_power_arg)),
                ("ratio_arg", Cell::F(b.ratio_arg.value())),
                ("ratio_arg_arctan", Cell::F(b.ratio_arg_arctan)),
                ("hyperbolic_arg", Cell::F(b.hyperbolic_arg)),
                ("gamma_arg", Cell::F(b.gamma_arg)),
                ("half_ratio_phase", Cell::F(b.half_ratio_phase)),
                ("rs_theta", Cell::F(b.rs_theta)),
                ("total", Cell::F(b.total.value())),
                (
                    "positive_prefactor_total",
                    Cell::F(b.positive_prefactor_total.value()),
                ),
                ("doubled_offset", Cell::F(b.doubled_offset.value())),
            ]
        }
    })
}

fn what_name(what: What) -> &'static str {
    match what {
        What::Eta => "eta",
        What::Zeta => "zeta",
        What::Phi => "phi",
        What::Polar => "polar",
        What::Omega => "omega",
        What::Breakdown => "breakdown",
    }
}

fn cmd_eval(s: &str, what: What, tol: f64, output: &Output) -> Result<ExitCode> {
    let z = parse_complex(s).map_err(anyhow::Error::msg)?;
    let row = eval_row(z, what, tol)?;
    let text = match output.format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("s".into(), json!(s));
            m.insert("what".into(), json!(what_name(what)));
            m.insert("tol".into(), json!(tol));
            for (k, v) in &row {
                m.insert((*k).into(), v.json());
            }
            pretty(&Value::Object(m))?
        }
        Format::Csv => {
            let header: Vec<&str> = row.iter().map(|(k, _)| *k).collect();
            csv_text(&header, &[row.iter().map(|(_, v)| v.text()).collect()])?
        }
        Format::Human => {
            let mut out = format!("{}({})\n", what_name(what), complex12(z));
            for (k, v) in &row {
                out.push_str(&format!("  {k:<20} {}\n", v.text()));
            }
            out
        }
    };
    emit(&text, output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

const ZERO_COLUMNS: [&str; 9] = [
    "beta",
    "eta_abs",
    "omega_r1",
    "omega_r2",
    "theta",
    "theta_nonzero",
    "eq8_abs",
    "bracket_lo",
    "bracket_hi",
];

fn cmd_scan(config: ScanConfig, jobs: usize, output: &Output) -> Result<ExitCode> {
    config.validate()?;
    let records = zeros::find_zeros(&config, jobs)?;
    let summary = format!(
        "{} zero(s) in [{}, {}]",
        records.len(),
        config.t_lo,
        config.t_hi
    );
    let text = match output.format {
        Format::Json => pretty(&json!({
            "config": config,
            "count": records.len(),
            "zeros": records,
        }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        sig12(r.beta),
                        sig12(r.eta_abs),
                        sig12(r.omega_r1),
                        sig12(r.omega_r2),
                        sig12(r.theta.value()),
                        r.theta_nonzero.to_string(),
                        sig12(r.eq8_abs),
                        sig12(r.bracket.0),
                        sig12(r.bracket.1),
                    ]
                })
                .collect();
            csv_text(&ZERO_COLUMNS, &rows)?
        }
        Format::Human => {
            let mut out = format!(
                "{:>16} {:>18} {:>18} {:>18} {:>16} {:>8} {:>18}\n",
                "beta", "eta_abs", "omega_r1", "omega_r2", "theta", "nonzero", "eq8_abs"
            );
            for r in &records {
                out.push_str(&format!(
                    "{:>16} {:>18} {:>18} {:>18} {:>16} {:>8} {:>18}\n",
                    sig12(r.beta),
                    sig12(r.eta_abs),
                    sig12(r.omega_r1),
                    sig12(r.omega_r2),
                    sig12(r.theta.value()),
                    r.theta_nonzero,
                    sig12(r.eq8_abs)
                ));
            }
            out.push_str(&summary);
            out.push('\n');
            out
        }
    };
    emit(&text, output.out.as_deref())?;
    if output.format != Format::Human {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_identities(names: &[String]) -> Result<Vec<IdentityId>> {
    if names.iter().any(|n| n == "all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.trim().parse::<IdentityId>().map_err(anyhow::Error::from))
        .collect()
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Hard => "hard",
        Kind::ReportOnly => "report_only",
    }
}

fn cmd_verify(
    ids: &[IdentityId],
    spec: GridSpec,
    jobs: usize,
    output: &Output,
) -> Result<ExitCode> {
    let report = verify::run_selected(ids, &spec, &Thresholds::default(), jobs)?;
    let text = match output.format {
        Format::Json => pretty(&report)?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .results
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        kind_name(r.kind).to_string(),
                        serde_json::to_value(r.metric)
                            .ok()
                            .and_then(|v| v.as_str().map(str::to_string))
                            .unwrap_or_default(),
                        r.grid_size.to_string(),
                        sig12(r.max_residual),
                        sig12(r.threshold),
                        r.passed.to_string(),
                        r.failures.len().to_string(),
                    ]
                })
                .collect();
            csv_text(
                &[
                    "id",
                    "kind",
                    "metric",
                    "grid_size",
                    "max_residual",
                    "threshold",
                    "passed",
                    "failures",
                ],
                &rows,
            )?
        }
        Format::Human => {
            let mut out = format!(
                "{} {}  seed {}\n{:<16} {:<12} {:>18} {:>10} {:>9} {:>6}\n",
                report.tool,
                report.version,
                spec.seed,
                "identity",
                "kind",
                "max_residual",
                "threshold",
                "failures",
                "ok"
            );
            for r in &report.results {
                out.push_str(&format!(
                    "{:<16} {:<12} {:>18} {:>10.0e} {:>9} {:>6}\n",
                    r.id.to_string(),
                    kind_name(r.kind),
                    sig12(r.max_residual),
                    r.threshold,
                    r.failures.len(),
                    match (r.kind, r.passed) {
                        (Kind::ReportOnly, _) => "report",
                        (Kind::Hard, true) => "yes",
                        (Kind::Hard, false) => "no",
                    }
                ));
            }
            out.push_str("\nstated figures:\n");
            for f in &report.stated_figures {
                out.push_str(&format!(
                    "  {:<18} stated {:<14} computed {:<16} difference {}",
                    f.name,
                    f.stated,
                    sig12(f.computed),
                    sig12(f.discrepancy)
                ));
                if let Some(o) = f.oracle {
                    out.push_str(&format!("  (second route {})", sig12(o)));
                }
                out.push('\n');
            }
            if let Some(e) = &report.stated_figures_error {
                out.push_str(&format!("  error: {e}\n"));
            }
            let verdict = match report.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            };
            out.push_str(&format!("verdict: {verdict}\n"));
            out
        }
    };
    emit(&text, output.out.as_deref())?;
    Ok(match report.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eval {
            s,
            what,
            tol,
            output,
        } => cmd_eval(&s, what, tol, &output),
        Command::Scan {
            t_lo,
            t_hi,
            step,
            refine_tol,
            series_tol,
            jobs,
            output,
        } => cmd_scan(
            ScanConfig {
                t_lo,
                t_hi,
                step,
                refine_tol,
                series_tol,
            },
            jobs,
            &output,
        ),
        Command::Verify {
            identities,
            beta_points,
            beta_lo,
            beta_hi,
            strip_points,
            seed,
            series_tol,
            jobs,
            output,
        } => {
            let ids = parse_identities(&identities)?;
            let spec = GridSpec {
                beta_points,
                beta_lo,
                beta_hi,
                strip_points,
                seed,
                series_tol,
                ..GridSpec::default()
            };
            cmd_verify(&ids, spec, jobs, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("etastrip: {e:#}");
            ExitCode::from(2)
        }
    }
}
