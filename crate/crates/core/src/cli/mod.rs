//! The `summa` command-line front end.
//!
//! Exit codes: 0 when everything ran and every check passed, 1 when a check
//! failed, 2 on usage, configuration or hypothesis errors.

pub mod commands;
pub mod config;
pub mod table;

use crate::error::{Error, Result};
use crate::identities::{run_entries, suite_json, verify, catalog, CheckReport, Overrides};
use clap::{Args, Parser, Subcommand};
use commands::{EvalTarget, parse_complex};
use config::{CliConfig, OutputFormat, PrecisionMode};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use table::Table;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "summa", version, about = "Numerical checks of summation formulas of Poisson, Müntz and Voronoi type")]
pub struct Cli {
    /// Configuration file (default: $SUMMA_CONFIG, then ./summa.conf).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format: text, csv or json.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// standard (10 digits) or extended (17 digits) in text and CSV output.
    #[arg(long, global = true)]
    pub precision: Option<String>,
    /// Write the main output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate an arithmetic function as n,value CSV.
    Sieve {
        #[arg(long)]
        max: usize,
        /// mu, lambda, phi, d, dk:K, omega or a.
        #[arg(long)]
        function: String,
        #[arg(long)]
        header: bool,
        /// Largest table allowed (overrides term_cap).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Evaluate a special function.
    Eval {
        target: EvalTarget,
        /// Argument; complex values as 0.5+14i. Repeatable or comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        arg: Vec<String>,
        /// Highest Stieltjes constant.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Apply an operator to a test function.
    Op {
        /// theta, theta-hat, lambda, phi, a, dk:K, muntz, muntz:K, voronoi or gen-voronoi:K.
        name: String,
        #[arg(long, default_value = "exp")]
        function: String,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
        /// Evaluate the Müntz operator on the Mellin line Re s = SIGMA.
        #[arg(long)]
        contour: Option<f64>,
        /// Truncation height of the line integral (overrides contour_height).
        #[arg(long)]
        height: Option<f64>,
    },
    /// Check one identity.
    Verify {
        id: String,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_delimiter = ',')]
        x: Vec<f64>,
        /// Points s, complex values as 3+1i.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        k: Vec<u32>,
        /// Absolute tolerance replacing the entry's own.
        #[arg(long)]
        tol: Option<f64>,
        /// Test function replacing the entry's default.
        #[arg(long)]
        function: Option<String>,
    },
    /// Check every identity whose id matches a glob.
    Suite {
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List identity ids with their descriptions.
    List,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Also write the JSON report to PATH ('-' for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Record wall-clock timestamps in the JSON report.
    #[arg(long)]
    pub timestamps: bool,
}

/// Config from file, then global flags on top.
fn settle_config(cli: &Cli) -> Result<CliConfig> {
    let mut c = CliConfig::discover(cli.config.as_deref())?;
    if let Some(f) = &cli.format {
        c.format = f.parse()?;
    }
    if let Some(p) = &cli.precision {
        c.precision = p.parse::<PrecisionMode>()?;
    }
    if let Some(o) = &cli.out {
        c.output = Some(o.clone());
    }
    c.validate()?;
    Ok(c)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

struct Output {
    text: String,
    code: i32,
}

fn report_table(reports: &[CheckReport]) -> Table {
    let mut t = Table::new(vec!["id", "point", "residual", "error_estimate", "tolerance", "status"]);
    for r in reports {
        if r.samples.is_empty() {
            let why = r.notes.last().cloned().unwrap_or_default();
            t.push(vec![r.id.clone().into(), "-".into(), f64::NAN.into(), f64::NAN.into(), f64::NAN.into(), format!("FAIL ({why})").into()]);
        }
        for s in &r.samples {
            let mut point = Vec::new();
            if let Some(x) = s.point.x {
                point.push(format!("x={x}"));
            }
            if let Some(z) = s.point.s {
                point.push(format!("s={}", commands::format_complex(z)));
            }
            if let Some(k) = s.point.k {
                point.push(format!("k={k}"));
            }
            let status = if s.passed() { "pass" } else { "FAIL" };
            t.push(vec![
                r.id.clone().into(),
                point.join(" ").into(),
                s.residual.into(),
                (s.lhs_bound + s.rhs_bound).into(),
                s.tolerance.into(),
                status.into(),
            ]);
        }
    }
    t
}

fn checks(reports: Vec<CheckReport>, run: &RunArgs, c: &CliConfig) -> Result<Output> {
    let code = if reports.iter().all(|r| r.passed) { EXIT_PASS } else { EXIT_FAIL };
    let json = suite_json(&reports);
    let to_stdout = run.json.as_deref() == Some(Path::new("-"));
    if let Some(p) = run.json.as_deref().filter(|_| !to_stdout) {
        write_file(p, &json)?;
    }
    let text = if to_stdout || c.format == OutputFormat::Json {
        json
    } else {
        let mut s = report_table(&reports).render(c.format, c.digits());
        if c.format == OutputFormat::Text {
            let passed = reports.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{passed}/{} identities passed\n", reports.len()));
            for r in reports.iter().filter(|r| !r.notes.is_empty()) {
                for n in &r.notes {
                    s.push_str(&format!("note {}: {n}\n", r.id));
                }
            }
        }
        s
    };
    Ok(Output { text, code })
}

fn execute(cli: &Cli, c: &CliConfig) -> Result<Output> {
    let table = |t: Table| Output { text: t.render(c.format, c.digits()), code: EXIT_PASS };
    let override_tol = |tol: Option<f64>| tol.or(c.tol_abs);
    match &cli.command {
        Command::Sieve { max, function, header, cap } => {
            let text = commands::sieve_csv(*max, function, *header, cap.unwrap_or(c.term_cap))?;
            Ok(Output { text, code: EXIT_PASS })
        }
        Command::Eval { target, arg, order } => Ok(table(commands::eval_table(*target, arg, *order)?)),
        Command::Op { name, function, x, contour, height } => {
            Ok(table(commands::operator_table(name, function, x, *contour, height.unwrap_or(c.contour_height))?))
        }
        Command::Verify { id, run, x, s, k, tol, function } => {
            let o = Overrides {
                x: (!x.is_empty()).then(|| x.clone()),
                s: if s.is_empty() { None } else { Some(s.iter().map(|v| parse_complex(v)).collect::<Result<_>>()?) },
                k: (!k.is_empty()).then(|| k.clone()),
                tol: override_tol(*tol),
                function: function.clone(),
                timestamps: run.timestamps,
            };
            if o.tol.is_some_and(|t| !(t > 0.0)) {
                return Err(Error::Config("--tol must be positive".into()));
            }
            checks(vec![verify(id, &o)?], run, c)
        }
        Command::Suite { filter, run } => {
            let mut entries = catalog();
            if let Some(t) = c.tol_abs {
                for e in &mut entries {
                    e.tolerance = crate::identities::Tolerance::new(t, c.tol_rel);
                }
            }
            checks(run_entries(&entries, filter.as_deref(), run.timestamps), run, c)
        }
        Command::List => {
            let mut t = Table::new(vec!["id", "description"]);
            let mut entries = catalog();
            entries.sort_by_key(|e| e.id);
            for e in entries {
                t.push(vec![e.id.into(), e.description.into()]);
            }
            Ok(table(t))
        }
    }
}

/// Run `summa` with `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = settle_config(&cli).and_then(|c| {
        let out = execute(&cli, &c)?;
        match &c.output {
            Some(p) => write_file(p, &out.text)?,
            None => {
                let _ = stdout.write_all(out.text.as_bytes());
            }
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "summa: {e}");
            EXIT_USAGE
        }
    }
}
