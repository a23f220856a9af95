//! Command-line front end: `cayley`, `verify`, `derivation-table` and
//! `series-check`.
//!
//! Exit codes: 0 when every check passes, 1 when at least one fails, 2 for
//! usage or configuration errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::cayley::{cayley, CayleySource};
use crate::derivation::make_derivation;
use crate::families::{verify_derivative_expansion, verify_genfun};
use crate::identities::{verify, IdentityId, IdentityReport};
use crate::Kind;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping every `n` (and series order).
pub const MAX_N_VAR: &str = "CHEB_MAX_N";
pub const DEFAULT_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    First,
    Second,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::First => Kind::First,
            KindArg::Second => Kind::Second,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Method {
    #[default]
    Closed,
    Dixmier,
}

#[derive(Debug, Parser)]
#[command(
    name = "chebder",
    version,
    about = "Chebyshev derivations, Cayley elements and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Print the Cayley element C_T(x0..xn) or C_U(x0..xn).
    Cayley {
        #[arg(long, value_enum, default_value = "first")]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check identities over a range of n.
    Verify {
        /// t-i, t-ii, t-iii, u-i, u-ii, u-iii, hg-t, hg-u or all
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 1)]
        n_from: usize,
        #[arg(long, default_value_t = 12)]
        n_to: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Images D(x_m) for m = 0..n.
    DerivationTable {
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Only one kind (default: both columns).
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generating-function and derivative-expansion checks.
    SeriesCheck {
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Cayley,
    Verify,
    DerivationTable,
    SeriesCheck,
}

/// Validated settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` means both kinds where that makes sense.
    pub kind: Option<Kind>,
    pub n: usize,
    pub n_from: usize,
    pub n_to: usize,
    pub identities: Vec<IdentityId>,
    pub format: Format,
    pub method: Method,
    pub output_path: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(crate::Error),
    Io(io::Error),
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(e) => write!(f, "error: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Reads the `CHEB_MAX_N` cap.
pub fn max_n_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_N_VAR} must be a natural number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn parse_identities(s: &str) -> Result<Vec<IdentityId>, CliError> {
    if s == "all" {
        return Ok(IdentityId::ALL.to_vec());
    }
    let mut ids = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<IdentityId>()
                .map_err(|e| usage(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

impl RunConfig {
    fn from_cli(cli: Cli, max_n: usize) -> Result<Self, CliError> {
        let mut cfg = RunConfig {
            command: Command::Cayley,
            kind: None,
            n: 0,
            n_from: 0,
            n_to: 0,
            identities: Vec::new(),
            format: Format::Text,
            method: Method::Closed,
            output_path: None,
        };
        match cli.command {
            CommandArgs::Cayley {
                kind,
                n,
                format,
                method,
                output,
            } => {
                if n == 0 {
                    return Err(usage("cayley needs --n >= 1"));
                }
                cfg.kind = Some(kind.into());
                cfg.n = n;
                cfg.format = format;
                cfg.method = method;
                cfg.output_path = output;
            }
            CommandArgs::Verify {
                identity,
                n_from,
                n_to,
                format,
                output,
            } => {
                cfg.command = Command::Verify;
                if n_from == 0 {
                    return Err(usage("identities are stated for n >= 1 (--n-from)"));
                }
                if n_from > n_to {
                    return Err(usage(format!("--n-from {n_from} exceeds --n-to {n_to}")));
                }
                cfg.identities = parse_identities(&identity)?;
                cfg.n_from = n_from;
                cfg.n_to = n_to;
                cfg.n = n_to;
                cfg.format = format;
                cfg.output_path = output;
            }
            CommandArgs::DerivationTable {
                n,
                kind,
                format,
                output,
            } => {
                cfg.command = Command::DerivationTable;
                cfg.kind = kind.map(Kind::from);
                cfg.n = n;
                cfg.format = format;
                cfg.output_path = output;
            }
            CommandArgs::SeriesCheck {
                kind,
                order,
                format,
                output,
            } => {
                cfg.command = Command::SeriesCheck;
                if order < 2 {
                    return Err(usage(format!("--order must be at least 2, got {order}")));
                }
                cfg.kind = kind.map(Kind::from);
                cfg.n = order;
                cfg.format = format;
                cfg.output_path = output;
            }
        }
        if cfg.n > max_n {
            return Err(usage(format!(
                "n = {} exceeds the cap {max_n} (raise {MAX_N_VAR} to allow it)",
                cfg.n
            )));
        }
        Ok(cfg)
    }

    fn kinds(&self) -> Vec<Kind> {
        match self.kind {
            Some(k) => vec![k],
            None => Kind::BOTH.to_vec(),
        }
    }
}

/// Parses arguments into a validated [`RunConfig`].
pub fn parse_config<I, T>(args: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| usage(e.to_string()))?;
    RunConfig::from_cli(cli, max_n_from_env()?)
}

pub fn cmd_cayley(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let kind = cfg.kind.unwrap_or(Kind::First);
    let source = match cfg.method {
        Method::Closed => CayleySource::ClosedForm,
        Method::Dixmier => CayleySource::DixmierOracle,
    };
    let c = cayley(kind, cfg.n, source)?;
    match cfg.format {
        Format::Text => writeln!(out, "{}", c.poly.to_text())?,
        Format::Latex => writeln!(out, "{}", c.poly.to_latex())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&c.poly)?)?,
    }
    Ok(EXIT_PASS)
}

fn report_latex(r: &IdentityReport) -> String {
    let tex = |s: &str| match s.split_once('/') {
        Some((a, b)) if a.starts_with('-') => format!("-\\frac{{{}}}{{{b}}}", &a[1..]),
        Some((a, b)) => format!("\\frac{{{a}}}{{{b}}}"),
        None => s.to_string(),
    };
    format!(
        "\\mathrm{{{}}} & {} & {} & {} & \\mathrm{{{}}} \\\\",
        r.identity.label().replace('_', "\\_"),
        r.n,
        tex(&r.computed_text()),
        tex(&r.expected.to_string()),
        if r.pass { "PASS" } else { "FAIL" }
    )
}

/// Runs the sweep in parallel batches, writing each batch in order as it
/// completes.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let jobs: Vec<(IdentityId, usize)> = cfg
        .identities
        .iter()
        .flat_map(|&id| (cfg.n_from..=cfg.n_to).map(move |n| (id, n)))
        .collect();
    let batch = rayon::current_num_threads().max(1);
    let mut all_pass = true;
    let mut reports = Vec::new();
    for chunk in jobs.chunks(batch) {
        let results: Vec<_> = chunk.par_iter().map(|&(id, n)| verify(id, n)).collect();
        for r in results {
            let r = r?;
            all_pass &= r.pass;
            match cfg.format {
                Format::Text => writeln!(out, "{}", r.to_line())?,
                Format::Latex => writeln!(out, "{}", report_latex(&r))?,
                Format::Json => {}
            }
            reports.push(r);
        }
        out.flush()?;
    }
    if cfg.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string(&reports)?)?;
    }
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}

pub fn cmd_derivation_table(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let kinds = cfg.kinds();
    let derivations: Vec<_> = kinds
        .iter()
        .map(|&k| (k, make_derivation(k, cfg.n)))
        .collect();
    let name = |k: Kind, latex: bool| match (k, latex) {
        (Kind::First, false) => "D_T",
        (Kind::Second, false) => "D_U",
        (Kind::First, true) => "D_\\mathcal{T}",
        (Kind::Second, true) => "D_\\mathcal{U}",
    };
    match cfg.format {
        Format::Text => {
            for m in 0..=cfg.n {
                let cells: Vec<_> = derivations
                    .iter()
                    .map(|(k, d)| format!("{}(x{m}) = {}", name(*k, false), d.image(m).to_text()))
                    .collect();
                writeln!(out, "{}", cells.join("\t"))?;
            }
        }
        Format::Latex => {
            writeln!(out, "\\begin{{array}}{{{}}}", "l".repeat(derivations.len()))?;
            for m in 0..=cfg.n {
                let cells: Vec<_> = derivations
                    .iter()
                    .map(|(k, d)| {
                        format!("{}(x_{{{m}}})={}", name(*k, true), d.image(m).to_latex())
                    })
                    .collect();
                writeln!(out, "{} \\\\", cells.join(" & "))?;
            }
            writeln!(out, "\\end{{array}}")?;
        }
        Format::Json => {
            let rows: Vec<_> = (0..=cfg.n)
                .map(|m| {
                    let mut row = serde_json::Map::new();
                    row.insert("m".into(), json!(m));
                    for (k, d) in &derivations {
                        row.insert(k.name().into(), serde_json::to_value(d.image(m)).unwrap());
                    }
                    serde_json::Value::Object(row)
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&rows)?)?;
        }
    }
    Ok(EXIT_PASS)
}

pub fn cmd_series_check(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let order = cfg.n;
    let mut all_pass = true;
    let mut genfun = Vec::new();
    let mut deriv = Vec::new();
    for kind in cfg.kinds() {
        let ok = verify_genfun(kind, order)?;
        all_pass &= ok;
        genfun.push(json!({"kind": kind.name(), "order": order, "pass": ok}));
        if cfg.format == Format::Text {
            writeln!(out, "genfun {kind} order={order} {}", pass_word(ok))?;
        }
        let results: Vec<bool> = (0..=order)
            .into_par_iter()
            .map(|n| verify_derivative_expansion(kind, n))
            .collect();
        for (n, ok) in results.into_iter().enumerate() {
            all_pass &= ok;
            deriv.push(json!({"kind": kind.name(), "n": n, "pass": ok}));
            if cfg.format == Format::Text {
                writeln!(out, "derivative {kind} n={n} {}", pass_word(ok))?;
            }
        }
    }
    match cfg.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&json!({"genfun": genfun, "derivative": deriv}))?
        )?,
        Format::Latex => {
            writeln!(out, "\\begin{{array}}{{lll}}")?;
            for g in genfun.iter().chain(deriv.iter()) {
                let what = if g.get("order").is_some() {
                    "genfun"
                } else {
                    "derivative"
                };
                let at = g.get("order").or_else(|| g.get("n")).unwrap();
                writeln!(
                    out,
                    "\\mathrm{{{what}}}\\ \\mathrm{{{}}} & {at} & \\mathrm{{{}}} \\\\",
                    g["kind"].as_str().unwrap(),
                    pass_word(g["pass"].as_bool().unwrap())
                )?;
            }
            writeln!(out, "\\end{{array}}")?;
        }
        Format::Text => {}
    }
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Executes a validated configuration, honoring `output_path`.
pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut file;
    let sink: &mut dyn Write = match &cfg.output_path {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => out,
    };
    let code = match cfg.command {
        Command::Cayley => cmd_cayley(cfg, sink)?,
        Command::Verify => cmd_verify(cfg, sink)?,
        Command::DerivationTable => cmd_derivation_table(cfg, sink)?,
        Command::SeriesCheck => cmd_series_check(cfg, sink)?,
    };
    sink.flush()?;
    Ok(code)
}

/// Full entry point: parse, run, map errors to exit codes.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = max_n_from_env()
        .and_then(|max_n| RunConfig::from_cli(cli, max_n))
        .and_then(|cfg| execute(&cfg, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            match e {
                CliError::Usage(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}
