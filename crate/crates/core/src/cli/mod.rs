//! Command-line front end: `expand`, `kostka`, `verify` and `table`.
//!
//! Every command renders into a string first, so output is byte-identical
//! regardless of the worker count. Failures print a JSON error object on
//! stderr and map to fixed exit codes.

pub mod render;
pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::json::{zpoly_to_json, ZPolyJson};
use crate::error::Error;
use crate::hecke::{a_family, AVariant, OperatorWord};
use crate::macdonald::{
    expand_in_limit_monomials, expand_in_partial_t_monomials, expand_in_plain_partial_t_monomials,
    expand_in_t_monomials, expand_symmetric, jack_nonsym, jack_sym, kostka_matrix, nonsym_cal_e, nonsym_e, sym_cal_j,
    Basis, BasisExpansion,
};
use crate::weights::{compositions, Composition};
use crate::QtRational;
use render::{
    expansion_json, expansion_latex, jack_expansion_json, jack_expansion_latex, kostka_csv, kostka_json, kostka_latex,
    ExpansionJson, Specialization,
};
use suites::{run_suite, Suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NOT_IN_SPAN: i32 = 3;
pub const EXIT_NOT_INTEGRAL: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

pub const THREADS_ENV: &str = "KOSTKA_FORGE_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "kostka-forge",
    version,
    about = "Exact Macdonald polynomials, t-monomial expansions and (q,t)-Kostka matrices"
)]
pub struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, env = THREADS_ENV)]
    pub parallel: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one polynomial and expand it in a basis.
    Expand(ExpandArgs),
    /// The (q,t)-Kostka matrix of one degree.
    Kostka(KostkaArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Golden table of E, calE and calJ for every weight up to a degree.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// Monic nonsymmetric polynomial.
    #[value(name = "E")]
    E,
    /// Integral form.
    #[value(name = "calE")]
    CalE,
    /// Symmetric integral form (partitions only).
    #[value(name = "calJ")]
    CalJ,
    /// Nonsymmetric Jack limit.
    #[value(name = "jack")]
    Jack,
    /// Symmetric Jack limit (partitions only).
    #[value(name = "jack-sym")]
    JackSym,
}

impl Form {
    fn name(self) -> &'static str {
        match self {
            Form::E => "E",
            Form::CalE => "calE",
            Form::CalJ => "calJ",
            Form::Jack => "jack",
            Form::JackSym => "jack-sym",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Tmon,
    TmonPartial,
    TmonAug,
    Msym,
    HlP,
    HlQ,
    Tschur,
    LimitAug,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated parts, padded with zeros up to `n`.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub lambda: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Form::E)]
    pub form: Form,
    #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
    pub basis: BasisArg,
    /// Partial-symmetry level; defaults to the length of lambda.
    #[arg(long)]
    pub m: Option<usize>,
    /// Print the creation operators used at each step to stderr.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug)]
pub struct KostkaArgs {
    #[arg(long)]
    pub degree: u32,
    /// Number of variables; defaults to the degree.
    #[arg(long)]
    pub n: Option<usize>,
    /// Integer values for q and/or t, e.g. `q=0,t=0`.
    #[arg(long)]
    pub specialize: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub maxdeg: u32,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub maxdeg: u32,
}

/// A failed command: exit code plus a machine-readable description.
#[derive(Debug, Serialize)]
pub struct CliError {
    #[serde(skip)]
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError { code: EXIT_VALIDATION, kind: "validation", message: message.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::NotInSpan { .. } => (EXIT_NOT_IN_SPAN, "not_in_span"),
            Error::ZeroComposition
            | Error::NotAPartition(_)
            | Error::TailNotPartition(_)
            | Error::TooFewVariables { .. }
            | Error::IndexOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::Parse(_)
            | Error::PreconditionViolated(_) => (EXIT_VALIDATION, "validation"),
            _ => (EXIT_INTERNAL, "internal"),
        };
        CliError { code, kind, message: e.to_string() }
    }
}

/// What a command produced: text for the output sink and an exit code that
/// may be nonzero even when output exists (integrality or verify failures).
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        // --help and --version print their text; real parse errors get the JSON envelope
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return EXIT_OK;
        }
        Err(e) => {
            let message = e.render().to_string();
            let message = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            let err = CliError { code: EXIT_VALIDATION, kind: "validation", message: message.to_string() };
            eprintln!("{}", err.to_json());
            return err.code;
        }
    };
    match run(&cli).and_then(|outcome| write_output(&cli, outcome)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.code
        }
    }
}

fn write_output(cli: &Cli, outcome: Outcome) -> Result<i32, CliError> {
    match &cli.output {
        Some(path) => fs::write(path, &outcome.output).map_err(|e| CliError {
            code: EXIT_INTERNAL,
            kind: "io",
            message: format!("{}: {e}", path.display()),
        })?,
        None => print!("{}", outcome.output),
    }
    Ok(outcome.code)
}

/// Runs a parsed command on a pool of the requested width.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(width) = cli.parallel {
        if width == 0 {
            return Err(CliError::validation("--parallel must be at least 1"));
        }
        builder = builder.num_threads(width);
    }
    let pool =
        builder.build().map_err(|e| CliError { code: EXIT_INTERNAL, kind: "internal", message: e.to_string() })?;
    pool.install(|| match &cli.command {
        Command::Expand(args) => cmd_expand(args, cli.format),
        Command::Kostka(args) => cmd_kostka(args, cli.format),
        Command::Verify(args) => cmd_verify(args, cli.format),
        Command::Table(args) => cmd_table(args, cli.format),
    })
}

fn json_line<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string(value).map_err(|e| CliError {
        code: EXIT_INTERNAL,
        kind: "internal",
        message: e.to_string(),
    })?;
    s.push('\n');
    Ok(s)
}

fn parse_weight(n: usize, parts: &[u32]) -> Result<Composition, CliError> {
    if n == 0 {
        return Err(CliError::validation("--n must be positive"));
    }
    if parts.len() > n {
        return Err(CliError::validation(format!("lambda has {} parts but n = {n}", parts.len())));
    }
    let mut padded = parts.to_vec();
    padded.resize(n, 0);
    Ok(Composition::new(padded))
}

fn symmetric_basis(basis: BasisArg) -> Option<Basis> {
    match basis {
        BasisArg::Msym => Some(Basis::MonomialSymmetric),
        BasisArg::HlP => Some(Basis::HallLittlewoodP),
        BasisArg::HlQ => Some(Basis::HallLittlewoodQ),
        BasisArg::Tschur => Some(Basis::TSchur),
        _ => None,
    }
}

fn trace_creation(lambda: &Composition) {
    for mu in lambda.star_chain().iter().rev().skip(1) {
        let m = mu.length();
        let words: Result<Vec<OperatorWord<QtRational>>, Error> =
            [AVariant::Abar, AVariant::A].into_iter().map(|v| a_family(mu.n(), m, v)).collect();
        match words {
            Ok(w) => eprintln!("{mu}: X with m={m}: Abar = {}, A = {}", w[0], w[1]),
            Err(e) => eprintln!("{mu}: {e}"),
        }
    }
}

pub fn cmd_expand(args: &ExpandArgs, format: Format) -> Result<Outcome, CliError> {
    let lambda = parse_weight(args.n, &args.lambda)?;
    if matches!(args.form, Form::CalJ | Form::JackSym) && !lambda.is_partition() {
        return Err(CliError::validation(format!("{} needs a partition, got {lambda}", args.form.name())));
    }
    if format == Format::Csv {
        return Err(CliError::validation("csv output is only available for kostka"));
    }
    if args.trace {
        trace_creation(&lambda);
    }
    let level = args.m.unwrap_or_else(|| lambda.length());
    if level > args.n {
        return Err(CliError::validation(format!("--m {level} exceeds n = {}", args.n)));
    }
    let form = args.form.name();
    if matches!(args.form, Form::Jack | Form::JackSym) {
        let f = match args.form {
            Form::Jack => jack_nonsym(&lambda)?,
            _ => jack_sym(&lambda)?,
        };
        let x = match args.basis {
            BasisArg::Monomial => BasisExpansion::from_monomials(&f)?,
            BasisArg::LimitAug => expand_in_limit_monomials(&f, level)?,
            other => {
                return Err(CliError::validation(format!("basis {other:?} is not available for {form}")));
            }
        };
        let output = match format {
            Format::Latex => format!("{}\n", jack_expansion_latex(&x)),
            _ => json_line(&jack_expansion_json(form, &lambda, &x))?,
        };
        return Ok(Outcome { code: EXIT_OK, output });
    }
    let f = match args.form {
        Form::E => nonsym_e(&lambda)?,
        Form::CalE => nonsym_cal_e(&lambda)?,
        _ => sym_cal_j(&lambda)?,
    };
    let x = match args.basis {
        BasisArg::Monomial => BasisExpansion::from_monomials(&f)?,
        BasisArg::Tmon => expand_in_t_monomials(&f)?,
        BasisArg::TmonPartial => expand_in_plain_partial_t_monomials(&f, level)?,
        BasisArg::TmonAug => expand_in_partial_t_monomials(&f, level)?,
        BasisArg::LimitAug => return Err(CliError::validation(format!("limit-aug needs a Jack form, not {form}"))),
        other => {
            let basis = symmetric_basis(other).expect("symmetric basis");
            if !f.is_symmetric() {
                return Err(CliError::validation(format!("{form}{lambda} is not symmetric")));
            }
            expand_symmetric(&f, basis)?
        }
    };
    let output = match format {
        Format::Latex => format!("{}\n", expansion_latex(&x)),
        _ => json_line(&expansion_json(form, &lambda, &x))?,
    };
    Ok(Outcome { code: EXIT_OK, output })
}

fn parse_specialization(text: &str) -> Result<Specialization, CliError> {
    let mut spec = Specialization::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (var, value) =
            item.split_once('=').ok_or_else(|| CliError::validation(format!("expected var=value, got {item:?}")))?;
        let value: i64 = value.trim().parse().map_err(|_| CliError::validation(format!("bad integer in {item:?}")))?;
        match var.trim() {
            "q" => spec.q = Some(value),
            "t" => spec.t = Some(value),
            other => return Err(CliError::validation(format!("unknown variable {other:?}"))),
        }
    }
    Ok(spec)
}

pub fn cmd_kostka(args: &KostkaArgs, format: Format) -> Result<Outcome, CliError> {
    let n = args.n.unwrap_or(args.degree as usize);
    if args.degree == 0 {
        return Err(CliError::validation("--degree must be positive"));
    }
    if n < args.degree as usize {
        return Err(CliError::validation(format!("kostka needs n >= degree, got n = {n}, degree = {}", args.degree)));
    }
    let spec = match &args.specialize {
        Some(text) => parse_specialization(text)?,
        None => Specialization::default(),
    };
    let generic = kostka_matrix(args.degree, n)?;
    // Integrality is a statement about the generic matrix.
    let code = if generic.is_integral() { EXIT_OK } else { EXIT_NOT_INTEGRAL };
    let k = if spec.q.is_some() || spec.t.is_some() { generic.specialize(spec.q, spec.t)? } else { generic };
    let output = match format {
        Format::Json => json_line(&kostka_json(&k, spec))?,
        Format::Csv => kostka_csv(&k)?,
        Format::Latex => kostka_latex(&k),
    };
    Ok(Outcome { code, output })
}

pub fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Outcome, CliError> {
    if format != Format::Json {
        return Err(CliError::validation("verify reports are JSON only"));
    }
    let suite: Suite = args.suite.parse()?;
    if args.n == 0 || args.n > 6 {
        return Err(CliError::validation("verify needs 1 <= n <= 6"));
    }
    if args.maxdeg > 8 {
        return Err(CliError::validation("verify needs maxdeg <= 8"));
    }
    let params = SuiteParams { n: args.n, maxdeg: args.maxdeg, trials: args.trials, seed: args.seed };
    let report = run_suite(suite, &params)?;
    let code = if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(Outcome { code, output: json_line(&report)? })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Vec<u32>,
    #[serde(rename = "E")]
    pub e: ZPolyJson,
    #[serde(rename = "calE")]
    pub cal_e: ZPolyJson,
    /// `calE` in the augmented partial `t`-monomials at level `l(lambda)`.
    #[serde(rename = "calE_tmon_aug")]
    pub cal_e_tmon_aug: ExpansionJson,
    /// `calJ` in the Hall-Littlewood `Q` basis, for partitions.
    #[serde(rename = "calJ_hl_q", skip_serializing_if = "Option::is_none")]
    pub cal_j_hl_q: Option<ExpansionJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Table {
    pub n: usize,
    pub maxdeg: u32,
    pub entries: Vec<TableEntry>,
}

fn table_entry(lambda: &Composition) -> Result<TableEntry, Error> {
    let cal_e = nonsym_cal_e(lambda)?;
    let aug = expand_in_partial_t_monomials(&cal_e, lambda.length())?;
    let cal_j_hl_q = if lambda.is_partition() {
        let x = expand_symmetric(&sym_cal_j(lambda)?, Basis::HallLittlewoodQ)?;
        Some(expansion_json("calJ", lambda, &x))
    } else {
        None
    };
    Ok(TableEntry {
        lambda: lambda.parts().to_vec(),
        e: zpoly_to_json(&nonsym_e(lambda)?),
        cal_e: zpoly_to_json(&cal_e),
        cal_e_tmon_aug: expansion_json("calE", lambda, &aug),
        cal_j_hl_q,
    })
}

/// Every weight with `n` parts and size at most `maxdeg`, in increasing
/// size and then lexicographic order.
pub fn build_table(n: usize, maxdeg: u32) -> Result<Table, Error> {
    let weights: Vec<Composition> = (0..=maxdeg).flat_map(|d| compositions(n, d)).collect();
    let entries = weights.par_iter().map(table_entry).collect::<Result<Vec<_>, Error>>()?;
    Ok(Table { n, maxdeg, entries })
}

pub fn cmd_table(args: &TableArgs, format: Format) -> Result<Outcome, CliError> {
    if format != Format::Json {
        return Err(CliError::validation("tables are JSON only"));
    }
    if args.n == 0 {
        return Err(CliError::validation("--n must be positive"));
    }
    let table = build_table(args.n, args.maxdeg)?;
    let mut output = serde_json::to_string_pretty(&table).map_err(|e| CliError {
        code: EXIT_INTERNAL,
        kind: "internal",
        message: e.to_string(),
    })?;
    output.push('\n');
    Ok(Outcome { code: EXIT_OK, output })
}
