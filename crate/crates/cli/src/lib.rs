//! Command-line front end for `kwbn`: argument definitions, output formats
//! and the command implementations. The `kwbn` binary is a thin wrapper
//! around [`run`].

pub mod expr;
pub mod json;
pub mod latex;
mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use kwbn::classifying::{bgl_presentation, bsl_presentation, kunneth_product_indexed, RingPresentation};
use kwbn::euler::{consistency_check, euler_class, CoeffTable, Identity, TableKind};
use kwbn::rep::{decompose, IrrepLabel, Orientation};
use num_bigint::BigInt;

pub use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "kwbn", version, about = "Euler classes and Witt-theoretic invariants of BN")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Sl,
    Gl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler class of the rank-2 bundle Õ±(m).
    Euler {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, env = "KWBN_CAP", default_value_t = kwbn::DEFAULT_CAP)]
        cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rows of the α or β coefficient triangle.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 7)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs self-checks; exits with status 2 if any fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 25)]
        max_m: u32,
    },
    /// Decomposes a representation expression such as "O+(2)*O+(2)*O+(1)".
    Decompose {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Power-series presentation of BSL_n, BGL_n, or a product of BSL's.
    Presentation {
        #[arg(long, value_enum)]
        group: Group,
        /// Ranks; several (comma-separated) give the Künneth product.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        #[arg(long, env = "KWBN_CAP", default_value_t = i64::from(kwbn::DEFAULT_CAP))]
        cap: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One ternary-law/Cartan identity with its full report.
    Check {
        /// `squared_two` or `step:M`.
        #[arg(long)]
        identity: String,
        #[arg(long, env = "KWBN_CAP", default_value_t = kwbn::DEFAULT_CAP)]
        cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Invalid input; reported with exit status 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error(transparent)]
    Engine(#[from] kwbn::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Executes a parsed command, writing data to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Euler { m, sign, cap, format } => euler(m, sign, cap, format, out),
        Command::Table { kind, rows, format } => table(kind, rows, format, out),
        Command::Verify { suite, max_m } => verify::run(suite, max_m, out),
        Command::Decompose { expr, format } => decomposition(&expr, format, out),
        Command::Presentation { group, n, cap, format } => presentation(group, &n, cap, format, out),
        Command::Check { identity, cap, format } => check(&identity, cap, format, out),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialise")
}

fn euler(m: u32, sign: Sign, cap: u32, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let need = 2 * u64::from(m) + 2;
    if u64::from(cap) < need {
        return Err(CliError::Usage(format!("cap {cap} is too small for m = {m}; need at least {need}")));
    }
    let o = match sign {
        Sign::Plus => Orientation::Plus,
        Sign::Minus => Orientation::Minus,
    };
    let x = euler_class(IrrepLabel::TwoDim(m, o), cap)?;
    match format {
        Format::Text => writeln!(out, "{x}")?,
        Format::Json => writeln!(out, "{}", pretty(&json::bn_to_json(&x)))?,
        Format::Latex => writeln!(out, "{}", latex::bn_to_latex(&x))?,
    }
    Ok(EXIT_OK)
}

fn table(kind: Kind, rows: usize, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let (kind, first_n, name) = match kind {
        Kind::Alpha => (TableKind::Alpha, 0, "alpha"),
        Kind::Beta => (TableKind::Beta, 1, "beta"),
    };
    let mut t = CoeffTable::new(kind);
    let data: Vec<Vec<BigInt>> = (first_n..first_n + rows).map(|n| table_row(&mut t, n)).collect();
    match format {
        Format::Text => {
            let width = data.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
            for (i, row) in data.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                writeln!(out, "{:>3} | {}", first_n + i, cells.join(" "))?;
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = data
                .iter()
                .map(|r| serde_json::Value::Array(r.iter().map(json::number).collect()))
                .collect();
            let v = serde_json::json!({ "kind": name, "first_n": first_n, "rows": rows });
            writeln!(out, "{}", pretty(&v))?;
        }
        Format::Latex => writeln!(out, "{}", latex::table_to_latex(first_n, &data))?,
    }
    Ok(EXIT_OK)
}

/// Row `n` as tabulated: the β triangle's row `n` stops at `k = n - 1`,
/// where the α triangle's stops at `k = n`.
pub fn table_row(t: &mut CoeffTable, n: usize) -> Vec<BigInt> {
    let kind = t.kind();
    let row = t.row(n);
    match kind {
        TableKind::Alpha => row.to_vec(),
        TableKind::Beta => row[..n].to_vec(),
    }
}

fn decomposition(input: &str, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let rep = expr::parse(input)?.build()?;
    let d = decompose(&rep)?;
    match format {
        Format::Text => {
            let parts: Vec<String> = d
                .multiplicities()
                .into_iter()
                .map(|(l, n)| if n == 1 { l.to_string() } else { format!("{l}×{n}") })
                .collect();
            writeln!(out, "{}", parts.join(", "))?;
        }
        Format::Json => writeln!(out, "{}", pretty(&json::decomposition_to_json(input, rep.dim(), &d)))?,
        Format::Latex => writeln!(out, "{}", latex::decomposition_to_latex(&d))?,
    }
    Ok(EXIT_OK)
}

fn write_presentation(p: &RingPresentation, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Text => {
            writeln!(out, "{p}")?;
            for g in p.generators() {
                writeln!(out, "  {:<6} degree {:>3}  twist {}", g.name, g.degree, g.twist.as_u8())?;
            }
        }
        Format::Json => writeln!(out, "{}", pretty(&json::presentation_to_json(p)))?,
        Format::Latex => writeln!(out, "{}", latex::presentation_to_latex(p))?,
    }
    Ok(())
}

fn presentation(group: Group, ns: &[u32], cap: i64, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    if cap < 0 {
        return Err(CliError::Usage("cap must be non-negative".into()));
    }
    match group {
        Group::Sl => {
            let parts = ns.iter().map(|&n| bsl_presentation(n, cap)).collect::<Result<Vec<_>, _>>()?;
            let p = if parts.len() == 1 { parts.into_iter().next().unwrap() } else { kunneth_product_indexed(&parts)? };
            write_presentation(&p, format, out)?;
        }
        Group::Gl => {
            let [n] = ns else {
                return Err(CliError::Usage("products are only supported for --group sl".into()));
            };
            let b = bgl_presentation(*n, cap)?;
            match format {
                Format::Json => writeln!(out, "{}", pretty(&json::bgl_to_json(&b)))?,
                _ => {
                    write_presentation(&b.untwisted, format, out)?;
                    match &b.twisted {
                        Some(t) => write_presentation(t, format, out)?,
                        None if format == Format::Latex => writeln!(out, "0")?,
                        None => writeln!(out, "twisted part: 0")?,
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_identity(s: &str) -> Result<Identity, CliError> {
    if s == "squared_two" {
        return Ok(Identity::SquaredTwo);
    }
    let m = s
        .strip_prefix("step:")
        .and_then(|m| m.parse::<u32>().ok())
        .filter(|m| *m >= 2)
        .ok_or_else(|| CliError::Usage(format!("unknown identity `{s}`; use squared_two or step:M with M >= 2")))?;
    Ok(Identity::step(m))
}

fn check(identity: &str, cap: u32, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let id = parse_identity(identity)?;
    if cap < id.min_cap() {
        return Err(CliError::Usage(format!("cap {cap} is too small for {id}; need at least {}", id.min_cap())));
    }
    let r = consistency_check(id, cap);
    match format {
        Format::Json => writeln!(out, "{}", pretty(&json::report_to_json(&r)))?,
        Format::Text => write!(out, "{r}")?,
        Format::Latex => return Err(CliError::Usage("check supports text and json".into())),
    }
    Ok(if r.holds { EXIT_OK } else { EXIT_FAILED })
}
