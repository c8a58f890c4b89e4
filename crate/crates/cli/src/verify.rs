//! Self-check suites behind `kwbn verify`.

use std::io::Write;

use clap::ValueEnum;
use kwbn::euler::{b1_closed, b1_recursive, consistency_check, sym_euler, CoeffTable, Identity, TableKind};
use kwbn::{BnElement, Twist};
use num_bigint::BigInt;

use crate::{CliError, EXIT_FAILED, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Recurrence,
    Tables,
    Ternary,
    Cartan,
    Sym,
    Gamma0,
}

const ALPHA_ROWS: [&[i64]; 7] = [
    &[1],
    &[3, 1],
    &[5, 5, 1],
    &[7, 14, 7, 1],
    &[9, 30, 27, 9, 1],
    &[11, 55, 77, 44, 11, 1],
    &[13, 91, 182, 156, 65, 13, 1],
];

const BETA_ROWS: [&[i64]; 7] = [
    &[1],
    &[2, 1],
    &[3, 4, 1],
    &[4, 10, 6, 1],
    &[5, 20, 21, 8, 1],
    &[6, 35, 56, 36, 10, 1],
    &[7, 56, 126, 120, 55, 12, 1],
];

enum Status {
    Ok,
    Warn(Vec<String>),
    Fail(String),
}

struct Outcome {
    name: &'static str,
    detail: String,
    status: Status,
}

fn outcome(name: &'static str, detail: String, r: Result<Vec<String>, String>) -> Outcome {
    let status = match r {
        Ok(w) if w.is_empty() => Status::Ok,
        Ok(w) => Status::Warn(w),
        Err(e) => Status::Fail(e),
    };
    Outcome { name, detail, status }
}

fn engine<T>(r: kwbn::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn recurrence(max_m: u32) -> Result<Vec<String>, String> {
    for m in 1..=max_m {
        let cap = 2 * m + 2;
        let (r, c) = (engine(b1_recursive(m, cap))?, engine(b1_closed(m, cap))?);
        if r != c {
            return Err(format!("m = {m}: recursive {r} vs closed {c}"));
        }
    }
    Ok(Vec::new())
}

fn tables() -> Result<Vec<String>, String> {
    for (kind, rows, first_n) in [(TableKind::Alpha, &ALPHA_ROWS, 0), (TableKind::Beta, &BETA_ROWS, 1)] {
        let mut t = CoeffTable::new(kind);
        for (i, row) in rows.iter().enumerate() {
            let got = crate::table_row(&mut t, first_n + i);
            let want: Vec<BigInt> = row.iter().map(|x| BigInt::from(*x)).collect();
            if got != want {
                return Err(format!("{kind:?} row {}: {got:?}", first_n + i));
            }
        }
    }
    Ok(Vec::new())
}

fn ternary(max_m: u32) -> Result<Vec<String>, String> {
    for m in 2..=max_m {
        let r = consistency_check(Identity::step(m), 2 * m + 6);
        if !r.holds || !r.warnings.is_empty() {
            return Err(r.to_string());
        }
    }
    Ok(Vec::new())
}

fn cartan() -> Result<Vec<String>, String> {
    let r = consistency_check(Identity::SquaredTwo, kwbn::DEFAULT_CAP);
    if r.holds {
        Ok(r.warnings)
    } else {
        Err(r.to_string())
    }
}

fn double_factorial(k: u32) -> BigInt {
    (1..=k).rev().step_by(2).map(BigInt::from).product()
}

fn sym() -> Result<Vec<String>, String> {
    for k in 0..=20u32 {
        let x = engine(sym_euler(k, kwbn::DEFAULT_CAP))?;
        if k % 2 == 0 {
            if !x.is_zero() {
                return Err(format!("Sym^{k} has Euler class {x}"));
            }
            continue;
        }
        if k > 15 {
            continue;
        }
        let ok = x.lowest_term().is_some_and(|(exp, c)| {
            exp == (k + 1) / 2 && c.num_terms() == 1 && c.coeff(0).magnitude() == double_factorial(k).magnitude()
        });
        if !ok {
            return Err(format!("Sym^{k}: lowest term of {x}"));
        }
    }
    Ok(Vec::new())
}

fn gamma0(max_m: u32) -> Result<Vec<String>, String> {
    for m in 1..=max_m {
        let cap = 2 * m + 2;
        let z = engine(engine(b1_closed(m, cap))?.specialize_gamma_zero())?;
        let (twist, exp, value) = if m % 2 == 1 {
            let s = if (m - 1) / 2 % 2 == 0 { 1 } else { -1 };
            (Twist::Untwisted, 1, s * i64::from(m))
        } else {
            let s = if (m + 2) / 2 % 2 == 0 { 1 } else { -1 };
            (Twist::Twisted, 0, s * i64::from(m / 2))
        };
        let want = BnElement::from_int_terms(twist, cap, [(exp, 0, value)]);
        if z != want {
            return Err(format!("m = {m}: γ = 0 gives {z}, expected {want}"));
        }
    }
    Ok(Vec::new())
}

pub fn run(suite: Suite, max_m: u32, out: &mut dyn Write) -> Result<i32, CliError> {
    if max_m < 2 {
        return Err(CliError::Usage("--max-m must be at least 2".into()));
    }
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut results = Vec::new();
    if wants(Suite::Tables) {
        results.push(outcome("tables", "α rows 0..=6, β rows 1..=7".into(), tables()));
    }
    if wants(Suite::Recurrence) {
        results.push(outcome("recurrence", format!("m = 1..={max_m}"), recurrence(max_m)));
    }
    if wants(Suite::Ternary) {
        results.push(outcome("ternary", format!("step identities m = 2..={max_m}"), ternary(max_m)));
    }
    if wants(Suite::Cartan) {
        results.push(outcome("cartan", "squared_two".into(), cartan()));
    }
    if wants(Suite::Sym) {
        results.push(outcome("sym", "k = 0..=20".into(), sym()));
    }
    if wants(Suite::Gamma0) {
        results.push(outcome("gamma0", format!("m = 1..={max_m}"), gamma0(max_m)));
    }
    let mut failed = false;
    for r in &results {
        match &r.status {
            Status::Ok => writeln!(out, "{:<10} ok    {}", r.name, r.detail)?,
            Status::Warn(ws) => {
                writeln!(out, "{:<10} WARN  {}", r.name, r.detail)?;
                for w in ws {
                    writeln!(out, "  warning: {w}")?;
                }
            }
            Status::Fail(e) => {
                failed = true;
                writeln!(out, "{:<10} FAIL  {}", r.name, r.detail)?;
                for line in e.lines() {
                    writeln!(out, "  {line}")?;
                }
            }
        }
    }
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}
