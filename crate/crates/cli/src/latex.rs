//! LaTeX rendering: `-3e+\gamma e^{3}`, `\tilde{e}(-2+\gamma e^{2})`.

use kwbn::classifying::{Part, RingPresentation};
use kwbn::rep::{Decomposition, IrrepLabel};
use kwbn::{BnElement, Twist};
use num_bigint::BigInt;
use num_traits::{One, Signed};

fn power(base: &str, k: i64) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{k}}}")
    }
}

/// Sum of `c·γ^k·e^j` over `(j, k, c)`, without spaces between terms.
fn polynomial<'a>(terms: impl Iterator<Item = (u32, i64, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (j, k, c) in terms {
        let mut factors = Vec::new();
        if k != 0 {
            factors.push(power("\\gamma", k));
        }
        if j != 0 {
            factors.push(power("e", i64::from(j)));
        }
        let mag = c.abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            factors.join(" ")
        } else {
            format!("{mag}{}", factors.join(" "))
        };
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn bn_to_latex(x: &BnElement) -> String {
    let inner = polynomial(x.terms().flat_map(|(j, c)| c.terms().map(move |(k, v)| (j, k, v))));
    match x.twist() {
        Twist::Untwisted => inner,
        Twist::Twisted if x.is_zero() => inner,
        Twist::Twisted => match inner.as_str() {
            "1" => "\\tilde{e}".into(),
            "-1" => "-\\tilde{e}".into(),
            _ => format!("\\tilde{{e}}({inner})"),
        },
    }
}

pub fn label_to_latex(l: IrrepLabel) -> String {
    match l {
        IrrepLabel::TwoDim(m, o) => format!("\\widetilde{{\\mathcal{{O}}}}^{{{}}}({m})", o.symbol()),
        IrrepLabel::Trivial => "\\mathcal{O}".into(),
        IrrepLabel::Sign => "\\gamma_N".into(),
    }
}

pub fn decomposition_to_latex(d: &Decomposition) -> String {
    d.multiplicities()
        .into_iter()
        .map(|(l, n)| {
            let base = label_to_latex(l);
            if n == 1 {
                base
            } else {
                format!("{base}^{{\\oplus {n}}}")
            }
        })
        .collect::<Vec<_>>()
        .join("\\oplus ")
}

/// `p₁` → `p_{1}`, `e²` → `e^{2}`, `e⁽²⁾` → `e^{(2)}`, `ε` → `\varepsilon`.
pub fn name_to_latex(name: &str) -> String {
    const SUB: &str = "₀₁₂₃₄₅₆₇₈₉";
    const SUP: &str = "⁰¹²³⁴⁵⁶⁷⁸⁹";
    let digit = |c: char, table: &str| table.chars().position(|d| d == c);
    let mut out = String::new();
    let mut sub = String::new();
    let mut sup = String::new();
    let flush = |out: &mut String, sub: &mut String, sup: &mut String| {
        if !sub.is_empty() {
            out.push_str(&format!("_{{{sub}}}"));
            sub.clear();
        }
        if !sup.is_empty() {
            out.push_str(&format!("^{{{sup}}}"));
            sup.clear();
        }
    };
    for c in name.chars() {
        if let Some(d) = digit(c, SUB) {
            sub.push(char::from(b'0' + d as u8));
        } else if let Some(d) = digit(c, SUP) {
            sup.push(char::from(b'0' + d as u8));
        } else if c == '⁽' {
            sup.push('(');
        } else if c == '⁾' {
            sup.push(')');
        } else {
            flush(&mut out, &mut sub, &mut sup);
            match c {
                'ε' => out.push_str("\\varepsilon "),
                '·' => out.push_str("\\cdot "),
                _ => out.push(c),
            }
        }
    }
    flush(&mut out, &mut sub, &mut sup);
    out.trim_end().to_string()
}

/// The ring as `A^\bullet(S)\llbracket …\rrbracket` followed by a table of
/// generators.
pub fn presentation_to_latex(p: &RingPresentation) -> String {
    let gens: Vec<String> = p.generators().iter().map(|g| name_to_latex(&g.name)).collect();
    let unit = match p.part() {
        Part::Untwisted => String::new(),
        Part::Twisted { unit } => format!("{}\\cdot ", name_to_latex(unit)),
    };
    let mut out = format!("{unit}A^\\bullet(S)\\llbracket {}\\rrbracket\n", gens.join(", "));
    out.push_str("\\begin{tabular}{lrr}\ngenerator & degree & twist \\\\\n\\hline\n");
    for (g, name) in p.generators().iter().zip(&gens) {
        out.push_str(&format!("${name}$ & {} & {} \\\\\n", g.degree, g.twist.as_u8()));
    }
    out.push_str("\\end{tabular}");
    out
}

/// Rows of a coefficient triangle as a `tabular`, one row per line.
pub fn table_to_latex(first_n: usize, rows: &[Vec<BigInt>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("\\begin{{tabular}}{{r|{}}}\n", "r".repeat(width));
    out.push_str("$n$");
    for k in 0..width {
        out.push_str(&format!(" & $k={k}$"));
    }
    out.push_str(" \\\\\n\\hline\n");
    for (i, row) in rows.iter().enumerate() {
        out.push_str(&(first_n + i).to_string());
        for x in row {
            out.push_str(&format!(" & {x}"));
        }
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}");
    out
}
