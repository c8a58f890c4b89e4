//! Representation expressions:
//!
//! ```text
//! sum     := product ('+' product)*
//! product := atom ('*' atom)*
//! atom    := 'O+(' m ')' | 'O-(' m ')' | 'triv' | 'sign'
//!          | 'sym^' k '(' sum ')' | '(' sum ')'
//! ```
//!
//! Whitespace is ignored everywhere.

use kwbn::rep::{direct_sum, make_irrep, sym_power, tensor, IrrepLabel, NRep, Orientation};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based position in the input with whitespace removed.
    pub column: usize,
    pub message: String,
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Irrep(IrrepLabel),
    Sum(Vec<Expr>),
    Tensor(Vec<Expr>),
    Sym(u32, Box<Expr>),
}

impl Expr {
    pub fn build(&self) -> Result<NRep, kwbn::Error> {
        Ok(match self {
            Expr::Irrep(l) => make_irrep(*l)?,
            Expr::Sum(parts) => fold(parts, direct_sum)?,
            Expr::Tensor(parts) => fold(parts, tensor)?,
            Expr::Sym(k, inner) => sym_power(&inner.build()?, *k),
        })
    }
}

fn fold(parts: &[Expr], op: fn(&NRep, &NRep) -> NRep) -> Result<NRep, kwbn::Error> {
    let mut acc = parts[0].build()?;
    for p in &parts[1..] {
        acc = op(&acc, &p.build()?);
    }
    Ok(acc)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.error(format!("expected `{s}`"))
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.error("number out of range")
        })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut parts = vec![self.product()?];
        while self.eat("+") {
            parts.push(self.product()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Sum(parts) })
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut parts = vec![self.atom()?];
        while self.eat("*") {
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Expr::Tensor(parts) })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        for (prefix, o) in [("O+(", Orientation::Plus), ("O-(", Orientation::Minus)] {
            if self.eat(prefix) {
                let at = self.pos;
                let m = self.number()?;
                if m == 0 {
                    self.pos = at;
                    return self.error("rank-2 irreducibles need m >= 1");
                }
                self.expect(")")?;
                return Ok(Expr::Irrep(IrrepLabel::TwoDim(m, o)));
            }
        }
        if self.eat("triv") {
            return Ok(Expr::Irrep(IrrepLabel::Trivial));
        }
        if self.eat("sign") {
            return Ok(Expr::Irrep(IrrepLabel::Sign));
        }
        if self.eat("sym^") {
            let k = self.number()?;
            self.expect("(")?;
            let inner = self.sum()?;
            self.expect(")")?;
            return Ok(Expr::Sym(k, Box::new(inner)));
        }
        if self.eat("(") {
            let inner = self.sum()?;
            self.expect(")")?;
            return Ok(inner);
        }
        match self.peek() {
            None => self.error("unexpected end of input"),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let e = p.sum()?;
    if p.pos != p.chars.len() {
        return p.error("trailing input");
    }
    Ok(e)
}
