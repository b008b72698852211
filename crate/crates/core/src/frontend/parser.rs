//! Recursive-descent parser for Clifford expressions.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | atom
//! atom   := NUMBER | "i" | CONST | FUNC "(" expr ")" | "(" expr ")"
//! FUNC   := "rev" | "bar" | "conj"
//! NUMBER := decimal ["/" decimal]
//! ```
//!
//! Products need an explicit `*`; `e12` is a single name.

use std::fmt;

use crate::algebra::{Blade, Multivector};
use crate::clusters::{paravector, structure_element, Label, Polarity};
use crate::error::{Error, Result};

/// A named library constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Blade(Blade),
    Paravector(u8, Polarity),
    Structure(Label),
}

impl Constant {
    /// Every constant, blades first.
    pub fn all() -> Vec<Constant> {
        let mut out: Vec<Constant> = Blade::ALL.into_iter().map(Constant::Blade).collect();
        for pol in [Polarity::Positive, Polarity::Negative] {
            out.extend((1..=3).map(|k| Constant::Paravector(k, pol)));
        }
        out.extend(Label::ALL.into_iter().map(Constant::Structure));
        out
    }

    pub fn name(&self) -> String {
        match self {
            Constant::Blade(b) => b.name().to_string(),
            Constant::Paravector(k, Polarity::Positive) => format!("P{k}"),
            Constant::Paravector(k, Polarity::Negative) => format!("N{k}"),
            Constant::Structure(l) => l.name().to_string(),
        }
    }

    pub fn value(&self) -> Multivector {
        match *self {
            Constant::Blade(b) => Multivector::basis(b),
            Constant::Paravector(k, pol) => paravector(k, pol).expect("constant axes are valid"),
            Constant::Structure(l) => structure_element(l),
        }
    }

    pub fn lookup(name: &str) -> Option<Constant> {
        Constant::all().into_iter().find(|c| c.name() == name)
    }
}

/// Name of the library constant exactly equal to `m`, if any.
pub fn constant_name(m: &Multivector) -> Option<String> {
    Constant::all()
        .into_iter()
        .find(|c| c.value() == *m)
        .map(|c| c.name())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    /// Reversion.
    Rev,
    /// Grade involution.
    Bar,
    /// Clifford conjugation.
    Conj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Imaginary,
    Const(Constant),
    Neg(Box<Expr>),
    Apply(Func, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

/// Syntax error with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: found {}",
            self.offset, self.found
        )?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const ATOM_START: &[&str] = &["number", "\"i\"", "constant", "function", "\"(\"", "\"-\""];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(x) => format!("number {x}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "\"+\"".into(),
            Tok::Minus => "\"-\"".into(),
            Tok::Star => "\"*\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let decimal = |i: &mut usize| -> Option<f64> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if *i < bytes.len() && bytes[*i] == b'.' {
            *i += 1;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
        }
        let s = &text[start..*i];
        if s == "." || s.is_empty() {
            None
        } else {
            s.parse().ok()
        }
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((start, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((start, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((start, Tok::Star));
                i += 1;
            }
            b'(' => {
                out.push((start, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((start, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' | b'.' => {
                let bad = |at: usize| ParseError {
                    offset: at,
                    expected: vec!["number"],
                    found: format!("`{}`", &text[start..at.max(start + 1).min(text.len())]),
                };
                let num = decimal(&mut i).ok_or_else(|| bad(i))?;
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                    j += 1;
                }
                let value = if j < bytes.len() && bytes[j] == b'/' {
                    j += 1;
                    while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                        j += 1;
                    }
                    i = j;
                    let den = decimal(&mut i).ok_or_else(|| ParseError {
                        offset: j,
                        expected: vec!["number"],
                        found: found_at(text, j),
                    })?;
                    num / den
                } else {
                    num
                };
                if !value.is_finite() {
                    return Err(ParseError {
                        offset: start,
                        expected: vec!["finite number"],
                        found: format!("`{}`", &text[start..i]),
                    });
                }
                out.push((start, Tok::Number(value)));
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    expected: ATOM_START.to_vec(),
                    found: found_at(text, start),
                })
            }
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

fn found_at(text: &str, at: usize) -> String {
    match text[at..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Binary(BinOp::Mul, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> std::result::Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> std::result::Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Number(x) => {
                self.bump();
                Ok(Expr::Number(x))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "rev" => Some(Func::Rev),
                    "bar" => Some(Func::Bar),
                    "conj" => Some(Func::Conj),
                    _ => None,
                };
                if let Some(func) = func {
                    self.bump();
                    if *self.peek() != Tok::LParen {
                        return Err(self.error(&["\"(\""]));
                    }
                    self.bump();
                    let arg = self.expr()?;
                    self.close()?;
                    return Ok(Expr::Apply(func, Box::new(arg)));
                }
                if name == "i" {
                    self.bump();
                    return Ok(Expr::Imaginary);
                }
                match Constant::lookup(&name) {
                    Some(c) => {
                        self.bump();
                        Ok(Expr::Const(c))
                    }
                    None => Err(ParseError {
                        offset: at,
                        expected: vec!["constant", "function", "\"i\""],
                        found: format!("unknown name `{name}`"),
                    }),
                }
            }
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn close(&mut self) -> std::result::Result<(), ParseError> {
        if *self.peek() != Tok::RParen {
            return Err(self.error(&["\")\"", "\"+\"", "\"-\"", "\"*\""]));
        }
        self.bump();
        Ok(())
    }
}

pub fn parse(text: &str) -> std::result::Result<Expr, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(&["\"+\"", "\"-\"", "\"*\"", "end of input"]));
    }
    Ok(e)
}

/// Bottom-up evaluation; `i` is the pseudoscalar `e123`.
pub fn evaluate(e: &Expr) -> Result<Multivector> {
    let m = match e {
        Expr::Number(x) => Multivector::scalar(*x),
        Expr::Imaginary => Multivector::I,
        Expr::Const(c) => c.value(),
        Expr::Neg(x) => -evaluate(x)?,
        Expr::Apply(f, x) => {
            let v = evaluate(x)?;
            match f {
                Func::Rev => v.reversion(),
                Func::Bar => v.grade_involution(),
                Func::Conj => v.clifford_conjugate(),
            }
        }
        Expr::Binary(op, a, b) => {
            let (a, b) = (evaluate(a)?, evaluate(b)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            }
        }
    };
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(m)
}

/// Errors from [`parse_and_evaluate`].
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    Syntax(ParseError),
    Domain(Error),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Syntax(e) => e.fmt(f),
            EvalError::Domain(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for EvalError {}

pub fn parse_and_evaluate(text: &str) -> std::result::Result<Multivector, EvalError> {
    let e = parse(text).map_err(EvalError::Syntax)?;
    evaluate(&e).map_err(EvalError::Domain)
}
