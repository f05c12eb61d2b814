//! Expressions in `x` and the field generator `a`, field moduli and 2x2 matrices.

use iterfield::numfield::{NFElem, NumberField, Rational};
use iterfield::polyrat::RatFunc;
use iterfield::Error as CoreError;
use num_bigint::BigInt;
use thiserror::Error;

/// Exponents beyond this are refused before any arithmetic happens.
const MAX_EXPONENT: u32 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{symbol}` at byte {offset}")]
    UnknownSymbol { offset: usize, symbol: String },
    #[error("zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus is reducible over Q")]
    Reducible,
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(src[start..i].parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(syntax(i, format!("unexpected character `{ch}`")));
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// Parsed expression; every node carries the byte offset where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt, usize),
    Gen(usize),
    Var(usize),
    Neg(Box<Expr>, usize),
    Add(Box<Expr>, Box<Expr>, usize),
    Sub(Box<Expr>, Box<Expr>, usize),
    Mul(Box<Expr>, Box<Expr>, usize),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

struct Parser<'s> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    // names accepted for the generator and the variable
    gen: Option<&'s str>,
    var: Option<&'s str>,
}

impl<'s> Parser<'s> {
    fn new(src: &str, gen: Option<&'s str>, var: Option<&'s str>) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, pos: 0, gen, var })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.bump() {
            (Tok::Op(d), _) if d == c => Ok(()),
            (t, off) => Err(syntax(off, format!("expected `{c}`, found {}", describe(&t)))),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(syntax(self.offset(), format!("unexpected {}", describe(t)))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let off = self.offset();
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?), off);
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?), off);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let off = self.offset();
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?), off);
                }
                Tok::Op('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), off);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?), off))
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Op('^') {
            return Ok(base);
        }
        let off = self.offset();
        self.bump();
        let neg = if self.peek() == &Tok::Op('-') {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            (Tok::Int(n), at) => u32::try_from(&n)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| syntax(at, format!("exponent exceeds {MAX_EXPONENT}")))?,
            (t, at) => return Err(syntax(at, format!("exponent must be an integer literal, found {}", describe(&t)))),
        };
        if self.peek() == &Tok::Op('^') {
            return Err(syntax(self.offset(), "chained exponents need parentheses"));
        }
        let e = if neg { -(e as i64) } else { e as i64 };
        Ok(Expr::Pow(Box::new(base), e, off))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            (Tok::Int(n), off) => Ok(Expr::Int(n, off)),
            (Tok::Ident(name), off) => {
                if Some(name.as_str()) == self.gen {
                    Ok(Expr::Gen(off))
                } else if Some(name.as_str()) == self.var {
                    Ok(Expr::Var(off))
                } else {
                    Err(ParseError::UnknownSymbol { offset: off, symbol: name })
                }
            }
            (Tok::Op('('), _) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            (t, off) => Err(syntax(off, format!("expected a term, found {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Op(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

/// Parses `src` into an expression tree over `x` and, when `field` is not Q, `a`.
pub fn parse_expr(src: &str, field: &NumberField) -> Result<Expr, ParseError> {
    let gen = (!field.is_rationals()).then_some("a");
    let mut p = Parser::new(src, gen, Some("x"))?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

fn core_err(e: CoreError, off: usize) -> ParseError {
    match e {
        CoreError::ZeroDenominator | CoreError::DivisionByZero => ParseError::ZeroDenominator { offset: off },
        other => syntax(off, other.to_string()),
    }
}

/// Evaluates an expression tree to a canonical rational function over `field`.
pub fn eval(e: &Expr, field: &NumberField) -> Result<RatFunc, ParseError> {
    let konst = |c: NFElem| RatFunc::constant(c);
    Ok(match e {
        Expr::Int(n, _) => konst(field.from_rational(Rational::from_integer(n.clone()))),
        Expr::Gen(_) => konst(field.generator()),
        Expr::Var(_) => RatFunc::identity(field),
        Expr::Neg(a, _) => {
            let a = eval(a, field)?;
            RatFunc::new(-a.num(), a.den().clone()).expect("same denominator")
        }
        Expr::Add(a, b, off) | Expr::Sub(a, b, off) => {
            let (a, b) = (eval(a, field)?, eval(b, field)?);
            let l = a.num() * b.den();
            let r = b.num() * a.den();
            let num = if matches!(e, Expr::Add(..)) { &l + &r } else { &l - &r };
            RatFunc::new(num, a.den() * b.den()).map_err(|err| core_err(err, *off))?
        }
        Expr::Mul(a, b, off) => {
            let (a, b) = (eval(a, field)?, eval(b, field)?);
            RatFunc::new(a.num() * b.num(), a.den() * b.den()).map_err(|err| core_err(err, *off))?
        }
        Expr::Div(a, b, off) => {
            let (a, b) = (eval(a, field)?, eval(b, field)?);
            if b.num().is_zero() {
                return Err(ParseError::ZeroDenominator { offset: *off });
            }
            RatFunc::new(a.num() * b.den(), a.den() * b.num()).map_err(|err| core_err(err, *off))?
        }
        Expr::Pow(a, k, off) => {
            let a = eval(a, field)?;
            let m = k.unsigned_abs() as u32;
            let (num, den) = (a.num().pow(m), a.den().pow(m));
            if *k >= 0 {
                RatFunc::new(num, den).map_err(|err| core_err(err, *off))?
            } else if a.num().is_zero() {
                return Err(ParseError::ZeroDenominator { offset: *off });
            } else {
                RatFunc::new(den, num).map_err(|err| core_err(err, *off))?
            }
        }
    })
}

/// Parses a rational function in `x` with coefficients in `field` (generator `a`).
pub fn parse_ratfunc(src: &str, field: &NumberField) -> Result<RatFunc, ParseError> {
    eval(&parse_expr(src, field)?, field)
}

/// Parses a field element: an expression in `a` alone.
pub fn parse_elem(src: &str, field: &NumberField) -> Result<NFElem, ParseError> {
    let gen = (!field.is_rationals()).then_some("a");
    let mut p = Parser::new(src, gen, None)?;
    let e = p.expr()?;
    p.finish()?;
    let f = eval(&e, field)?;
    Ok(f.num().coeff(0))
}

/// Parses a field specification: `Q`, or a monic irreducible polynomial in `a`
/// of degree at least 2.
pub fn parse_field(src: &str) -> Result<NumberField, ParseError> {
    if src.trim() == "Q" {
        return Ok(NumberField::rationals());
    }
    let q = NumberField::rationals();
    // read `a` as the polynomial variable over Q
    let mut p = Parser::new(src, None, Some("a"))?;
    let e = p.expr()?;
    p.finish()?;
    let f = eval(&e, &q)?;
    let start = src.len() - src.trim_start().len();
    if !f.is_polynomial() {
        return Err(syntax(start, "modulus must be a polynomial in `a`"));
    }
    let modulus = f.num().to_qpoly().expect("over Q");
    match modulus.degree() {
        Some(d) if d >= 2 => {}
        _ => return Err(syntax(start, "modulus must have degree at least 2 (use `Q` for the rationals)")),
    }
    NumberField::new(modulus).map_err(|e| match e {
        CoreError::NotMonic => ParseError::NotMonic,
        CoreError::Reducible => ParseError::Reducible,
        other => syntax(start, other.to_string()),
    })
}

/// Parses `[[p, q], [r, s]]` into its four entries, row by row.
pub fn parse_matrix(src: &str, field: &NumberField) -> Result<[NFElem; 4], ParseError> {
    let gen = (!field.is_rationals()).then_some("a");
    let mut p = Parser::new(src, gen, None)?;
    let mut entries = Vec::with_capacity(4);
    p.expect('[')?;
    for row in 0..2 {
        if row == 1 {
            p.expect(',')?;
        }
        p.expect('[')?;
        for col in 0..2 {
            if col == 1 {
                p.expect(',')?;
            }
            let e = p.expr()?;
            entries.push(eval(&e, field)?.num().coeff(0));
        }
        p.expect(']')?;
    }
    p.expect(']')?;
    p.finish()?;
    Ok(entries.try_into().expect("four entries"))
}

/// Parses `p/q` or `p` into a reduced fraction with positive denominator.
pub fn parse_angle(src: &str) -> Result<(i64, u64), ParseError> {
    let bad = || syntax(0, "angle must be `p/q` with integers p and q > 0 (meaning p*pi/q)");
    let (p, q) = match src.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (src.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: u64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok((p, q))
}
