use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numfield::{Embedding, NFElem, NumberField, QPoly, Rational};

/// Dense polynomial with number-field coefficients, ascending, trailing zeros
/// removed. The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: NumberField,
    coeffs: Vec<NFElem>,
}

impl Poly {
    pub fn new(field: &NumberField, mut coeffs: Vec<NFElem>) -> Self {
        assert!(coeffs.iter().all(|c| c.field().same_as(field)), "coefficient from another field");
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &NumberField) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::constant(field.one())
    }

    pub fn x(field: &NumberField) -> Self {
        Poly { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    pub fn constant(c: NFElem) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// `c * x^n`
    pub fn monomial(c: NFElem, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Self::new(&field, coeffs)
    }

    pub fn from_qpoly(field: &NumberField, p: &QPoly) -> Self {
        Self::new(field, p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect())
    }

    pub fn from_ints(field: &NumberField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NFElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> NFElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn scale(&self, s: &NFElem) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn eval(&self, x: &NFElem) -> NFElem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(&self.field, quot), Self::new(&self.field, rem))
    }

    /// Monic gcd by Euclid's algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if !self.field.same_as(&other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(&self.field), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// The polynomial as one over Q, when all coefficients are rational.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_rational())
            .collect::<Option<Vec<_>>>()
            .map(QPoly::new)
    }

    pub fn is_over_q(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational().is_some())
    }

    /// Splits `self = sum_j θ^j P_j(x)` into the rational polynomials `P_j`.
    pub fn coordinate_polys(&self) -> Vec<QPoly> {
        (0..self.field.degree())
            .map(|j| QPoly::new(self.coeffs.iter().map(|c| c.coords()[j].clone()).collect()))
            .collect()
    }

    pub fn map(&self, emb: &Embedding) -> Result<Poly> {
        let coeffs = self.coeffs.iter().map(|c| emb.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(emb.target(), coeffs))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { field: self.field.clone(), coeffs }
    }

    fn combine(&self, rhs: &Poly, op: impl Fn(&NFElem, &NFElem) -> NFElem) -> Poly {
        assert!(self.field.same_as(&rhs.field), "polynomials over different fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            &self.field,
            (0..n)
                .map(|i| op(self.coeffs.get(i).unwrap_or(&z), rhs.coeffs.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    /// Renders in the golden text format, e.g. `x^2 + (-2*a+4)*x - 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = coeff_body(c);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (mono.is_empty(), body.as_str()) {
                (true, _) => out.push_str(&body),
                (false, "1") => out.push_str(&mono),
                (false, _) => {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// Sign and absolute rendering of a coefficient; coefficients with several
/// power-basis terms are parenthesized and carry no sign of their own.
fn coeff_body(c: &NFElem) -> (bool, String) {
    let nonzero: Vec<(usize, &Rational)> =
        c.coords().iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    if nonzero.len() == 1 {
        let (j, x) = nonzero[0];
        let abs = x.abs();
        let gen = match j {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{j}"),
        };
        let body = if gen.is_empty() {
            abs.to_string()
        } else if abs == Rational::from_integer(1.into()) {
            gen
        } else {
            format!("{abs}*{gen}")
        };
        return (x.is_negative(), body);
    }
    (false, format!("({})", c.display_in("a")))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field.same_as(&rhs.field), "polynomials over different fields");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(&self.field, out)
    }
}
