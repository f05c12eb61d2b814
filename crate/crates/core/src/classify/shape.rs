use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numfield::{NFElem, NumberField, QPoly, Rational};
use crate::polyrat::{Mobius, Poly, RatFunc};

use super::{divisors_desc, sn_mod};

/// Condition imposed on the pair `(k, t)` of a normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeMode {
    /// `gcd(k, t) = 1`
    Coprime,
    /// `t | S_n(k)`
    Divides(u32),
}

impl ShapeMode {
    pub fn accepts(self, k: u64, t: u64) -> bool {
        match self {
            ShapeMode::Coprime => k.gcd(&t) == 1,
            ShapeMode::Divides(n) => sn_mod(k, n, t) == 0,
        }
    }
}

/// `f = a x^k g(x^t)` with `g` over Q and `a^t` rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub a: NFElem,
    pub k: u64,
    pub t: u64,
    pub g: RatFunc,
}

impl Shape {
    /// `a x^k g(x^t)` over the field of `a`.
    pub fn assemble(&self) -> RatFunc {
        normal_form(&self.a, self.k, self.t, &self.g)
    }
}

/// Certificate that `conjugate(f, ell)` equals `a x^k g(x^t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeWitness {
    pub ell: Mobius,
    pub shape: Shape,
}

impl ShapeWitness {
    /// Re-checks the certificate against `f` by exact conjugation, together
    /// with rationality of `a^t`, of `ell` and of `g`.
    pub fn verify(&self, f: &RatFunc) -> bool {
        let s = &self.shape;
        if !self.ell.field().same_as(f.field()) || !self.ell.is_over_q() || !s.g.is_over_q() {
            return false;
        }
        if s.t == 0 || s.a.pow_u(s.t).is_rational().is_none() {
            return false;
        }
        f.conjugate(&self.ell) == s.assemble()
    }

    pub fn verify_mode(&self, f: &RatFunc, mode: ShapeMode) -> bool {
        self.verify(f) && mode.accepts(self.shape.k, self.shape.t)
    }
}

fn substitute_power(p: &QPoly, t: usize) -> QPoly {
    let mut c = vec![Rational::default(); p.degree().map_or(0, |d| d * t + 1)];
    for (i, x) in p.coeffs().iter().enumerate() {
        c[i * t] = x.clone();
    }
    QPoly::new(c)
}

/// `a x^k g(x^t)` with `g` a rational function over Q (any field of degree 1).
pub fn normal_form(a: &NFElem, k: u64, t: u64, g: &RatFunc) -> RatFunc {
    let field = a.field();
    let gn = g.num().to_qpoly().expect("g over Q");
    let gd = g.den().to_qpoly().expect("g over Q");
    let num = Poly::from_qpoly(field, &substitute_power(&gn, t as usize))
        .scale(a)
        .shift(k as usize);
    let den = Poly::from_qpoly(field, &substitute_power(&gd, t as usize));
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// gcd of all pairwise differences in a support; 0 for fewer than two terms.
fn support_gcd(supp: &[usize]) -> u64 {
    supp.iter().fold(0u64, |acc, &e| acc.gcd(&((e - supp[0]) as u64)))
}

/// Detects `f = a x^k g(x^t)` directly (no conjugation), choosing the largest
/// admissible `t` and the smallest positive `k` in its class modulo `t`.
pub fn shape_detect(f: &RatFunc, mode: ShapeMode) -> Result<Option<Shape>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let num = f.num();
    let den = f.den();
    let a = num.lc();
    let a_inv = a.inv().expect("nonconstant numerator is nonzero");
    let ratios: Option<Vec<Rational>> = num.coeffs().iter().map(|c| (c * &a_inv).is_rational()).collect();
    let Some(ratios) = ratios else { return Ok(None) };
    let Some(den_q) = den.to_qpoly() else { return Ok(None) };
    let num_q = QPoly::new(ratios);

    let supp_n = num.support();
    let supp_d = den.support();
    let g_all = support_gcd(&supp_n).gcd(&support_gcd(&supp_d));
    let rp = supp_n[0] as i64;
    let rq = supp_d[0] as i64;

    let candidates: Vec<u64> = if g_all == 0 {
        // a x^m: t is forced to be the least power making a rational
        match super::least_rational_power(&a) {
            Some(s) => vec![s],
            None => return Ok(None),
        }
    } else {
        divisors_desc(g_all)
    };
    for t in candidates {
        if g_all != 0 && a.pow_u(t).is_rational().is_none() {
            continue;
        }
        let ti = t as i64;
        let diff = rp - rq;
        let mut k = diff.rem_euclid(ti);
        if k == 0 {
            k = ti;
        }
        if !mode.accepts(k as u64, t) {
            continue;
        }
        let m = (diff - k) / ti;
        let compress = |p: &QPoly, r: usize| -> QPoly {
            let c: Vec<Rational> = p.coeffs().iter().skip(r).step_by(t as usize).cloned().collect();
            QPoly::new(c)
        };
        let mut gn = compress(&num_q, supp_n[0]);
        let mut gd = compress(&den_q, supp_d[0]);
        if m >= 0 {
            gn = &gn * &QPoly::monomial(Rational::from_integer(1.into()), m as usize);
        } else {
            gd = &gd * &QPoly::monomial(Rational::from_integer(1.into()), (-m) as usize);
        }
        let q = NumberField::rationals();
        let g = RatFunc::new(Poly::from_qpoly(&q, &gn), Poly::from_qpoly(&q, &gd))?;
        return Ok(Some(Shape { a, k: k as u64, t, g }));
    }
    Ok(None)
}
