use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::{Embedding, NFElem, NumberField};

use super::{Mobius, Poly, ProjPoint};

/// A rational function `num/den` with coprime parts and monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonical form of `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if !num.field().same_as(den.field()) {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc { den: Poly::one(num.field()), num });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        Ok(Self::normalize(num, den))
    }

    /// Makes the denominator monic; the parts must already be coprime.
    fn normalize(num: Poly, den: Poly) -> Self {
        if den.is_monic() {
            return RatFunc { num, den };
        }
        let inv = den.lc().inv().expect("nonzero denominator");
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.field());
        RatFunc { num: p, den }
    }

    pub fn identity(field: &NumberField) -> Self {
        Self::from_poly(Poly::x(field))
    }

    pub fn constant(c: NFElem) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &NumberField {
        self.num.field()
    }

    /// `max(deg num, deg den)`; constants have degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn is_identity(&self) -> bool {
        self.is_polynomial() && self.num == Poly::x(self.field())
    }

    /// All coefficients of numerator and denominator.
    pub fn coefficients(&self) -> impl Iterator<Item = &NFElem> {
        self.num.coeffs().iter().chain(self.den.coeffs())
    }

    pub fn is_over_q(&self) -> bool {
        self.coefficients().all(|c| c.is_rational().is_some())
    }

    /// `self(g(x))`, computed on homogenized parts. The result needs no gcd:
    /// for coprime `P/Q` of degree `d` and coprime `p/q`, a common root of
    /// `P^h(p,q)` and `Q^h(p,q)` would force `q = 0` and then both leading
    /// terms of degree `d` to vanish.
    ///
    /// Panics if `g` is a constant at which `self` has a pole.
    pub fn compose(&self, g: &RatFunc) -> RatFunc {
        assert!(self.field().same_as(g.field()), "rational functions over different fields");
        let d = self.degree();
        let field = self.field();
        if g.is_polynomial() {
            let num = self.num.compose(&g.num);
            let den = self.den.compose(&g.num);
            assert!(!den.is_zero(), "constant argument is a pole");
            return Self::normalize(num, den);
        }
        let mut ppow = vec![Poly::one(field)];
        let mut qpow = vec![Poly::one(field)];
        for i in 1..=d {
            ppow.push(&ppow[i - 1] * &g.num);
            qpow.push(&qpow[i - 1] * &g.den);
        }
        let mut num = Poly::zero(field);
        let mut den = Poly::zero(field);
        for i in 0..=d {
            let a = self.num.coeff(i);
            let b = self.den.coeff(i);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let term = &ppow[i] * &qpow[d - i];
            if !a.is_zero() {
                num = &num + &term.scale(&a);
            }
            if !b.is_zero() {
                den = &den + &term.scale(&b);
            }
        }
        assert!(!den.is_zero(), "constant argument is a pole");
        Self::normalize(num, den)
    }

    /// `f^{∘n}`, with `f^{∘0}` the identity.
    pub fn iterate(&self, n: usize) -> RatFunc {
        if n == 0 {
            return Self::identity(self.field());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// `ℓ⁻¹ ∘ f ∘ ℓ`.
    pub fn conjugate(&self, l: &Mobius) -> RatFunc {
        l.inverse().to_ratfunc().compose(&self.compose(&l.to_ratfunc()))
    }

    pub fn evaluate(&self, p: &ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Finite(x) => {
                let d = self.den.eval(x);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(&self.num.eval(x) * &d.inv().expect("nonzero"))
                }
            }
            ProjPoint::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("nonzero denominator");
                match dn {
                    None => ProjPoint::Finite(self.field().zero()),
                    Some(dn) if dn > dd => ProjPoint::Infinity,
                    Some(dn) if dn == dd => ProjPoint::Finite(self.num.lc()),
                    Some(_) => ProjPoint::Finite(self.field().zero()),
                }
            }
        }
    }

    /// Applies a field embedding to every coefficient.
    pub fn map(&self, emb: &Embedding) -> Result<RatFunc> {
        Ok(RatFunc { num: self.num.map(emb)?, den: self.den.map(emb)? })
    }

    /// Renders as `num` or `(num)/(den)` in the golden text format.
    pub fn display_in(&self, var: &str) -> String {
        let num = self.num.display_in(var);
        if self.is_polynomial() {
            return num;
        }
        let wrap = |p: &Poly, s: String| if p.term_count() > 1 { format!("({s})") } else { s };
        let den = self.den.display_in(var);
        format!("{}/{}", wrap(&self.num, num), wrap(&self.den, den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.display_in("x"))
    }
}
