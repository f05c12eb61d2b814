use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::{Embedding, NFElem, NumberField, Rational};

use super::{Poly, RatFunc};

/// A point of the projective line over a number field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(NFElem),
    Infinity,
}

impl ProjPoint {
    pub fn finite(&self) -> Option<&NFElem> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    /// True for ∞ and for finite points with a rational value.
    pub fn is_rational(&self) -> bool {
        match self {
            ProjPoint::Finite(x) => x.is_rational().is_some(),
            ProjPoint::Infinity => true,
        }
    }

    pub fn map(&self, emb: &Embedding) -> Result<ProjPoint> {
        Ok(match self {
            ProjPoint::Finite(x) => ProjPoint::Finite(emb.apply(x)?),
            ProjPoint::Infinity => ProjPoint::Infinity,
        })
    }

    /// Order used for deterministic enumeration: finite points by value, then ∞.
    /// Only meaningful for rational points.
    pub fn rational_key(&self) -> (u8, Rational) {
        match self {
            ProjPoint::Finite(x) => (0, x.coords()[0].clone()),
            ProjPoint::Infinity => (1, Rational::from_integer(0.into())),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// The fractional linear map `(a x + b)/(c x + d)`, equal to every nonzero
/// multiple of itself.
#[derive(Clone)]
pub struct Mobius {
    a: NFElem,
    b: NFElem,
    c: NFElem,
    d: NFElem,
}

impl Mobius {
    pub fn new(a: NFElem, b: NFElem, c: NFElem, d: NFElem) -> Result<Self> {
        let f = a.field();
        if ![&b, &c, &d].iter().all(|e| e.field().same_as(f)) {
            return Err(Error::FieldMismatch);
        }
        let m = Mobius { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    pub fn from_rationals(field: &NumberField, entries: [Rational; 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(|r| field.from_rational(r));
        Self::new(a, b, c, d)
    }

    pub fn from_ints(field: &NumberField, entries: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(|r| field.from_int(r));
        Self::new(a, b, c, d)
    }

    pub fn identity(field: &NumberField) -> Self {
        Mobius { a: field.one(), b: field.zero(), c: field.zero(), d: field.one() }
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn entries(&self) -> [&NFElem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> NFElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        Mobius {
            a: &(a * e) + &(b * g),
            b: &(a * f) + &(b * h),
            c: &(c * e) + &(d * g),
            d: &(c * f) + &(d * h),
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    /// Representative with the first nonzero entry equal to 1.
    pub fn normalized(&self) -> Mobius {
        let pivot = self.entries().into_iter().find(|e| !e.is_zero()).expect("invertible");
        let inv = pivot.inv().expect("nonzero");
        Mobius { a: &self.a * &inv, b: &self.b * &inv, c: &self.c * &inv, d: &self.d * &inv }
    }

    /// True when some multiple of the matrix has rational entries.
    pub fn is_over_q(&self) -> bool {
        self.normalized().entries().iter().all(|e| e.is_rational().is_some())
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let f = self.field();
        let num = Poly::new(f, vec![self.b.clone(), self.a.clone()]);
        let den = Poly::new(f, vec![self.d.clone(), self.c.clone()]);
        RatFunc::new(num, den).expect("invertible map has a nonzero denominator")
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Finite(x) => {
                let den = &(&self.c * x) + &self.d;
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    let num = &(&self.a * x) + &self.b;
                    ProjPoint::Finite(&num * &den.inv().expect("nonzero"))
                }
            }
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(&self.a * &self.c.inv().expect("nonzero"))
                }
            }
        }
    }

    /// A map with `ℓ(0) = p` and `ℓ(∞) = q`: `(q x + p)/(x + 1)` for finite
    /// points, `x + p` when `q = ∞`, `(q x + 1)/x` when `p = ∞`.
    pub fn from_pair(p: &ProjPoint, q: &ProjPoint) -> Result<Mobius> {
        if p == q {
            return Err(Error::EqualPoints);
        }
        match (p, q) {
            (ProjPoint::Finite(p), ProjPoint::Finite(q)) => {
                let f = p.field();
                Mobius::new(q.clone(), p.clone(), f.one(), f.one())
            }
            (ProjPoint::Finite(p), ProjPoint::Infinity) => {
                let f = p.field();
                Mobius::new(f.one(), p.clone(), f.zero(), f.one())
            }
            (ProjPoint::Infinity, ProjPoint::Finite(q)) => {
                let f = q.field();
                Mobius::new(q.clone(), f.one(), f.one(), f.zero())
            }
            (ProjPoint::Infinity, ProjPoint::Infinity) => unreachable!(),
        }
    }

    pub fn map(&self, emb: &Embedding) -> Result<Mobius> {
        Mobius::new(emb.apply(&self.a)?, emb.apply(&self.b)?, emb.apply(&self.c)?, emb.apply(&self.d)?)
    }
}

impl PartialEq for Mobius {
    /// Projective equality: all 2x2 minors of the two entry vectors vanish.
    fn eq(&self, other: &Self) -> bool {
        if !self.field().same_as(other.field()) {
            return false;
        }
        let x = self.entries();
        let y = other.entries();
        (0..4).all(|i| (i + 1..4).all(|j| (&(x[i] * y[j]) - &(x[j] * y[i])).is_zero()))
    }
}

impl Eq for Mobius {}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfunc())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::QPoly;

    #[test]
    fn group_operations() {
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
        let r2 = k.generator();
        let m = Mobius::new(r2.clone(), k.zero(), k.zero(), k.one()).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let expect = Mobius::new(r2.scale(&half), k.zero(), k.zero(), k.one()).unwrap();
        assert_eq!(m.inverse(), expect);
        assert_eq!(m.inverse().compose(&m), Mobius::identity(&k));
        let q = NumberField::rationals();
        let plus = Mobius::from_ints(&q, [1, 1, 0, 1]).unwrap();
        let minus = Mobius::from_ints(&q, [1, -1, 0, 1]).unwrap();
        assert_eq!(plus.compose(&minus), Mobius::identity(&q));
        assert_eq!(Mobius::from_ints(&q, [1, 2, 2, 4]).unwrap_err(), Error::Singular);
    }

    #[test]
    fn pairs() {
        let q = NumberField::rationals();
        let zero = ProjPoint::Finite(q.zero());
        let one = ProjPoint::Finite(q.one());
        let three = ProjPoint::Finite(q.from_int(3));
        let inf = ProjPoint::Infinity;
        assert_eq!(Mobius::from_pair(&zero, &inf).unwrap(), Mobius::identity(&q));
        assert_eq!(Mobius::from_pair(&one, &inf).unwrap(), Mobius::from_ints(&q, [1, 1, 0, 1]).unwrap());
        let m = Mobius::from_pair(&inf, &three).unwrap();
        assert_eq!(m, Mobius::from_ints(&q, [3, 1, 1, 0]).unwrap());
        assert_eq!(m.apply(&zero), inf);
        assert_eq!(m.apply(&inf), three);
        assert_eq!(Mobius::from_pair(&one, &one).unwrap_err(), Error::EqualPoints);
    }
}
