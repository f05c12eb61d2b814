//! Absolute number fields `Q[x]/(m)` and their elements.

pub mod extension;
pub mod factor;
pub mod linalg;
pub mod qpoly;
pub mod subfield;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
pub use extension::{adjoin_quadratic_root, adjoin_root, Embedding};
pub use factor::{factor, is_irreducible, rational_roots};
pub use qpoly::QPoly;
pub use subfield::Subfield;

pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

struct FieldData {
    modulus: QPoly,
    degree: usize,
    // x^(degree + j) reduced modulo the modulus, for j < degree - 1
    reductions: Vec<Vec<Rational>>,
}

/// The field `Q[θ]/(m(θ))` for a monic irreducible `m`. Cloning is cheap.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// Builds the field after checking that `modulus` is monic and irreducible.
    pub fn new(modulus: QPoly) -> Result<Self> {
        match modulus.degree() {
            None | Some(0) => return Err(Error::ZeroDegree),
            _ => {}
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(&modulus) {
            return Err(Error::Reducible);
        }
        Ok(Self::new_unchecked(modulus))
    }

    /// Builds the field without the irreducibility test.
    pub(crate) fn new_unchecked(modulus: QPoly) -> Self {
        let degree = modulus.degree().expect("modulus of positive degree");
        debug_assert!(degree >= 1 && modulus.is_monic());
        let mut reductions = Vec::new();
        if degree >= 2 {
            // x^n = -(m_0 + ... + m_{n-1} x^{n-1})
            let mut cur: Vec<Rational> =
                modulus.coeffs()[..degree].iter().map(|c| -c).collect();
            for _ in 0..degree - 1 {
                reductions.push(cur.clone());
                let top = cur[degree - 1].clone();
                let mut next = vec![Rational::zero(); degree];
                next[1..degree].clone_from_slice(&cur[..degree - 1]);
                if !top.is_zero() {
                    for (nx, r) in next.iter_mut().zip(&reductions[0]) {
                        *nx += &top * r;
                    }
                }
                cur = next;
            }
        }
        NumberField(Arc::new(FieldData { modulus, degree, reductions }))
    }

    /// Q itself, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::new_unchecked(QPoly::x())
    }

    pub fn modulus(&self) -> &QPoly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.0.degree == 1
    }

    /// Two handles describe the same field when their moduli agree.
    pub fn same_as(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }

    pub fn zero(&self) -> NFElem {
        NFElem { field: self.clone(), coords: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> NFElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> NFElem {
        let mut e = self.zero();
        e.coords[0] = r;
        e
    }

    pub fn from_int(&self, n: i64) -> NFElem {
        self.from_rational(rat(n))
    }

    /// The class of `x`, i.e. the root θ of the modulus.
    pub fn generator(&self) -> NFElem {
        if self.is_rationals() {
            return self.from_rational(-self.modulus().coeff(0));
        }
        let mut e = self.zero();
        e.coords[1] = Rational::one();
        e
    }

    /// The element `p(θ)` for a rational polynomial `p`.
    pub fn from_poly(&self, p: &QPoly) -> NFElem {
        let r = p.rem(self.modulus());
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.degree(), Rational::zero());
        NFElem { field: self.clone(), coords }
    }

    /// Element with the given power-basis coordinates. Panics on a length mismatch.
    pub fn elem(&self, coords: Vec<Rational>) -> NFElem {
        assert_eq!(coords.len(), self.degree(), "coordinate count must equal field degree");
        NFElem { field: self.clone(), coords }
    }

    pub fn elem_from_ints(&self, coords: &[i64]) -> NFElem {
        let mut c: Vec<Rational> = coords.iter().map(|&x| rat(x)).collect();
        c.resize(self.degree(), Rational::zero());
        self.elem(c)
    }

    fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.degree();
        if n == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let (low, high) = prod.split_at_mut(n);
        for (j, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, r) in low.iter_mut().zip(&self.0.reductions[j]) {
                if !r.is_zero() {
                    *l += c * r;
                }
            }
        }
        prod.truncate(n);
        prod
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.modulus().display_in("a"))
    }
}

/// `Φ_n` as a rational polynomial.
pub fn cyclotomic_polynomial(n: u64) -> QPoly {
    assert!(n >= 1);
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    let mut p = QPoly::new(num);
    for d in 1..n {
        if n % d == 0 {
            p = p.div_rem(&cyclotomic_polynomial(d)).0;
        }
    }
    p
}

/// `Q(ζ_n)` with generator a primitive n-th root of unity.
pub fn cyclotomic_field(n: u64) -> NumberField {
    NumberField::new_unchecked(cyclotomic_polynomial(n))
}

/// Real t-th root of a rational number, if it is rational.
fn rational_root(c: &Rational, t: u32) -> Option<Rational> {
    if c.is_negative() && t % 2 == 0 {
        return None;
    }
    let root_int = |n: &BigInt| -> Option<BigInt> {
        let r = n.abs().nth_root(t);
        (r.pow(t) == n.abs()).then(|| if n.is_negative() { -r } else { r })
    };
    Some(Rational::new(root_int(c.numer())?, root_int(c.denom())?))
}

/// The field generated by the real t-th root `r` of `c`, together with `r`.
///
/// With `m` the largest divisor of `t` for which `c = u^m` with `u` rational
/// (and real, of the sign of the root), the minimal polynomial of `r` is
/// `x^(t/m) - u`.
pub fn radical_field(c: &Rational, t: u32) -> Result<(NumberField, NFElem)> {
    if c.is_zero() {
        return Err(Error::ZeroRadicand);
    }
    if t == 0 {
        return Err(Error::ZeroDegree);
    }
    if c.is_negative() && t % 2 == 0 {
        return Err(Error::NoRealRoot);
    }
    let mut best = (1u32, c.clone());
    for m in (1..=t).rev() {
        if t % m != 0 {
            continue;
        }
        if let Some(u) = rational_root(c, m) {
            best = (m, u);
            break;
        }
    }
    let (m, u) = best;
    let e = (t / m) as usize;
    if e == 1 {
        let field = NumberField::rationals();
        let r = field.from_rational(u);
        return Ok((field, r));
    }
    let mut coeffs = vec![Rational::zero(); e + 1];
    coeffs[0] = -u;
    coeffs[e] = Rational::one();
    let field = NumberField::new_unchecked(QPoly::new(coeffs));
    let r = field.generator();
    Ok((field, r))
}

/// An element of a [`NumberField`], stored by its coordinates in the power
/// basis `1, θ, ..., θ^(n-1)`.
#[derive(Clone)]
pub struct NFElem {
    field: NumberField,
    coords: Vec<Rational>,
}

impl NFElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Coordinates as a rational polynomial in θ.
    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, when it is one.
    pub fn is_rational(&self) -> Option<Rational> {
        self.coords[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coords[0].clone())
    }

    fn check(&self, other: &NFElem) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &NFElem) -> Result<NFElem> {
        self.check(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> NFElem {
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<NFElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.is_rationals() {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        // extended Euclid on (self, modulus) over Q
        let m = self.field.modulus();
        let (mut r0, mut r1) = (m.clone(), self.to_qpoly());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        debug_assert_eq!(r0.degree(), Some(0));
        Ok(self.field.from_poly(&t0.scale(&r0.lc().recip())))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<NFElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_u(e.unsigned_abs()))
    }

    pub fn pow_u(&self, mut e: u64) -> NFElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    /// Minimal polynomial over Q: the first linear dependency among
    /// `1, e, e^2, ...`.
    pub fn minimal_polynomial(&self) -> QPoly {
        if let Some(r) = self.is_rational() {
            return QPoly::new(vec![-r, Rational::one()]);
        }
        let mut span = linalg::Span::new(self.field.degree());
        let mut power = self.field.one();
        loop {
            match span.insert(&power.coords) {
                Ok(()) => power = &power * self,
                Err(coords) => {
                    let mut c: Vec<Rational> = coords.into_iter().map(|x| -x).collect();
                    c.push(Rational::one());
                    return QPoly::new(c);
                }
            }
        }
    }

    /// Compact rendering in the generator symbol `var`, e.g. `-a+2` or `1/2*a^2-3`.
    pub fn display_in(&self, var: &str) -> String {
        self.to_qpoly().display_in(var).replace(' ', "")
    }
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.coords == other.coords
    }
}

impl Eq for NFElem {}

impl std::hash::Hash for NFElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("a"))
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("a"))
    }
}

fn assert_same(a: &NFElem, b: &NFElem) {
    assert!(a.field.same_as(&b.field), "arithmetic on elements of different number fields");
}

impl Add for &NFElem {
    type Output = NFElem;
    fn add(self, rhs: &NFElem) -> NFElem {
        assert_same(self, rhs);
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &NFElem) -> NFElem {
        assert_same(self, rhs);
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &NFElem) -> NFElem {
        assert_same(self, rhs);
        NFElem {
            field: self.field.clone(),
            coords: self.field.mul_coords(&self.coords, &rhs.coords),
        }
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        -&self
    }
}
