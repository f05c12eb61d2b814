//! Field embeddings and adjunction of roots of polynomials over a number field.

use num_traits::One;

use super::linalg::Span;
use super::{factor, NFElem, NumberField, QPoly, Rational};
use crate::error::{Error, Result};

/// A field homomorphism `source -> target`, given by the image of the
/// generator of `source`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: NumberField,
    target: NumberField,
    image: NFElem,
}

impl Embedding {
    /// Checks that `image` is a root of the source modulus.
    pub fn new(source: NumberField, target: NumberField, image: NFElem) -> Result<Self> {
        if !image.field().same_as(&target) {
            return Err(Error::FieldMismatch);
        }
        let emb = Self::new_unchecked(source, target, image);
        let m = emb.source.modulus().clone();
        let at = m
            .coeffs()
            .iter()
            .rev()
            .fold(emb.target.zero(), |acc, c| &(&acc * &emb.image) + &emb.target.from_rational(c.clone()));
        if !at.is_zero() {
            return Err(Error::Precondition("image is not a root of the source modulus".into()));
        }
        Ok(emb)
    }

    pub(crate) fn new_unchecked(source: NumberField, target: NumberField, image: NFElem) -> Self {
        Embedding { source, target, image }
    }

    pub fn identity(field: &NumberField) -> Self {
        Embedding { source: field.clone(), target: field.clone(), image: field.generator() }
    }

    pub fn source(&self) -> &NumberField {
        &self.source
    }

    pub fn target(&self) -> &NumberField {
        &self.target
    }

    /// Image of the generator of the source field.
    pub fn image(&self) -> &NFElem {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.source.same_as(&self.target) && self.image == self.target.generator()
    }

    pub fn apply(&self, e: &NFElem) -> Result<NFElem> {
        if !e.field().same_as(&self.source) {
            return Err(Error::FieldMismatch);
        }
        if self.is_identity() {
            return Ok(e.clone());
        }
        Ok(e.coords().iter().rev().fold(self.target.zero(), |acc, c| {
            &(&acc * &self.image) + &self.target.from_rational(c.clone())
        }))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Embedding) -> Result<Embedding> {
        if !self.target.same_as(&other.source) {
            return Err(Error::FieldMismatch);
        }
        Ok(Embedding {
            source: self.source.clone(),
            target: other.target.clone(),
            image: other.apply(&self.image)?,
        })
    }
}

/// Elements of `L[y]/(P)` for monic `P`, as coefficient vectors in `y`.
struct Algebra<'a> {
    base: &'a NumberField,
    modulus: &'a [NFElem],
}

impl Algebra<'_> {
    fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    fn mul(&self, a: &[NFElem], b: &[NFElem]) -> Vec<NFElem> {
        let m = self.m();
        let mut prod = vec![self.base.zero(); 2 * m - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = &prod[i + j] + &(x * y);
            }
        }
        for k in (m..prod.len()).rev() {
            let c = prod[k].clone();
            if c.is_zero() {
                continue;
            }
            for (j, mc) in self.modulus[..m].iter().enumerate() {
                prod[k - m + j] = &prod[k - m + j] - &(&c * mc);
            }
        }
        prod.truncate(m);
        prod
    }

    fn flatten(&self, a: &[NFElem]) -> Vec<Rational> {
        a.iter().flat_map(|c| c.coords().iter().cloned()).collect()
    }
}

/// Adjoins a root of the monic square-free polynomial `P(y) = sum coeffs[i] y^i`
/// over `base`. Returns a field `M`, an embedding `base -> M` and a root of
/// `P` in `M`. When a root already lies in `base`, `M` is `base` itself with
/// the identity embedding; otherwise the smallest irreducible factor is used.
pub fn adjoin_root(base: &NumberField, coeffs: &[NFElem]) -> Result<(NumberField, Embedding, NFElem)> {
    if coeffs.iter().any(|c| !c.field().same_as(base)) {
        return Err(Error::FieldMismatch);
    }
    let m = coeffs.len().checked_sub(1).filter(|&m| m >= 1).ok_or(Error::ZeroDegree)?;
    if !coeffs[m].is_one() {
        return Err(Error::NotMonic);
    }
    if m == 1 {
        return Ok((base.clone(), Embedding::identity(base), -&coeffs[0]));
    }
    let n = base.degree();
    let alg = Algebra { base, modulus: coeffs };
    let dim = n * m;
    let theta: Vec<NFElem> = {
        let mut v = vec![base.zero(); m];
        v[0] = base.generator();
        v
    };
    let y: Vec<NFElem> = {
        let mut v = vec![base.zero(); m];
        v[1] = base.one();
        v
    };
    let shifts = (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] });
    for k in shifts.take(4 * dim + 8) {
        // γ = y + kθ generates the algebra for all but finitely many k
        let mut gamma = y.clone();
        gamma[0] = base.generator().scale(&Rational::from_integer(k.into()));
        let mut span = Span::new(dim);
        let mut power: Vec<NFElem> = {
            let mut v = vec![base.zero(); m];
            v[0] = base.one();
            v
        };
        let mu = loop {
            match span.insert(&alg.flatten(&power)) {
                Ok(()) => power = alg.mul(&power, &gamma),
                Err(c) => {
                    let mut c: Vec<Rational> = c.into_iter().map(|x| -x).collect();
                    c.push(Rational::one());
                    break QPoly::new(c);
                }
            }
        };
        if mu.degree() != Some(dim) {
            continue;
        }
        if !mu.is_squarefree() {
            return Err(Error::Precondition("polynomial is not square-free".into()));
        }
        let (h, _) = factor(&mu).into_iter().next().expect("nonconstant");
        let field = NumberField::new_unchecked(h.clone());
        let image_of = |v: &[NFElem]| -> NFElem {
            let c = span.express(&alg.flatten(v)).expect("γ generates the algebra");
            field.from_poly(&QPoly::new(c))
        };
        let img_theta = image_of(&theta);
        let img_y = image_of(&y);
        if h.degree() == Some(n) {
            // the component is isomorphic to base: pull the root back
            let mut back = Span::new(n);
            let mut p = field.one();
            for _ in 0..n {
                back.insert(p.coords()).expect("image of a basis");
                p = &p * &img_theta;
            }
            let c = back.express(img_y.coords()).expect("root lies in the image");
            let root = base.from_poly(&QPoly::new(c));
            return Ok((base.clone(), Embedding::identity(base), root));
        }
        let emb = Embedding::new_unchecked(base.clone(), field.clone(), img_theta);
        return Ok((field, emb, img_y));
    }
    Err(Error::Inconsistent("no primitive element found for the extension".into()))
}

/// A root of `y^2 + p y + q` over `base`, in `base` itself when possible and in
/// a quadratic extension otherwise.
pub fn adjoin_quadratic_root(
    base: &NumberField,
    p: &NFElem,
    q: &NFElem,
) -> Result<(NumberField, Embedding, NFElem)> {
    if !p.field().same_as(base) || !q.field().same_as(base) {
        return Err(Error::FieldMismatch);
    }
    let disc = &(p * p) - &q.scale(&Rational::from_integer(4.into()));
    if disc.is_zero() {
        let half = Rational::new((-1).into(), 2.into());
        return Ok((base.clone(), Embedding::identity(base), p.scale(&half)));
    }
    adjoin_root(base, &[q.clone(), p.clone(), base.one()])
}
