//! Subfields of a number field as multiplicatively closed Q-subspaces.

use num_traits::{One, Zero};

use super::linalg::Span;
use super::{Embedding, NFElem, NumberField, QPoly, Rational};
use crate::error::{Error, Result};

/// A subfield of `ambient`, described by a reduced echelon Q-basis, a primitive
/// element and the minimal polynomial of that primitive element.
#[derive(Clone, Debug)]
pub struct Subfield {
    ambient: NumberField,
    basis: Vec<NFElem>,
    primitive: NFElem,
    minpoly: QPoly,
}

fn check_all(ambient: &NumberField, elems: &[NFElem]) -> Result<()> {
    if elems.iter().all(|e| e.field().same_as(ambient)) {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl Subfield {
    /// The copy of Q inside `ambient`.
    pub fn rationals(ambient: &NumberField) -> Subfield {
        Subfield {
            ambient: ambient.clone(),
            basis: vec![ambient.one()],
            primitive: ambient.zero(),
            minpoly: QPoly::x(),
        }
    }

    /// The whole ambient field.
    pub fn whole(ambient: &NumberField) -> Subfield {
        let gen = ambient.generator();
        Self::generated(ambient, std::slice::from_ref(&gen)).expect("generator lies in its field")
    }

    /// Smallest subfield of `ambient` containing `elems`.
    pub fn generated(ambient: &NumberField, elems: &[NFElem]) -> Result<Subfield> {
        check_all(ambient, elems)?;
        let n = ambient.degree();
        let gens: Vec<&NFElem> = elems.iter().filter(|e| e.is_rational().is_none()).collect();
        let mut span = Span::new(n);
        let mut kept = vec![ambient.one()];
        span.insert(ambient.one().coords()).expect("1 is nonzero");
        // linear span first, so that closure starts from a large set
        for g in &gens {
            if span.rank() == n {
                break;
            }
            if span.insert(g.coords()).is_ok() {
                kept.push((*g).clone());
            }
        }
        // closure under a basis of the generators' span is closure under all of them
        let distinct: Vec<NFElem> = kept[1..].to_vec();
        let mut idx = 0;
        while idx < kept.len() && span.rank() < n {
            for g in &distinct {
                let v = &kept[idx] * g;
                if span.insert(v.coords()).is_ok() {
                    kept.push(v);
                }
            }
            idx += 1;
        }
        Ok(Self::from_span(ambient, &span, &distinct))
    }

    /// Builds the record for a span already known to be a subfield.
    fn from_span(ambient: &NumberField, span: &Span, hints: &[NFElem]) -> Subfield {
        let basis: Vec<NFElem> = span.rref().into_iter().map(|c| ambient.elem(c)).collect();
        let dim = basis.len();
        if dim == 1 {
            return Self::rationals(ambient);
        }
        let mut candidates = hints.iter().cloned().chain(basis.iter().cloned());
        let found = candidates.find_map(|c| {
            let mp = c.minimal_polynomial();
            (mp.degree() == Some(dim)).then_some((c, mp))
        });
        let (primitive, minpoly) = found.unwrap_or_else(|| {
            // moment-curve combinations sum j^i b_i leave every proper
            // subspace after finitely many j
            (2i64..)
                .find_map(|j| {
                    let mut c = ambient.zero();
                    let mut w = Rational::one();
                    for b in &basis {
                        c = &c + &b.scale(&w);
                        w *= Rational::from_integer(j.into());
                    }
                    let mp = c.minimal_polynomial();
                    (mp.degree() == Some(dim)).then_some((c, mp))
                })
                .expect("primitive element exists")
        });
        Subfield { ambient: ambient.clone(), basis, primitive, minpoly }
    }

    pub fn ambient(&self) -> &NumberField {
        &self.ambient
    }

    pub fn basis(&self) -> &[NFElem] {
        &self.basis
    }

    pub fn primitive(&self) -> &NFElem {
        &self.primitive
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.minpoly
    }

    /// Degree over Q.
    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn is_rationals(&self) -> bool {
        self.basis.len() == 1
    }

    fn span(&self) -> Span {
        let mut span = Span::new(self.ambient.degree());
        for b in &self.basis {
            span.insert(b.coords()).expect("basis is independent");
        }
        span
    }

    pub fn contains(&self, e: &NFElem) -> Result<bool> {
        if !e.field().same_as(&self.ambient) {
            return Err(Error::FieldMismatch);
        }
        if e.is_rational().is_some() {
            return Ok(true);
        }
        Ok(self.span().contains(e.coords()))
    }

    /// True when `self` is contained in `other`.
    pub fn is_subfield_of(&self, other: &Subfield) -> bool {
        let span = other.span();
        self.basis.iter().all(|b| span.contains(b.coords()))
    }

    /// Equality of underlying subspaces.
    pub fn same_span(&self, other: &Subfield) -> bool {
        self.ambient.same_as(&other.ambient) && self.basis == other.basis
    }

    pub fn intersect(&self, other: &Subfield) -> Result<Subfield> {
        if !self.ambient.same_as(&other.ambient) {
            return Err(Error::FieldMismatch);
        }
        let n = self.ambient.degree();
        let mut joint = Span::new(n);
        for b in &self.basis {
            joint.insert(b.coords()).expect("basis is independent");
        }
        let k = self.basis.len();
        let mut common = Span::new(n);
        for c in &other.basis {
            // a dependency c = sum x_i b_i + sum y_j c_j puts sum x_i b_i in both
            if let Err(coords) = joint.insert(c.coords()) {
                let mut v = vec![Rational::zero(); n];
                for (x, b) in coords.iter().take(k).zip(&self.basis) {
                    for (vi, bi) in v.iter_mut().zip(b.coords()) {
                        *vi += x * bi;
                    }
                }
                let _ = common.insert(&v);
            }
        }
        if common.rank() == 0 {
            return Ok(Self::rationals(&self.ambient));
        }
        let hints = [self.primitive.clone(), other.primitive.clone()];
        Ok(Self::from_span(&self.ambient, &common, &hints))
    }

    /// Writes `e` as a polynomial in the primitive element, of degree below
    /// [`Self::degree`], when `e` lies in the subfield.
    pub fn as_primitive_poly(&self, e: &NFElem) -> Option<QPoly> {
        if let Some(r) = e.is_rational() {
            return Some(QPoly::constant(r));
        }
        let mut span = Span::new(self.ambient.degree());
        let mut p = self.ambient.one();
        for _ in 0..self.degree() {
            span.insert(p.coords()).expect("primitive powers are independent");
            p = &p * &self.primitive;
        }
        span.express(e.coords()).map(QPoly::new)
    }

    /// An abstract copy `Q[x]/(minpoly)` of the subfield and its embedding
    /// into the ambient field.
    pub fn as_field(&self) -> (NumberField, Embedding) {
        let field = NumberField::new_unchecked(self.minpoly.clone());
        let image = if self.is_rationals() { self.ambient.zero() } else { self.primitive.clone() };
        let emb = Embedding::new_unchecked(field.clone(), self.ambient.clone(), image);
        (field, emb)
    }
}
