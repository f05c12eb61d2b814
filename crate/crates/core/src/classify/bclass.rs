use crate::error::{Error, Result};
use crate::polyrat::{Mobius, ProjPoint, RatFunc};

use super::periodic::{rational_periodic_points, PeriodicData};
use super::shape::{shape_detect, ShapeMode, ShapeWitness};

/// Outcome of the `B(Q)` test: membership with a witness, or the obstruction.
#[derive(Clone, Debug)]
pub enum BVerdict {
    Member(ShapeWitness),
    NotMember(String),
}

impl BVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, BVerdict::Member(_))
    }

    pub fn witness(&self) -> Option<&ShapeWitness> {
        match self {
            BVerdict::Member(w) => Some(w),
            BVerdict::NotMember(_) => None,
        }
    }
}

/// Ordered pairs `(p, q)` of distinct rational points with `f({p, q}) ⊆ {p, q}`.
pub(crate) fn invariant_pairs(data: &PeriodicData) -> Vec<(ProjPoint, ProjPoint)> {
    let mut pairs = Vec::new();
    for (i, p) in data.fixed.iter().enumerate() {
        for q in &data.fixed[i + 1..] {
            pairs.push((p.clone(), q.clone()));
            pairs.push((q.clone(), p.clone()));
        }
    }
    for (p, q) in &data.two_cycles {
        pairs.push((p.clone(), q.clone()));
        pairs.push((q.clone(), p.clone()));
    }
    for (q, p) in &data.fixed_preimages {
        pairs.push((p.clone(), q.clone()));
        pairs.push((q.clone(), p.clone()));
    }
    pairs
}

/// Decides whether `f` is conjugate over Q to `a x^k g(x^t)` with `gcd(k, t) = 1`.
pub fn classify_b(f: &RatFunc) -> Result<BVerdict> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let field = f.field();
    if f.is_over_q() {
        let shape = shape_detect(f, ShapeMode::Coprime)?.expect("t = 1 is always admissible over Q");
        return Ok(BVerdict::Member(ShapeWitness { ell: Mobius::identity(field), shape }));
    }
    let data = rational_periodic_points(f);
    if data.identity {
        unreachable!("identity is defined over Q");
    }
    let pairs = invariant_pairs(&data);
    if pairs.is_empty() {
        return Ok(BVerdict::NotMember("no invariant pair of rational points".into()));
    }
    for (p, q) in pairs {
        let ell = Mobius::from_pair(&p, &q)?;
        let g = f.conjugate(&ell);
        if let Some(shape) = shape_detect(&g, ShapeMode::Coprime)? {
            return Ok(BVerdict::Member(ShapeWitness { ell, shape }));
        }
    }
    Ok(BVerdict::NotMember("no invariant pair yields a normal form".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::counterexample_map;
    use crate::numfield::{NumberField, QPoly};
    use crate::polyrat::Poly;

    #[test]
    fn counterexample_not_in_b() {
        let v = classify_b(&counterexample_map()).unwrap();
        assert!(!v.is_member());
    }

    #[test]
    fn conjugated_monomial_in_b() {
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let base = RatFunc::from_poly(Poly::monomial(k.generator(), 2));
        let ell = Mobius::from_ints(&k, [1, 2, 1, 3]).unwrap();
        let f = base.conjugate(&ell);
        let v = classify_b(&f).unwrap();
        let w = v.witness().expect("member");
        assert!(w.verify_mode(&f, ShapeMode::Coprime));
    }
}
