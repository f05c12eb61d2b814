//! Polynomials and rational functions over number fields, and Möbius maps.

mod mobius;
mod poly;
mod ratfunc;

pub use mobius::{Mobius, ProjPoint};
pub use poly::Poly;
pub use ratfunc::RatFunc;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{NumberField, QPoly, Rational};

    fn q3() -> NumberField {
        NumberField::new(QPoly::from_ints(&[-3, 0, 1])).unwrap()
    }

    fn ints(k: &NumberField, num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(k, num), Poly::from_ints(k, den)).unwrap()
    }

    /// (c x^2 - 2x - c)/(x^2 + 2c x - 1) with c = 2 - √3.
    fn counterexample() -> RatFunc {
        let k = q3();
        let c = &k.from_int(2) - &k.generator();
        let num = Poly::new(&k, vec![-&c, k.from_int(-2), c.clone()]);
        let den = Poly::new(&k, vec![k.from_int(-1), c.scale(&Rational::from_integer(2.into())), k.one()]);
        RatFunc::new(num, den).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let q = NumberField::rationals();
        assert_eq!(ints(&q, &[-1, 0, 1], &[-1, 1]), ints(&q, &[1, 1], &[1]));
        assert_eq!(ints(&q, &[0, 0, 2], &[0, 2]), ints(&q, &[0, 1], &[1]));
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
        let f = RatFunc::new(Poly::new(&k, vec![k.zero(), k.generator()]), Poly::from_ints(&k, &[2])).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(f.num().coeff(1), k.generator().scale(&half));
        assert!(f.den().is_one());
        assert_eq!(
            RatFunc::new(Poly::one(&q), Poly::zero(&q)).unwrap_err(),
            crate::Error::ZeroDenominator
        );
    }

    #[test]
    fn composition_and_iteration() {
        let q = NumberField::rationals();
        let sq = ints(&q, &[0, 0, 1], &[1]);
        let shift = ints(&q, &[1, 1], &[1]);
        assert_eq!(sq.compose(&shift), ints(&q, &[1, 2, 1], &[1]));
        assert_eq!(sq.compose(&RatFunc::identity(&q)), sq);
        let h = ints(&q, &[0, -2], &[-1, 0, 1]);
        assert_eq!(h.iterate(2), ints(&q, &[0, 4, 0, -4], &[1, 0, -6, 0, 1]));
        let f = counterexample();
        assert_eq!(f.iterate(2), ints(f.field(), &[1, 4, -6, -4, 1], &[1, -4, -6, 4, 1]));
    }

    #[test]
    fn cube_root_iterate() {
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
        let f = RatFunc::from_poly(Poly::monomial(k.generator(), 2));
        assert_eq!(f.iterate(2), RatFunc::from_poly(Poly::monomial(k.from_int(2), 4)));
    }

    #[test]
    fn conjugation() {
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
        let f = RatFunc::from_poly(Poly::monomial(k.generator(), 2));
        let l = Mobius::new(k.generator(), k.zero(), k.zero(), k.one()).unwrap();
        assert_eq!(f.conjugate(&l), RatFunc::from_poly(Poly::monomial(k.from_int(2), 2)));
        assert_eq!(f.conjugate(&Mobius::identity(&k)), f);

        let k = q3();
        let c = &k.from_int(2) - &k.generator();
        let h = ints(&k, &[0, -2], &[-1, 0, 1]);
        let l = Mobius::new(k.one(), c.clone(), c.clone(), k.from_int(-1)).unwrap();
        assert_eq!(h.conjugate(&l), counterexample());
        assert_eq!(l.compose(&l), Mobius::identity(&k));
    }

    #[test]
    fn projective_evaluation() {
        let q = NumberField::rationals();
        assert_eq!(ints(&q, &[0, 0, 1], &[1]).evaluate(&ProjPoint::Infinity), ProjPoint::Infinity);
        let f = counterexample();
        let c = &f.field().from_int(2) - &f.field().generator();
        assert_eq!(f.evaluate(&ProjPoint::Infinity), ProjPoint::Finite(c));
        assert_eq!(ints(&q, &[1], &[0, 1]).evaluate(&ProjPoint::Finite(q.zero())), ProjPoint::Infinity);
    }

    #[test]
    fn display_round() {
        let f = counterexample();
        assert_eq!(f.to_string(), "((-a+2)*x^2 - 2*x + (a-2))/(x^2 + (-2*a+4)*x - 1)");
        let q = NumberField::rationals();
        assert_eq!(ints(&q, &[0, 2], &[1, 0, 1]).to_string(), "2*x/(x^2 + 1)");
        assert_eq!(ints(&q, &[1], &[0, 0, 1]).to_string(), "1/x^2");
    }
}
