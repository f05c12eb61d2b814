use crate::error::{Error, Result};
use crate::numfield::{Rational, NFElem};
use crate::polyrat::{Mobius, Poly, RatFunc};

use super::shape::{shape_detect, ShapeMode, ShapeWitness};

/// Outcome of the polynomial classifier. A witness is present whenever the
/// membership comes from a normal form; finite-order affine maps may be
/// members without one.
#[derive(Clone, Debug)]
pub struct PolyVerdict {
    pub member: bool,
    pub witness: Option<ShapeWitness>,
    pub reason: String,
}

impl PolyVerdict {
    fn no(reason: &str) -> Self {
        PolyVerdict { member: false, witness: None, reason: reason.to_string() }
    }
}

fn translation(f: &Poly, tau: &Rational) -> Mobius {
    let k = f.field();
    Mobius::new(k.one(), k.from_rational(tau.clone()), k.zero(), k.one()).expect("invertible")
}

fn witness_at(f: &RatFunc, ell: Mobius, mode: ShapeMode) -> Result<Option<ShapeWitness>> {
    let g = f.conjugate(&ell);
    Ok(shape_detect(&g, mode)?.map(|shape| ShapeWitness { ell, shape }))
}

/// Membership of `f` in `A_n(Q)`: some `n`-th iterate has rational coefficients.
pub fn poly_classify_an(f: &Poly, n: u32) -> Result<PolyVerdict> {
    classify(f, Some(n))
}

/// Membership of `f` in `A(Q)`: some iterate has rational coefficients.
pub fn poly_classify_a(f: &Poly) -> Result<PolyVerdict> {
    classify(f, None)
}

fn is_root_of_unity(a: &NFElem, n: Option<u32>) -> bool {
    match n {
        Some(n) => a.pow_u(n as u64).is_one(),
        None => super::least_rational_power(a).is_some_and(|s| {
            let r = a.pow_u(s).is_rational().expect("rational power");
            r == Rational::from_integer(1.into()) || r == Rational::from_integer((-1).into())
        }),
    }
}

fn classify(f: &Poly, n: Option<u32>) -> Result<PolyVerdict> {
    let d = match f.degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        Some(d) => d,
    };
    let mode = match n {
        Some(n) => ShapeMode::Divides(n),
        None => ShapeMode::Coprime,
    };
    let k = f.field();
    let fr = RatFunc::from_poly(f.clone());
    if f.is_over_q() {
        let w = witness_at(&fr, Mobius::identity(k), mode)?;
        return Ok(PolyVerdict { member: true, witness: w, reason: "defined over Q".into() });
    }
    if n == Some(0) {
        return Ok(PolyVerdict { member: true, witness: None, reason: "zeroth iterate".into() });
    }
    if d == 1 {
        let alpha = f.coeff(1);
        let beta = f.coeff(0);
        let one = k.one();
        if alpha == one {
            return Ok(PolyVerdict::no("translation by an irrational amount"));
        }
        let x0 = &beta * &(&one - &alpha).inv().expect("alpha != 1");
        let witness = match x0.is_rational() {
            Some(x0) => witness_at(&fr, translation(f, &x0), mode)?,
            None => None,
        };
        if is_root_of_unity(&alpha, n) {
            return Ok(PolyVerdict { member: true, witness, reason: "finite order".into() });
        }
        return Ok(match witness {
            Some(w) => PolyVerdict { member: true, witness: Some(w), reason: "normal form".into() },
            None if x0.is_rational().is_none() => PolyVerdict::no("fixed point is irrational"),
            None => PolyVerdict::no("no power of the multiplier is rational"),
        });
    }
    let lc = f.lc();
    let sub = f.coeff(d - 1);
    let Some(ratio) = (&sub * &lc.inv().expect("nonzero")).is_rational() else {
        return Ok(PolyVerdict::no("subleading ratio is irrational"));
    };
    let tau = -ratio / Rational::from_integer((d as i64).into());
    Ok(match witness_at(&fr, translation(f, &tau), mode)? {
        Some(w) => PolyVerdict { member: true, witness: Some(w), reason: "normal form".into() },
        None => PolyVerdict::no("depressed form has no admissible shape"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{cyclotomic_field, NumberField, QPoly};

    fn cbrt2() -> NumberField {
        NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap()
    }

    #[test]
    fn cube_root_quadratic() {
        let k = cbrt2();
        let f = Poly::monomial(k.generator(), 2);
        // f^{∘n} = a^{S_n(2)} x^{2^n}, rational exactly when 3 | 2^n - 1
        assert!(poly_classify_an(&f, 2).unwrap().member);
        assert!(!poly_classify_an(&f, 3).unwrap().member);
        assert!(poly_classify_an(&f, 6).unwrap().member);
        let v = poly_classify_a(&f).unwrap();
        assert!(v.member);
        let w = v.witness.unwrap();
        assert!(w.verify_mode(&RatFunc::from_poly(f.clone()), ShapeMode::Coprime));
        assert_eq!(w.shape.t, 3);
        assert!(!poly_classify_an(&Poly::monomial(k.generator(), 4), 2).unwrap().member);
        assert!(!poly_classify_a(&Poly::monomial(k.generator(), 3)).unwrap().member);
    }

    #[test]
    fn affine_cases() {
        let z = cyclotomic_field(5);
        let zeta = z.generator();
        let f = Poly::new(&z, vec![z.one(), zeta.clone()]);
        assert!(poly_classify_an(&f, 5).unwrap().member);
        assert!(!poly_classify_an(&f, 3).unwrap().member);
        assert!(poly_classify_a(&f).unwrap().member);
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
        let t = Poly::new(&k, vec![k.generator(), k.one()]);
        assert!(!poly_classify_a(&t).unwrap().member);
        let s = Poly::new(&k, vec![k.one(), k.generator()]);
        // fixed point 1/(1-√2) is irrational
        assert!(!poly_classify_a(&s).unwrap().member);
        let s = Poly::new(&k, vec![&k.one() - &k.generator(), k.generator()]);
        let v = poly_classify_an(&s, 2).unwrap();
        assert!(v.member);
        assert!(v.witness.unwrap().verify(&RatFunc::from_poly(s)));
    }

    #[test]
    fn depressed_shape() {
        // conjugate of √2 x (x^2 + 1) by x -> x + 1 (rational translation)
        let k = NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap();
        let base = RatFunc::from_poly(Poly::new(&k, vec![k.zero(), k.generator(), k.zero(), k.generator()]));
        let ell = Mobius::from_ints(&k, [1, 1, 0, 1]).unwrap();
        let f = base.conjugate(&ell);
        let p = f.as_poly().unwrap();
        let v = poly_classify_an(p, 2).unwrap();
        assert!(v.member);
        assert!(v.witness.unwrap().verify(&f));
        assert_eq!(super::super::ratfunc_in_an_direct(&f, 2), true);
        let v = poly_classify_an(p, 3).unwrap();
        assert!(!v.member);
        assert_eq!(super::super::ratfunc_in_an_direct(&f, 3), false);
        assert!(poly_classify_a(p).unwrap().member);
    }
}
