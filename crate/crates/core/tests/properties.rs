//! Randomized properties checked against independent computations.

use num_integer::Integer;
use proptest::prelude::*;

use iterfield::classify::{
    min_n_divisibility, normal_form, poly_classify_a, poly_classify_an, ratfunc_in_an_direct, shape_detect, sn, sn_mod,
    ShapeMode,
};
use iterfield::numfield::{NFElem, NumberField, QPoly, Rational};
use iterfield::pgl2::{pgl2_nth_root, power_class, Mat2};
use iterfield::polyrat::{Mobius, Poly, RatFunc};

fn field(t: u32) -> NumberField {
    // Q(2^{1/t}); t = 1 gives Q
    if t == 1 {
        return NumberField::rationals();
    }
    let mut c = vec![0i64; t as usize + 1];
    c[0] = -2;
    c[t as usize] = 1;
    NumberField::new(QPoly::from_ints(&c)).unwrap()
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn elem(k: &NumberField, coords: &[(i64, i64)]) -> NFElem {
    k.elem((0..k.degree()).map(|j| coords.get(j).map_or(q(0, 1), |&(p, d)| q(p, d))).collect())
}

fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    (-5i64..=5, 1i64..=3)
}

fn nonzero_rational() -> impl Strategy<Value = (i64, i64)> {
    small_rational().prop_filter("nonzero", |&(p, _)| p != 0)
}

fn qpoly(cs: &[(i64, i64)]) -> QPoly {
    QPoly::new(cs.iter().map(|&(p, d)| q(p, d)).collect())
}

/// A random nonconstant rational function of degree at most 2 over `k`.
fn ratfunc(k: &NumberField, num: &[Vec<(i64, i64)>], den: &[Vec<(i64, i64)>]) -> Option<RatFunc> {
    let p = Poly::new(k, num.iter().map(|c| elem(k, c)).collect());
    let d = Poly::new(k, den.iter().map(|c| elem(k, c)).collect());
    if d.is_zero() {
        return None;
    }
    let f = RatFunc::new(p, d).ok()?;
    (!f.is_constant()).then_some(f)
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    prop::collection::vec(prop::collection::vec(small_rational(), 1..=2), 1..=len)
}

fn mobius(k: &NumberField, e: [(i64, i64); 4]) -> Option<Mobius> {
    let [a, b, c, d] = e.map(|(p, dd)| k.from_rational(q(p, dd)));
    Mobius::new(a, b, c, d).ok()
}

fn entries() -> impl Strategy<Value = [(i64, i64); 4]> {
    [small_rational(), small_rational(), small_rational(), small_rational()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shape_round_trip(
        t in 1u32..=4,
        j in 0u32..4,
        u in nonzero_rational(),
        k in 1u64..=3,
        g in prop::collection::vec(small_rational(), 1..=3),
    ) {
        let f = field(t);
        let a = f.generator().pow_u((j % t) as u64).scale(&q(u.0, u.1));
        let gq = qpoly(&g);
        prop_assume!(!gq.is_zero());
        let g = RatFunc::from_poly(Poly::from_qpoly(&NumberField::rationals(), &gq));
        let h = normal_form(&a, k, t as u64, &g);
        prop_assume!(!h.is_constant());
        let shape = shape_detect(&h, ShapeMode::Divides(1_000_000)).unwrap();
        // any detected shape must reassemble to the input
        if let Some(s) = shape {
            prop_assert_eq!(s.assemble(), h.clone());
            prop_assert!(s.a.pow_u(s.t).is_rational().is_some());
        }
        let coprime = shape_detect(&h, ShapeMode::Coprime).unwrap();
        if k.gcd(&(t as u64)) == 1 && gq.coeff(0) != q(0, 1) {
            prop_assert!(coprime.is_some(), "no coprime shape for {}", h);
        }
        if let Some(s) = coprime {
            prop_assert_eq!(s.assemble(), h);
            prop_assert_eq!(s.k.gcd(&s.t), 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn poly_classifier_matches_direct_iteration(
        t in 2u32..=3,
        cs in prop::collection::vec((small_rational(), 0u32..3, any::<bool>()), 2..=4),
        n in 1u32..=3,
    ) {
        // coefficients r * θ^e, or zero, over Q(2^{1/t})
        let k = field(t);
        let theta = k.generator();
        let coeffs: Vec<NFElem> = cs
            .iter()
            .map(|&((p, d), e, keep)| if keep { theta.pow_u((e % t) as u64).scale(&q(p, d)) } else { k.zero() })
            .collect();
        let p = Poly::new(&k, coeffs);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let f = RatFunc::from_poly(p.clone());
        let v = poly_classify_an(&p, n).unwrap();
        prop_assert_eq!(v.member, ratfunc_in_an_direct(&f, n as usize), "{} n={}", p, n);
        if let Some(w) = &v.witness {
            prop_assert!(w.verify_mode(&f, ShapeMode::Divides(n)));
        }
        let va = poly_classify_a(&p).unwrap();
        if v.member {
            prop_assert!(va.member);
        }
        if let Some(w) = &va.witness {
            prop_assert!(w.verify_mode(&f, ShapeMode::Coprime));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mobius_inverse_and_conjugation(
        e in entries(),
        num in coeffs(3),
        den in coeffs(3),
    ) {
        let k = field(2);
        let Some(l) = mobius(&k, e) else { return Ok(()) };
        let id = Mobius::identity(&k);
        prop_assert_eq!(l.compose(&l.inverse()), id.clone());
        prop_assert_eq!(l.inverse().compose(&l), id);
        let Some(f) = ratfunc(&k, &num, &den) else { return Ok(()) };
        prop_assert_eq!(f.conjugate(&l).conjugate(&l.inverse()), f.clone());
        // conjugation commutes with iteration
        prop_assert_eq!(f.conjugate(&l).iterate(2), f.iterate(2).conjugate(&l));
    }

    #[test]
    fn composition_is_associative(
        a in (coeffs(3), coeffs(2)),
        b in (coeffs(3), coeffs(2)),
        c in (coeffs(2), coeffs(2)),
    ) {
        let k = field(2);
        let (Some(f), Some(g), Some(h)) =
            (ratfunc(&k, &a.0, &a.1), ratfunc(&k, &b.0, &b.1), ratfunc(&k, &c.0, &c.1))
        else {
            return Ok(());
        };
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert_eq!(f.compose(&g).degree(), f.degree() * g.degree());
    }

    #[test]
    fn iterates_add(num in coeffs(3), den in coeffs(2), m in 0usize..=2, n in 0usize..=2) {
        let k = field(3);
        let Some(f) = ratfunc(&k, &num, &den) else { return Ok(()) };
        prop_assert_eq!(f.iterate(m).compose(&f.iterate(n)), f.iterate(m + n));
    }

    #[test]
    fn power_class_is_a_homomorphism(
        e in prop::collection::vec(prop::collection::vec(small_rational(), 2), 4),
        m in 1u64..=4,
        n in 1u64..=4,
    ) {
        let k = field(2);
        let [a, b, c, d]: [NFElem; 4] = e.iter().map(|x| elem(&k, x)).collect::<Vec<_>>().try_into().unwrap();
        let Ok(mat) = Mat2::new(a, b, c, d) else { return Ok(()) };
        let (pm, _) = power_class(&mat, m);
        let (pn, _) = power_class(&mat, n);
        let (pmn, rational) = power_class(&mat, m + n);
        prop_assert!(pm.mul(&pn).proj_eq(&pmn));
        // projective rationality is a property of the class
        let scaled = pmn.scale(&k.generator());
        prop_assert_eq!(iterfield::pgl2::proj_rational(&scaled), rational);
    }

    #[test]
    fn divisibility_lemma(t in 1u64..=60, k in 1u64..=60) {
        // t | S_n(k) for some n iff gcd(t, k) = 1, with n at most t (k - 1) or t
        let bound = (t * k.max(2)) as u32 + 1;
        prop_assert_eq!(min_n_divisibility(t, k, bound).is_some(), t.gcd(&k) == 1);
        for n in 0..6u32 {
            let exact = sn(k, n) % num_bigint::BigUint::from(t);
            prop_assert_eq!(exact, num_bigint::BigUint::from(sn_mod(k, n, t)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn nth_root_powers_back(e in entries(), n in 1u64..=3) {
        let k = NumberField::rationals();
        let [a, b, c, d] = e.map(|(p, dd)| k.from_rational(q(p, dd)));
        let Ok(bm) = Mat2::new(a, b, c, d) else { return Ok(()) };
        let Ok(root) = pgl2_nth_root(&bm, n) else { return Ok(()) };
        // the root lives in an extension; compare after embedding B there
        let target = root.field().clone();
        let entries = bm.entries().map(|x| target.from_rational(x.is_rational().unwrap()));
        let [a, b, c, d] = entries;
        let lifted = Mat2::new(a, b, c, d).unwrap();
        prop_assert!(root.pow(n).proj_eq(&lifted));
        prop_assert!(root.det().pow_u(2 * n).is_rational().is_some());
    }
}
