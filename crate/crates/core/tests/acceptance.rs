//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line with
//! its runtime and fails if the check fails or exceeds its time budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use iterfield::classify::{
    classify_b, min_n_divisibility, poly_classify_a, poly_classify_an, rational_periodic_points,
    ratfunc_in_an_direct, sn, ShapeMode,
};
use iterfield::families::{
    counterexample_constant, counterexample_map, cyclotomic_inclusion, lattes_phi, lattes_translated,
    prop33_family, rotation_map, sqrt3_into_cyclotomic, Curve, RotationSpec,
};
use iterfield::numfield::{cyclotomic_field, NFElem, NumberField, QPoly, Rational, Subfield};
use iterfield::pgl2::{
    check_prop42, eigen_data, pgl2_nth_root, power_class, proj_rational, ratio_power_degree, root_decompose, Mat2,
    Prop42Verdict, RootOutcome,
};
use iterfield::polyrat::{Mobius, Poly, ProjPoint, RatFunc};

type Check = std::result::Result<(), String>;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ints(k: &NumberField, num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(Poly::from_ints(k, num), Poly::from_ints(k, den)).unwrap()
}

fn sqrt2() -> NumberField {
    NumberField::new(QPoly::from_ints(&[-2, 0, 1])).unwrap()
}

/// Element `p + q a` of a quadratic field.
fn lin(k: &NumberField, p: i64, q: i64) -> NFElem {
    k.elem_from_ints(&[p, q])
}

fn criterion_1() -> Check {
    let f = counterexample_map();
    let expect = ints(f.field(), &[1, 4, -6, -4, 1], &[1, -4, -6, 4, 1]);
    ensure(f.iterate(2) == expect, "second iterate differs")
}

fn criterion_2() -> Check {
    let f = counterexample_map();
    let k = f.field().clone();
    let c = counterexample_constant(&k);
    ensure(ratfunc_in_an_direct(&f, 2), "second iterate not rational")?;
    ensure(!ratfunc_in_an_direct(&f, 1), "map itself rational")?;
    ensure(!classify_b(&f).map_err(|e| e.to_string())?.is_member(), "classified into B")?;
    let data = rational_periodic_points(&f);
    ensure(data.fixed.is_empty(), "rational fixed point found")?;
    ensure(data.two_cycles.is_empty(), "rational 2-cycle found")?;

    // fixed points: numerator of f(x) - x is -(x + c)(x^2 + 1)
    let x = Poly::x(&k);
    let fixed_poly = f.num() - &(&x * f.den());
    let cubic = &Poly::new(&k, vec![c.clone(), k.one()]) * &Poly::from_ints(&k, &[1, 0, 1]);
    ensure(fixed_poly == -&cubic, format!("fixed-point polynomial {fixed_poly}"))?;

    // oracle: solve f∘f(x) = x directly and strip the fixed points
    let f2 = f.iterate(2);
    let quintic = f2.num() - &(&x * f2.den());
    let (quot, rem) = quintic.div_rem(&cubic);
    ensure(rem.is_zero(), "fixed points do not divide the period-2 equation")?;
    ensure(quot.degree() == Some(2), "period-2 quotient is not quadratic")?;
    let minus_inv_c = -&c.inv().unwrap();
    ensure(quot.eval(&k.one()).is_zero(), "1 is not of period 2")?;
    ensure(quot.eval(&minus_inv_c).is_zero(), "-1/c is not of period 2")?;
    let one = ProjPoint::Finite(k.one());
    let partner = ProjPoint::Finite(minus_inv_c.clone());
    ensure(f.evaluate(&one) == partner && f.evaluate(&partner) == one, "cycle {1, -1/c} not confirmed")?;
    ensure(
        data.irrational_partner == vec![(one, partner)],
        "periodic data does not list the 2-cycle {1, -1/c}",
    )?;
    // the literal set {c, 1} is not a cycle: f(1) != c
    ensure(f.evaluate(&ProjPoint::Finite(k.one())) != ProjPoint::Finite(c), "f(1) = c")
}

fn criterion_3() -> Check {
    let f = counterexample_map();
    let k = f.field().clone();
    let c = counterexample_constant(&k);
    let h = ints(&k, &[0, -2], &[-1, 0, 1]);
    let l = Mobius::new(k.one(), c.clone(), c, k.from_int(-1)).unwrap();
    ensure(h.conjugate(&l) == f, "h conjugated by l is not the counterexample")?;
    let expect = RatFunc::new(Poly::from_ints(&k, &[0, 4, 0, -4]), Poly::from_ints(&k, &[1, 0, -6, 0, 1])).unwrap();
    ensure(h.iterate(2) == expect, "second iterate of h differs")
}

fn criterion_4() -> Check {
    let rot = rotation_map(RotationSpec::new(2, 1, 6));
    let into12 = sqrt3_into_cyclotomic(12);
    let inc = cyclotomic_inclusion(12, 24);
    let g = counterexample_map().map(&into12).unwrap().map(&inc).unwrap();
    ensure(rot == g, "rotation map for φ = π/6 differs from the counterexample")?;
    // the rotation map is defined over the image of Q(ζ12)
    let image12 = Subfield::generated(rot.field(), &[inc.image().clone()]).unwrap();
    for coeff in rot.coefficients() {
        ensure(image12.contains(coeff).unwrap(), "coefficient outside Q(ζ12)")?;
    }
    for (n, k) in [(2u32, 2u64), (2, 3), (3, 2)] {
        let f = prop33_family(n, k);
        ensure(!f.is_over_q(), format!("({n},{k}) map is over Q"))?;
        ensure(ratfunc_in_an_direct(&f, n as usize), format!("({n},{k}) iterate not rational"))?;
        let b = classify_b(&f).map_err(|e| e.to_string())?;
        ensure(!b.is_member(), format!("({n},{k}) classified into B"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let k = sqrt2();
    let e = Curve::new(k.from_int(-2), k.zero()).unwrap();
    let s = k.generator();
    let f = lattes_translated(&e, 3, &s).map_err(|e| e.to_string())?;
    let num: Vec<NFElem> = [(0, 1), (18, 0), (0, 24), (-144, 0), (0, 120), (240, 0), (0, -288), (192, 0), (0, 144), (32, 0)]
        .iter()
        .rev()
        .map(|&(p, q)| lin(&k, p, q))
        .collect();
    let den: Vec<NFElem> = [(1, 0), (0, -9), (24, 0), (0, 72), (120, 0), (0, -120), (-288, 0), (0, -96), (144, 0), (0, -16)]
        .iter()
        .rev()
        .map(|&(p, q)| lin(&k, p, q))
        .collect();
    let expect = RatFunc::new(Poly::new(&k, num), Poly::new(&k, den)).unwrap();
    ensure(f == expect, format!("degree-9 map differs: {f}"))?;

    let f2 = f.iterate(2);
    ensure(f2.is_over_q(), "second iterate not rational")?;
    let scale = f2.num().lc().inv().unwrap();
    let n2 = f2.num().scale(&scale);
    let d2 = f2.den().scale(&scale);
    let q = |p: &Poly, i: usize| p.coeff(i).is_rational().unwrap();
    ensure(n2.degree() == Some(81) && d2.degree() == Some(80), "degrees of the second iterate")?;
    ensure(q(&n2, 79) == r(2160) && q(&n2, 77) == r(1104624), "numerator leading terms")?;
    ensure(q(&d2, 80) == r(81) && q(&d2, 78) == r(-37584), "denominator leading terms")?;
    let big = Rational::from_integer(BigInt::from(1u64 << 40));
    ensure(q(&n2, 0) == big || q(&d2, 0) == big, "constant term 2^40 missing")?;
    ensure(f2 == lattes_phi(&e, 9), "second iterate is not the multiplication-by-9 map")?;

    let zero = ProjPoint::Finite(k.zero());
    let ms = ProjPoint::Finite(-&s);
    let ps = ProjPoint::Finite(s.clone());
    ensure(f.evaluate(&zero) == ms && f.evaluate(&ms) == zero, "cycle {0, -√2}")?;
    ensure(
        f.evaluate(&ProjPoint::Infinity) == ps && f.evaluate(&ps) == ProjPoint::Infinity,
        "cycle {inf, √2}",
    )?;
    ensure(!classify_b(&f).map_err(|e| e.to_string())?.is_member(), "classified into B")
}

/// `a x^k g(x^t)` with `g` a random polynomial over Q, `g(0) != 0`.
fn random_normal_form(rng: &mut ChaCha8Rng, k: &NumberField, t: usize, kk: usize, a: &NFElem) -> Poly {
    let max_deg_g = (6 - kk) / t;
    let deg_g = rng.gen_range(1..=max_deg_g.max(1));
    let mut coeffs = vec![k.zero(); kk + t * deg_g + 1];
    for j in 0..=deg_g {
        let mut c: i64 = rng.gen_range(-4..=4);
        if (j == 0 || j == deg_g) && c == 0 {
            c = 1;
        }
        coeffs[kk + t * j] = a * &k.from_int(c);
    }
    Poly::new(k, coeffs)
}

fn random_affine(rng: &mut ChaCha8Rng, k: &NumberField) -> Mobius {
    let mut s: i64 = rng.gen_range(-3..=3);
    if s == 0 {
        s = 2;
    }
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = rng.gen_range(1..=3);
    Mobius::new(
        k.from_int(s),
        k.from_rational(Rational::new(num.into(), den.into())),
        k.zero(),
        k.one(),
    )
    .unwrap()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let fields: Vec<NumberField> = (1..=4)
        .map(|t| {
            let mut m = vec![0i64; t + 1];
            m[0] = -2;
            m[t] = 1;
            NumberField::new(QPoly::from_ints(&m)).unwrap()
        })
        .collect();
    let mut accepted = 0;
    let mut rejected = 0;
    while accepted < 200 || rejected < 200 {
        let t = rng.gen_range(2..=4usize);
        let kf = &fields[t - 1];
        let kk = rng.gen_range(0..=(6 - t));
        // a = u θ^j with u rational and j coprime-ish to t, so a^t is rational
        let j = rng.gen_range(1..t);
        let u: i64 = [1, -1, 2, 3][rng.gen_range(0..4)];
        let a = &kf.generator().pow_u(j as u64) * &kf.from_int(u);
        let nf = random_normal_form(&mut rng, kf, t, kk, &a);
        if nf.degree().unwrap_or(0) < 2 {
            continue;
        }
        let ell = random_affine(&mut rng, kf);
        let f = RatFunc::from_poly(nf.clone()).conjugate(&ell);
        let p = f.as_poly().expect("affine conjugate of a polynomial").clone();
        // actual exponents of the normal form: k = lowest exponent, t' = gcd of gaps
        let supp = nf.support();
        let k_eff = supp[0] as u64;
        let t_eff = supp.iter().fold(0u64, |g, &e| g.gcd(&((e - supp[0]) as u64)));

        if accepted < 200 {
            // A: admissible iff some t'' | t_eff with a^t'' rational, t'' > 1 needed, gcd(k, t'') = 1
            let s = (1..=t as u64).find(|&s| a.pow_u(s).is_rational().is_some()).unwrap();
            let member_a = t_eff % s == 0 && k_eff.gcd(&s) == 1;
            if member_a {
                let v = poly_classify_a(&p).map_err(|e| e.to_string())?;
                ensure(v.member, format!("rejected normal form {f}"))?;
                let w = v.witness.ok_or("missing witness")?;
                ensure(w.verify_mode(&f, ShapeMode::Coprime), "A witness does not verify")?;
                if let Some(n) = min_n_divisibility(s, k_eff, 6) {
                    let v = poly_classify_an(&p, n).map_err(|e| e.to_string())?;
                    ensure(v.member, format!("A_{n} rejected {f}"))?;
                    let w = v.witness.ok_or("missing A_n witness")?;
                    ensure(w.verify_mode(&f, ShapeMode::Divides(n)), "A_n witness does not verify")?;
                    if p.degree().unwrap().pow(n) <= 64 {
                        ensure(ratfunc_in_an_direct(&f, n as usize), "direct check disagrees")?;
                    }
                }
                accepted += 1;
            }
        }
        if rejected < 200 {
            // perturb: irrational coefficient ratio, or a^t irrational
            let pert = if rng.gen_bool(0.5) {
                let mut c = nf.coeffs().to_vec();
                let idx = *supp.last().unwrap();
                let spot = (0..idx).find(|i| c[*i].is_zero()).unwrap_or(supp[0]);
                c[spot] = &c[spot] + &(&kf.one() + &kf.generator());
                Poly::new(kf, c)
            } else {
                nf.scale(&(&kf.one() + &kf.generator()))
            };
            let g = RatFunc::from_poly(pert).conjugate(&ell);
            let gp = g.as_poly().unwrap();
            let v = poly_classify_a(gp).map_err(|e| e.to_string())?;
            ensure(!v.member, format!("accepted perturbed {g}"))?;
            for n in 1..=4u32 {
                ensure(!poly_classify_an(gp, n).map_err(|e| e.to_string())?.member, "A_n accepted perturbed")?;
                ensure(!ratfunc_in_an_direct(&g, n as usize), format!("direct check accepted perturbed {g} at {n}"))?;
            }
            rejected += 1;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for t in 1..=30u64 {
        for k in 1..=30u64 {
            let found = min_n_divisibility(t, k, 200).is_some();
            let oracle = (1..=200u32).any(|n| (sn(k, n) % t).bits() == 0);
            ensure(found == oracle, format!("search disagrees with exact sums at t={t}, k={k}"))?;
            ensure(found == (t.gcd(&k) == 1), format!("t={t}, k={k}: divisibility {found}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let k = cyclotomic_field(4);
    let f = Poly::new(&k, vec![k.one(), k.generator()]);
    let fr = RatFunc::from_poly(f.clone());
    ensure(fr.iterate(4).is_identity(), "fourth iterate is not x")?;
    ensure(poly_classify_an(&f, 4).map_err(|e| e.to_string())?.member, "n = 4 rejected")?;
    ensure(ratfunc_in_an_direct(&fr, 4), "direct n = 4 rejected")?;
    for n in 1..=3u32 {
        ensure(!poly_classify_an(&f, n).map_err(|e| e.to_string())?.member, format!("n = {n} accepted"))?;
        ensure(!ratfunc_in_an_direct(&fr, n as usize), format!("direct n = {n} accepted"))?;
    }
    let k = sqrt2();
    let g = Poly::new(&k, vec![k.generator(), k.one()]);
    let gr = RatFunc::from_poly(g.clone());
    for n in 1..=6u32 {
        ensure(!poly_classify_an(&g, n).map_err(|e| e.to_string())?.member, format!("x + √2 accepted at {n}"))?;
        ensure(!ratfunc_in_an_direct(&gr, n as usize), format!("direct x + √2 accepted at {n}"))?;
    }
    Ok(())
}

fn random_elem(rng: &mut ChaCha8Rng, k: &NumberField) -> NFElem {
    let coords: Vec<i64> = (0..k.degree()).map(|_| rng.gen_range(-3..=3)).collect();
    k.elem_from_ints(&coords)
}

fn random_rational_matrix(rng: &mut ChaCha8Rng, k: &NumberField) -> Mat2 {
    loop {
        let e = [0; 4].map(|_| rng.gen_range(-4..=4i64));
        if let Ok(m) = Mat2::from_ints(k, e) {
            return m;
        }
    }
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let fields = [sqrt2(), cyclotomic_field(4)];
    // non-diagonalizable: N [[λ,1],[0,λ]] N^{-1}
    for i in 0..50 {
        let k = &fields[i % 2];
        let lam = loop {
            let l = random_elem(&mut rng, k);
            if !l.is_zero() {
                break l;
            }
        };
        let jordan = Mat2::new(lam.clone(), k.one(), k.zero(), lam).unwrap();
        let n = loop {
            let e = [0; 4].map(|_| random_elem(&mut rng, k));
            if let Ok(m) = Mat2::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
                break m;
            }
        };
        let a = n.mul(&jordan).mul(&n.inverse());
        let verdict = check_prop42(&a, 6).map_err(|e| e.to_string())?;
        match verdict {
            Prop42Verdict::TriviallyConsistent => ensure(proj_rational(&a), "trivial verdict on irrational class")?,
            Prop42Verdict::Consistent { .. } => {}
            Prop42Verdict::Violated { n } => return Err(format!("power {n} of {a} is projectively rational")),
        }
    }
    // diagonalizable with a rational power: roots of random rational matrices
    let q = NumberField::rationals();
    let mut built = 0;
    while built < 50 {
        let b = random_rational_matrix(&mut rng, &q);
        if b.is_scalar() {
            continue;
        }
        let n = rng.gen_range(2..=3u64);
        let a = match pgl2_nth_root(&b, n) {
            Ok(a) => a,
            Err(e) => return Err(format!("no root of {b}: {e}")),
        };
        let (p, rational) = power_class(&a, n);
        ensure(rational, "constructed root has an irrational power")?;
        ensure(p.proj_eq(&b.map(&embed_q(a.field())).unwrap()), "root does not power back to B")?;
        ensure(a.det().pow_u(2 * n).is_rational().is_some(), "det^(2n) not rational")?;
        if !eigen_data(&a).map_err(|e| e.to_string())?.diagonalizable {
            built += 1;
            continue;
        }
        ensure(ratio_power_degree(&a, n).map_err(|e| e.to_string())? <= 2, "ratio power of degree > 2")?;
        match root_decompose(&a, n).map_err(|e| e.to_string())? {
            RootOutcome::RationalAlready => ensure(proj_rational(&a), "RationalAlready on irrational class")?,
            RootOutcome::Decomposed(dec) => {
                ensure(dec.recompose() == a.map(&dec.embedding).unwrap(), "M D M^-1 differs from A")?;
                ensure(dec.bounds_hold, format!("degree bounds fail for {a}"))?;
                ensure(dec.k_prime.degree() <= 2, "K' too large")?;
                ensure(dec.f.degree() <= dec.k_prime.degree() * n as usize, "F too large")?;
            }
        }
        built += 1;
    }
    let rot = Mat2::from_ints(&q, [0, -1, 1, 0]).unwrap();
    let root = pgl2_nth_root(&rot, 2).map_err(|e| e.to_string())?;
    let sq = root.mul(&root);
    ensure(sq.proj_eq(&rot.map(&embed_q(root.field())).unwrap()), "square root of the rotation")
}

fn embed_q(target: &NumberField) -> iterfield::numfield::Embedding {
    iterfield::numfield::Embedding::new(NumberField::rationals(), target.clone(), target.zero()).unwrap()
}

fn criterion_10() -> Check {
    let k = NumberField::new(QPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
    let e = Curve::new(k.zero(), k.from_int(-2)).unwrap();
    let f = lattes_translated(&e, 3, &k.generator()).map_err(|e| e.to_string())?;
    ensure(!f.is_over_q(), "map is over Q")?;
    ensure(f.iterate(2).is_over_q(), "second iterate not rational")?;
    let data = rational_periodic_points(&f);
    ensure(data.fixed.is_empty(), "rational fixed point")?;
    ensure(data.two_cycles.is_empty(), "rational 2-cycle")?;
    ensure(!classify_b(&f).map_err(|e| e.to_string())?.is_member(), "classified into B")
}

fn run(id: u32, budget: u64, check: fn() -> Check) {
    let start = Instant::now();
    let outcome = check();
    let took = start.elapsed();
    let outcome = outcome
        .and_then(|()| ensure(took <= Duration::from_secs(budget), format!("took {took:.2?}, budget {budget}s")));
    match outcome {
        Ok(()) => println!("criterion {id:>2}: PASS ({took:.2?})"),
        Err(why) => {
            println!("criterion {id:>2}: FAIL ({took:.2?}) {why}");
            panic!("criterion {id} failed: {why}");
        }
    }
}

#[test]
fn c01_counterexample_iterate() {
    run(1, 1, criterion_1);
}

#[test]
fn c02_counterexample_classification() {
    run(2, 5, criterion_2);
}

#[test]
fn c03_twist_chain() {
    run(3, 1, criterion_3);
}

#[test]
fn c04_rotation_family() {
    run(4, 30, criterion_4);
}

#[test]
fn c05_lattes_example() {
    run(5, 60, criterion_5);
}

#[test]
fn c06_normal_form_round_trip() {
    run(6, 120, criterion_6);
}

#[test]
fn c07_divisibility() {
    run(7, 5, criterion_7);
}

#[test]
fn c08_affine_edge_cases() {
    run(8, 1, criterion_8);
}

#[test]
fn c09_matrix_suite() {
    run(9, 60, criterion_9);
}

#[test]
fn c10_cube_root_lattes() {
    run(10, 120, criterion_10);
}
