//! Generators for example families: Chebyshev polynomials, rotation maps of the
//! circle descended to the t-line, and Lattès maps.

mod elliptic;

pub use elliptic::{lattes_phi, lattes_translated, translate_by_2torsion, Curve, CurvePoint};

use crate::classify::sn;
use crate::numfield::{cyclotomic_field, rat, Embedding, NFElem, NumberField, QPoly, Rational, Subfield};
use crate::polyrat::{Poly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    First,
    Second,
}

/// `T_k` or `U_k` from the three-term recurrence `P_{k+1} = 2x P_k - P_{k-1}`.
pub fn chebyshev(kind: ChebyshevKind, k: usize) -> QPoly {
    let two_x = QPoly::from_ints(&[0, 2]);
    let mut prev = QPoly::one();
    let mut cur = match kind {
        ChebyshevKind::First => QPoly::x(),
        ChebyshevKind::Second => two_x.clone(),
    };
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Angle data for the rotation family: multiplier `k` and angle `φ = p π / q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RotationSpec {
    pub k: u64,
    pub p: i64,
    pub q: u64,
}

impl RotationSpec {
    /// Normalizes `p` into `0..2q`.
    pub fn new(k: u64, p: i64, q: u64) -> Self {
        assert!(q >= 1, "angle denominator must be positive");
        RotationSpec { k, p: p.rem_euclid(2 * q as i64), q }
    }
}

/// The map `tan(θ/2) ↦ tan((kθ + φ)/2)` over `Q(ζ_{4q})`: with
/// `X = (1 - t^2)/(1 + t^2)`,
/// `f = (2t U_{k-1}(X) sin φ - (1+t^2) T_k(X) cos φ + (1+t^2)) /
///      (2t U_{k-1}(X) cos φ + (1+t^2) T_k(X) sin φ)`,
/// cleared of powers of `1 + t^2` and canonicalized.
pub fn rotation_map(spec: RotationSpec) -> RatFunc {
    assert!(spec.k >= 1, "rotation multiplier must be positive");
    let field = cyclotomic_field(4 * spec.q);
    let zeta = field.generator();
    let order = 4 * spec.q;
    let e = zeta.pow_u((2 * spec.p as u64) % order);
    let e_inv = zeta.pow_u((order - (2 * spec.p as u64) % order) % order);
    let i = zeta.pow_u(spec.q);
    let half = Rational::new(1.into(), 2.into());
    let cos = (&e + &e_inv).scale(&half);
    let sin = &(&e - &e_inv).scale(&half) * &i.inv().expect("unit");

    let k = spec.k as usize;
    let one_minus = Poly::from_ints(&field, &[1, 0, -1]);
    let one_plus = Poly::from_ints(&field, &[1, 0, 1]);
    // (1+t^2)^deg P(X) for a polynomial P of degree at most deg
    let homogenize = |p: &QPoly, deg: usize| -> Poly {
        let mut acc = Poly::zero(&field);
        for (j, c) in p.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let term = &one_minus.pow(j as u32) * &one_plus.pow((deg - j) as u32);
            acc = &acc + &term.scale(&field.from_rational(c.clone()));
        }
        acc
    };
    let th = homogenize(&chebyshev(ChebyshevKind::First, k), k);
    let uh = homogenize(&chebyshev(ChebyshevKind::Second, k - 1), k - 1);
    let two_t = Poly::from_ints(&field, &[0, 2]);
    let tu = &two_t * &uh;
    let num = &(&tu.scale(&sin) - &th.scale(&cos)) + &one_plus.pow(k as u32);
    let den = &tu.scale(&cos) + &th.scale(&sin);
    let f = RatFunc::new(num, den).expect("nonzero denominator");
    debug_assert_eq!(f.degree(), k);
    f
}

/// The rotation map with `φ = π / S_n(k)`.
pub fn prop33_family(n: u32, k: u64) -> RatFunc {
    let q = sn(k, n).try_into().expect("angle denominator fits in u64");
    rotation_map(RotationSpec::new(k, 1, q))
}

/// `Q(√3)` as `Q[a]/(a^2 - 3)`.
pub fn sqrt3_field() -> NumberField {
    NumberField::new(QPoly::from_ints(&[-3, 0, 1])).expect("irreducible")
}

/// `(c x^2 - 2x - c)/(x^2 + 2c x - 1)` with `c = 2 - √3`, over `Q(√3)`.
pub fn counterexample_map() -> RatFunc {
    let k = sqrt3_field();
    let c = counterexample_constant(&k);
    let num = Poly::new(&k, vec![-&c, k.from_int(-2), c.clone()]);
    let den = Poly::new(&k, vec![k.from_int(-1), c.scale(&rat(2)), k.one()]);
    RatFunc::new(num, den).expect("nonzero denominator")
}

/// `2 - a` in a field whose generator is `√3`.
pub fn counterexample_constant(k: &NumberField) -> NFElem {
    &k.from_int(2) - &k.generator()
}

/// Embedding of `Q(√3)` into `Q(ζ_n)` (for `12 | n`) sending `√3` to
/// `ζ_n^(n/12) + ζ_n^(-n/12)`.
pub fn sqrt3_into_cyclotomic(n: u64) -> Embedding {
    assert!(n % 12 == 0, "Q(√3) lies in Q(ζ_n) for 12 | n");
    let target = cyclotomic_field(n);
    let z = target.generator().pow_u(n / 12);
    let image = &z + &z.inv().expect("unit");
    Embedding::new(sqrt3_field(), target, image).expect("image squares to 3")
}

/// Embedding `Q(ζ_m) -> Q(ζ_n)` for `m | n`, sending `ζ_m` to `ζ_n^(n/m)`.
pub fn cyclotomic_inclusion(m: u64, n: u64) -> Embedding {
    assert!(n % m == 0);
    let target = cyclotomic_field(n);
    let image = target.generator().pow_u(n / m);
    Embedding::new(cyclotomic_field(m), target, image).expect("root of unity of order m")
}

/// Field of definition of a rational function as a subfield of its ambient field.
pub(crate) fn coefficient_field(f: &RatFunc) -> Subfield {
    let coeffs: Vec<NFElem> = f.coefficients().cloned().collect();
    Subfield::generated(f.field(), &coeffs).expect("same field")
}
