//! Short Weierstrass curves, the chord-tangent law, and the x-line maps they induce.

use crate::error::{Error, Result};
use crate::numfield::{rat, NFElem, NumberField};
use crate::polyrat::{Poly, RatFunc};

/// `y^2 = x^3 + a x + b` with nonzero discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    a: NFElem,
    b: NFElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Identity,
    Affine(NFElem, NFElem),
}

impl Curve {
    pub fn new(a: NFElem, b: NFElem) -> Result<Self> {
        if !a.field().same_as(b.field()) {
            return Err(Error::FieldMismatch);
        }
        let c = Curve { a, b };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn a(&self) -> &NFElem {
        &self.a
    }

    pub fn b(&self) -> &NFElem {
        &self.b
    }

    /// `-16 (4 a^3 + 27 b^2)`
    pub fn discriminant(&self) -> NFElem {
        let a3 = &(&self.a * &self.a) * &self.a;
        let b2 = &self.b * &self.b;
        (&a3.scale(&rat(4)) + &b2.scale(&rat(27))).scale(&rat(-16))
    }

    /// `x^3 + a x + b` evaluated at `x`.
    pub fn rhs(&self, x: &NFElem) -> NFElem {
        &(&(&(x * x) * x) + &(&self.a * x)) + &self.b
    }

    /// The cubic `x^3 + a x + b` as a polynomial.
    pub fn cubic(&self) -> Poly {
        let f = self.field();
        Poly::new(f, vec![self.b.clone(), self.a.clone(), f.zero(), f.one()])
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Identity => true,
            CurvePoint::Affine(x, y) => {
                x.field().same_as(self.field()) && y.field().same_as(self.field()) && &(y * y) == &self.rhs(x)
            }
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        Ok(match p {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y),
        })
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Identity, _) => return q.clone(),
            (_, CurvePoint::Identity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Identity;
            }
            // tangent: (3 x^2 + a) / (2 y)
            let num = &(x1 * x1).scale(&rat(3)) + &self.a;
            &num * &y1.scale(&rat(2)).inv().expect("y nonzero")
        } else {
            &(y2 - y1) * &(x2 - x1).inv().expect("distinct x")
        };
        let x3 = &(&(&slope * &slope) - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        CurvePoint::Affine(x3, y3)
    }

    /// `[d] p` by double-and-add; negative `d` negates.
    pub fn mul(&self, d: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        let base = if d < 0 { self.neg(p)? } else { p.clone() };
        let mut acc = CurvePoint::Identity;
        let mut pow = base;
        let mut e = d.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            e >>= 1;
            if e > 0 {
                pow = self.add_unchecked(&pow, &pow);
            }
        }
        Ok(acc)
    }

    /// `g_0, ..., g_upto` with `ψ_n = g_n` for odd `n` and `ψ_n = 2y g_n` for even `n`.
    fn reduced_division_polys(&self, upto: usize) -> Vec<Poly> {
        let f = self.field();
        let (a, b) = (&self.a, &self.b);
        let mut g = vec![Poly::zero(f), Poly::one(f), Poly::one(f)];
        let a2 = a * a;
        g.push(Poly::new(
            f,
            vec![-&a2, b.scale(&rat(12)), a.scale(&rat(6)), f.zero(), f.from_int(3)],
        ));
        g.push(Poly::new(
            f,
            vec![
                (&(&(b * b).scale(&rat(8)) + &(&a2 * a))).scale(&rat(-2)),
                (a * b).scale(&rat(-8)),
                a2.scale(&rat(-10)),
                b.scale(&rat(40)),
                a.scale(&rat(10)),
                f.zero(),
                f.from_int(2),
            ],
        ));
        let cubic = self.cubic();
        let f2_16 = (&cubic * &cubic).scale(&f.from_int(16));
        for n in 5..=upto {
            let m = n / 2;
            let next = if n % 2 == 1 {
                let first = &g[m + 2] * &g[m].pow(3);
                let second = &g[m - 1] * &g[m + 1].pow(3);
                if m % 2 == 0 {
                    &(&f2_16 * &first) - &second
                } else {
                    &first - &(&f2_16 * &second)
                }
            } else {
                let inner = &(&g[m + 2] * &g[m - 1].pow(2)) - &(&g[m - 2] * &g[m + 1].pow(2));
                &g[m] * &inner
            };
            g.push(next);
        }
        g.truncate(upto + 1);
        g
    }
}

/// `Φ_d` with `x([d]P) = Φ_d(x(P))`, from division polynomials:
/// `Φ_d = x - ψ_{d-1} ψ_{d+1} / ψ_d^2`.
pub fn lattes_phi(curve: &Curve, d: usize) -> RatFunc {
    assert!(d >= 1, "multiplier must be positive");
    let f = curve.field();
    let g = curve.reduced_division_polys(d + 1);
    let four_f = curve.cubic().scale(&f.from_int(4));
    let (psi_sq, outer) = if d % 2 == 1 {
        (g[d].pow(2), &four_f * &(&g[d - 1] * &g[d + 1]))
    } else {
        (&four_f * &g[d].pow(2), &g[d - 1] * &g[d + 1])
    };
    let num = &(&Poly::x(f) * &psi_sq) - &outer;
    RatFunc::new(num, psi_sq).expect("ψ_d is nonzero")
}

/// The x-line map induced by `R ↦ R + Q` for the 2-torsion point `Q = (x_Q, 0)`:
/// `(x_Q x + 2 x_Q^2 + a) / (x - x_Q)`.
pub fn translate_by_2torsion(curve: &Curve, xq: &NFElem) -> Result<RatFunc> {
    if !xq.field().same_as(curve.field()) {
        return Err(Error::FieldMismatch);
    }
    if !curve.rhs(xq).is_zero() {
        return Err(Error::NotTwoTorsion);
    }
    let f = curve.field();
    let num = Poly::new(f, vec![&(xq * xq).scale(&rat(2)) + curve.a(), xq.clone()]);
    let den = Poly::new(f, vec![-xq, f.one()]);
    RatFunc::new(num, den)
}

/// `translate_by_2torsion ∘ Φ_d`, the x-line map of `P ↦ [d]P + Q`.
pub fn lattes_translated(curve: &Curve, d: usize, xq: &NFElem) -> Result<RatFunc> {
    let t = translate_by_2torsion(curve, xq)?;
    Ok(t.compose(&lattes_phi(curve, d)))
}
