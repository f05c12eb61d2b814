use crate::numfield::{rational_roots, QPoly};
use crate::polyrat::{Poly, ProjPoint, RatFunc};

/// Rational points of period at most two, and rational preimages of
/// rational fixed points.
#[derive(Clone, Debug, Default)]
pub struct PeriodicData {
    /// The map is the identity; every point is fixed.
    pub identity: bool,
    /// The map is an involution other than the identity.
    pub involution: bool,
    pub fixed: Vec<ProjPoint>,
    /// Unordered rational 2-cycles, each listed once.
    pub two_cycles: Vec<(ProjPoint, ProjPoint)>,
    /// Rational points of exact period two whose partner is irrational.
    pub irrational_partner: Vec<(ProjPoint, ProjPoint)>,
    /// `(q, p)` with `p` a rational fixed point, `q != p` rational, `f(q) = p`.
    pub fixed_preimages: Vec<(ProjPoint, ProjPoint)>,
}

/// Rational common roots of all coordinate polynomials of `p`; `None` when
/// `p` vanishes identically.
fn common_rational_roots(p: &Poly) -> Option<Vec<ProjPoint>> {
    if p.is_zero() {
        return None;
    }
    let g = p
        .coordinate_polys()
        .into_iter()
        .filter(|c| !c.is_zero())
        .fold(QPoly::zero(), |acc, c| if acc.is_zero() { c } else { acc.gcd(&c) });
    let field = p.field();
    Some(
        rational_roots(&g)
            .into_iter()
            .map(|r| ProjPoint::Finite(field.from_rational(r)))
            .collect(),
    )
}

/// Rational solutions of `f(x) = x` including infinity; `None` if `f` is the identity.
fn rational_fixed(f: &RatFunc) -> Option<Vec<ProjPoint>> {
    let diff = f.num() - &(&Poly::x(f.field()) * f.den());
    let mut pts = common_rational_roots(&diff)?;
    if f.evaluate(&ProjPoint::Infinity).is_infinity() {
        pts.push(ProjPoint::Infinity);
    }
    Some(pts)
}

/// Rational `q` with `f(q) = p`.
fn rational_preimages(f: &RatFunc, p: &ProjPoint) -> Vec<ProjPoint> {
    let eq = match p {
        ProjPoint::Finite(v) => f.num() - &f.den().scale(v),
        ProjPoint::Infinity => f.den().clone(),
    };
    let mut pts = common_rational_roots(&eq).unwrap_or_default();
    if &f.evaluate(&ProjPoint::Infinity) == p {
        pts.push(ProjPoint::Infinity);
    }
    pts
}

/// Rational `p` whose image `f(p)` is also rational, for `f` not over Q.
fn rational_to_rational(f: &RatFunc) -> Vec<ProjPoint> {
    let ns = f.num().coordinate_polys();
    let ds = f.den().coordinate_polys();
    let dim = ns.len().max(ds.len());
    let get = |v: &Vec<QPoly>, i: usize| v.get(i).cloned().unwrap_or_else(QPoly::zero);
    let mut g = QPoly::zero();
    for i in 0..dim {
        for j in i + 1..dim {
            let m = &(&get(&ns, i) * &get(&ds, j)) - &(&get(&ns, j) * &get(&ds, i));
            if !m.is_zero() {
                g = if g.is_zero() { m } else { g.gcd(&m) };
            }
        }
    }
    let field = f.field();
    let mut out: Vec<ProjPoint> = if g.is_zero() {
        Vec::new()
    } else {
        rational_roots(&g).into_iter().map(|r| ProjPoint::Finite(field.from_rational(r))).collect()
    };
    out.retain(|p| f.evaluate(p).is_rational());
    if f.evaluate(&ProjPoint::Infinity).is_rational() {
        out.push(ProjPoint::Infinity);
    }
    out
}

fn sort_points(v: &mut [ProjPoint]) {
    v.sort_by_key(|p| p.rational_key());
}

pub fn rational_periodic_points(f: &RatFunc) -> PeriodicData {
    let mut data = PeriodicData::default();
    let Some(mut fixed) = rational_fixed(f) else {
        data.identity = true;
        return data;
    };
    sort_points(&mut fixed);
    let f2 = f.compose(f);
    let mut period2 = Vec::new();
    if f2.is_identity() {
        data.involution = true;
        if !f.is_over_q() {
            for p in rational_to_rational(f) {
                if !fixed.contains(&p) {
                    period2.push(p);
                }
            }
        }
    } else {
        for p in rational_fixed(&f2).expect("f2 is not the identity") {
            if !fixed.contains(&p) {
                period2.push(p);
            }
        }
    }
    sort_points(&mut period2);
    for p in &period2 {
        let q = f.evaluate(p);
        if q.is_rational() {
            if p.rational_key() < q.rational_key() {
                data.two_cycles.push((p.clone(), q));
            }
        } else {
            data.irrational_partner.push((p.clone(), q));
        }
    }
    for p in &fixed {
        let mut pre = rational_preimages(f, p);
        pre.retain(|q| q != p);
        sort_points(&mut pre);
        for q in pre {
            data.fixed_preimages.push((q, p.clone()));
        }
    }
    data.fixed = fixed;
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::counterexample_map;
    use crate::numfield::NumberField;

    #[test]
    fn counterexample_points() {
        let f = counterexample_map();
        let d = rational_periodic_points(&f);
        assert!(d.fixed.is_empty());
        assert!(d.two_cycles.is_empty());
        assert_eq!(d.irrational_partner.len(), 1);
        let (p, q) = &d.irrational_partner[0];
        assert_eq!(p, &ProjPoint::Finite(f.field().one()));
        assert!(!q.is_rational());
    }

    #[test]
    fn rational_map_points() {
        let q = NumberField::rationals();
        // x^2: fixed 0, 1, inf; -1 maps to 1
        let f = RatFunc::from_poly(Poly::from_ints(&q, &[0, 0, 1]));
        let d = rational_periodic_points(&f);
        assert_eq!(d.fixed.len(), 3);
        assert_eq!(d.fixed_preimages.len(), 1);
        // 1/x swaps 0 and inf
        let g = RatFunc::new(Poly::one(&q), Poly::x(&q)).unwrap();
        let d = rational_periodic_points(&g);
        assert!(d.involution);
        assert!(rational_periodic_points(&RatFunc::identity(&q)).identity);
    }
}
