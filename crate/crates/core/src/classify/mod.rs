//! Deciding whether iterates of a map descend to Q, and producing certificates.

mod bclass;
mod periodic;
mod poly;
mod report;
mod shape;

pub use bclass::{classify_b, BVerdict};
pub use periodic::{rational_periodic_points, PeriodicData};
pub use poly::{poly_classify_a, poly_classify_an, PolyVerdict};
pub use report::{report, report_with_limit, Report};
pub use shape::{normal_form, shape_detect, Shape, ShapeMode, ShapeWitness};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numfield::{NFElem, Subfield};
use crate::polyrat::{Poly, RatFunc};

/// `S_n(k) = 1 + k + ... + k^(n-1)`.
pub fn sn(k: u64, n: u32) -> BigUint {
    let kb = BigUint::from(k);
    let mut acc = BigUint::from(0u32);
    for _ in 0..n {
        acc = acc * &kb + BigUint::one();
    }
    acc
}

/// `S_n(k) mod m`; `m` must be positive.
pub fn sn_mod(k: u64, n: u32, m: u64) -> u64 {
    assert!(m > 0);
    let (k, m) = (k as u128 % m as u128, m as u128);
    let mut acc = 0u128;
    for _ in 0..n {
        acc = (acc * k + 1) % m;
    }
    acc as u64
}

/// Least `n` in `1..=bound` with `t | S_n(k)`.
pub fn min_n_divisibility(t: u64, k: u64, bound: u32) -> Option<u32> {
    assert!(t > 0);
    let (k, t128) = (k as u128 % t as u128, t as u128);
    let mut acc = 0u128;
    for n in 1..=bound {
        acc = (acc * k + 1) % t128;
        if acc == 0 {
            return Some(n);
        }
    }
    None
}

pub(crate) fn divisors_desc(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.extend(small.into_iter().rev());
    large
}

/// Least `s >= 1` with `a^s` rational, if any.
///
/// If `a^s` is rational then `a^m / N(a)` is a root of unity, `m` being the
/// degree of `a`; its order `w` bounds the search to divisors of `m w`.
pub fn least_rational_power(a: &NFElem) -> Option<u64> {
    if a.is_zero() || a.is_rational().is_some() {
        return Some(1);
    }
    let mp = a.minimal_polynomial();
    let m = mp.degree().expect("nonzero") as u64;
    let mut norm = mp.coeff(0);
    if m % 2 == 1 {
        norm = -norm;
    }
    let u = a.pow_u(m).scale(&num_traits::Inv::inv(norm));
    let cap = 2 * (a.field().degree() as u64).pow(2) + 2;
    let mut p = u.clone();
    let mut w = None;
    for j in 1..=cap {
        if p.is_one() {
            w = Some(j);
            break;
        }
        p = &p * &u;
    }
    let w = w?;
    let mut ds = divisors_desc(m * w);
    ds.reverse();
    ds.into_iter().find(|&s| a.pow_u(s).is_rational().is_some())
}

/// Smallest subfield containing every coefficient of `f` (after normalization).
pub fn field_of_definition(f: &RatFunc) -> Subfield {
    crate::families::coefficient_field(f)
}

/// Degrees of `Q(f^{∘i})` for `i = 1..=max_n` and their running intersection.
#[derive(Clone, Debug)]
pub struct IteratesField {
    pub degrees: Vec<usize>,
    pub field: Subfield,
    /// Last index at which the running intersection shrank (1 if never).
    pub stabilized_at: usize,
    /// True when the intersection may still shrink for larger iterates:
    /// it is not Q and it changed at the final step.
    pub upper_bound_only: bool,
}

fn check_degree(f: &RatFunc, n: usize, limit: Option<usize>) -> Result<()> {
    if let Some(limit) = limit {
        let d = f.degree() as f64;
        if d.powi(n as i32) > limit as f64 {
            return Err(Error::ResourceLimit(format!(
                "iterate {n} of a degree-{} map exceeds degree {limit}",
                f.degree()
            )));
        }
    }
    Ok(())
}

pub fn field_of_iterates(f: &RatFunc, max_n: usize) -> IteratesField {
    field_of_iterates_with_limit(f, max_n, None).expect("no limit")
}

/// As [`field_of_iterates`], failing with `ResourceLimit` if an iterate would
/// exceed degree `limit`.
pub fn field_of_iterates_with_limit(f: &RatFunc, max_n: usize, limit: Option<usize>) -> Result<IteratesField> {
    assert!(max_n >= 1);
    check_degree(f, max_n, limit)?;
    let mut degrees = Vec::new();
    let mut acc: Option<Subfield> = None;
    let mut stabilized_at = 1;
    let mut it = f.clone();
    for i in 1..=max_n {
        if i > 1 {
            it = f.compose(&it);
        }
        let fi = field_of_definition(&it);
        degrees.push(fi.degree());
        acc = Some(match acc {
            None => fi,
            Some(prev) => {
                let next = prev.intersect(&fi)?;
                if next.degree() < prev.degree() {
                    stabilized_at = i;
                }
                next
            }
        });
    }
    let field = acc.expect("max_n >= 1");
    let upper_bound_only = field.degree() > 1 && stabilized_at == max_n;
    Ok(IteratesField { degrees, field, stabilized_at, upper_bound_only })
}

const WINDOW: usize = 8;

fn trunc_mul(a: &[NFElem], b: &[NFElem], m: usize) -> Vec<NFElem> {
    let field = a.first().or(b.first()).expect("nonempty").field().clone();
    let mut out = vec![field.zero(); m];
    for (i, x) in a.iter().enumerate().take(m) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(m - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn padded(p: &Poly, m: usize) -> Vec<NFElem> {
    (0..m).map(|i| p.coeff(i)).collect()
}

/// Lowest `m` coefficients of `f^{∘n}` by truncated composition.
fn low_window(f: &Poly, n: usize, m: usize) -> Vec<NFElem> {
    let fc = f.coeffs();
    let mut h = padded(f, m);
    for _ in 1..n {
        // Horner: f(h) mod x^m
        let mut acc = padded(&Poly::constant(f.lc()), m);
        for c in fc.iter().rev().skip(1) {
            acc = trunc_mul(&acc, &h, m);
            acc[0] = &acc[0] + c;
        }
        h = acc;
    }
    h
}

/// Highest `m` coefficients of `f^{∘n}`, leading coefficient first, via the
/// reversals `F_j(y) = y^{D_j} f^{∘j}(1/y)`.
fn high_window(f: &Poly, n: usize, m: usize) -> Vec<NFElem> {
    let d = f.degree().expect("nonconstant");
    let field = f.field();
    let rev = |p: &Poly| -> Vec<NFElem> {
        let deg = p.degree().expect("nonzero");
        (0..m).map(|i| if i <= deg { p.coeff(deg - i) } else { field.zero() }).collect()
    };
    let mut h = rev(f);
    let mut dj = d;
    for _ in 1..n {
        // y^{d D_j} f(f^{∘j}(1/y)) = Σ c_i F_j^i y^{(d-i) D_j}
        let mut acc = vec![field.zero(); m];
        let mut pw = {
            let mut one = vec![field.zero(); m];
            one[0] = field.one();
            one
        };
        for i in 0..=d {
            if i > 0 {
                pw = trunc_mul(&pw, &h, m);
            }
            let shift = (d - i).saturating_mul(dj);
            let c = f.coeff(i);
            if shift >= m || c.is_zero() {
                continue;
            }
            for (e, x) in pw.iter().enumerate().take(m - shift) {
                acc[e + shift] = &acc[e + shift] + &(&c * x);
            }
        }
        h = acc;
        dj = dj.saturating_mul(d);
    }
    h
}

/// Decides `f^{∘n} ∈ Q(x)` by computing the iterate. Polynomials are first
/// screened on their lowest and highest coefficients.
pub fn ratfunc_in_an_direct(f: &RatFunc, n: usize) -> bool {
    ratfunc_in_an_direct_with_limit(f, n, None).expect("no limit")
}

pub fn ratfunc_in_an_direct_with_limit(f: &RatFunc, n: usize, limit: Option<usize>) -> Result<bool> {
    if f.is_over_q() {
        return Ok(true);
    }
    if n == 0 {
        return Ok(true);
    }
    if let Some(p) = f.as_poly() {
        if !p.is_zero() && p.degree() != Some(0) {
            let m = WINDOW.min(p.degree().unwrap().saturating_pow(n as u32).saturating_add(1));
            let lo = low_window(p, n, m);
            let hi = high_window(p, n, m);
            if lo.iter().chain(&hi).any(|c| c.is_rational().is_none()) {
                return Ok(false);
            }
        }
    }
    check_degree(f, n, limit)?;
    Ok(f.iterate(n).is_over_q())
}
