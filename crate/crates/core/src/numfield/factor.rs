//! Factorization of rational polynomials and rational root extraction.
//!
//! Square-free parts are factored modulo a small prime (Cantor-Zassenhaus),
//! Hensel-lifted to a prime power beyond the Mignotte bound and recombined by
//! trial division. Rational roots use the same lifting on single roots, which
//! stays cheap even for degree-80 polynomials with large coefficients.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::qpoly::QPoly;
use super::Rational;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547,
    557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659,
    661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797,
    809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929,
    937, 941, 947, 953, 967, 971, 977, 983, 991, 997,
];

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], coefficients ascending.

type Zp = Vec<u64>;

fn zp_trim(mut a: Zp) -> Zp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn zp_from_ints(f: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    zp_trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn zp_sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    zp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn zp_mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    zp_trim(out)
}

fn zp_divrem(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let db = b.len() - 1;
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut rem = a.clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            rem[i + j] = (rem[i + j] + p - c * bc % p) % p;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (zp_trim(quot), zp_trim(rem))
}

fn zp_monic(a: &Zp, p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn zp_gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = zp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    zp_monic(&a, p)
}

/// Extended gcd for coprime `a`, `b`: returns `(s, t)` with `s a + t b = 1`.
fn zp_bezout(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Zp, Zp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Zp, Zp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s2 = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is a nonzero constant
    let inv = inv_mod(r0[0], p);
    let scale = |v: Zp| zp_trim(v.into_iter().map(|c| c * inv % p).collect());
    (scale(s0), scale(t0))
}

fn zp_derivative(a: &Zp, p: u64) -> Zp {
    zp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn zp_powmod(base: &Zp, e: &BigUint, m: &Zp, p: u64) -> Zp {
    let mut acc: Zp = vec![1];
    let base = zp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        acc = zp_divrem(&zp_mul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = zp_divrem(&zp_mul(&acc, &base, p), m, p).1;
        }
    }
    acc
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn zp_ddf(f: &Zp, p: u64) -> Vec<(Zp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Zp = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut i = 0;
    while f.len() - 1 >= 2 * (i + 1) {
        i += 1;
        h = zp_powmod(&h, &pe, &f, p);
        let g = zp_gcd(&f, &zp_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = zp_divrem(&f, &g, p).0;
            h = zp_divrem(&h, &f, p).1;
            out.push((g, i));
        }
    }
    if f.len() > 1 {
        let d = f.len() - 1;
        out.push((f, d));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus, odd p).
fn zp_edf(f: &Zp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a: Zp = zp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = zp_powmod(&a, &e, f, p);
        let g = zp_gcd(f, &zp_sub(&b, &vec![1], p), p);
        if g.len() > 1 && g.len() < f.len() {
            let h = zp_divrem(f, &g, p).0;
            let mut out = zp_edf(&g, d, p, rng);
            out.extend(zp_edf(&zp_monic(&h, p), d, p, rng));
            return out;
        }
    }
}

fn zp_factor(f: &Zp, p: u64) -> Vec<Zp> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1f2e3d4c ^ p);
    let f = zp_monic(f, p);
    zp_ddf(&f, p)
        .into_iter()
        .flat_map(|(g, d)| zp_edf(&g, d, p, &mut rng))
        .collect()
}

fn zp_roots(f: &Zp, p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&r| f.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % p) == 0)
        .collect()
}

// ---------------------------------------------------------------------------
// Arithmetic in (Z / m)[x] for a prime power m, coefficients ascending.

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect();
    zm_reduce(&v, m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect();
    zm_reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn zm_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), zm_reduce(&rem, m));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] -= &c * bc;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (zm_reduce(&quot, m), zm_reduce(&rem, m))
}

fn to_big(a: &Zp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f = g h (mod p)` with monic `g`, `h` and monic `f` to a factorization
/// modulo `p^k`, one power of `p` at a time.
fn hensel_pair(
    f: &[BigInt],
    g: &Zp,
    h: &Zp,
    p: u64,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (s, t) = zp_bezout(g, h, p);
    let (s, t) = (to_big(&s), to_big(&t));
    let pb = BigInt::from(p);
    let mut g = to_big(g);
    let mut h = to_big(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let diff = zm_sub(f, &zm_mul(&g, &h, &next), &next);
        let e: Vec<BigInt> = diff.iter().map(|c| (c / &pj).mod_floor(&pb)).collect();
        let et = zm_mul(&e, &t, &pb);
        let (q, dg) = zm_divrem_monic(&et, &g, &pb);
        let dh = zm_add(&zm_mul(&e, &s, &pb), &zm_mul(&h, &q, &pb), &pb);
        let dg: Vec<BigInt> = dg.iter().map(|c| c * &pj).collect();
        let dh: Vec<BigInt> = dh.iter().map(|c| c * &pj).collect();
        g = zm_add(&g, &dg, &next);
        h = zm_add(&h, &dh, &next);
        pj = next;
    }
    (g, h)
}

fn hensel_multi(f: &[BigInt], factors: &[Zp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let m = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        return vec![zm_reduce(f, &m)];
    }
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| zp_mul(&acc, g, p));
    let (g, h) = hensel_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(hensel_multi(&h, &factors[1..], p, k));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let c = c.mod_floor(m);
    if &c * 2 > *m {
        c - m
    } else {
        c
    }
}

fn max_abs(f: &[BigInt]) -> BigInt {
    f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn primitive(f: &[BigInt]) -> Vec<BigInt> {
    let content = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if f.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    f.iter().map(|c| c / &content * sign).collect()
}

fn exact_div_int(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = QPoly::from_bigints(f).div_rem(&QPoly::from_bigints(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn choose_prime(f: &[BigInt]) -> Option<u64> {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = zp_from_ints(f, p);
        if fp.len() != f.len() || zp_gcd(&fp, &zp_derivative(&fp, p), p).len() > 1 {
            continue;
        }
        let count = zp_factor(&fp, p).len();
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((p, count));
        }
        tried += 1;
        if tried >= 5 || count == 1 {
            break;
        }
    }
    best.map(|(p, _)| p)
}

/// Factors a primitive square-free integer polynomial of positive degree into
/// primitive irreducible factors.
fn factor_squarefree_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let p = choose_prime(f).expect("no suitable prime below 1000");
    let modular = zp_factor(&zp_from_ints(f, p), p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    // Mignotte-style bound on coefficients of lc * (any monic factor).
    let bound = lc.abs() * max_abs(f) * BigInt::from(n as u64 + 1) * (BigInt::one() << n);
    let mut k = 1u32;
    let pb = BigInt::from(p);
    while pb.pow(k) <= &bound * 2 {
        k += 1;
    }
    let m = pb.pow(k);
    let lc_inv = mod_inverse(&lc, &m);
    let monic_f: Vec<BigInt> = f.iter().map(|c| (c * &lc_inv).mod_floor(&m)).collect();
    let mut lifted = hensel_multi(&monic_f, &modular, p, k);

    let mut result = Vec::new();
    let mut f = f.to_vec();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.last().unwrap().clone();
        for subset in combinations(lifted.len(), size) {
            let mut g = vec![lc.clone()];
            for &i in &subset {
                g = zm_mul(&g, &lifted[i], &m);
            }
            let g: Vec<BigInt> = g.iter().map(|c| symmetric(c, &m)).collect();
            let g = primitive(&g);
            if let Some(q) = exact_div_int(&f, &g) {
                result.push(g);
                f = primitive(&q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        result.push(f);
    }
    result
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Monic irreducible factors of `f` over Q with multiplicities, sorted by degree
/// and then coefficients.
pub fn factor(f: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree_primitive(&part.primitive_integer()) {
            out.push((QPoly::from_bigints(&g).monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// True when `f` has positive degree and no nontrivial factorization over Q.
pub fn is_irreducible(f: &QPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fs = factor(f);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

/// Distinct rational roots of `f`, in increasing order. The zero polynomial has
/// no well-defined root set and yields an empty list.
pub fn rational_roots(f: &QPoly) -> Vec<Rational> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = f.div_rem(&f.gcd(&f.derivative())).0;
    let ints = sqf.primitive_integer();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rational::zero());
    }
    // strip the factor x so that 0 is never a lifted candidate
    let start = ints.iter().position(|c| !c.is_zero()).unwrap();
    let g: Vec<BigInt> = ints[start..].to_vec();
    if g.len() > 1 {
        roots.extend(nonzero_rational_roots(&g));
    }
    roots.sort();
    roots.dedup();
    roots
}

fn nonzero_rational_roots(g: &[BigInt]) -> Vec<Rational> {
    let lc = g.last().unwrap().clone();
    let gq = QPoly::from_bigints(g);
    let mut prime = None;
    for &p in PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = zp_from_ints(g, p);
        if zp_gcd(&gp, &zp_derivative(&gp, p), p).len() == 1 {
            prime = Some(p);
            break;
        }
    }
    let Some(p) = prime else {
        return brute_force_roots(g);
    };
    let gp = zp_from_ints(g, p);
    let dgp = zp_derivative(&gp, p);
    // |lc * root| <= |lc| + max |coeff|
    let bound = lc.abs() + max_abs(g);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    while pb.pow(k) <= &bound * 2 {
        k += 1;
    }
    let m = pb.pow(k);
    let eval = |x: &BigInt, modulus: &BigInt| -> BigInt {
        g.iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(modulus))
    };
    let deriv: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let eval_d = |x: &BigInt, modulus: &BigInt| -> BigInt {
        deriv
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(modulus))
    };
    let mut out = Vec::new();
    for r in zp_roots(&gp, p) {
        let d0 = dgp.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % p);
        debug_assert!(d0 != 0);
        let mut x = BigInt::from(r);
        let mut pj = pb.clone();
        // Newton iteration doubles the precision each step.
        while pj < m {
            pj = (&pj * &pj).min(m.clone());
            let fx = eval(&x, &pj);
            let inv = mod_inverse(&eval_d(&x, &pj), &pj);
            x = (x - fx * inv).mod_floor(&pj);
        }
        let scaled = symmetric(&(&x * &lc), &m);
        let cand = Rational::new(scaled, lc.clone());
        if gq.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// Rational-root theorem enumeration; only reached when no prime below 1000
/// keeps the polynomial square-free, i.e. never in practice.
fn brute_force_roots(g: &[BigInt]) -> Vec<Rational> {
    let gq = QPoly::from_bigints(g);
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut d = Vec::new();
        let mut i = BigInt::one();
        while &i * &i <= n {
            if (&n % &i).is_zero() {
                d.push(i.clone());
                d.push(&n / &i);
            }
            i += 1;
        }
        d
    };
    let mut out = Vec::new();
    for num in divisors(&g[0]) {
        for den in divisors(g.last().unwrap()) {
            for sign in [1, -1] {
                let c = Rational::new(&num * sign, den.clone());
                if gq.eval(&c).is_zero() {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn factors_small_products() {
        // (x^2 - 2)(x^2 + 2)
        let f = &q(&[-2, 0, 1]) * &q(&[2, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs, vec![(q(&[-2, 0, 1]), 1), (q(&[2, 0, 1]), 1)]);
        assert!(!is_irreducible(&f));
        assert!(is_irreducible(&q(&[-2, 0, 1])));
        assert!(!is_irreducible(&q(&[-1, 0, 1])));
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime
        assert!(is_irreducible(&q(&[1, 0, -10, 0, 1])));
        // x^8 - 40x^6 + 352x^4 - 960x^2 + 576 (sqrt2 + sqrt3 + sqrt5)
        assert!(is_irreducible(&q(&[576, 0, -960, 0, 352, 0, -40, 0, 1])));
    }

    #[test]
    fn factors_non_monic_with_multiplicity() {
        // (2x - 1)^2 (3x^3 + x + 5)
        let f = &q(&[-1, 2]).pow(2) * &q(&[5, 1, 0, 3]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, q(&[-1, 2]).monic());
        assert_eq!(fs[0].1, 2);
        assert_eq!(fs[1].0, q(&[5, 1, 0, 3]).monic());
    }

    #[test]
    fn factors_cyclotomic_product() {
        // x^12 - 1 = product of Phi_d for d | 12: 6 irreducible factors
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let fs = factor(&q(&c));
        assert_eq!(fs.len(), 6);
        let prod = fs.iter().fold(QPoly::one(), |acc, (g, _)| &acc * g);
        assert_eq!(prod, q(&c));
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 3)(x + 5) x (x^2 + 1)
        let f = &(&(&q(&[-3, 2]) * &q(&[5, 1])) * &q(&[0, 1])) * &q(&[1, 0, 1]);
        let roots = rational_roots(&f);
        assert_eq!(
            roots,
            vec![
                Rational::from_integer((-5).into()),
                Rational::zero(),
                Rational::new(3.into(), 2.into())
            ]
        );
        assert!(rational_roots(&q(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn rational_roots_large_coefficients() {
        // (x - 2^40)(7x + 3)(x^2 - 2)
        let big: BigInt = BigInt::one() << 40;
        let f = &(&QPoly::from_bigints(&[-big.clone(), BigInt::one()]) * &q(&[3, 7]))
            * &q(&[-2, 0, 1]);
        let roots = rational_roots(&f);
        assert_eq!(
            roots,
            vec![Rational::new((-3).into(), 7.into()), Rational::from_integer(big)]
        );
    }
}
