//! 2×2 invertible matrices up to scalars: when a power is projectively
//! rational, eigenvalue ratios, and explicit roots.

use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::{
    adjoin_quadratic_root, adjoin_root, radical_field, Embedding, NFElem, NumberField, Rational, Subfield,
};
use crate::polyrat::Mobius;

/// Largest absolute degree allowed for a constructed eigen or root field.
const MAX_DEGREE: usize = 24;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    a: NFElem,
    b: NFElem,
    c: NFElem,
    d: NFElem,
}

impl Mat2 {
    pub fn new(a: NFElem, b: NFElem, c: NFElem, d: NFElem) -> Result<Self> {
        let f = a.field();
        if ![&b, &c, &d].iter().all(|e| e.field().same_as(f)) {
            return Err(Error::FieldMismatch);
        }
        let m = Mat2 { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(m)
    }

    pub fn from_ints(field: &NumberField, e: [i64; 4]) -> Result<Self> {
        Self::new(field.from_int(e[0]), field.from_int(e[1]), field.from_int(e[2]), field.from_int(e[3]))
    }

    pub fn from_rationals(field: &NumberField, e: [Rational; 4]) -> Result<Self> {
        let [a, b, c, d] = e.map(|r| field.from_rational(r));
        Self::new(a, b, c, d)
    }

    pub fn identity(field: &NumberField) -> Self {
        Mat2 { a: field.one(), b: field.zero(), c: field.zero(), d: field.one() }
    }

    pub fn diagonal(x: NFElem, y: NFElem) -> Result<Self> {
        let z = x.field().zero();
        Self::new(x, z.clone(), z, y)
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn entries(&self) -> [&NFElem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> NFElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> NFElem {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn inverse(&self) -> Mat2 {
        let inv = self.det().inv().expect("invertible");
        Mat2 { a: &self.d * &inv, b: -&(&self.b * &inv), c: -&(&self.c * &inv), d: &self.a * &inv }
    }

    pub fn scale(&self, s: &NFElem) -> Mat2 {
        Mat2 { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    pub fn pow(&self, mut n: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.field());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Equality up to a nonzero scalar.
    pub fn proj_eq(&self, o: &Mat2) -> bool {
        let x = self.entries();
        let y = o.entries();
        (0..4).all(|i| (i + 1..4).all(|j| &(x[i] * y[j]) == &(x[j] * y[i])))
    }

    /// Divides by the first nonzero entry.
    pub fn normalized(&self) -> Mat2 {
        let p = self.entries().into_iter().find(|e| !e.is_zero()).expect("invertible");
        self.scale(&p.inv().expect("nonzero"))
    }

    pub fn map(&self, emb: &Embedding) -> Result<Mat2> {
        Self::new(emb.apply(&self.a)?, emb.apply(&self.b)?, emb.apply(&self.c)?, emb.apply(&self.d)?)
    }

    pub fn to_mobius(&self) -> Mobius {
        Mobius::new(self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()).expect("invertible")
    }

    pub fn display_in(&self, var: &str) -> String {
        let e = self.entries().map(|x| x.display_in(var));
        format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("a"))
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2({})", self.display_in("a"))
    }
}

/// True iff `a` is a scalar multiple of a matrix with rational entries.
pub fn proj_rational(a: &Mat2) -> bool {
    a.normalized().entries().iter().all(|e| e.is_rational().is_some())
}

/// `a^n` and whether it is projectively rational.
pub fn power_class(a: &Mat2, n: u64) -> (Mat2, bool) {
    let p = a.pow(n);
    let r = proj_rational(&p);
    (p, r)
}

#[derive(Clone, Debug)]
pub struct EigenData {
    pub lambda1: NFElem,
    pub lambda2: NFElem,
    /// `lambda1 / lambda2`
    pub ratio: NFElem,
    pub diagonalizable: bool,
    pub extension: NumberField,
    pub embedding: Embedding,
}

/// Eigenvalues in the field obtained by adjoining a root of the characteristic
/// polynomial, ordered lexicographically by power-basis coordinates.
pub fn eigen_data(a: &Mat2) -> Result<EigenData> {
    let k = a.field();
    let (ext, emb, root) = adjoin_quadratic_root(k, &-&a.trace(), &a.det())?;
    let tr = emb.apply(&a.trace())?;
    let other = &tr - &root;
    let (l1, l2) = if root.coords() <= other.coords() { (root, other) } else { (other, root) };
    let ratio = &l1 * &l2.inv().expect("invertible matrix");
    let diagonalizable = l1 != l2 || a.is_scalar();
    Ok(EigenData { lambda1: l1, lambda2: l2, ratio, diagonalizable, extension: ext, embedding: emb })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop42Verdict {
    /// `[A]` is already rational.
    TriviallyConsistent,
    /// No power up to the bound is projectively rational.
    Consistent { checked: u64 },
    /// Some power is rational although `[A]` is not.
    Violated { n: u64 },
}

/// For non-diagonalizable `a`: a projectively rational power forces `[a]` rational.
pub fn check_prop42(a: &Mat2, n_max: u64) -> Result<Prop42Verdict> {
    if eigen_data(a)?.diagonalizable {
        return Err(Error::DiagonalizableInput);
    }
    if proj_rational(a) {
        return Ok(Prop42Verdict::TriviallyConsistent);
    }
    let mut p = a.clone();
    for n in 1..=n_max {
        if n > 1 {
            p = p.mul(a);
        }
        if proj_rational(&p) {
            return Ok(Prop42Verdict::Violated { n });
        }
    }
    Ok(Prop42Verdict::Consistent { checked: n_max })
}

/// Absolute degree of `Q((λ1/λ2)^n)`.
pub fn ratio_power_degree(a: &Mat2, n: u64) -> Result<usize> {
    let e = eigen_data(a)?;
    if !e.diagonalizable {
        return Err(Error::NotDiagonalizable);
    }
    let r = e.ratio.pow_u(n);
    Ok(Subfield::generated(&e.extension, &[r])?.degree())
}

/// `A = M D M^{-1}` over the eigenvalue field of `A`.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    /// Field of `M`; contains `(λ1/λ2)^n`.
    pub k_prime: Subfield,
    /// `K'(λ1/λ2)`.
    pub f: Subfield,
    pub m: Mat2,
    pub d: Mat2,
    /// `M` had to be composed with the swap `[[0,1],[1,0]]`.
    pub swapped: bool,
    /// `[K':Q] <= 2` and `[F:K'] <= n`.
    pub bounds_hold: bool,
    /// From the field of `A` into the field of `M` and `D`.
    pub embedding: Embedding,
}

impl RootDecomposition {
    pub fn recompose(&self) -> Mat2 {
        self.m.mul(&self.d).mul(&self.m.inverse())
    }
}

#[derive(Clone, Debug)]
pub enum RootOutcome {
    RationalAlready,
    Decomposed(RootDecomposition),
}

/// Eigenvector of `m` for eigenvalue `mu`, scaled to a leading 1.
fn eigenvector(m: &Mat2, mu: &NFElem, second: bool) -> (NFElem, NFElem) {
    let f = m.field();
    let (x, y) = if !m.b.is_zero() {
        (m.b.clone(), mu - &m.a)
    } else if !m.c.is_zero() {
        (mu - &m.d, m.c.clone())
    } else if &m.a == mu && (!second || m.d != m.a) {
        (f.one(), f.zero())
    } else {
        (f.zero(), f.one())
    };
    if x.is_zero() {
        (x, f.one())
    } else {
        let inv = x.inv().expect("nonzero");
        (f.one(), &y * &inv)
    }
}

/// Writes `A = M D M^{-1}` with `D = diag(λ1, λ2)` and `M` built from the
/// eigenvectors of the rational matrix `[A^n]`, or from those of `A` itself
/// when `A^n` is scalar.
pub fn root_decompose(a: &Mat2, n: u64) -> Result<RootOutcome> {
    if n == 0 {
        return Err(Error::Precondition("exponent must be positive".into()));
    }
    let (an, rational) = power_class(a, n);
    if !rational {
        return Err(Error::Precondition(format!("A^{n} is not projectively rational")));
    }
    if proj_rational(a) {
        return Ok(RootOutcome::RationalAlready);
    }
    let e = eigen_data(a)?;
    if !e.diagonalizable || e.lambda1 == e.lambda2 {
        return Err(Error::Inconsistent(
            "non-diagonalizable matrix with a rational power but irrational class".into(),
        ));
    }
    let emb = e.embedding.clone();
    let ext = e.extension.clone();
    let ae = a.map(&emb)?;
    let alpha = &e.ratio;
    let alpha_n = alpha.pow_u(n);

    let source = if alpha_n.is_one() {
        ae.clone()
    } else {
        an.normalized().map(&emb)?
    };
    let pow_of = |l: &NFElem| if alpha_n.is_one() { l.clone() } else { l.pow_u(n) };
    // eigenvalues of the source matrix matching λ1, λ2
    let (mu1, mu2) = if alpha_n.is_one() {
        (e.lambda1.clone(), e.lambda2.clone())
    } else {
        let c = emb.apply(an.entries().into_iter().find(|x| !x.is_zero()).expect("invertible"))?;
        let cinv = c.inv().expect("nonzero");
        (&pow_of(&e.lambda1) * &cinv, &pow_of(&e.lambda2) * &cinv)
    };
    let (x1, y1) = eigenvector(&source, &mu1, false);
    let (x2, y2) = eigenvector(&source, &mu2, true);
    let mut m = Mat2::new(x1, x2, y1, y2)?;
    let d = Mat2::diagonal(e.lambda1.clone(), e.lambda2.clone())?;
    let mut swapped = false;
    if m.mul(&d).mul(&m.inverse()) != ae {
        let sw = Mat2::from_ints(&ext, [0, 1, 1, 0])?;
        let m2 = m.mul(&sw);
        if m2.mul(&d).mul(&m2.inverse()) != ae {
            return Err(Error::Inconsistent("A differs from M D M^-1 in both eigen-orders".into()));
        }
        m = m2;
        swapped = true;
    }
    let mut gens: Vec<NFElem> = m.entries().into_iter().cloned().collect();
    gens.push(alpha_n);
    let k_prime = Subfield::generated(&ext, &gens)?;
    let mut fgens = k_prime.basis().to_vec();
    fgens.push(alpha.clone());
    let f = Subfield::generated(&ext, &fgens)?;
    let bounds_hold = k_prime.degree() <= 2 && f.degree() <= k_prime.degree() * n as usize;
    Ok(RootOutcome::Decomposed(RootDecomposition { k_prime, f, m, d, swapped, bounds_hold, embedding: emb }))
}

/// A matrix `A` with `[A^n] = [B]`, for `B` with rational entries.
pub fn pgl2_nth_root(b: &Mat2, n: u64) -> Result<Mat2> {
    if n == 0 {
        return Err(Error::Precondition("exponent must be positive".into()));
    }
    if !b.entries().iter().all(|e| e.is_rational().is_some()) {
        return Err(Error::Precondition("matrix must have rational entries".into()));
    }
    let q = NumberField::rationals();
    let bq = Mat2::new(
        q.from_rational(b.a.is_rational().unwrap()),
        q.from_rational(b.b.is_rational().unwrap()),
        q.from_rational(b.c.is_rational().unwrap()),
        q.from_rational(b.d.is_rational().unwrap()),
    )?;
    if bq.is_scalar() {
        return Ok(Mat2::identity(&q));
    }
    let e = eigen_data(&bq)?;
    if !e.diagonalizable {
        // B = λ (I + N) with N^2 = 0; (I + N/n)^n = I + N
        let lam = e.lambda1.is_rational().expect("repeated eigenvalue of a rational matrix");
        let inv = q.from_rational(Rational::from_integer(1.into()) / lam);
        let nil = &bq.scale(&inv) - &Mat2::identity(&q);
        let step = nil.scale(&q.from_rational(Rational::new(1.into(), (n as i64).into())));
        return Ok(&Mat2::identity(&q) + &step);
    }
    // Δ = diag(μ1^(1/n), μ2^(1/n)), so that A^n = B exactly
    let kp = e.extension.clone();
    let (f1, e1, r1) = nth_root(&kp, &e.lambda1, n)?;
    let (f2, e2, r2) = nth_root(&f1, &e1.apply(&e.lambda2)?, n)?;
    let to_root = e1.then(&e2)?;
    let bk = bq.map(&e.embedding)?;
    let (x1, y1) = eigenvector(&bk, &e.lambda1, false);
    let (x2, y2) = eigenvector(&bk, &e.lambda2, true);
    let m = Mat2::new(x1, x2, y1, y2)?.map(&to_root)?;
    let delta = Mat2::diagonal(e2.apply(&r1)?, r2)?;
    debug_assert!(f2.same_as(delta.field()));
    Ok(m.mul(&delta).mul(&m.inverse()))
}

/// An `n`-th root of `mu` in an extension of `base`, real when `mu` is a
/// rational admitting one.
fn nth_root(base: &NumberField, mu: &NFElem, n: u64) -> Result<(NumberField, Embedding, NFElem)> {
    if base.is_rationals() {
        if let Ok((fld, r)) = radical_field(&mu.is_rational().expect("base is Q"), n as u32) {
            let emb = Embedding::new(base.clone(), fld.clone(), fld.zero())?;
            return Ok((fld, emb, r));
        }
    }
    if base.degree() * n as usize > MAX_DEGREE {
        return Err(Error::NoConstructibleRoot(format!(
            "root field of degree up to {} exceeds {MAX_DEGREE}",
            base.degree() * n as usize
        )));
    }
    pure_root(base, mu, n)
}

fn pure_root(base: &NumberField, beta: &NFElem, n: u64) -> Result<(NumberField, Embedding, NFElem)> {
    let mut coeffs = vec![base.zero(); n as usize + 1];
    coeffs[0] = -beta;
    coeffs[n as usize] = base.one();
    adjoin_root(base, &coeffs).map_err(|err| match err {
        Error::ResourceLimit(s) => Error::NoConstructibleRoot(s),
        other => other,
    })
}

impl std::ops::Add for &Mat2 {
    type Output = Mat2;
    fn add(self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl std::ops::Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, o: &Mat2) -> Mat2 {
        Mat2 { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}
