//! Incremental Gaussian elimination over Q.

use num_traits::{One, Zero};

use super::Rational;

struct Row {
    pivot: usize,
    vec: Vec<Rational>,
    // vec = sum of combo[j] * (j-th vector passed to insert)
    combo: Vec<Rational>,
}

/// Tracks the span of a growing list of vectors and, for every vector in the
/// span, its coordinates with respect to the inserted vectors that were kept.
pub struct Span {
    dim: usize,
    rows: Vec<Row>,
}

fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi -= a * xi;
        }
    }
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new() }
    }

    /// Number of independent vectors kept so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut res = v.to_vec();
        let mut combo = vec![Rational::zero(); self.rows.len()];
        for row in &self.rows {
            let c = res[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            axpy(&mut res, &c, &row.vec);
            for (k, rc) in row.combo.iter().enumerate() {
                if !rc.is_zero() {
                    combo[k] += &c * rc;
                }
            }
        }
        (res, combo)
    }

    /// Coordinates of `v` in terms of the kept vectors, or `None` when `v` is
    /// outside the span.
    pub fn express(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let (res, combo) = self.reduce(v);
        res.iter().all(|c| c.is_zero()).then_some(combo)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.express(v).is_some()
    }

    /// Adds `v`. Returns `Err(coords)` with `v = sum coords[j] * kept_j` when
    /// `v` is already in the span (and then nothing is stored).
    pub fn insert(&mut self, v: &[Rational]) -> Result<(), Vec<Rational>> {
        let (mut res, combo) = self.reduce(v);
        let Some(pivot) = res.iter().position(|c| !c.is_zero()) else {
            return Err(combo);
        };
        let n = self.rows.len();
        // res = v - sum combo_j kept_j, and v is kept as vector number n
        let mut row_combo: Vec<Rational> = combo.iter().map(|c| -c).collect();
        row_combo.push(Rational::one());
        let inv = res[pivot].recip();
        for c in res.iter_mut() {
            *c *= &inv;
        }
        for c in row_combo.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.iter_mut() {
            row.combo.resize(n + 1, Rational::zero());
        }
        self.rows.push(Row { pivot, vec: res, combo: row_combo });
        Ok(())
    }

    /// Reduced row echelon basis of the span, sorted by pivot.
    pub fn rref(&self) -> Vec<Vec<Rational>> {
        let mut rows: Vec<(usize, Vec<Rational>)> =
            self.rows.iter().map(|r| (r.pivot, r.vec.clone())).collect();
        rows.sort_by_key(|r| r.0);
        for i in (0..rows.len()).rev() {
            let (pi, vi) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                let c = row.1[pi].clone();
                if !c.is_zero() {
                    axpy(&mut row.1, &c, &vi);
                }
            }
        }
        rows.into_iter().map(|r| r.1).collect()
    }
}

/// Solves `x * M = b` where `rows` are the rows of `M`; returns any solution.
pub fn solve_left(rows: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let dim = b.len();
    let mut span = Span::new(dim);
    let mut kept = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if span.insert(r).is_ok() {
            kept.push(i);
        }
    }
    let coords = span.express(b)?;
    let mut x = vec![Rational::zero(); rows.len()];
    for (c, &i) in coords.into_iter().zip(&kept) {
        x[i] = c;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn dependency_is_reported() {
        let mut s = Span::new(3);
        assert!(s.insert(&v(&[1, 2, 0])).is_ok());
        assert!(s.insert(&v(&[0, 1, 1])).is_ok());
        let coords = s.insert(&v(&[2, 5, 1])).unwrap_err();
        assert_eq!(coords, v(&[2, 1]));
        assert_eq!(s.rank(), 2);
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = Span::new(2);
        a.insert(&v(&[1, 1])).unwrap();
        a.insert(&v(&[1, -1])).unwrap();
        let mut b = Span::new(2);
        b.insert(&v(&[0, 3])).unwrap();
        b.insert(&v(&[2, 0])).unwrap();
        assert_eq!(a.rref(), b.rref());
        assert_eq!(a.rref(), vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn solve_left_finds_combination() {
        let rows = vec![v(&[1, 0, 1]), v(&[1, 0, 1]), v(&[0, 1, 0])];
        let x = solve_left(&rows, &v(&[3, 2, 3])).unwrap();
        let mut got = v(&[0, 0, 0]);
        for (xi, r) in x.iter().zip(&rows) {
            for (g, ri) in got.iter_mut().zip(r) {
                *g += xi * ri;
            }
        }
        assert_eq!(got, v(&[3, 2, 3]));
        assert!(solve_left(&rows, &v(&[1, 0, 0])).is_none());
    }
}
