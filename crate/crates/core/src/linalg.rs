//! Exact dense linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vector>;

pub fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form in place; returns the pivot columns. Zero rows are dropped.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}` for an `r x cols` matrix.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vector> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zeros(cols);
            v[f] = Rational::one();
            for (row, &p) in a.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A subspace kept in reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    dim: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Self { dim: ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut rows: Matrix = vectors.into_iter().collect();
        let pivots = rref(&mut rows);
        Self { dim: ambient, rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivots; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let r = self.reduce(&v);
        if is_zero(&r) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.rows);
        rows.push(r);
        self.pivots = rref(&mut rows);
        self.rows = rows;
        true
    }
}

/// `m * v` for a matrix stored by rows.
pub fn apply(m: &Matrix, v: &[Rational]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(is_zero(&apply(&a, &k[0])));
    }

    #[test]
    fn subspace_membership() {
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![int(1), int(1), int(0)]));
        assert!(s.insert(vec![int(0), int(1), int(1)]));
        assert!(!s.insert(vec![int(1), int(2), int(1)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        assert_eq!(s.rank(), 2);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in prop::collection::vec(-3i64..4, 12)) {
            let a: Matrix = entries.chunks(4).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            let k = nullspace(&a, 4);
            prop_assert_eq!(rank(&a) + k.len(), 4);
            for v in &k {
                prop_assert!(is_zero(&apply(&a, v)));
            }
        }
    }
}
