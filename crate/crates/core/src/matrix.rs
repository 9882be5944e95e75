//! Dense square matrices over the exact rationals.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul};

use num_traits::{One, Signed, Zero};

use crate::exactscalar::Rational;

/// Row-major `n x n` rational matrix, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: (0..n * n).map(|_| Rational::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Panics unless every row has the same length as the number of rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * q).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diag(&self) -> Vec<Rational> {
        (0..self.n).map(|i| self[(i, i)].clone()).collect()
    }

    /// Exact test through symmetric elimination without pivoting: a
    /// symmetric matrix is positive definite iff every pivot is positive
    /// (equivalently, every leading principal minor is).
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let mut m = self.clone();
        for k in 0..self.n {
            let pivot = m[(k, k)].clone();
            if !pivot.is_positive() {
                return false;
            }
            for i in k + 1..self.n {
                let factor = &m[(i, k)] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..self.n {
                    let delta = &factor * &m[(k, j)];
                    m[(i, j)] -= delta;
                }
            }
        }
        true
    }

    /// Determinant of a lower-triangular matrix.
    pub fn triangular_determinant(&self) -> Rational {
        self.diag().into_iter().product()
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        RatMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::{int, ratio};
    use alloc::vec;

    #[test]
    fn products_and_predicates() {
        let g = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(2)]]);
        let b = RatMatrix::from_rows(vec![vec![int(2), int(-1)], vec![int(-1), int(1)]]);
        assert_eq!(&g * &b, RatMatrix::identity(2));
        assert!(g.is_symmetric() && g.is_positive_definite());
        let indefinite = RatMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(1)]]);
        assert!(!indefinite.is_positive_definite());
        assert_eq!(
            g.mul_vec(&[ratio(1, 2), ratio(1, 4)]),
            vec![ratio(3, 4), int(1)]
        );
        assert!(RatMatrix::diagonal(&[int(3), int(4)]).is_diagonal());
        assert_eq!(
            RatMatrix::diagonal(&[int(3), int(4)]).triangular_determinant(),
            int(12)
        );
    }
}
