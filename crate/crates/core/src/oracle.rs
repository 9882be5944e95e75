//! Brute-force ground truth: the monomial Gram matrix assembled from
//! weighted moments, inverted by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactscalar::{Rational, ScaledRational};
use crate::family::{monomial_moment, Family};
use crate::matrix::RatMatrix;

/// `G = sqrt(pi)^sqrtpi_power * entries`, with `entries[i][j]` the weighted
/// inner product of the `i`-th and `j`-th basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub family: Family,
    pub entries: RatMatrix,
    pub sqrtpi_power: i32,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.entries.n()
    }

    /// Entry `(i, j)` depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| i + j == 0 || self.entries[(i, j)] == self.anti_diagonal(i + j))
        })
    }

    fn anti_diagonal(&self, s: usize) -> Rational {
        let i = s.min(self.n() - 1);
        self.entries[(i, s - i)].clone()
    }
}

pub fn gram_from_moments(family: Family, n: usize) -> Result<GramMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let stride = family.stride();
    let offset = family.offset();
    let entries = RatMatrix::from_fn(n, |i, j| {
        monomial_moment(family, stride * (i + j) as u32 + 2 * offset).coefficient
    });
    Ok(GramMatrix {
        family,
        entries,
        sqrtpi_power: family.moment_grade(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInverse {
    pub inverse: RatMatrix,
    /// Grade of the inverse, the negated grade of the input.
    pub sqrtpi_power: i32,
    pub determinant: ScaledRational,
}

pub fn invert_exact(g: &GramMatrix) -> Result<ExactInverse> {
    let (inverse, det) = bareiss_inverse(&g.entries)?;
    Ok(ExactInverse {
        inverse,
        sqrtpi_power: -g.sqrtpi_power,
        determinant: ScaledRational::new(det, g.sqrtpi_power * g.n() as i32),
    })
}

/// Inverse and determinant of a rational matrix.
///
/// Denominators are cleared first so elimination runs over the integers;
/// every intermediate value is then a minor of the scaled matrix augmented
/// with the identity, and each Bareiss division is exact.
pub fn bareiss_inverse(m: &RatMatrix) -> Result<(RatMatrix, Rational)> {
    let n = m.n();
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let scale = m
        .rows()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let width = 2 * n;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = m
                .row(i)
                .iter()
                .map(|x| x.numer() * (&scale / x.denom()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = (k + 1..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let det_scaled = if negate { -prev } else { prev };
    let mut inverse = RatMatrix::zeros(n);
    for c in 0..n {
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(a[i][n + c].clone());
            for j in i + 1..n {
                acc -= Rational::from_integer(a[i][j].clone()) * &inverse[(j, c)];
            }
            inverse[(i, c)] = acc / Rational::from_integer(a[i][i].clone());
        }
    }
    let scale = Rational::from_integer(scale);
    let inverse = inverse.scale(&scale);
    let det = Rational::from_integer(det_scaled) / num_traits::pow(scale, n);
    Ok((inverse, det))
}
