//! The reproducing kernel `K(x, y) = Σ b_ij x^(p_i) y^(p_j)`, with
//! `B = (b_ij)` the inverse of the monomial Gram matrix, obtained in closed
//! form from the expansion coefficients and norms of the family:
//! `b_ij = Σ_{k >= max(i, j)} a_ki a_kj / λ_k`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactscalar::{
    binomial, factorial, gamma_ratio, pow2, ratio, recip_factorial, Rational, ScaledRational,
};
use crate::family::{coeff_matrix, norm_vector, Family};
use crate::matrix::RatMatrix;

/// `B = sqrt(pi)^sqrtpi_power * entries`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMatrix {
    pub family: Family,
    pub entries: RatMatrix,
    pub sqrtpi_power: i32,
}

impl KernelMatrix {
    pub fn n(&self) -> usize {
        self.entries.n()
    }
}

pub fn build_kernel(family: Family, n: usize) -> Result<KernelMatrix> {
    let a = coeff_matrix(family, n)?;
    let norms = norm_vector(family, n)?;
    let grade = norms.entries[0].sqrtpi_power;
    debug_assert!(norms.entries.iter().all(|l| l.sqrtpi_power == grade));
    let inv_norms: alloc::vec::Vec<Rational> = norms
        .entries
        .iter()
        .map(|l| l.coefficient.recip())
        .collect();

    let mut b = RatMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let v: Rational = (i..n)
                .map(|k| &a.entries[(k, i)] * &a.entries[(k, j)] * &inv_norms[k])
                .sum();
            b[(j, i)] = v.clone();
            b[(i, j)] = v;
        }
    }
    Ok(KernelMatrix {
        family,
        entries: b,
        sqrtpi_power: -grade,
    })
}

fn powers(family: Family, n: usize, x: &Rational) -> alloc::vec::Vec<Rational> {
    (1..=n)
        .map(|i| num_traits::pow(x.clone(), family.power(i) as usize))
        .collect()
}

pub fn kernel_eval(k: &KernelMatrix, x: &Rational, y: &Rational) -> ScaledRational {
    let n = k.n();
    let xs = powers(k.family, n, x);
    let ys = powers(k.family, n, y);
    let v: Rational = k
        .entries
        .rows()
        .zip(&xs)
        .map(|(row, xi)| xi * row.iter().zip(&ys).map(|(b, yj)| b * yj).sum::<Rational>())
        .sum();
    ScaledRational::new(v, k.sqrtpi_power)
}

/// `Σ_k p_k(x) p_k(y) / λ_k`, evaluated through the orthogonal polynomials
/// themselves rather than through `B`.
pub fn kernel_eval_by_polynomials(
    family: Family,
    n: usize,
    x: &Rational,
    y: &Rational,
) -> Result<ScaledRational> {
    let a = coeff_matrix(family, n)?;
    let norms = norm_vector(family, n)?;
    let mut acc = ScaledRational::zero(-norms.entries[0].sqrtpi_power);
    for (k, lambda) in norms.entries.iter().enumerate() {
        let term = ScaledRational::rational(a.eval_row(k, x) * a.eval_row(k, y));
        acc = acc.checked_add(&(&term * &lambda.recip()?))?;
    }
    Ok(acc)
}

/// Where the Legendre factor `(2k - 3/2)` (even) or `(2k - 1/2)` (odd)
/// sits in the family-specific closed forms for `b_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormPlacement {
    /// Divides the summand, as in the published formulas.
    AsPublished,
    /// Multiplies the summand. This is the placement consistent with the
    /// Gram inverse.
    Corrected,
}

/// Family-specific closed forms for `b_ij`, written out directly rather
/// than through `A` and `λ`. Only the Legendre forms depend on `placement`.
pub fn closed_form_kernel(
    family: Family,
    n: usize,
    placement: NormPlacement,
) -> Result<KernelMatrix> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let entry = |i: u32, j: u32| -> Rational {
        let sign = if (i + j).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        let lo = i.max(j);
        match family {
            Family::Laguerre => {
                let s: Rational = (lo..=n as u32)
                    .map(|k| {
                        Rational::from_integer(binomial(k - 1, i - 1) * binomial(k - 1, j - 1))
                    })
                    .sum();
                sign * recip_factorial(i as i64 - 1) * recip_factorial(j as i64 - 1) * s
            }
            Family::LegendreEven | Family::LegendreOdd => {
                let (half, shift) = if family == Family::LegendreEven {
                    (-1, 3)
                } else {
                    (1, 1)
                };
                let bi = ratio(2 * i as i64 + half, 2);
                let bj = ratio(2 * j as i64 + half, 2);
                let s: Rational = (lo..=n as u32)
                    .map(|k| {
                        let factor = ratio(4 * k as i64 - shift, 2);
                        let factor = match placement {
                            NormPlacement::AsPublished => factor.recip(),
                            NormPlacement::Corrected => factor,
                        };
                        let kf = recip_factorial(k as i64 - 1);
                        Rational::from_integer(binomial(k - 1, i - 1) * binomial(k - 1, j - 1))
                            * &kf
                            * &kf
                            * factor
                            * gamma_ratio(&bi, k - 1)
                            * gamma_ratio(&bj, k - 1)
                    })
                    .sum();
                sign * s
            }
            Family::HermiteEven | Family::HermiteOdd => {
                let off = family.offset();
                let d = |m: u32| 2 * (m - 1) + off;
                let s: Rational = (lo..=n as u32)
                    .map(|k| {
                        Rational::new(factorial(d(k)), pow2(d(k)))
                            * recip_factorial(k as i64 - i as i64)
                            * recip_factorial(k as i64 - j as i64)
                    })
                    .sum();
                sign * Rational::new(pow2(d(i)), factorial(d(i)))
                    * Rational::new(pow2(d(j)), factorial(d(j)))
                    * s
            }
        }
    };
    let entries = RatMatrix::from_fn(n, |i, j| entry(i as u32 + 1, j as u32 + 1));
    Ok(KernelMatrix {
        family,
        entries,
        sqrtpi_power: -family.moment_grade(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::int;
    use alloc::vec;

    #[test]
    fn kernel_examples() {
        let k = build_kernel(Family::Laguerre, 2).unwrap();
        assert_eq!(
            k.entries,
            RatMatrix::from_rows(vec![vec![int(2), int(-1)], vec![int(-1), int(1)]])
        );
        let k = build_kernel(Family::LegendreEven, 2).unwrap();
        assert_eq!(
            k.entries,
            RatMatrix::from_rows(vec![
                vec![ratio(9, 8), ratio(-15, 8)],
                vec![ratio(-15, 8), ratio(45, 8)]
            ])
        );
        assert_eq!(
            build_kernel(Family::Laguerre, 1).unwrap().entries,
            RatMatrix::identity(1)
        );
        let k = build_kernel(Family::HermiteEven, 1).unwrap();
        assert_eq!(k.entries, RatMatrix::identity(1));
        assert_eq!(k.sqrtpi_power, -1);
        assert_eq!(build_kernel(Family::HermiteOdd, 0), Err(Error::ZeroSize));
    }

    #[test]
    fn eval_examples() {
        let k = build_kernel(Family::Laguerre, 2).unwrap();
        assert_eq!(
            kernel_eval(&k, &int(0), &int(0)),
            ScaledRational::rational(int(2))
        );
        assert_eq!(
            kernel_eval(&k, &int(1), &int(1)),
            ScaledRational::rational(int(1))
        );
        for n in 1..5 {
            let k = build_kernel(Family::LegendreOdd, n).unwrap();
            assert!(kernel_eval(&k, &int(0), &ratio(3, 7)).is_zero());
        }
    }

    #[test]
    fn published_forms_except_legendre_match() {
        for f in [Family::Laguerre, Family::HermiteEven, Family::HermiteOdd] {
            for n in 1..=6 {
                assert_eq!(
                    closed_form_kernel(f, n, NormPlacement::AsPublished).unwrap(),
                    build_kernel(f, n).unwrap()
                );
            }
        }
    }
}
