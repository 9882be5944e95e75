//! Infinity-norm condition numbers `κ = ‖G‖∞ ‖G⁻¹‖∞` of the monomial Gram
//! matrices.
//!
//! For Hermite the `sqrt(pi)` grade of `G` (+1) and of `G⁻¹` (-1) cancel, so
//! `κ` is always an exact rational.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactscalar::{format_decimal, Rational};
use crate::family::Family;
use crate::kernel::build_kernel;
use crate::matrix::RatMatrix;
use crate::oracle::gram_from_moments;

/// Maximum absolute row sum.
pub fn inf_norm(m: &RatMatrix) -> Rational {
    m.rows()
        .map(|r| r.iter().map(Signed::abs).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn condition_number(family: Family, n: usize) -> Result<Rational> {
    let g = gram_from_moments(family, n)?;
    let b = build_kernel(family, n)?;
    if g.sqrtpi_power + b.sqrtpi_power != 0 {
        return Err(Error::GradeMismatch {
            left: g.sqrtpi_power,
            right: b.sqrtpi_power,
        });
    }
    Ok(inf_norm(&g.entries) * inf_norm(&b.entries))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionRow {
    pub size: usize,
    pub kappa: Rational,
    pub kappa_decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub family: Family,
    pub rows: Vec<ConditionRow>,
}

pub fn condition_table(
    family: Family,
    max_size: usize,
    significant_digits: usize,
) -> Result<ConditionReport> {
    if max_size == 0 {
        return Err(Error::ZeroSize);
    }
    let rows = (1..=max_size)
        .map(|size| {
            let kappa = condition_number(family, size)?;
            Ok(ConditionRow {
                size,
                kappa_decimal: format_decimal(&kappa, significant_digits),
                kappa,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ConditionReport { family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::{int, ratio};
    use alloc::vec;

    #[test]
    fn norm_examples() {
        let g = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(2)]]);
        assert_eq!(inf_norm(&g), int(3));
        let b = RatMatrix::from_rows(vec![vec![int(2), int(-1)], vec![int(-1), int(1)]]);
        assert_eq!(inf_norm(&b), int(3));
        assert_eq!(inf_norm(&RatMatrix::identity(5)), int(1));
    }

    #[test]
    fn size_two_values() {
        assert_eq!(condition_number(Family::Laguerre, 2).unwrap(), int(9));
        assert_eq!(
            condition_number(Family::LegendreOdd, 2).unwrap(),
            ratio(112, 3)
        );
        assert_eq!(condition_number(Family::LegendreEven, 2).unwrap(), int(20));
        assert_eq!(
            condition_number(Family::HermiteOdd, 2).unwrap(),
            ratio(147, 8)
        );
        assert_eq!(
            condition_number(Family::HermiteEven, 2).unwrap(),
            ratio(9, 2)
        );
        for f in Family::ALL {
            assert_eq!(condition_number(f, 1).unwrap(), int(1));
        }
    }

    #[test]
    fn tables() {
        let t = condition_table(Family::Laguerre, 3, 17).unwrap();
        let got: Vec<_> = t.rows.iter().map(|r| (r.size, r.kappa.clone())).collect();
        assert_eq!(got, vec![(1, int(1)), (2, int(9)), (3, int(288))]);
        let t = condition_table(Family::LegendreEven, 4, 17).unwrap();
        assert_eq!(t.rows[3].kappa, int(18150));
        let t = condition_table(Family::HermiteOdd, 2, 17).unwrap();
        assert_eq!(t.rows[1].kappa_decimal, "18.375");
        assert_eq!(
            condition_table(Family::Laguerre, 0, 17),
            Err(Error::ZeroSize)
        );
    }

    #[test]
    fn growth_is_monotone() {
        for f in Family::ALL {
            let t = condition_table(f, 10, 17).unwrap();
            assert!(t.rows.iter().all(|r| r.kappa >= int(1)));
            for w in t.rows.windows(2) {
                assert!(w[1].kappa > w[0].kappa, "{f} size {}", w[1].size);
            }
        }
    }
}
