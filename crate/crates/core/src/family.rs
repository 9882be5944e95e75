//! The five kernel families: Laguerre on the half line, and the even and
//! odd halves of Legendre on (-1, 1) and Hermite on the real line.
//!
//! Row `i` of a [`CoeffMatrix`] expands the `i`-th orthogonal polynomial of
//! the family in ascending powers of the family's monomial basis
//! `x^(stride (i-1) + offset)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactscalar::{
    binomial, double_factorial, factorial, gamma_ratio, pow2, ratio, recip_factorial, Rational,
    ScaledRational,
};
use crate::matrix::RatMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Laguerre,
    LegendreEven,
    LegendreOdd,
    HermiteEven,
    HermiteOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `(0, ∞)`
    HalfLine,
    /// `(-1, 1)`
    Interval,
    /// `(-∞, ∞)`
    RealLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `exp(-x)`
    ExpNeg,
    Unit,
    /// `exp(-x^2)`
    Gaussian,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Laguerre,
        Family::LegendreEven,
        Family::LegendreOdd,
        Family::HermiteEven,
        Family::HermiteOdd,
    ];

    pub fn stride(self) -> u32 {
        match self {
            Family::Laguerre => 1,
            _ => 2,
        }
    }

    pub fn offset(self) -> u32 {
        match self {
            Family::LegendreOdd | Family::HermiteOdd => 1,
            _ => 0,
        }
    }

    /// Exponent of the `i`-th (1-based) monomial basis element.
    pub fn power(self, i: usize) -> u32 {
        self.stride() * (i as u32 - 1) + self.offset()
    }

    pub fn domain(self) -> Domain {
        match self {
            Family::Laguerre => Domain::HalfLine,
            Family::LegendreEven | Family::LegendreOdd => Domain::Interval,
            Family::HermiteEven | Family::HermiteOdd => Domain::RealLine,
        }
    }

    pub fn weight(self) -> Weight {
        match self.domain() {
            Domain::HalfLine => Weight::ExpNeg,
            Domain::Interval => Weight::Unit,
            Domain::RealLine => Weight::Gaussian,
        }
    }

    /// Power of `sqrt(pi)` carried by weighted integrals over the domain.
    pub fn moment_grade(self) -> i32 {
        match self.domain() {
            Domain::RealLine => 1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Laguerre => "laguerre",
            Family::LegendreEven => "legendre-even",
            Family::LegendreOdd => "legendre-odd",
            Family::HermiteEven => "hermite-even",
            Family::HermiteOdd => "hermite-odd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(s.into()))
    }
}

/// Lower-triangular expansion coefficients `a_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub family: Family,
    pub entries: RatMatrix,
}

impl CoeffMatrix {
    pub fn n(&self) -> usize {
        self.entries.n()
    }

    /// Evaluates the `i`-th (0-based) polynomial at `x`.
    pub fn eval_row(&self, i: usize, x: &Rational) -> Rational {
        let row = self.entries.row(i);
        (0..=i)
            .map(|j| &row[j] * num_traits::pow(x.clone(), self.family.power(j + 1) as usize))
            .sum()
    }
}

/// Squared norms `λ_i` of the family's orthogonal polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormVector {
    pub family: Family,
    pub entries: Vec<ScaledRational>,
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroSize)
    } else {
        Ok(())
    }
}

fn signed(q: Rational, negative: bool) -> Rational {
    if negative {
        -q
    } else {
        q
    }
}

/// Coefficient `a_ij` for 1-based `j <= i`.
fn coefficient(family: Family, i: u32, j: u32) -> Rational {
    match family {
        Family::Laguerre => signed(
            Rational::from_integer(binomial(i - 1, j - 1)) * recip_factorial(j as i64 - 1),
            (j - 1) % 2 == 1,
        ),
        Family::LegendreEven | Family::LegendreOdd => {
            let half = if family == Family::LegendreEven {
                -1
            } else {
                1
            };
            let base = ratio(2 * j as i64 + half, 2);
            signed(
                recip_factorial(i as i64 - 1)
                    * Rational::from_integer(binomial(i - 1, j - 1))
                    * gamma_ratio(&base, i - 1),
                (i + j) % 2 == 1,
            )
        }
        Family::HermiteEven | Family::HermiteOdd => {
            let off = family.offset();
            let di = 2 * (i - 1) + off;
            let dj = 2 * (j - 1) + off;
            signed(
                Rational::from_integer(factorial(di))
                    * recip_factorial((i - j) as i64)
                    * Rational::new(pow2(dj), factorial(dj)),
                (i - j) % 2 == 1,
            )
        }
    }
}

pub fn coeff_matrix(family: Family, n: usize) -> Result<CoeffMatrix> {
    check_size(n)?;
    let entries = RatMatrix::from_fn(n, |i, j| {
        if j > i {
            Rational::zero()
        } else {
            coefficient(family, i as u32 + 1, j as u32 + 1)
        }
    });
    Ok(CoeffMatrix { family, entries })
}

/// True squared norm of the `i`-th (1-based) polynomial.
fn norm(family: Family, i: u32) -> ScaledRational {
    match family {
        Family::Laguerre => ScaledRational::rational(ratio(1, 1)),
        Family::LegendreEven => ScaledRational::rational(ratio(2, 4 * i as i64 - 3)),
        Family::LegendreOdd => ScaledRational::rational(ratio(2, 4 * i as i64 - 1)),
        Family::HermiteEven | Family::HermiteOdd => {
            let d = 2 * (i - 1) + family.offset();
            ScaledRational::new(Rational::from_integer(pow2(d) * factorial(d)), 1)
        }
    }
}

pub fn norm_vector(family: Family, n: usize) -> Result<NormVector> {
    check_size(n)?;
    Ok(NormVector {
        family,
        entries: (1..=n as u32).map(|i| norm(family, i)).collect(),
    })
}

/// The Legendre norms as they appear in the published closed forms,
/// `2i - 3/2` (even) and `2i - 1/2` (odd). These are the reciprocals of the
/// true norms and are kept only to document the discrepancy.
pub fn printed_legendre_norm(family: Family, i: usize) -> Option<Rational> {
    let i = i as i64;
    match family {
        Family::LegendreEven => Some(ratio(4 * i - 3, 2)),
        Family::LegendreOdd => Some(ratio(4 * i - 1, 2)),
        _ => None,
    }
}

/// `∫_D x^k w(x) dx` over the family's domain.
pub fn monomial_moment(family: Family, k: u32) -> ScaledRational {
    match family.domain() {
        Domain::HalfLine => ScaledRational::rational(Rational::from_integer(factorial(k))),
        Domain::Interval if k.is_multiple_of(2) => ScaledRational::rational(ratio(2, k as i64 + 1)),
        Domain::Interval => ScaledRational::rational(Rational::zero()),
        Domain::RealLine if k.is_multiple_of(2) => ScaledRational::new(
            Rational::new(double_factorial(k as i64 - 1), pow2(k / 2)),
            1,
        ),
        Domain::RealLine => ScaledRational::zero(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::int;
    use alloc::vec;

    fn rows(m: &CoeffMatrix) -> Vec<Vec<Rational>> {
        m.entries.rows().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            rows(&coeff_matrix(Family::Laguerre, 2).unwrap()),
            vec![vec![int(1), int(0)], vec![int(1), int(-1)]]
        );
        assert_eq!(
            rows(&coeff_matrix(Family::LegendreEven, 2).unwrap()),
            vec![vec![int(1), int(0)], vec![ratio(-1, 2), ratio(3, 2)]]
        );
        assert_eq!(
            rows(&coeff_matrix(Family::HermiteEven, 2).unwrap()),
            vec![vec![int(1), int(0)], vec![int(-2), int(4)]]
        );
        assert_eq!(
            rows(&coeff_matrix(Family::LegendreOdd, 2).unwrap()),
            vec![vec![int(1), int(0)], vec![ratio(-3, 2), ratio(5, 2)]]
        );
        // H_1 = 2x, H_3 = 8x^3 - 12x
        assert_eq!(
            rows(&coeff_matrix(Family::HermiteOdd, 2).unwrap()),
            vec![vec![int(2), int(0)], vec![int(-12), int(8)]]
        );
        // P_4 = (35x^4 - 30x^2 + 3)/8
        let p = coeff_matrix(Family::LegendreEven, 3).unwrap();
        assert_eq!(
            p.entries.row(2),
            &[ratio(3, 8), ratio(-30, 8), ratio(35, 8)]
        );
        assert_eq!(coeff_matrix(Family::Laguerre, 0), Err(Error::ZeroSize));
    }

    #[test]
    fn norm_examples() {
        let lag = norm_vector(Family::Laguerre, 3).unwrap();
        assert!(lag
            .entries
            .iter()
            .all(|x| *x == ScaledRational::rational(int(1))));
        assert_eq!(
            norm_vector(Family::LegendreEven, 2).unwrap().entries,
            vec![
                ScaledRational::rational(int(2)),
                ScaledRational::rational(ratio(2, 5))
            ]
        );
        assert_eq!(
            norm_vector(Family::HermiteEven, 1).unwrap().entries,
            vec![ScaledRational::new(int(1), 1)]
        );
        assert_eq!(
            norm_vector(Family::HermiteOdd, 2).unwrap().entries,
            vec![
                ScaledRational::new(int(2), 1),
                ScaledRational::new(int(48), 1)
            ]
        );
        assert_eq!(norm_vector(Family::HermiteOdd, 0), Err(Error::ZeroSize));
        for i in 1..=6 {
            let printed = printed_legendre_norm(Family::LegendreOdd, i).unwrap();
            assert_eq!(
                printed.recip(),
                norm(Family::LegendreOdd, i as u32).coefficient
            );
        }
        assert_eq!(printed_legendre_norm(Family::Laguerre, 1), None);
    }

    #[test]
    fn moment_examples() {
        assert_eq!(
            monomial_moment(Family::Laguerre, 3),
            ScaledRational::rational(int(6))
        );
        assert_eq!(
            monomial_moment(Family::LegendreEven, 2),
            ScaledRational::rational(ratio(2, 3))
        );
        assert!(monomial_moment(Family::LegendreOdd, 3).is_zero());
        assert_eq!(
            monomial_moment(Family::HermiteEven, 4),
            ScaledRational::new(ratio(3, 4), 1)
        );
        assert_eq!(
            monomial_moment(Family::HermiteEven, 0),
            ScaledRational::new(int(1), 1)
        );
        assert!(monomial_moment(Family::HermiteOdd, 5).is_zero());
    }

    #[test]
    fn diagonal_never_vanishes() {
        for f in Family::ALL {
            let a = coeff_matrix(f, 20).unwrap();
            assert!(a.entries.is_lower_triangular());
            assert!(a.entries.diag().iter().all(|x| !x.is_zero()), "{f}");
        }
    }

    #[test]
    fn laguerre_polynomials_are_one_at_origin() {
        let a = coeff_matrix(Family::Laguerre, 20).unwrap();
        for i in 0..20 {
            assert_eq!(a.eval_row(i, &int(0)), int(1));
        }
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("chebyshev".parse::<Family>().is_err());
        assert_eq!(Family::LegendreOdd.power(3), 5);
        assert_eq!(Family::Laguerre.power(3), 2);
    }
}
