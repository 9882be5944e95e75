use core::fmt;
use core::ops::{Mul, Neg};

use num_traits::{One, Signed, Zero};

use super::{PiLaurent, Rational};
use crate::error::{Error, Result};

/// A rational multiple of an integer power of `sqrt(pi)`.
///
/// Hermite norms and Gram entries carry one factor of `Γ(1/2) = sqrt(pi)`;
/// their inverses carry `sqrt(pi)^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledRational {
    pub coefficient: Rational,
    pub sqrtpi_power: i32,
}

impl ScaledRational {
    pub fn new(coefficient: Rational, sqrtpi_power: i32) -> Self {
        Self {
            coefficient,
            sqrtpi_power,
        }
    }

    pub fn rational(coefficient: Rational) -> Self {
        Self::new(coefficient, 0)
    }

    pub fn zero(sqrtpi_power: i32) -> Self {
        Self::new(Rational::zero(), sqrtpi_power)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    /// Exact sum. Zero is grade-neutral; otherwise grades must agree.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.sqrtpi_power != other.sqrtpi_power {
            return Err(Error::GradeMismatch {
                left: self.sqrtpi_power,
                right: other.sqrtpi_power,
            });
        }
        Ok(Self::new(
            &self.coefficient + &other.coefficient,
            self.sqrtpi_power,
        ))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self::new(self.coefficient.recip(), -self.sqrtpi_power))
    }

    /// Rewrites `q sqrt(pi)^(2m)` as the Laurent sum `q pi^m`.
    pub fn to_pilaurent(&self) -> Result<PiLaurent> {
        if self.sqrtpi_power % 2 != 0 {
            return Err(Error::OddGrade(self.sqrtpi_power));
        }
        Ok(PiLaurent::monomial(
            self.coefficient.clone(),
            self.sqrtpi_power / 2,
        ))
    }
}

impl Mul for &ScaledRational {
    type Output = ScaledRational;

    fn mul(self, rhs: &ScaledRational) -> ScaledRational {
        ScaledRational::new(
            &self.coefficient * &rhs.coefficient,
            self.sqrtpi_power + rhs.sqrtpi_power,
        )
    }
}

impl Neg for ScaledRational {
    type Output = ScaledRational;

    fn neg(self) -> ScaledRational {
        ScaledRational::new(-self.coefficient, self.sqrtpi_power)
    }
}

impl From<Rational> for ScaledRational {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl fmt::Display for ScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrtpi_power {
            0 => write!(f, "{}", self.coefficient),
            _ if self.coefficient.is_one() => write!(f, "sqrtpi^{}", self.sqrtpi_power),
            p => write!(f, "{}*sqrtpi^{}", self.coefficient, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::{int, ratio};

    #[test]
    fn grades_add_and_multiply() {
        let a = ScaledRational::new(ratio(1, 2), 1);
        let b = ScaledRational::new(ratio(1, 3), 1);
        assert_eq!(
            a.checked_add(&b).unwrap(),
            ScaledRational::new(ratio(5, 6), 1)
        );
        assert_eq!(&a * &b, ScaledRational::new(ratio(1, 6), 2));
        let c = ScaledRational::new(int(1), 0);
        assert_eq!(
            a.checked_add(&c),
            Err(Error::GradeMismatch { left: 1, right: 0 })
        );
        assert_eq!(a.checked_add(&ScaledRational::zero(0)).unwrap(), a);
    }

    #[test]
    fn folding_into_pi_powers() {
        let g = ScaledRational::new(ratio(3, 4), 1);
        let inv = g.recip().unwrap();
        assert_eq!(inv, ScaledRational::new(ratio(4, 3), -1));
        assert_eq!(g.to_pilaurent(), Err(Error::OddGrade(1)));
        let sq = (&g * &g).to_pilaurent().unwrap();
        assert_eq!(sq, PiLaurent::monomial(ratio(9, 16), 1));
    }
}
