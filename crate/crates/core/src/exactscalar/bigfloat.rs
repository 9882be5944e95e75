use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use astro_float::{Consts, RoundingMode, Sign, Word, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{format_decimal, PiLaurent, Rational};
use crate::error::{Error, Result};

pub const MIN_PRECISION_BITS: usize = 128;
pub const DEFAULT_PRECISION_BITS: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

/// Binary floating-point real at a fixed working precision.
#[derive(Clone, Debug)]
pub struct BigFloat {
    value: astro_float::BigFloat,
    precision_bits: usize,
}

fn float_err(e: impl fmt::Debug) -> Error {
    Error::Float(alloc::format!("{e:?}"))
}

fn consts() -> Result<Consts> {
    Consts::new().map_err(float_err)
}

fn check(value: astro_float::BigFloat) -> Result<astro_float::BigFloat> {
    match value.err() {
        Some(e) => Err(float_err(e)),
        None if value.is_nan() => Err(Error::Float("NaN".to_string())),
        None => Ok(value),
    }
}

fn words_of(mag: &BigUint) -> Vec<Word> {
    if WORD_BIT_SIZE == 64 {
        mag.iter_u64_digits().map(|d| d as Word).collect()
    } else {
        mag.iter_u32_digits().map(|d| d as Word).collect()
    }
}

/// Exact conversion of an integer.
fn integer_to_float(n: &BigInt) -> Result<astro_float::BigFloat> {
    if n.is_zero() {
        return Ok(astro_float::BigFloat::from_word(0, WORD_BIT_SIZE));
    }
    let words = words_of(n.magnitude());
    let sign = if n.sign() == num_bigint::Sign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    let e = i32::try_from(words.len() * WORD_BIT_SIZE).map_err(float_err)?;
    check(astro_float::BigFloat::from_words(&words, sign, e))
}

fn rational_to_float(q: &Rational, p: usize) -> Result<astro_float::BigFloat> {
    let n = integer_to_float(q.numer())?;
    if q.denom().is_one() {
        let mut n = n;
        n.set_precision(p, RM).map_err(float_err)?;
        return Ok(n);
    }
    let d = integer_to_float(q.denom())?;
    check(n.div(&d, p, RM))
}

impl BigFloat {
    pub fn from_rational(q: &Rational, precision_bits: usize) -> Result<Self> {
        check_precision(precision_bits)?;
        Ok(Self {
            value: rational_to_float(q, precision_bits)?,
            precision_bits,
        })
    }

    pub fn zero(precision_bits: usize) -> Result<Self> {
        Self::from_rational(&Rational::zero(), precision_bits)
    }

    /// `pi`, correctly rounded.
    pub fn pi(precision_bits: usize) -> Result<Self> {
        check_precision(precision_bits)?;
        Ok(Self {
            value: check(consts()?.pi(precision_bits, RM))?,
            precision_bits,
        })
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The exact value of the binary representation.
    pub fn to_rational(&self) -> Rational {
        let Some((words, _, sign, e, _)) = self.value.as_raw_parts() else {
            return Rational::zero();
        };
        let digits: Vec<u32> = words
            .iter()
            .flat_map(|&w| [w as u32, (w >> 32) as u32])
            .collect();
        let mantissa = BigInt::from(BigUint::new(digits));
        if mantissa.is_zero() {
            return Rational::zero();
        }
        let mantissa = if sign == Sign::Neg {
            -mantissa
        } else {
            mantissa
        };
        let shift = e as i64 - (words.len() * WORD_BIT_SIZE) as i64;
        if shift >= 0 {
            Rational::from_integer(mantissa << shift as usize)
        } else {
            Rational::new(mantissa, BigInt::one() << (-shift) as usize)
        }
    }

    /// Decimal string correctly rounded from the binary value.
    pub fn to_decimal(&self, significant_digits: usize) -> String {
        format_decimal(&self.to_rational(), significant_digits)
    }

    pub fn to_f64(&self) -> f64 {
        let q = self.to_rational();
        // 17 digits round-trip through the std parser
        format_decimal(&q, 17).parse().unwrap_or(f64::NAN)
    }

    fn wrap(&self, value: astro_float::BigFloat) -> Result<Self> {
        Ok(Self {
            value: check(value)?,
            precision_bits: self.precision_bits,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.wrap(self.value.add(&rhs.value, self.precision_bits, RM))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.wrap(self.value.sub(&rhs.value, self.precision_bits, RM))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.wrap(self.value.mul(&rhs.value, self.precision_bits, RM))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Singular);
        }
        self.wrap(self.value.div(&rhs.value, self.precision_bits, RM))
    }

    pub fn abs(&self) -> Self {
        Self {
            value: self.value.abs(),
            precision_bits: self.precision_bits,
        }
    }

    pub fn exp(&self) -> Result<Self> {
        self.wrap(self.value.exp(self.precision_bits, RM, &mut consts()?))
    }

    pub fn sin(&self) -> Result<Self> {
        self.wrap(self.value.sin(self.precision_bits, RM, &mut consts()?))
    }

    pub fn cos(&self) -> Result<Self> {
        self.wrap(self.value.cos(self.precision_bits, RM, &mut consts()?))
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn binary_exponent(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            self.value.exponent()
        }
    }

    pub fn with_precision(&self, precision_bits: usize) -> Result<Self> {
        check_precision(precision_bits)?;
        let mut value = self.value.clone();
        value.set_precision(precision_bits, RM).map_err(float_err)?;
        Ok(Self {
            value,
            precision_bits,
        })
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(17)))
    }
}

fn check_precision(bits: usize) -> Result<()> {
    if bits < MIN_PRECISION_BITS {
        Err(Error::PrecisionTooLow(bits))
    } else {
        Ok(())
    }
}

/// Evaluates `Σ q_m pi^m` to `precision_bits`.
///
/// Terms are summed with guard bits; when they cancel, the working precision
/// is raised by the number of cancelled bits and the sum is redone, so the
/// result is accurate relative to itself rather than to the largest term.
pub fn eval_pilaurent(p: &PiLaurent, precision_bits: usize) -> Result<BigFloat> {
    check_precision(precision_bits)?;
    if p.is_zero() {
        return BigFloat::zero(precision_bits);
    }
    let mut work = precision_bits + 64;
    loop {
        let pi = check(consts()?.pi(work, RM))?;
        let mut sum = astro_float::BigFloat::from_word(0, work);
        let mut top = i32::MIN;
        for (m, q) in p.terms() {
            let mut power = check(pi.powi(m.unsigned_abs() as usize, work, RM))?;
            if m < 0 {
                power = check(power.reciprocal(work, RM))?;
            }
            let term = check(rational_to_float(q, work)?.mul(&power, work, RM))?;
            top = top.max(term.exponent().unwrap_or(i32::MIN));
            sum = check(sum.add(&term, work, RM))?;
        }
        let cancelled = match (sum.is_zero(), sum.exponent()) {
            (false, Some(e)) => (top - e).max(0) as usize,
            _ => work,
        };
        if cancelled + precision_bits + 32 <= work {
            sum.set_precision(precision_bits, RM).map_err(float_err)?;
            return Ok(BigFloat {
                value: sum,
                precision_bits,
            });
        }
        work = precision_bits + cancelled + 64;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::{int, ratio};

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        for q in [
            ratio(3, 8),
            ratio(-255, 256),
            int(0),
            int(1 << 40),
            ratio(1, 1 << 30),
        ] {
            let x = BigFloat::from_rational(&q, 256).unwrap();
            assert_eq!(x.to_rational(), q);
        }
    }

    #[test]
    fn simple_evaluations() {
        assert!(eval_pilaurent(&PiLaurent::zero(), 256).unwrap().is_zero());
        let one = eval_pilaurent(&PiLaurent::one(), 256).unwrap();
        assert_eq!(one.to_rational(), int(1));
        let two_over_pi = eval_pilaurent(&PiLaurent::monomial(int(2), -1), 256).unwrap();
        assert_eq!(
            two_over_pi.to_decimal(40),
            "0.6366197723675813430755350534900574481378"
        );
        assert_eq!(
            BigFloat::pi(256).unwrap().to_decimal(30),
            "3.14159265358979323846264338328"
        );
    }

    #[test]
    fn rejects_low_precision() {
        assert_eq!(
            eval_pilaurent(&PiLaurent::one(), 64).unwrap_err(),
            Error::PrecisionTooLow(64)
        );
    }

    #[test]
    fn cancellation_is_recovered() {
        // (1 + 2^-300 pi) - 1 has all its significance below the first term
        let tiny = Rational::new(BigInt::one(), BigInt::one() << 300usize);
        let p = &(&PiLaurent::one() + &PiLaurent::monomial(tiny.clone(), 1)) - &PiLaurent::one();
        let direct = eval_pilaurent(&PiLaurent::monomial(tiny, 1), 256).unwrap();
        let summed = eval_pilaurent(&p, 256).unwrap();
        assert_eq!(direct.to_decimal(70), summed.to_decimal(70));

        // 1 - 1e-22 style cancellation against pi terms
        let a = PiLaurent::monomial(int(3), 0);
        let b = PiLaurent::monomial(ratio(3, 1), 0);
        let c = PiLaurent::monomial(ratio(1, 10i64.pow(18)), -2);
        let v = eval_pilaurent(&(&(&a + &c) - &b), 256).unwrap();
        let w = eval_pilaurent(&c, 256).unwrap();
        assert_eq!(v.to_decimal(70), w.to_decimal(70));
    }

    mod props {
        use super::super::*;
        use crate::exactscalar::ratio;
        use num_traits::Signed;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn precisions_agree(terms in proptest::collection::vec((-6i32..=6, -1000i64..=1000, 1i64..=999), 10)) {
                let p: PiLaurent = terms.into_iter().map(|(m, n, d)| PiLaurent::monomial(ratio(n, d), m)).sum();
                prop_assume!(!p.is_zero());
                let lo = eval_pilaurent(&p, 256).unwrap().to_rational();
                let hi = eval_pilaurent(&p, 512).unwrap().to_rational();
                let rel = ((&lo - &hi) / &hi).abs();
                prop_assert!(rel < Rational::new(1.into(), num_traits::pow(BigInt::from(10), 60)));
            }
        }
    }
}
