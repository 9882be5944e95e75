//! Exact scalars: big rationals, rationals graded by powers of `sqrt(pi)`,
//! finite Laurent sums in `pi`, and the high-precision float used to render
//! them.

mod bigfloat;
mod decimal;
mod pilaurent;
mod scaled;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bigfloat::{eval_pilaurent, BigFloat, DEFAULT_PRECISION_BITS, MIN_PRECISION_BITS};
pub use decimal::{format_decimal, parse_rational};
pub use pilaurent::PiLaurent;
pub use scaled::ScaledRational;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `1/n!`, extended by zero to negative `n` (the reciprocal Gamma function
/// vanishes at the non-positive integers).
pub fn recip_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(n as u32))
    }
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, m| acc * (n - m) / (m + 1))
}

/// `(n)!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// Rising product `base (base+1) ... (base+steps-1)`, i.e. the Gamma ratio
/// `Γ(base+steps) / Γ(base)` for half-integer `base`.
pub fn gamma_ratio(base: &Rational, steps: u32) -> Rational {
    let one = Rational::one();
    let mut term = base.clone();
    let mut acc = Rational::one();
    for _ in 0..steps {
        acc *= &term;
        term += &one;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio(&ratio(1, 2), 0), int(1));
        assert_eq!(gamma_ratio(&ratio(3, 2), 1), ratio(3, 2));
        // (3/2)(5/2)
        assert_eq!(gamma_ratio(&ratio(3, 2), 2), ratio(15, 4));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(recip_factorial(-2), Rational::zero());
        assert_eq!(recip_factorial(3), ratio(1, 6));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn division_round_trips(an in -10_000i64..10_000, ad in 1i64..10_000,
                                    bn in 1i64..10_000, bd in 1i64..10_000, neg: bool) {
                let a = ratio(an, ad);
                let b = ratio(if neg { -bn } else { bn }, bd);
                prop_assert_eq!((&a / &b) * &b, a);
            }

            #[test]
            fn gamma_ratio_splits(k in 1i64..40, s in 0u32..=20, t in 0u32..=20) {
                let x = ratio(k, 2);
                let shifted = &x + int(s as i64);
                prop_assert_eq!(gamma_ratio(&x, s + t), gamma_ratio(&x, s) * gamma_ratio(&shifted, t));
            }
        }
    }
}
