use alloc::collections::BTreeMap;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Finite Laurent sum `Σ q_m pi^m` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is exact
/// equality of the represented reals (pi is transcendental).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PiLaurent {
    terms: BTreeMap<i32, Rational>,
}

impl PiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    /// `q pi^exponent`.
    pub fn monomial(q: Rational, exponent: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(exponent, q);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(&m, q)| (m, q))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i32) -> Rational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The value when the sum has no `pi` dependence at all.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&m, c)| (m, c * q)).collect(),
        }
    }

    /// Multiplies by `pi^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&m, c)| (m + shift, c.clone()))
                .collect(),
        }
    }

    fn accumulate(&mut self, exponent: i32, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &PiLaurent) {
        for (&m, q) in &rhs.terms {
            self.accumulate(m, q.clone());
        }
    }
}

impl From<Rational> for PiLaurent {
    fn from(q: Rational) -> Self {
        Self::monomial(q, 0)
    }
}

impl Add for &PiLaurent {
    type Output = PiLaurent;

    fn add(self, rhs: &PiLaurent) -> PiLaurent {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &PiLaurent {
    type Output = PiLaurent;

    fn sub(self, rhs: &PiLaurent) -> PiLaurent {
        let mut out = self.clone();
        for (&m, q) in &rhs.terms {
            out.accumulate(m, -q.clone());
        }
        out
    }
}

impl Mul for &PiLaurent {
    type Output = PiLaurent;

    fn mul(self, rhs: &PiLaurent) -> PiLaurent {
        let mut out = PiLaurent::zero();
        for (&a, p) in &self.terms {
            for (&b, q) in &rhs.terms {
                out.accumulate(a + b, p * q);
            }
        }
        out
    }
}

impl Neg for PiLaurent {
    type Output = PiLaurent;

    fn neg(self) -> PiLaurent {
        PiLaurent {
            terms: self.terms.into_iter().map(|(m, q)| (m, -q)).collect(),
        }
    }
}

impl core::iter::Sum for PiLaurent {
    fn sum<I: Iterator<Item = PiLaurent>>(iter: I) -> PiLaurent {
        iter.fold(PiLaurent::zero(), |mut acc, x| {
            acc.add_assign_ref(&x);
            acc
        })
    }
}

/// Renders as e.g. `2*pi^-1 - 12*pi^-4`, highest power first. A pure
/// rational renders as `p/q`.
impl fmt::Display for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&m, q)) in self.terms.iter().rev().enumerate() {
            let mag = q.abs();
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "pi^{m}")?;
            } else {
                write!(f, "{mag}*pi^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PiLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        // Split into signed terms on the " + " / " - " separators.
        let mut out = PiLaurent::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|at| (at, *sep)))
                .min_by_key(|&(at, _)| at);
            let (term, tail) = match next {
                Some((at, sep)) => (&rest[..at], Some((&rest[at + 3..], sep == " - "))),
                None => (rest, None),
            };
            let (coef, exponent) = parse_term(term).ok_or_else(bad)?;
            out.accumulate(exponent, if negative { -coef } else { coef });
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    negative = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(Rational, i32)> {
    let (coef, exponent) = match term.split_once("pi^") {
        Some((head, exp)) => {
            let exp: i32 = exp.parse().ok()?;
            let coef = match head {
                "" => Rational::one(),
                h => parse_rational(h.strip_suffix('*')?).ok()?,
            };
            (coef, exp)
        }
        None => (parse_rational(term).ok()?, 0),
    };
    if coef.is_negative() {
        return None;
    }
    Some((coef, exponent))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactscalar::{int, ratio};
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = PiLaurent::monomial(ratio(1, 2), -1);
        let b = PiLaurent::monomial(ratio(-1, 2), -1);
        assert!((&a + &b).is_zero());
        assert!(PiLaurent::monomial(int(0), 3).is_zero());
    }

    #[test]
    fn display_and_parse() {
        let p = &PiLaurent::monomial(int(2), -1) - &PiLaurent::monomial(int(12), -4);
        assert_eq!(p.to_string(), "2*pi^-1 - 12*pi^-4");
        assert_eq!(p.to_string().parse::<PiLaurent>().unwrap(), p);
        let q = &PiLaurent::one() - &PiLaurent::monomial(ratio(1, 2), 2);
        assert_eq!(q.to_string(), "-1/2*pi^2 + 1");
        assert_eq!("-1/2*pi^2 + 1".parse::<PiLaurent>().unwrap(), q);
        assert_eq!(
            "pi^1".parse::<PiLaurent>().unwrap(),
            PiLaurent::monomial(int(1), 1)
        );
        assert_eq!("0".parse::<PiLaurent>().unwrap(), PiLaurent::zero());
        assert!("pi^x".parse::<PiLaurent>().is_err());
        assert!("".parse::<PiLaurent>().is_err());
    }

    fn small() -> impl Strategy<Value = PiLaurent> {
        proptest::collection::vec((-4i32..=4, -20i64..=20, 1i64..=9), 0..5).prop_map(|v| {
            v.into_iter()
                .map(|(m, n, d)| PiLaurent::monomial(ratio(n, d), m))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn text_round_trips(a in small()) {
            let s = a.to_string();
            let back: PiLaurent = s.parse().unwrap();
            prop_assert_eq!(back.to_string(), s);
            prop_assert_eq!(back, a);
        }
    }
}
