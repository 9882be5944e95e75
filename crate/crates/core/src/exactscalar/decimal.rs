use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::from(1), p)
    }
}

/// `floor(log10(a))` for `a > 0`.
fn decimal_exponent(a: &Rational) -> i64 {
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * core::f64::consts::LOG10_2) as i64;
    while &pow10(e) > a {
        e -= 1;
    }
    while &pow10(e + 1) <= a {
        e += 1;
    }
    e
}

/// Round-half-to-even of a non-negative rational to an integer.
fn round_half_even(a: &Rational) -> BigInt {
    let (q, r) = a.numer().div_rem(a.denom());
    let twice: BigInt = r << 1usize;
    match twice.cmp(a.denom()) {
        core::cmp::Ordering::Less => q,
        core::cmp::Ordering::Greater => q + 1,
        core::cmp::Ordering::Equal if q.is_even() => q,
        core::cmp::Ordering::Equal => q + 1,
    }
}

/// Renders `q` correctly rounded (half to even) to `sig` significant digits,
/// with trailing zeros dropped. Magnitudes in `[1e-6, 1e21)` print
/// positionally, everything else as `d.ddde±x`.
pub fn format_decimal(q: &Rational, sig: usize) -> String {
    let sig = sig.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let a = q.abs();
    let mut e = decimal_exponent(&a);
    let mut n = round_half_even(&(&a * pow10(sig as i64 - 1 - e)));
    if n.to_string().len() > sig {
        n /= 10;
        e += 1;
    }
    let mut digits = n.to_string();
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }

    let mut out = String::new();
    if q.is_negative() {
        out.push('-');
    }
    if (-6..21).contains(&e) {
        if e >= 0 {
            let int_len = e as usize + 1;
            if digits.len() <= int_len {
                out.push_str(&digits);
                out.extend(core::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(core::iter::repeat_n('0', (-e - 1) as usize));
            out.push_str(&digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&e.to_string());
    }
    out
}

/// Parses `p/q`, an integer, or a decimal literal (`-1.25`, `8.7e-23`)
/// into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() || d.is_negative() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(at) => (&t[..at], t[at + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
    if !all.iter().all(u8::is_ascii_digit) {
        return Err(bad());
    }
    let digits = core::str::from_utf8(&all).map_err(|_| bad())?;
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let value = Rational::from_integer(n) * pow10(exp - frac_part.len() as i64);
    Ok(if negative { -value } else { value })
}
