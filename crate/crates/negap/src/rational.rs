//! Arbitrary-precision rationals plus the few helpers the crate needs:
//! parsing `"num/den"` lists, integer powers, and exact decimal rendering.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number; every quantity in this crate that is not a solver
/// output is one of these.
pub type Rational = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a signed integer base and nonnegative exponent.
pub fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// `r^exp` for nonnegative integer exponents.
pub fn rat_pow(r: &Rational, exp: u32) -> Rational {
    Rational::new(r.numer().pow(exp), r.denom().pow(exp))
}

/// Parse a single rational: `"3/8"`, `"1"`, or `"-2/5"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |m: &str| Error::ParseRational(format!("{text:?}: {m}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad("bad denominator"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Parse a comma-separated list of rationals, e.g. `"1/2,1/4,1/8,1/8"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Render `r` as `num/den` in lowest terms.
pub fn exact_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal expansion of `r` with `sig` significant digits, truncated toward
/// zero. Exact values are always reported alongside, so truncation is only a
/// display choice; it keeps the output byte-deterministic.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let neg = r.is_negative();
    let num = r.numer().magnitude().clone();
    let den = r.denom().magnitude().clone();
    let (int_part, mut rem) = num.div_rem(&den);
    let int_digits = int_part.to_string();

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let mut used = 0usize;
    if int_part.is_zero() {
        out.push('0');
    } else {
        out.push_str(&int_digits);
        used = int_digits.len();
    }
    if rem.is_zero() || used >= sig {
        return out;
    }
    out.push('.');
    let ten = BigUint::from(10u32);
    let mut frac = String::new();
    let mut leading = int_part.is_zero();
    while !rem.is_zero() && used < sig {
        rem *= &ten;
        let (digit, next) = rem.div_rem(&den);
        let d = digit.to_u8().unwrap_or(9);
        frac.push(char::from(b'0' + d));
        rem = next;
        if leading && d == 0 {
            // leading fractional zeros do not count as significant
        } else {
            leading = false;
            used += 1;
        }
    }
    out.push_str(&frac);
    // trim a bare trailing dot (possible when sig was already exhausted)
    if out.ends_with('.') {
        out.pop();
    }
    out
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let r = parse_rational("3/8").unwrap();
        assert_eq!(exact_string(&r), "3/8");
        assert_eq!(parse_rational("-2/5").unwrap(), rat(-2, 5));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let v = parse_rational_list("1/2,1/4,1/4").unwrap();
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn decimal_truncates_toward_zero() {
        assert_eq!(decimal_string(&rat(1, 2), 30), "0.5");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(decimal_string(&rat(2, 3), 4), "0.6666");
        assert_eq!(decimal_string(&rat_int(0), 10), "0");
        assert_eq!(decimal_string(&rat(1, 4000), 3), "0.00025");
        assert_eq!(decimal_string(&rat_int(125), 2), "125");
    }
}
