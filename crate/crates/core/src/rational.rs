//! Exact rational helpers: parsing, integer square roots, simplest fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, an integer, or a plain decimal (optionally with exponent)
/// into an exact rational. `0.1` becomes exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::Parse(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| err())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, fracpart) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fracpart.is_empty() {
        return Err(err());
    }
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(whole) || !digits_ok(fracpart) {
        return Err(err());
    }
    let joined = format!("{whole}{fracpart}");
    let num: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().map_err(|_| err())? };
    let scale = exp - fracpart.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(num);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

/// Best-effort f64 view of an exact rational (handles huge numerators).
pub fn to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = q.numer().bits() as i64;
    let d = q.denom().bits() as i64;
    let shift = n - d - 60;
    let scaled = if shift > 0 {
        q / Rational::from_integer(BigInt::one() << shift as usize)
    } else {
        q * Rational::from_integer(BigInt::one() << (-shift) as usize)
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Exact conversion of a finite f64 to a rational.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Rational bounds `lo <= sqrt(q) <= hi` with `hi - lo <= 2^-bits` (relative to the
/// denominator scale). Requires `q >= 0`.
pub fn sqrt_bounds(q: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(!q.is_negative());
    // sqrt(n/d) = sqrt(n*d)/d
    let nd = q.numer() * q.denom();
    let scale = BigInt::one() << bits as usize;
    let target = &nd * &scale * &scale;
    let r = target.sqrt();
    let denom = q.denom() * &scale;
    let lo = Rational::new(r.clone(), denom.clone());
    if &r * &r == target {
        return (lo.clone(), lo);
    }
    (lo, Rational::new(r + 1, denom))
}

/// Exact square root when `q` is the square of a rational.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let rn = q.numer().sqrt();
    let rd = q.denom().sqrt();
    (&rn * &rn == *q.numer() && &rd * &rd == *q.denom()).then(|| Rational::new(rn, rd))
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let (n, d) = simplest_positive(lo.numer().clone(), lo.denom().clone(), hi.numer().clone(), hi.denom().clone());
    Rational::new(n, d)
}

/// Continued-fraction search on unreduced integer pairs, `0 < ln/ld <= hn/hd`.
fn simplest_positive(ln: BigInt, ld: BigInt, hn: BigInt, hd: BigInt) -> (BigInt, BigInt) {
    let (fl, rem) = ln.div_rem(&ld);
    if rem.is_zero() {
        return (fl, BigInt::one());
    }
    let next = &fl + 1;
    if &next * &hd <= hn {
        return (next, BigInt::one());
    }
    // same integer part: recurse on the reciprocals of the fractional parts
    let hrem = &hn - &fl * &hd;
    let (a, b) = simplest_positive(hd, hrem, ld, rem);
    (fl * &a + b, a)
}

/// Clears denominators and content: the primitive integer multiple of the coefficients.
pub fn primitive_integer(coeffs: &[Rational]) -> Vec<BigInt> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("5/8").unwrap(), frac(5, 8));
        assert_eq!(parse_rational("-1.625").unwrap(), frac(-13, 8));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
        assert_eq!(parse_rational("2.5e-1").unwrap(), frac(1, 4));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        for bad in ["", "abc", "1/0", "1..2", "-", "1e"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&frac(3, 10), &frac(4, 10)), frac(1, 3));
        assert_eq!(simplest_between(&frac(-7, 10), &frac(-6, 10)), frac(-2, 3));
        assert_eq!(simplest_between(&frac(1, 2), &frac(1, 2)), frac(1, 2));
        assert_eq!(simplest_between(&frac(-1, 2), &frac(1, 3)), int(0));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let (lo, hi) = sqrt_bounds(&int(2), 20);
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
        assert!(hi - lo <= frac(1, 1 << 19));
        assert_eq!(exact_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::from_integer(BigInt::one() << 2000usize) / Rational::from_integer(BigInt::one() << 1999usize);
        assert_eq!(to_f64(&big), 2.0);
    }
}
