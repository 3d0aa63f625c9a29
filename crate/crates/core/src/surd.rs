//! Quadratic surds `u + v*sqrt(s)` with exact signs and comparisons.
//!
//! The radicand is kept as a non-negative integer with small square factors pulled
//! out, so surds built from the same field usually share `s` and combine directly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Sign};
use crate::rational::{exact_sqrt, sqrt_bounds, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub u: Rational,
    pub v: Rational,
    /// Integer radicand; zero when the value is rational.
    pub s: BigInt,
}

const SMALL_PRIMES: [u32; 25] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

impl QuadSurd {
    /// `u + v*sqrt(s)`; rejects a negative radicand.
    pub fn new(u: Rational, v: Rational, s: Rational) -> Result<QuadSurd> {
        if s.is_negative() {
            return Err(Error::NegativeRadicand(s.to_string()));
        }
        Ok(Self::canonical(u, v, s))
    }

    fn canonical(u: Rational, v: Rational, s: Rational) -> QuadSurd {
        if v.is_zero() || s.is_zero() {
            return QuadSurd::rational(u);
        }
        if let Some(r) = exact_sqrt(&s) {
            return QuadSurd::rational(u + v * r);
        }
        // sqrt(n/d) = sqrt(n*d)/d
        let mut rad = s.numer() * s.denom();
        let mut v = v / Rational::from_integer(s.denom().clone());
        for p in SMALL_PRIMES {
            let p2 = BigInt::from(p * p);
            loop {
                let (q, r) = rad.div_rem(&p2);
                if !r.is_zero() {
                    break;
                }
                rad = q;
                v *= Rational::from_integer(BigInt::from(p));
            }
        }
        QuadSurd { u, v, s: rad }
    }

    pub fn rational(u: Rational) -> QuadSurd {
        QuadSurd { u, v: Rational::zero(), s: BigInt::zero() }
    }

    /// `sqrt(s)` for a non-negative rational.
    pub fn sqrt(s: &Rational) -> Result<QuadSurd> {
        QuadSurd::new(Rational::zero(), Rational::one(), s.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.u)
    }

    fn radicand(&self) -> Rational {
        Rational::from_integer(self.s.clone())
    }

    pub fn sign(&self) -> Sign {
        sign_uvs(&self.u, &self.v, &self.radicand())
    }

    fn same_field(&self, other: &QuadSurd) -> Option<BigInt> {
        if self.is_rational() {
            Some(other.s.clone())
        } else if other.is_rational() || self.s == other.s {
            Some(self.s.clone())
        } else {
            None
        }
    }

    /// Sum when both operands live in the same field.
    pub fn checked_add(&self, other: &QuadSurd) -> Option<QuadSurd> {
        let s = self.same_field(other)?;
        Some(Self::canonical(&self.u + &other.u, &self.v + &other.v, Rational::from_integer(s)))
    }

    pub fn checked_mul(&self, other: &QuadSurd) -> Option<QuadSurd> {
        let s = self.same_field(other)?;
        let sr = Rational::from_integer(s);
        let u = &self.u * &other.u + &self.v * &other.v * &sr;
        let v = &self.u * &other.v + &self.v * &other.u;
        Some(Self::canonical(u, v, sr))
    }

    pub fn add_rational(&self, q: &Rational) -> QuadSurd {
        QuadSurd { u: &self.u + q, v: self.v.clone(), s: self.s.clone() }
    }

    pub fn scale(&self, k: &Rational) -> QuadSurd {
        Self::canonical(&self.u * k, &self.v * k, self.radicand())
    }

    pub fn neg(&self) -> QuadSurd {
        QuadSurd { u: -self.u.clone(), v: -self.v.clone(), s: self.s.clone() }
    }

    /// Exact comparison, across fields if necessary.
    pub fn cmp_exact(&self, other: &QuadSurd) -> Ordering {
        let a = &self.u - &other.u;
        match sign_three(&a, &self.v, &self.radicand(), &(-other.v.clone()), &other.radicand()) {
            Sign::Neg => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Pos => Ordering::Greater,
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        match self.add_rational(&-q.clone()).sign() {
            Sign::Neg => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Pos => Ordering::Greater,
        }
    }

    /// Rational bracket `[lo, hi]` containing the value, width about `|v| 2^-bits`.
    pub fn bracket(&self, bits: u32) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.u.clone(), self.u.clone());
        }
        let (rl, rh) = sqrt_bounds(&self.radicand(), bits);
        let (x, y) = (&self.u + &self.v * &rl, &self.u + &self.v * &rh);
        if x <= y {
            (x, y)
        } else {
            (y, x)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return to_f64(&self.u);
        }
        let (u, w) = (to_f64(&self.u), to_f64(&self.v) * to_f64(&self.radicand()).sqrt());
        // fall back to a tight bracket when the two terms nearly cancel
        if (u + w).abs() > 1e-6 * u.abs() {
            return u + w;
        }
        let (lo, hi) = self.bracket(64);
        to_f64(&((lo + hi) / Rational::from_integer(BigInt::from(2))))
    }

    /// Evaluates a rational polynomial at the surd, staying in its field.
    pub fn eval_poly(&self, p: &Poly) -> QuadSurd {
        let mut acc = QuadSurd::rational(Rational::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.checked_mul(self).expect("same field").add_rational(c);
        }
        acc
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.u)
        } else if self.u.is_zero() {
            write!(f, "({})*sqrt({})", self.v, self.s)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.u, self.v, self.s)
        }
    }
}

/// Sign of `u + v*sqrt(s)` for rationals with `s >= 0`.
pub fn surd_sign(u: &Rational, v: &Rational, s: &Rational) -> Result<Sign> {
    if s.is_negative() {
        return Err(Error::NegativeRadicand(s.to_string()));
    }
    Ok(sign_uvs(u, v, s))
}

fn sign_uvs(u: &Rational, v: &Rational, s: &Rational) -> Sign {
    let su = Sign::of(u);
    let sv = if s.is_zero() { Sign::Zero } else { Sign::of(v) };
    if sv == Sign::Zero || su == sv {
        return if su == Sign::Zero { sv } else { su };
    }
    if su == Sign::Zero {
        return sv;
    }
    // opposite signs: the larger magnitude wins
    match (u * u).cmp(&(v * v * s)) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Sign::Zero,
    }
}

/// Sign of `b*sqrt(s) + c*sqrt(t)`.
fn sign_two_roots(b: &Rational, s: &Rational, c: &Rational, t: &Rational) -> Sign {
    let sb = if s.is_zero() { Sign::Zero } else { Sign::of(b) };
    let sc = if t.is_zero() { Sign::Zero } else { Sign::of(c) };
    if sb == Sign::Zero {
        return sc;
    }
    if sc == Sign::Zero || sb == sc {
        return sb;
    }
    match (b * b * s).cmp(&(c * c * t)) {
        Ordering::Greater => sb,
        Ordering::Less => sc,
        Ordering::Equal => Sign::Zero,
    }
}

/// Sign of `a + b*sqrt(s) + c*sqrt(t)`.
fn sign_three(a: &Rational, b: &Rational, s: &Rational, c: &Rational, t: &Rational) -> Sign {
    let sx = sign_two_roots(b, s, c, t);
    let sa = Sign::of(a);
    if sx == Sign::Zero {
        return sa;
    }
    if sa == Sign::Zero || sa == sx {
        return sx;
    }
    // compare a^2 with (b sqrt s + c sqrt t)^2 = b^2 s + c^2 t + 2bc sqrt(st)
    let u = a * a - b * b * s - c * c * t;
    let v = -(b * c * Rational::from_integer(BigInt::from(2)));
    match sign_uvs(&u, &v, &(s * t)) {
        Sign::Pos => sa,
        Sign::Neg => sx,
        Sign::Zero => Sign::Zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn sign_examples() {
        assert_eq!(surd_sign(&int(-1), &int(1), &int(2)).unwrap(), Sign::Pos);
        assert_eq!(surd_sign(&int(3), &int(-2), &frac(9, 4)).unwrap(), Sign::Zero);
        assert_eq!(surd_sign(&int(-1), &int(-1), &int(1)).unwrap(), Sign::Neg);
        assert!(surd_sign(&int(0), &int(1), &int(-1)).is_err());
    }

    #[test]
    fn canonical_folds_squares() {
        let x = QuadSurd::new(int(0), int(1), int(12)).unwrap();
        assert_eq!(x.s, BigInt::from(3));
        assert_eq!(x.v, int(2));
        let y = QuadSurd::new(int(1), int(1), frac(9, 4)).unwrap();
        assert_eq!(y.as_rational(), Some(&frac(5, 2)));
        let z = QuadSurd::new(int(0), int(1), frac(1, 2)).unwrap();
        assert_eq!((z.s.clone(), z.v.clone()), (BigInt::from(2), frac(1, 2)));
    }

    #[test]
    fn cross_field_comparison() {
        let r2 = QuadSurd::sqrt(&int(2)).unwrap();
        let r3 = QuadSurd::sqrt(&int(3)).unwrap();
        assert_eq!(r2.cmp_exact(&r3), Ordering::Less);
        // sqrt2 + sqrt3 vs sqrt(5 + 2 sqrt 6) are equal but that is nested; compare 1+sqrt2 with sqrt(5.8)
        let a = QuadSurd::new(int(1), int(1), int(2)).unwrap();
        let b = QuadSurd::new(int(0), int(1), frac(29, 5)).unwrap();
        assert_eq!(a.cmp_exact(&b), (1.0 + 2f64.sqrt()).partial_cmp(&5.8f64.sqrt()).unwrap());
        assert_eq!(a.cmp_exact(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn eval_in_field() {
        // (x^2 - 2) at sqrt 2 is exactly zero
        let r2 = QuadSurd::sqrt(&int(2)).unwrap();
        let p = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(r2.eval_poly(&p).sign(), Sign::Zero);
        let (lo, hi) = r2.bracket(30);
        assert!(lo < hi && to_f64(&lo) <= 2f64.sqrt() && to_f64(&hi) >= 2f64.sqrt());
    }
}
