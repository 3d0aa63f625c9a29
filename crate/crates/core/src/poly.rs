//! Dense univariate polynomials over the rationals and the monic quartic itself.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Signed, ToPrimitive, Zero};
use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::rational::{int, primitive_integer, Rational};

/// Exact sign of a quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of_int(n: &BigInt) -> Sign {
        match n.sign() {
            num_bigint::Sign::Plus => Sign::Pos,
            num_bigint::Sign::Minus => Sign::Neg,
            num_bigint::Sign::NoSign => Sign::Zero,
        }
    }

    pub fn of(q: &Rational) -> Sign {
        if q.is_positive() {
            Sign::Pos
        } else if q.is_negative() {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match self.as_i8() * other.as_i8() {
            1 => Sign::Pos,
            -1 => Sign::Neg,
            _ => Sign::Zero,
        }
    }
}

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
    /// Positive integer multiple of `coeffs`, for reduction-free sign tests.
    ints: OnceLock<Vec<BigInt>>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, ints: OnceLock::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Poly {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)`, computed as the sign of `q^n p(x)` for `x = p/q` in
    /// integers so that no fraction is ever reduced.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dk = BigInt::one();
        for c in self.ints().iter().rev() {
            acc = acc * num + c * &dk;
            dk *= den;
        }
        Sign::of_int(&acc)
    }

    /// Sign as `x -> +inf` (or `-inf` when `neg_inf`).
    pub fn sign_at_infinity(&self, neg_inf: bool) -> Sign {
        let s = Sign::of(&self.lead());
        match self.degree() {
            Some(d) if neg_inf && d % 2 == 1 => s.flip(),
            _ => s,
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + crate::rational::to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().recip())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.lead().recip();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if !self.is_zero() && !other.is_zero() && coprime_mod_prime(self.ints(), other.ints()) {
            return Poly::constant(Rational::one());
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Yun's square-free factorization: `(factor, multiplicity)` pairs with
    /// non-constant monic factors.
    pub fn yun(&self) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let g = self.gcd(&d);
        let mut b = self.div_rem(&g).0;
        let mut c = d.div_rem(&g).0;
        let mut dd = &c - &b.derivative();
        let mut k = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.div_rem(&a).0;
            dd = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Coefficients of `p(m + t)` as a polynomial in `t`.
    pub fn taylor_shift(&self, m: &Rational) -> Poly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * m;
                c[j] += t;
            }
        }
        Poly::new(c)
    }

    /// Rational enclosure of the range of `p` over `[lo, hi]` via a centred
    /// Taylor form. Tightens as the interval shrinks.
    pub fn range_enclosure(&self, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
        if lo == hi {
            let v = self.eval(lo);
            return (v.clone(), v);
        }
        let Some((centre, spread, den)) = self.taylor_form(lo, hi) else {
            return (Rational::zero(), Rational::zero());
        };
        // ints = coeffs * k with k > 0
        let k = Rational::from_integer(self.ints().last().expect("nonzero").clone()) / self.lead();
        let den = Rational::from_integer(den) * k;
        (Rational::from_integer(&centre - &spread) / &den, Rational::from_integer(centre + spread) / den)
    }

    /// Strict sign of `p` over `[lo, hi]` when the Taylor-form enclosure
    /// certifies one.
    pub fn certified_sign(&self, lo: &Rational, hi: &Rational) -> Option<Sign> {
        if lo == hi {
            return Some(self.sign_at(lo));
        }
        let (centre, spread, _) = self.taylor_form(lo, hi)?;
        if centre > spread {
            Some(Sign::Pos)
        } else if -&centre > spread {
            Some(Sign::Neg)
        } else {
            None
        }
    }

    fn ints(&self) -> &[BigInt] {
        self.ints.get_or_init(|| primitive_integer(&self.coeffs))
    }

    /// Integer Taylor form over `[lo, hi]`: with `m = p/q` the midpoint and
    /// `r = rn/rd` the radius, the range of `ints(x)` lies within
    /// `(centre -+ spread) / den`, `den = q^n rd^n > 0`.
    fn taylor_form(&self, lo: &Rational, hi: &Rational) -> Option<(BigInt, BigInt, BigInt)> {
        let ints = self.ints();
        if ints.is_empty() {
            return None;
        }
        let two = int(2);
        let m = (lo + hi) / &two;
        let r = (hi - lo) / &two;
        let (p, q) = (m.numer(), m.denom());
        // h(t) = sum c_i q^(n-i) (p + q t)^i = q^n ints(m + t), by Horner in t
        let mut h: Vec<BigInt> = Vec::with_capacity(ints.len());
        let mut qk = BigInt::one();
        for c in ints.iter().rev() {
            let mut next = vec![BigInt::zero(); h.len() + 1];
            for (k, hk) in h.iter().enumerate() {
                next[k] += hk * p;
                next[k + 1] += hk * q;
            }
            next[0] += c * &qk;
            qk *= q;
            h = next;
        }
        let (rn, rd) = (r.numer(), r.denom());
        let n = h.len() - 1;
        let mut rd_pows = vec![BigInt::one(); n + 1];
        for k in 1..=n {
            rd_pows[k] = &rd_pows[k - 1] * rd;
        }
        let mut spread = BigInt::zero();
        let mut rnk = BigInt::one();
        for k in 1..=n {
            rnk *= rn;
            spread += h[k].abs() * &rnk * &rd_pows[n - k];
        }
        // qk ended at q^(n+1); den = q^n rd^n
        let den = (qk / q) * &rd_pows[n];
        Some((&h[0] * &rd_pows[n], spread, den))
    }

    /// Upper bound on the absolute value of every real root (Cauchy).
    pub fn root_bound(&self) -> Rational {
        let lead = self.lead().abs();
        let n = self.coeffs.len().saturating_sub(1);
        let m = self.coeffs[..n].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
        m + Rational::one()
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mod_prime(n: &BigInt) -> u64 {
    let r = (n % BigInt::from(PRIME)).to_i64().expect("fits");
    if r < 0 {
        (r + PRIME as i64) as u64
    } else {
        r as u64
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, PRIME - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

/// True when the integer polynomials are certainly coprime over Q: their
/// leading coefficients survive reduction mod a prime and the gcd there is a
/// unit. `false` means undecided.
fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    let reduce = |v: &[BigInt]| v.iter().map(mod_prime).collect::<Vec<u64>>();
    let (mut x, mut y) = (reduce(a), reduce(b));
    if x.last() == Some(&0) || y.last() == Some(&0) {
        return false;
    }
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        // x <- x mod y
        let inv = inv_mod(*y.last().expect("nonempty"));
        while x.len() >= y.len() {
            let shift = x.len() - y.len();
            let factor = mul_mod(*x.last().expect("nonempty"), inv);
            for (i, &c) in y.iter().enumerate() {
                let t = mul_mod(factor, c);
                x[i + shift] = (x[i + shift] + PRIME - t) % PRIME;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `x^4 + a x^3 + b x^2 + c x + d` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCoeffs {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl QuarticCoeffs {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        QuarticCoeffs { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        QuarticCoeffs::new(int(a), int(b), int(c), int(d))
    }

    /// Divides a general quartic `e x^4 + ...` through by its leading coefficient.
    pub fn normalized(lead: &Rational, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::ZeroLeading);
        }
        Ok(QuarticCoeffs::new(a / lead, b / lead, c / lead, d / lead))
    }

    pub fn poly(&self) -> Poly {
        Poly::new(vec![self.d.clone(), self.c.clone(), self.b.clone(), self.a.clone(), Rational::one()])
    }

    /// The sub-quartic `x^4 + a x^3 + b x^2` (the `c = d = 0` part).
    pub fn subquartic(&self) -> Poly {
        Poly::new(vec![Rational::zero(), Rational::zero(), self.b.clone(), self.a.clone(), Rational::one()])
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        eval_quartic(self, x)
    }

    /// `x -> -x` image, normalised back to monic: `(-a, b, -c, d)`.
    pub fn mirrored(&self) -> Self {
        QuarticCoeffs::new(-self.a.clone(), self.b.clone(), -self.c.clone(), self.d.clone())
    }

    pub fn depress(&self) -> DepressedQuartic {
        depress(self)
    }

    /// `a^2/4`, the recurring scale of the coefficient thresholds.
    pub fn quarter_a2(&self) -> Rational {
        &self.a * &self.a / int(4)
    }
}

impl fmt::Display for QuarticCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^4 + ({})x^3 + ({})x^2 + ({})x + ({})", self.a, self.b, self.c, self.d)
    }
}

/// `y^4 + p y^2 + q y + r` obtained from `x = y - a/4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedQuartic {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
}

pub fn eval_quartic(f: &QuarticCoeffs, x: &Rational) -> Rational {
    (((x + &f.a) * x + &f.b) * x + &f.c) * x + &f.d
}

pub fn depress(f: &QuarticCoeffs) -> DepressedQuartic {
    let (a, b, c, d) = (&f.a, &f.b, &f.c, &f.d);
    let a2 = a * a;
    let p = b - Rational::new(3.into(), 8.into()) * &a2;
    let q = c - a / int(2) * (b - &a2 / int(4));
    let r = d - Rational::new(3.into(), 256.into()) * &a2 * &a2 + &a2 * b / int(16) - a * c / int(4);
    DepressedQuartic { p, q, r }
}
