//! The auxiliary cubics: the derivative `f'` and `x^3 + a x^2 + b x + c`, their
//! discriminants, and certified real roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, QuarticCoeffs, Sign};
use crate::rational::{from_f64, int, primitive_integer, simplest_between, to_f64, Rational};
use crate::surd::QuadSurd;

/// Discriminants of `4x^3 + 3a x^2 + 2b x + c` (`delta1`) and of
/// `x^3 + a x^2 + b x + c` (`delta2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicDiscriminants {
    pub delta1: Rational,
    pub delta2: Rational,
}

/// `delta1` as a function of `c` for fixed `a, b`.
pub fn delta1_at(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    let q = a * a / int(4);
    int(-432) * c * c - int(432) * a * (&q - b) * c + int(128) * b * b * (&q * Rational::new(9.into(), 8.into()) - b)
}

pub fn delta2_at(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    int(-27) * c * c + (int(-4) * a * a * a + int(18) * a * b) * c + a * a * b * b - int(4) * b * b * b
}

pub fn cubic_discriminants(f: &QuarticCoeffs) -> CubicDiscriminants {
    CubicDiscriminants { delta1: delta1_at(&f.a, &f.b, &f.c), delta2: delta2_at(&f.a, &f.b, &f.c) }
}

/// A real root known to lie in `[lo, hi]`; `exact` is set for rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
    pub multiplicity: u32,
}

impl CertifiedRoot {
    pub fn exact(q: Rational, multiplicity: u32) -> CertifiedRoot {
        CertifiedRoot { lo: q.clone(), hi: q.clone(), exact: Some(q), multiplicity }
    }

    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(q) => to_f64(q),
            None => to_f64(&((&self.lo + &self.hi) / int(2))),
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Halves the bracket of a simple root of `p` (strict sign change at the ends).
    pub fn bisect(&mut self, p: &Poly) {
        if self.exact.is_some() {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        let sm = p.sign_at(&mid);
        if sm == Sign::Zero {
            *self = CertifiedRoot::exact(mid, self.multiplicity);
        } else if sm == p.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, p: &Poly, width: &Rational) {
        while self.exact.is_none() && self.width() > *width {
            self.bisect(p);
        }
    }
}

pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// Real roots of `p3 x^3 + p2 x^2 + p1 x + p0`, ascending, each isolated in a
/// rational bracket no wider than 1e-9 (or given exactly).
pub fn solve_cubic_real(p3: &Rational, p2: &Rational, p1: &Rational, p0: &Rational) -> Result<Vec<CertifiedRoot>> {
    if p3.is_zero() {
        return Err(Error::ZeroLeading);
    }
    let p = Poly::new(vec![p0.clone(), p1.clone(), p2.clone(), p3.clone()]);
    Ok(cubic_roots(&p, &default_width()))
}

/// Certified real roots of a degree-3 polynomial.
pub fn cubic_roots(p: &Poly, width: &Rational) -> Vec<CertifiedRoot> {
    debug_assert_eq!(p.degree(), Some(3));
    let (p3, p2) = (p.coeff(3), p.coeff(2));
    let dp = p.derivative();
    let g = p.gcd(&dp);
    match g.degree() {
        Some(2) => return vec![CertifiedRoot::exact(-p2 / (int(3) * p3), 3)],
        Some(1) => {
            let r = -g.coeff(0);
            let s = -p2 / p3 - int(2) * &r;
            let mut v = vec![CertifiedRoot::exact(r, 2), CertifiedRoot::exact(s, 1)];
            v.sort_by(|x, y| x.lo.cmp(&y.lo));
            return v;
        }
        _ => {}
    }

    // monotone pieces split at the critical points
    let (qa, qb, qc) = (dp.coeff(2), dp.coeff(1), dp.coeff(0));
    let disc = &qb * &qb - int(4) * &qa * &qc;
    let mut ends = vec![PieceEnd::NegInf];
    if disc.is_positive() {
        let two_a = int(2) * &qa;
        let m1 = QuadSurd::new(-&qb / &two_a, -two_a.recip(), disc.clone()).expect("positive");
        let m2 = QuadSurd::new(-&qb / &two_a, two_a.recip(), disc).expect("positive");
        let (m1, m2) = if m1.cmp_exact(&m2) == Ordering::Less { (m1, m2) } else { (m2, m1) };
        ends.push(PieceEnd::At(m1));
        ends.push(PieceEnd::At(m2));
    }
    ends.push(PieceEnd::PosInf);

    let signs: Vec<Sign> = ends
        .iter()
        .map(|e| match e {
            PieceEnd::NegInf => p.sign_at_infinity(true),
            PieceEnd::PosInf => p.sign_at_infinity(false),
            PieceEnd::At(m) => m.eval_poly(p).sign(),
        })
        .collect();
    let seeds = closed_form_seeds(p);
    let bound = p.root_bound();
    let lead_int = primitive_integer(p.coeffs()).last().cloned().unwrap_or_else(BigInt::one).abs();
    let a2 = Rational::from_integer(&lead_int * &lead_int);
    let rational_width = (int(2) * a2).recip();

    let mut roots = Vec::new();
    for i in 0..ends.len() - 1 {
        let (sl, sr) = (signs[i], signs[i + 1]);
        if sl == Sign::Zero || sr == Sign::Zero || sl == sr {
            continue;
        }
        let mut root = isolate(p, &ends[i], &ends[i + 1], sl, sr, &bound, &seeds);
        root.refine_to(p, &rational_width);
        if root.exact.is_none() {
            let cand = simplest_between(&root.lo, &root.hi);
            if cand.denom() <= &lead_int && p.eval(&cand).is_zero() {
                root = CertifiedRoot::exact(cand, 1);
            }
        }
        root.refine_to(p, width);
        roots.push(root);
    }
    roots
}

enum PieceEnd {
    NegInf,
    PosInf,
    At(QuadSurd),
}

impl PieceEnd {
    /// A rational point just inside the piece next to this end.
    fn inner(&self, from_left: bool, bits: u32, bound: &Rational) -> Rational {
        match self {
            PieceEnd::NegInf => -bound.clone(),
            PieceEnd::PosInf => bound.clone(),
            PieceEnd::At(m) => {
                let (lo, hi) = m.bracket(bits);
                if from_left {
                    hi
                } else {
                    lo
                }
            }
        }
    }
}

fn isolate(p: &Poly, left: &PieceEnd, right: &PieceEnd, sl: Sign, sr: Sign, bound: &Rational, seeds: &[f64]) -> CertifiedRoot {
    let mut bits = 24;
    let (mut l, mut r) = loop {
        let l = left.inner(true, bits, bound);
        let r = right.inner(false, bits, bound);
        bits += 24;
        if l >= r {
            continue;
        }
        match (p.sign_at(&l), p.sign_at(&r)) {
            (Sign::Zero, _) => return CertifiedRoot::exact(l, 1),
            (_, Sign::Zero) => return CertifiedRoot::exact(r, 1),
            (a, b) if a == sl && b == sr => break (l, r),
            _ => {}
        }
    };
    // pull the bracket in around the closed-form seed
    for &s in seeds {
        let Some(x) = from_f64(s) else { continue };
        if x <= l || x >= r {
            continue;
        }
        let sx = p.sign_at(&x);
        if sx == Sign::Zero {
            return CertifiedRoot::exact(x, 1);
        }
        let toward_right = sx == sl;
        if toward_right {
            l = x.clone();
        } else {
            r = x.clone();
        }
        // a dyadic step about 2^-42 relative to the seed keeps denominators small
        let e = if s == 0.0 { -60 } else { (s.abs().log2().floor() as i64 - 42).clamp(-200, 1000) };
        let eps = if e >= 0 { Rational::from_integer(BigInt::one() << e as usize) } else { Rational::new(BigInt::one(), BigInt::one() << (-e) as usize) };
        let y = if toward_right { &x + eps } else { &x - eps };
        if y > l && y < r {
            match p.sign_at(&y) {
                Sign::Zero => return CertifiedRoot::exact(y, 1),
                sy if sy == sx => {
                    if toward_right {
                        l = y
                    } else {
                        r = y
                    }
                }
                _ => {
                    if toward_right {
                        r = y
                    } else {
                        l = y
                    }
                }
            }
        }
        break;
    }
    CertifiedRoot { lo: l, hi: r, exact: None, multiplicity: 1 }
}

/// Floating-point real roots from the trigonometric or Cardano formulas; used
/// only to seed the exact refinement.
pub fn closed_form_seeds(p: &Poly) -> Vec<f64> {
    let lead = to_f64(&p.coeff(3));
    let (b, c, d) = (to_f64(&p.coeff(2)) / lead, to_f64(&p.coeff(1)) / lead, to_f64(&p.coeff(0)) / lead);
    let shift = b / 3.0;
    let pp = c - b * b / 3.0;
    let qq = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = qq * qq / 4.0 + pp * pp * pp / 27.0;
    let mut out = Vec::new();
    if disc < 0.0 && pp < 0.0 {
        let m = 2.0 * (-pp / 3.0).sqrt();
        let arg = ((3.0 * qq) / (pp * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        for k in 0..3 {
            out.push(m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift);
        }
    } else {
        let sq = disc.max(0.0).sqrt();
        let t = (-qq / 2.0 + sq).cbrt() + (-qq / 2.0 - sq).cbrt();
        out.push(t - shift);
    }
    out.retain(|x| x.is_finite());
    out.sort_by(|x, y| x.total_cmp(y));
    out
}

/// Shape of the stationary points of the quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    SingleMin,
    MinMaxMin,
    /// Saddle to the left of the minimum.
    SaddleMinLeft,
    /// Saddle to the right of the minimum.
    SaddleMinRight,
    /// `f'` has a triple root: one flat minimum.
    Quadruple,
}

impl ProfileKind {
    pub fn name(self) -> &'static str {
        match self {
            ProfileKind::SingleMin => "SINGLE_MIN",
            ProfileKind::MinMaxMin => "MIN_MAX_MIN",
            ProfileKind::SaddleMinLeft => "SADDLE_MIN_LEFT",
            ProfileKind::SaddleMinRight => "SADDLE_MIN_RIGHT",
            ProfileKind::Quadruple => "QUADRUPLE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Min,
    Max,
    Saddle,
}

impl PointKind {
    pub fn name(self) -> &'static str {
        match self {
            PointKind::Min => "min",
            PointKind::Max => "max",
            PointKind::Saddle => "saddle",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StationaryPoint {
    pub name: &'static str,
    pub kind: PointKind,
    /// Root of `f'`; its multiplicity there is one less than the quartic's
    /// root multiplicity when the quartic vanishes at it.
    pub root: CertifiedRoot,
}

/// The stationary points `mu` of the quartic, ascending in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryProfile {
    pub kind: ProfileKind,
    pub points: Vec<StationaryPoint>,
}

impl StationaryProfile {
    pub fn get(&self, name: &str) -> Option<&StationaryPoint> {
        self.points.iter().find(|p| p.name == name)
    }
}

/// `f'(x) = 4x^3 + 3a x^2 + 2b x + c`.
pub fn derivative_poly(f: &QuarticCoeffs) -> Poly {
    Poly::new(vec![f.c.clone(), int(2) * &f.b, int(3) * &f.a, int(4)])
}

pub fn stationary_points(f: &QuarticCoeffs) -> StationaryProfile {
    let roots = cubic_roots(&derivative_poly(f), &default_width());
    let pt = |name, kind, root: &CertifiedRoot| StationaryPoint { name, kind, root: root.clone() };
    match roots.as_slice() {
        [r] if r.multiplicity == 3 => StationaryProfile { kind: ProfileKind::Quadruple, points: vec![pt("mu1", PointKind::Min, r)] },
        [r] => StationaryProfile { kind: ProfileKind::SingleMin, points: vec![pt("mu1", PointKind::Min, r)] },
        [x, y] if x.multiplicity == 2 => StationaryProfile {
            kind: ProfileKind::SaddleMinLeft,
            points: vec![pt("mu2", PointKind::Saddle, x), pt("mu1", PointKind::Min, y)],
        },
        [x, y] => StationaryProfile {
            kind: ProfileKind::SaddleMinRight,
            points: vec![pt("mu1", PointKind::Min, x), pt("mu2", PointKind::Saddle, y)],
        },
        [x, y, z] => StationaryProfile {
            kind: ProfileKind::MinMaxMin,
            points: vec![pt("mu3", PointKind::Min, x), pt("mu2", PointKind::Max, y), pt("mu1", PointKind::Min, z)],
        },
        _ => unreachable!("a real cubic has one to three distinct real roots"),
    }
}

/// `x^3 + a x^2 + b x + c`, whose roots are where `f` takes the value `d`.
pub fn lambda_poly(f: &QuarticCoeffs) -> Poly {
    Poly::new(vec![f.c.clone(), f.b.clone(), f.a.clone(), Rational::one()])
}

/// Named real roots of [`lambda_poly`]: `lambda2 < lambda0 < lambda1` when all
/// three are real and distinct, `lambda1` alone when only one is.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaSet {
    pub roots: Vec<(&'static str, CertifiedRoot)>,
    pub delta2_sign: Sign,
}

pub fn lambdas(f: &QuarticCoeffs) -> LambdaSet {
    let roots = cubic_roots(&lambda_poly(f), &default_width());
    let names: &[&'static str] = match roots.len() {
        3 => &["lambda2", "lambda0", "lambda1"],
        2 => &["lambda2", "lambda1"],
        _ => &["lambda1"],
    };
    LambdaSet {
        roots: names.iter().copied().zip(roots).collect(),
        delta2_sign: Sign::of(&delta2_at(&f.a, &f.b, &f.c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn approx(roots: &[CertifiedRoot]) -> Vec<f64> {
        roots.iter().map(|r| r.approx()).collect()
    }

    #[test]
    fn derivative_of_worked_example() {
        let r = solve_cubic_real(&int(4), &int(3), &int(-6), &int(-1)).unwrap();
        let v = approx(&r);
        assert_eq!(v.len(), 3);
        for (got, want) in v.iter().zip([-1.59, -0.16, 1.00]) {
            assert!((got - want).abs() < 0.01, "{v:?}");
        }
        assert_eq!(r[2].exact, Some(int(1)));
        for root in &r {
            assert!(root.width() <= default_width());
        }
    }

    #[test]
    fn lambdas_of_worked_example() {
        let l = lambdas(&QuarticCoeffs::from_ints(1, -3, -1, 1));
        let v: Vec<f64> = l.roots.iter().map(|(_, r)| r.approx()).collect();
        for (got, want) in v.iter().zip([-2.17, -0.31, 1.48]) {
            assert!((got - want).abs() < 0.01, "{v:?}");
        }
        assert_eq!(l.roots[1].0, "lambda0");
    }

    #[test]
    fn multiple_roots_exact() {
        // (x-1)^2 (x+2)
        let r = solve_cubic_real(&int(1), &int(0), &int(-3), &int(2)).unwrap();
        assert_eq!(r, vec![CertifiedRoot::exact(int(-2), 1), CertifiedRoot::exact(int(1), 2)]);
        // (2x-1)^3
        let r = solve_cubic_real(&int(8), &int(-12), &int(6), &int(-1)).unwrap();
        assert_eq!(r, vec![CertifiedRoot::exact(frac(1, 2), 3)]);
        assert!(solve_cubic_real(&int(0), &int(1), &int(1), &int(1)).is_err());
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (3x - 1)(5x + 2)(x - 7)
        let p = &(&Poly::from_ints(&[-1, 3]) * &Poly::from_ints(&[2, 5])) * &Poly::from_ints(&[-7, 1]);
        let r = cubic_roots(&p, &default_width());
        let exact: Vec<_> = r.iter().map(|x| x.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![frac(-2, 5), frac(1, 3), int(7)]);
    }

    #[test]
    fn discriminant_matches_general_formula() {
        let f = QuarticCoeffs::new(frac(3, 2), frac(-7, 3), frac(5, 4), int(0));
        let (a, b, c, d) = (int(4), int(3) * &f.a, int(2) * &f.b, f.c.clone());
        let general = int(18) * &a * &b * &c * &d - int(4) * &b * &b * &b * &d + &b * &b * &c * &c
            - int(4) * &a * &c * &c * &c
            - int(27) * &a * &a * &d * &d;
        assert_eq!(cubic_discriminants(&f).delta1, general);
    }
}
