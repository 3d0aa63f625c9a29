//! Coefficient-space separators: the resolvent chain `c2 < c0 < c1`, the
//! `gamma` pair, and the marker points and lines drawn on the sub-quartic
//! `x^4 + a x^3 + b x^2`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::cubic::{delta1_at, delta2_at};
use crate::poly::{QuarticCoeffs, Sign};
use crate::rational::{frac, int, Rational};
use crate::surd::QuadSurd;

/// Where a value sits among the chain separators present for `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChainSlot {
    /// Number of chain separators strictly below the value.
    pub below: usize,
    /// Separators exactly equal to the value.
    pub ties: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolventChain {
    pub c0: Rational,
    pub d0: Rational,
    /// Present iff `k = (3/2)(a^2/4) - b >= 0`.
    pub c1: Option<QuadSurd>,
    pub c2: Option<QuadSurd>,
    /// Present iff `m = (4/3)(a^2/4) - b >= 0`.
    pub gamma1: Option<QuadSurd>,
    pub gamma2: Option<QuadSurd>,
    pub gamma_mid: Rational,
    pub k: Rational,
    pub m: Rational,
    /// Slot of the actual `c`.
    pub c_slot: ChainSlot,
    /// Slot of zero, which the column count also uses.
    pub zero_slot: ChainSlot,
}

impl ResolventChain {
    /// Present separators in the order `c2, gamma2, c0, gamma1, c1`.
    pub fn separators(&self) -> Vec<(&'static str, QuadSurd)> {
        let mut out = Vec::new();
        let push = |out: &mut Vec<_>, n, v: &Option<QuadSurd>| {
            if let Some(v) = v {
                out.push((n, v.clone()))
            }
        };
        push(&mut out, "c2", &self.c2);
        push(&mut out, "gamma2", &self.gamma2);
        out.push(("c0", QuadSurd::rational(self.c0.clone())));
        push(&mut out, "gamma1", &self.gamma1);
        push(&mut out, "c1", &self.c1);
        out
    }
}

pub fn resolvent_chain(f: &QuarticCoeffs) -> ResolventChain {
    let (a, b) = (&f.a, &f.b);
    let q = f.quarter_a2();
    let base = b - &q;
    let c0 = a * &base / int(2);
    let d0 = &base * &base / int(4);
    let k = frac(3, 2) * &q - b;
    let m = frac(4, 3) * &q - b;
    let gamma_mid = a * (b - frac(8, 9) * &q) / int(3);
    let pair = |mid: &Rational, coef: Rational, rad: Rational| {
        if rad.is_negative() {
            return (None, None);
        }
        let hi = QuadSurd::new(mid.clone(), coef.clone(), rad.clone()).expect("non-negative");
        let lo = QuadSurd::new(mid.clone(), -coef, rad).expect("non-negative");
        (Some(hi), Some(lo))
    };
    let (c1, c2) = pair(&c0, int(2) * &k / int(9), int(6) * &k);
    let (gamma1, gamma2) = pair(&gamma_mid, int(2) * &m / int(9), int(3) * &m);
    let c_slot = chain_slot(a, b, &f.c);
    let zero_slot = chain_slot(a, b, &Rational::zero());
    ResolventChain { c0, d0, c1, c2, gamma1, gamma2, gamma_mid, k, m, c_slot, zero_slot }
}

/// Locates `x` among the chain separators using only the sign of the two cubic
/// discriminants (as functions of `c`) and rational comparisons.
pub fn chain_slot(a: &Rational, b: &Rational, x: &Rational) -> ChainSlot {
    let q = a * a / int(4);
    let k = frac(3, 2) * &q - b;
    let m = frac(4, 3) * &q - b;
    let c0 = a * (b - &q) / int(2);
    let gamma_mid = a * (b - frac(8, 9) * &q) / int(3);
    let mut slot = ChainSlot::default();
    let place = |present: bool, disc: Rational, mid: &Rational, lo: &'static str, hi: &'static str, slot: &mut ChainSlot| {
        if !present {
            return;
        }
        match (Sign::of(&disc), x.cmp(mid)) {
            (Sign::Pos, _) => slot.below += 1,
            (Sign::Neg, Ordering::Greater) => slot.below += 2,
            (Sign::Neg, _) => {}
            (Sign::Zero, Ordering::Less) => slot.ties.push(lo),
            (Sign::Zero, Ordering::Greater) => {
                slot.below += 1;
                slot.ties.push(hi);
            }
            (Sign::Zero, Ordering::Equal) => {
                slot.ties.push(lo);
                slot.ties.push(hi);
            }
        }
    };
    place(!k.is_negative(), delta1_at(a, b, x), &c0, "c2", "c1", &mut slot);
    place(!m.is_negative(), delta2_at(a, b, x), &gamma_mid, "gamma2", "gamma1", &mut slot);
    match x.cmp(&c0) {
        Ordering::Greater => slot.below += 1,
        Ordering::Equal => slot.ties.push("c0"),
        Ordering::Less => {}
    }
    slot.ties.sort_by_key(|t| ["c2", "gamma2", "c0", "gamma1", "c1"].iter().position(|n| n == t));
    slot
}

/// Which family of marker points exists for `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `b <= a^2/4`: the sub-quartic has real zeros `rho`.
    Rho,
    /// `a^2/4 < b <= (9/8)(a^2/4)`.
    Sigma,
    /// `(9/8)(a^2/4) < b <= (3/2)(a^2/4)`.
    Tau,
    /// `b > (3/2)(a^2/4)`: only the point `phi = -a/4`.
    Phi,
}

impl Regime {
    pub fn of(a: &Rational, b: &Rational) -> Regime {
        let q = a * a / int(4);
        if *b <= q {
            Regime::Rho
        } else if *b <= frac(9, 8) * &q {
            Regime::Sigma
        } else if *b <= frac(3, 2) * &q {
            Regime::Tau
        } else {
            Regime::Phi
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Rho => "RHO",
            Regime::Sigma => "SIGMA",
            Regime::Tau => "TAU",
            Regime::Phi => "PHI",
        }
    }
}

/// A marker point `x` on the sub-quartic with its height `S(x)` and the
/// ordinate `S(x) + c x` at which the slope `-c` line through it meets `x = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkerPoint {
    pub name: &'static str,
    pub x: QuadSurd,
    pub height: QuadSurd,
    pub ordinate: QuadSurd,
    /// Label for the ordinate, e.g. `c*rho1` or `c*sigma_H+H`.
    pub ordinate_name: &'static str,
    /// Label for the abscissa where the line `-c x - d` reaches `height`.
    pub crossing_name: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MarkerSet {
    pub regime: Regime,
    pub points: Vec<MarkerPoint>,
    /// Ordinates compared against `-d` for the quadratic subcase.
    pub ordinates: Vec<(&'static str, QuadSurd)>,
    pub extras: Vec<(&'static str, QuadSurd)>,
}

fn subquartic_at(a: &Rational, b: &Rational, x: &QuadSurd) -> QuadSurd {
    let p = QuarticCoeffs::new(a.clone(), b.clone(), Rational::zero(), Rational::zero()).subquartic();
    x.eval_poly(&p)
}

pub fn markers(a: &Rational, b: &Rational, c: &Rational) -> MarkerSet {
    let regime = Regime::of(a, b);
    let q = a * a / int(4);
    let mk = |name, x: QuadSurd, oname, cname| {
        let height = subquartic_at(a, b, &x);
        let ordinate = height.checked_add(&x.scale(c)).expect("same field");
        MarkerPoint { name, x, height, ordinate, ordinate_name: oname, crossing_name: cname }
    };
    // order a pair so the first has the larger sub-quartic value
    let by_height = |x1: QuadSurd, x2: QuadSurd| {
        if subquartic_at(a, b, &x1).cmp_exact(&subquartic_at(a, b, &x2)) == Ordering::Less {
            (x2, x1)
        } else {
            (x1, x2)
        }
    };
    let mut extras = Vec::new();
    let points = match regime {
        Regime::Rho => {
            let rad = &q - b;
            let r1 = QuadSurd::new(-a / int(2), int(1), rad.clone()).expect("b <= a^2/4");
            let r2 = QuadSurd::new(-a / int(2), int(-1), rad).expect("b <= a^2/4");
            if b.is_negative() {
                let m = int(9) * a * a - int(32) * b;
                let gap = QuadSurd::new(Rational::zero(), -a * &m / int(256), m).expect("positive");
                extras.push(("minima_gap", gap));
            }
            vec![mk("rho1", r1, "c*rho1", "-(d+0)/c"), mk("rho2", r2, "c*rho2", "-(d+0)/c")]
        }
        Regime::Sigma => {
            let rad = (frac(9, 8) * &q - b) / int(2);
            let s1 = QuadSurd::new(frac(-3, 8) * a, int(1), rad.clone()).expect("in range");
            let s2 = QuadSurd::new(frac(-3, 8) * a, int(-1), rad).expect("in range");
            let (hi, lo) = by_height(s1, s2);
            let c_hat = a * (frac(9, 8) * &q - b) / int(-2);
            extras.push(("c_hat", QuadSurd::rational(c_hat)));
            vec![mk("sigma_H", hi, "c*sigma_H+H", "-(d+H)/c"), mk("sigma_h", lo, "c*sigma_h+h", "-(d+h)/c")]
        }
        Regime::Tau => {
            let k = frac(3, 2) * &q - b;
            let t1 = QuadSurd::new(-a / int(4), frac(1, 6), int(6) * &k).expect("k >= 0");
            let t2 = QuadSurd::new(-a / int(4), frac(-1, 6), int(6) * k).expect("k >= 0");
            let (hi, lo) = by_height(t1, t2);
            vec![mk("tau_H", hi, "c*tau_H+H", "-(d+H)/c"), mk("tau_h", lo, "c*tau_h+h", "-(d+h)/c")]
        }
        Regime::Phi => {
            let phi = QuadSurd::rational(-a / int(4));
            let point = mk("phi", phi, "t", "-(d+T)/c");
            extras.push(("T", point.height.clone()));
            extras.push(("zeta", QuadSurd::rational(a / int(4) * (b - frac(3, 4) * &q))));
            vec![point]
        }
    };
    let mut ordinates: Vec<(&'static str, QuadSurd)> = points.iter().map(|p| (p.ordinate_name, p.ordinate.clone())).collect();
    if regime == Regime::Phi && (a * c).is_negative() {
        ordinates.push(("T", points[0].height.clone()));
    }
    MarkerSet { regime, points, ordinates, extras }
}

/// Points of double tangency `alpha > beta`: roots of
/// `x^2 + (a/2) x + (b/2 - a^2/8)`; `None` when they are not real.
pub fn double_tangent(a: &Rational, b: &Rational) -> Option<(QuadSurd, QuadSurd)> {
    let disc = frac(3, 4) * a * a - int(2) * b;
    if disc.is_negative() {
        return None;
    }
    let alpha = QuadSurd::new(-a / int(4), frac(1, 2), disc.clone()).ok()?;
    let beta = QuadSurd::new(-a / int(4), frac(-1, 2), disc).ok()?;
    Some((alpha, beta))
}

/// `eta1 > eta2` and `theta1 < theta2`, with `theta1 <= eta2 <= eta1 <= theta2`;
/// `None` when `(3/2)(a^2/4) - b < 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaTheta {
    pub eta1: QuadSurd,
    pub eta2: QuadSurd,
    pub theta1: QuadSurd,
    pub theta2: QuadSurd,
}

pub fn eta_theta(a: &Rational, b: &Rational) -> Option<EtaTheta> {
    let k = frac(3, 2) * a * a / int(4) - b;
    if k.is_negative() {
        return None;
    }
    let rad = int(6) * k;
    let at = |coef: Rational| QuadSurd::new(-a / int(4), coef, rad.clone()).expect("k >= 0");
    Some(EtaTheta { eta1: at(frac(1, 6)), eta2: at(frac(-1, 6)), theta1: at(frac(-1, 3)), theta2: at(frac(1, 3)) })
}
