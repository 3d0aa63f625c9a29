//! Real points known exactly or through a shrinking rational bracket.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cubic::CertifiedRoot;
use crate::poly::Poly;
use crate::rational::{int, sqrt_bounds, to_f64, Rational};
use crate::surd::QuadSurd;

#[derive(Clone, Debug)]
pub enum Locus {
    Exact(Rational),
    Surd { value: QuadSurd, bits: u32, cur: (Rational, Rational) },
    /// Simple root of `poly`, which changes sign strictly across the bracket.
    Root { poly: Poly, root: CertifiedRoot },
    /// `shift - mu + sign * sqrt(disc(mu)) / 2` for a bracketed `mu` with
    /// `disc(mu) > 0`. `cur` only ever shrinks.
    Tangent { mu: Box<Locus>, disc: Poly, shift: Rational, plus: bool, bits: u32, cur: (Rational, Rational) },
    /// `offset - base`
    Reflect { base: Box<Locus>, offset: Rational },
}

impl Locus {
    pub fn surd(value: QuadSurd) -> Locus {
        match value.as_rational() {
            Some(q) => Locus::Exact(q.clone()),
            None => {
                let cur = value.bracket(32);
                Locus::Surd { value, bits: 32, cur }
            }
        }
    }

    pub fn root(poly: Poly, root: CertifiedRoot) -> Locus {
        match &root.exact {
            Some(q) => Locus::Exact(q.clone()),
            None => Locus::Root { poly, root },
        }
    }

    pub fn tangent(mu: Locus, disc: Poly, shift: Rational, plus: bool) -> Locus {
        let mut t = Locus::Tangent { mu: Box::new(mu), disc, shift, plus, bits: 24, cur: (Rational::zero(), Rational::zero()) };
        let fresh = t.fresh_tangent_bracket();
        if let Locus::Tangent { cur, .. } = &mut t {
            *cur = fresh;
        }
        t
    }

    fn fresh_tangent_bracket(&self) -> (Rational, Rational) {
        let Locus::Tangent { mu, disc, shift, plus, bits, .. } = self else { unreachable!() };
        let (l, h) = mu.bracket();
        let (dl, dh) = disc.range_enclosure(&l, &h);
        let dl = if dl.is_negative() { Rational::zero() } else { dl };
        let dh = if dh.is_negative() { Rational::zero() } else { dh };
        let sl = sqrt_bounds(&dl, *bits).0 / int(2);
        let sh = sqrt_bounds(&dh, *bits).1 / int(2);
        let (lo, hi) = if *plus { (shift - &h + sl, shift - &l + sh) } else { (shift - &h - sh, shift - &l - sl) };
        // outward dyadic rounding keeps denominators from compounding
        let scale = Rational::from_integer(BigInt::one() << (*bits as usize + 8));
        ((lo * &scale).floor() / &scale, (hi * &scale).ceil() / &scale)
    }

    pub fn bracket(&self) -> (Rational, Rational) {
        match self {
            Locus::Exact(q) => (q.clone(), q.clone()),
            Locus::Surd { cur, .. } => cur.clone(),
            Locus::Root { root, .. } => (root.lo.clone(), root.hi.clone()),
            Locus::Tangent { cur, .. } => cur.clone(),
            Locus::Reflect { base, offset } => {
                let (l, h) = base.bracket();
                (offset - h, offset - l)
            }
        }
    }

    pub fn width(&self) -> Rational {
        let (l, h) = self.bracket();
        h - l
    }

    pub fn refine(&mut self) {
        match self {
            Locus::Exact(_) => {}
            Locus::Surd { value, bits, cur } => {
                *bits += 16;
                *cur = value.bracket(*bits);
            }
            Locus::Root { poly, root } => {
                root.bisect(poly);
                if let Some(q) = root.exact.clone() {
                    *self = Locus::Exact(q);
                }
            }
            Locus::Tangent { .. } => {
                if let Locus::Tangent { mu, bits, .. } = self {
                    for _ in 0..8 {
                        mu.refine();
                    }
                    *bits += 8;
                }
                let (nl, nh) = self.fresh_tangent_bracket();
                if let Locus::Tangent { cur, .. } = self {
                    let lo = if nl > cur.0 { nl } else { cur.0.clone() };
                    let hi = if nh < cur.1 { nh } else { cur.1.clone() };
                    *cur = (lo, hi);
                }
            }
            Locus::Reflect { base, .. } => base.refine(),
        }
    }

    /// Refines until the bracket is no wider than `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        let mut guard = 0;
        while self.width() > *width && guard < 4000 {
            self.refine();
            guard += 1;
        }
    }

    pub fn exact(&self) -> Option<Rational> {
        match self {
            Locus::Exact(q) => Some(q.clone()),
            Locus::Reflect { base, offset } => base.exact().map(|b| offset - b),
            _ => None,
        }
    }

    pub fn as_surd(&self) -> Option<QuadSurd> {
        match self {
            Locus::Exact(q) => Some(QuadSurd::rational(q.clone())),
            Locus::Surd { value, .. } => Some(value.clone()),
            Locus::Reflect { base, offset } => base.as_surd().map(|s| s.neg().add_rational(offset)),
            _ => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Locus::Exact(q) => to_f64(q),
            Locus::Surd { value, .. } => value.to_f64(),
            Locus::Reflect { base, offset } => to_f64(offset) - base.approx(),
            Locus::Tangent { mu, disc, shift, plus, .. } => {
                let m = mu.approx();
                let root = disc.eval_f64(m).max(0.0).sqrt() / 2.0;
                to_f64(shift) - m + if *plus { root } else { -root }
            }
            Locus::Root { poly, root } => {
                // Newton from the midpoint, kept inside the certified bracket
                let (lo, hi) = (to_f64(&root.lo), to_f64(&root.hi));
                let dp = poly.derivative();
                let mut x = (lo + hi) / 2.0;
                for _ in 0..4 {
                    let d = dp.eval_f64(x);
                    if d == 0.0 {
                        break;
                    }
                    x = (x - poly.eval_f64(x) / d).clamp(lo, hi);
                }
                x
            }
        }
    }
}
