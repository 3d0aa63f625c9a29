//! Labelled intervals with rational enclosures of their endpoints.

use std::fmt;

use crate::rational::{to_f64, Rational};
use crate::surd::QuadSurd;

/// Where an endpoint sits on the real line.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    PosInf,
    /// A finite point known to lie in `[lo, hi]` (equal for exact points).
    Finite { approx: f64, lo: Rational, hi: Rational },
}

impl Bound {
    pub fn exact(q: &Rational) -> Bound {
        Bound::Finite { approx: to_f64(q), lo: q.clone(), hi: q.clone() }
    }

    pub fn surd(s: &QuadSurd) -> Bound {
        let (lo, hi) = s.bracket(64);
        Bound::Finite { approx: s.to_f64(), lo, hi }
    }

    pub fn enclosed(lo: Rational, hi: Rational) -> Bound {
        let approx = (to_f64(&lo) + to_f64(&hi)) / 2.0;
        Bound::Finite { approx, lo, hi }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Bound::NegInf => f64::NEG_INFINITY,
            Bound::PosInf => f64::INFINITY,
            Bound::Finite { approx, .. } => *approx,
        }
    }

    /// The exact value when the enclosure is a single point.
    pub fn exact_value(&self) -> Option<&Rational> {
        match self {
            Bound::Finite { lo, hi, .. } if lo == hi => Some(lo),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Endpoint {
    /// Landmark name(s); coinciding landmarks are joined with `=`.
    pub label: String,
    pub bound: Bound,
}

impl Endpoint {
    pub fn new(label: impl Into<String>, bound: Bound) -> Endpoint {
        Endpoint { label: label.into(), bound }
    }

    pub fn neg_inf() -> Endpoint {
        Endpoint::new("-inf", Bound::NegInf)
    }

    pub fn pos_inf() -> Endpoint {
        Endpoint::new("+inf", Bound::PosInf)
    }
}

/// A rational window whose root content is what a report actually certifies.
/// `None` ends are infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
    pub closed: bool,
}

impl Window {
    pub fn open(lo: Option<Rational>, hi: Option<Rational>) -> Window {
        Window { lo, hi, closed: false }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Window {
        Window { lo: Some(lo), hi: Some(hi), closed: true }
    }

    pub fn shifted(&self, by: &Rational) -> Window {
        Window { lo: self.lo.as_ref().map(|x| x + by), hi: self.hi.as_ref().map(|x| x + by), closed: self.closed }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub window: Window,
}

impl Interval {
    /// Degenerate interval at an exactly known point.
    pub fn point(label: &str, bound: Bound, window: Window) -> Interval {
        Interval {
            lo: Endpoint::new(label, bound.clone()),
            hi: Endpoint::new(label, bound),
            lo_closed: true,
            hi_closed: true,
            window,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo.label == self.hi.label && self.lo.bound == self.hi.bound && self.lo_closed && self.hi_closed
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{} = {:.6}}}", self.lo.label, self.lo.bound.approx());
        }
        write!(
            f,
            "{}{} = {:.6}, {} = {:.6}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo.label,
            self.lo.bound.approx(),
            self.hi.label,
            self.hi.bound.approx(),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}
