//! Where the stationary points of the quartic lie relative to the exact points
//! `eta`, `theta` and `phi`, decided from the sign of `delta1` and `c` versus `c0`.

use std::cmp::Ordering;

use crate::cubic::{cubic_discriminants, PointKind};
use crate::interval::{Bound, Endpoint, Interval, Window};
use crate::poly::{QuarticCoeffs, Sign};
use crate::rational::int;
use crate::resolvent::{eta_theta, resolvent_chain};
use crate::surd::QuadSurd;

#[derive(Clone, Debug, PartialEq)]
pub struct StationaryBracket {
    pub name: &'static str,
    pub kind: PointKind,
    /// Open bracket, or a single point when the location is exact.
    pub interval: Interval,
}

fn end(label: &str, s: &QuadSurd) -> Endpoint {
    Endpoint::new(label, Bound::surd(s))
}

fn window_of(lo: &Endpoint, hi: &Endpoint) -> Window {
    let lo_q = match &lo.bound {
        Bound::Finite { lo, .. } => Some(lo.clone()),
        _ => None,
    };
    let hi_q = match &hi.bound {
        Bound::Finite { hi, .. } => Some(hi.clone()),
        _ => None,
    };
    Window::open(lo_q, hi_q)
}

fn open(name: &'static str, kind: PointKind, lo: Endpoint, hi: Endpoint) -> StationaryBracket {
    let window = window_of(&lo, &hi);
    StationaryBracket { name, kind, interval: Interval { lo, hi, lo_closed: false, hi_closed: false, window } }
}

fn at(name: &'static str, kind: PointKind, label: &str, s: &QuadSurd) -> StationaryBracket {
    let (lo, hi) = s.bracket(64);
    StationaryBracket { name, kind, interval: Interval::point(label, Bound::surd(s), Window::closed(lo, hi)) }
}

pub fn stationary_isolation(f: &QuarticCoeffs) -> Vec<StationaryBracket> {
    let chain = resolvent_chain(f);
    let side = f.c.cmp(&chain.c0);
    let Some(et) = eta_theta(&f.a, &f.b) else {
        let phi = QuadSurd::rational(-&f.a / int(4));
        return vec![match side {
            Ordering::Less => open("mu1", PointKind::Min, end("phi", &phi), Endpoint::pos_inf()),
            Ordering::Greater => open("mu1", PointKind::Min, Endpoint::neg_inf(), end("phi", &phi)),
            Ordering::Equal => at("mu1", PointKind::Min, "phi", &phi),
        }];
    };
    let (e1, e2, t1, t2) = (end("eta1", &et.eta1), end("eta2", &et.eta2), end("theta1", &et.theta1), end("theta2", &et.theta2));
    match Sign::of(&cubic_discriminants(f).delta1) {
        Sign::Pos => vec![
            open("mu3", PointKind::Min, t1, e2.clone()),
            open("mu2", PointKind::Max, e2, e1.clone()),
            open("mu1", PointKind::Min, e1, t2),
        ],
        Sign::Neg => match side {
            Ordering::Greater => vec![open("mu1", PointKind::Min, Endpoint::neg_inf(), t1)],
            _ => vec![open("mu1", PointKind::Min, t2, Endpoint::pos_inf())],
        },
        Sign::Zero => match side {
            Ordering::Less => vec![at("mu2", PointKind::Saddle, "eta2", &et.eta2), at("mu1", PointKind::Min, "theta2", &et.theta2)],
            Ordering::Greater => vec![at("mu1", PointKind::Min, "theta1", &et.theta1), at("mu2", PointKind::Saddle, "eta1", &et.eta1)],
            Ordering::Equal => vec![at("mu1", PointKind::Min, "phi", &QuadSurd::rational(-&f.a / int(4)))],
        },
    }
}
