//! A deterministic melody read off a classification.
//!
//! Staves are the separator lines of slope `-c`: the tangent lines `-c x - delta_i`
//! through the stationary points and the line `-c x` through the origin (cubic
//! tier), or the marker lines (quadratic tier). Staves are ranked by intercept,
//! lowest first. Every tangency point is a note on its stave; the two staves
//! that bracket `-d` also sound every point where they meet the sub-quartic.
//! A note on stave `k` has pitch ratio `(3/2)^k` folded into `[1, 2)` over 220 Hz.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::classifier::{special_tangents, Tier};
use crate::cubic::{lambda_poly, lambdas, stationary_points};
use crate::interval::Bound;
use crate::locus::Locus;
use crate::poly::{QuarticCoeffs, Sign};
use crate::rational::Rational;
use crate::resolvent::markers;
use crate::surd::QuadSurd;

pub const BASE_HZ: f64 = 220.0;

#[derive(Clone, Debug, PartialEq)]
pub struct Stave {
    pub index: usize,
    pub name: String,
    pub intercept: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Note {
    pub stave: usize,
    pub landmark: String,
    pub x: f64,
    pub ratio: (u64, u64),
    pub freq: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tune {
    pub staves: Vec<Stave>,
    pub notes: Vec<Note>,
}

impl fmt::Display for Tune {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "stave={} landmark={} x={:.6} ratio={}/{} freq={:.3}", n.stave, n.landmark, n.x, n.ratio.0, n.ratio.1, n.freq)?;
        }
        Ok(())
    }
}

/// `(3/2)^k` folded into an octave.
pub fn pitch_ratio(k: usize) -> (u64, u64) {
    let num = 3u64.pow(k as u32);
    let mut den = 2u64.pow(k as u32);
    while num >= 2 * den {
        den *= 2;
    }
    (num, den)
}

struct Draft {
    names: Vec<String>,
    intercept: Bound,
    /// intercept <= -d
    below_minus_d: bool,
    tangencies: Vec<(String, f64)>,
    crossings: Vec<(String, f64)>,
}

fn same(x: &Bound, y: &Bound) -> bool {
    match (x, y) {
        (Bound::Finite { lo: l1, hi: h1, .. }, Bound::Finite { lo: l2, hi: h2, .. }) => l1 <= h2 && l2 <= h1,
        _ => false,
    }
}

pub fn tune_of(f: &QuarticCoeffs) -> Tune {
    tune_of_tier(f, Tier::Cubic)
}

pub fn tune_of_tier(f: &QuarticCoeffs, tier: Tier) -> Tune {
    let drafts = match tier {
        Tier::Cubic => cubic_drafts(f),
        Tier::Quadratic => quadratic_drafts(f),
    };
    assemble(drafts)
}

fn cubic_drafts(f: &QuarticCoeffs) -> Vec<Draft> {
    let d_nonpos = f.d <= Rational::zero();
    let mut origin = Draft {
        names: vec!["privileged".into()],
        intercept: Bound::exact(&Rational::zero()),
        below_minus_d: d_nonpos,
        tangencies: vec![],
        crossings: vec![("0".into(), 0.0)],
    };
    let lp = lambda_poly(f);
    for (name, root) in lambdas(f).roots {
        origin.crossings.push((name.into(), Locus::root(lp.clone(), root).approx()));
    }
    let mut drafts = vec![origin];
    for t in special_tangents(f, &stationary_points(f)) {
        let tangency = (t.mu.to_string(), t.locus.approx());
        let crossings: Vec<(String, f64)> = t.xi.iter().map(|(n, l)| (n.clone(), l.approx())).collect();
        let existing = if t.neg_delta_zero { Some(0) } else { drafts.iter().position(|d| same(&d.intercept, &t.neg_delta)) };
        match existing {
            Some(i) => {
                let d = &mut drafts[i];
                d.names.push(format!("tangent_{}", t.mu));
                d.tangencies.push(tangency);
                d.crossings.extend(crossings);
            }
            None => drafts.push(Draft {
                names: vec![format!("tangent_{}", t.mu)],
                intercept: t.neg_delta.clone(),
                below_minus_d: t.f_sign != Sign::Pos,
                tangencies: vec![tangency],
                crossings,
            }),
        }
    }
    drafts
}

fn quadratic_drafts(f: &QuarticCoeffs) -> Vec<Draft> {
    let minus_d = -f.d.clone();
    let at_or_below = |v: &QuadSurd| v.cmp_rational(&minus_d) != Ordering::Greater;
    let zero = QuadSurd::rational(Rational::zero());
    let mut drafts = vec![(
        zero.clone(),
        Draft {
            names: vec!["privileged".into()],
            intercept: Bound::exact(&Rational::zero()),
            below_minus_d: at_or_below(&zero),
            tangencies: vec![],
            crossings: vec![("0".into(), 0.0)],
        },
    )];
    let ms = markers(&f.a, &f.b, &f.c);
    for p in &ms.points {
        let tangency = (p.name.to_string(), p.x.to_f64());
        match drafts.iter_mut().find(|(v, _)| v.cmp_exact(&p.ordinate) == Ordering::Equal) {
            Some((_, d)) => {
                d.names.push(p.ordinate_name.into());
                d.tangencies.push(tangency);
            }
            None => drafts.push((
                p.ordinate.clone(),
                Draft {
                    names: vec![p.ordinate_name.into()],
                    intercept: Bound::surd(&p.ordinate),
                    below_minus_d: at_or_below(&p.ordinate),
                    tangencies: vec![tangency],
                    crossings: vec![],
                },
            )),
        }
    }
    drafts.into_iter().map(|(_, d)| d).collect()
}

fn assemble(mut drafts: Vec<Draft>) -> Tune {
    drafts.sort_by(|x, y| x.intercept.approx().total_cmp(&y.intercept.approx()));
    let below = drafts.iter().rposition(|d| d.below_minus_d);
    let above = drafts.iter().position(|d| !d.below_minus_d);
    let staves: Vec<Stave> = drafts
        .iter()
        .enumerate()
        .map(|(i, d)| Stave { index: i, name: d.names.join("="), intercept: d.intercept.approx() })
        .collect();
    let mut notes: Vec<Note> = Vec::new();
    for (i, d) in drafts.iter().enumerate() {
        let sounding = Some(i) == below || Some(i) == above;
        let pts = d.tangencies.iter().chain(d.crossings.iter().filter(|_| sounding));
        for (name, x) in pts {
            let tol = 1e-12 * x.abs().max(1.0);
            if let Some(n) = notes.iter_mut().find(|n| n.stave == i && (n.x - x).abs() <= tol) {
                n.landmark = format!("{}={}", n.landmark, name);
                continue;
            }
            let ratio = pitch_ratio(i);
            notes.push(Note { stave: i, landmark: name.clone(), x: *x, ratio, freq: BASE_HZ * ratio.0 as f64 / ratio.1 as f64 });
        }
    }
    notes.sort_by(|p, q| p.x.total_cmp(&q.x).then(p.stave.cmp(&q.stave)).then(p.landmark.cmp(&q.landmark)));
    Tune { staves, notes }
}
