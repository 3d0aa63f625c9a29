use num_traits::Zero;

use super::cubic_tier::root_point;
use super::engine::{Gap, Landmark, SignLine};
use super::stationary::{stationary_isolation, StationaryBracket};
use super::{AmbiguousGap, RootEntry, RootReport, Tier};
use crate::cubic::{cubic_discriminants, PointKind};
use crate::interval::{Endpoint, Interval};
use crate::locus::Locus;
use crate::poly::{QuarticCoeffs, Sign};
use crate::rational::Rational;
use crate::resolvent::{double_tangent, eta_theta, markers};

/// Landmarks reachable with square roots only.
fn landmarks(f: &QuarticCoeffs) -> Vec<Landmark> {
    let fp = f.poly();
    let mut marks = vec![Landmark::new("0", Locus::Exact(Rational::zero()), &fp)];
    if !f.c.is_zero() {
        marks.push(Landmark::new("-d/c", Locus::Exact(-&f.d / &f.c), &fp));
    }
    let ms = markers(&f.a, &f.b, &f.c);
    for p in &ms.points {
        marks.push(Landmark::new(p.name, Locus::surd(p.x.clone()), &fp));
        // where the line -c x - d reaches the marker's height
        if !f.c.is_zero() && p.height.sign() != Sign::Zero {
            let x = p.height.add_rational(&f.d).scale(&(-f.c.recip()));
            marks.push(Landmark::new(p.crossing_name, Locus::surd(x), &fp));
        }
    }
    if let Some((alpha, beta)) = double_tangent(&f.a, &f.b) {
        marks.push(Landmark::new("alpha", Locus::surd(alpha), &fp));
        marks.push(Landmark::new("beta", Locus::surd(beta), &fp));
    }
    if let Some(et) = eta_theta(&f.a, &f.b) {
        for (n, s) in [("theta1", et.theta1), ("eta2", et.eta2), ("eta1", et.eta1), ("theta2", et.theta2)] {
            marks.push(Landmark::new(n, Locus::surd(s), &fp));
        }
    }
    marks
}

/// Whether a stationary bracket can reach into the gap's window.
fn reaches(line: &SignLine, br: &StationaryBracket, gap: &Gap) -> bool {
    let iv = &br.interval;
    if iv.is_point() {
        return false;
    }
    let lo = line.find(&iv.lo.label).map(|m| m.locus.bracket().0);
    let hi = line.find(&iv.hi.label).map(|m| m.locus.bracket().1);
    let below_top = match (&lo, &gap.window.hi) {
        (Some(l), Some(h)) => l < h,
        _ => true,
    };
    let above_bottom = match (&hi, &gap.window.lo) {
        (Some(h), Some(l)) => h > l,
        _ => true,
    };
    below_top && above_bottom
}

fn endpoint(line: &SignLine, ci: Option<usize>, right: bool) -> Endpoint {
    match ci {
        None if right => Endpoint::neg_inf(),
        None => Endpoint::pos_inf(),
        Some(ci) => {
            let (label, bound) = line.edge_label(ci, right);
            Endpoint::new(label, bound)
        }
    }
}

pub fn classify_quadratic_tier(f: &QuarticCoeffs) -> RootReport {
    let fp = f.poly();
    let line = SignLine::build(&fp, landmarks(f));
    let brackets = stationary_isolation(f);
    let repeated = fp.gcd(&fp.derivative()).degree().unwrap_or(0) > 0;
    let cap = if cubic_discriminants(f).delta1 > Rational::zero() { 4 } else { 2 };

    let mut roots = Vec::new();
    let mut ambiguous = Vec::new();
    let mut extra = 0u32;
    for (g, gap) in line.gaps().iter().enumerate() {
        let inside = |kind| brackets.iter().filter(|b| b.kind == kind && reaches(&line, b, gap)).count() as u32;
        let (mins, maxs) = (inside(PointKind::Min), inside(PointKind::Max));
        let pieces = mins + maxs + 1;
        let interval = Interval {
            lo: endpoint(&line, gap.left, true),
            hi: endpoint(&line, gap.right, false),
            lo_closed: false,
            hi_closed: false,
            window: gap.window.clone(),
        };
        let (ls, hs) = (gap.lo_sign, gap.hi_sign);
        if ls == Sign::Zero || hs == Sign::Zero {
            // the monotone piece leaving a zero cannot hold another root
            let max = pieces - 1;
            if max > 0 {
                extra += max;
                ambiguous.push(AmbiguousGap { interval, max_roots: max, even: false });
            }
        } else if ls != hs {
            let max = if pieces % 2 == 1 { pieces } else { pieces - 1 };
            extra += max - 1;
            roots.push(RootEntry { interval, sign: line.gap_side(g), multiplicity: None, max_roots: max });
        } else {
            // a same-sign stretch needs a turning point of the right kind to dip across
            let turning = if ls == Sign::Pos { mins } else { maxs };
            let max = if turning == 0 { 0 } else if pieces % 2 == 0 { pieces } else { pieces - 1 };
            if max > 0 {
                extra += max;
                ambiguous.push(AmbiguousGap { interval, max_roots: max, even: !repeated });
            }
        }
        if let Some(ci) = gap.right.filter(|&ci| line.clusters[ci].root) {
            let mut e = root_point(&line, ci);
            e.multiplicity = None;
            roots.push(e);
        }
    }
    let guaranteed = roots.len();
    let upper = (guaranteed + extra as usize).min(cap);
    let possible_counts: Vec<usize> = (guaranteed..=upper).filter(|n| repeated || n % 2 == 0).collect();
    RootReport {
        tier: Tier::Quadratic,
        count: (possible_counts.len() == 1).then(|| possible_counts[0]),
        possible_counts,
        roots,
        ambiguous,
        repeated_root_possible: repeated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_four_guaranteed() {
        let r = classify_quadratic_tier(&QuarticCoeffs::from_ints(1, -3, -1, 1));
        assert_eq!(r.roots.len(), 4, "{:#?}", r.roots.iter().map(|e| e.interval.to_string()).collect::<Vec<_>>());
        assert_eq!(r.possible_counts, vec![4]);
        let signs: Vec<Sign> = r.roots.iter().map(|e| e.sign).collect();
        assert_eq!(signs, vec![Sign::Neg, Sign::Neg, Sign::Pos, Sign::Pos]);
    }

    #[test]
    fn no_real_roots_possible() {
        let r = classify_quadratic_tier(&QuarticCoeffs::from_ints(0, 0, 0, 1));
        assert!(r.possible_counts.contains(&0));
    }
}
