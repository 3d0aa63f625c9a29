use num_traits::{One, Signed, Zero};

use super::engine::{sign_at_locus, Landmark, SignLine};
use super::{RootEntry, RootReport, Tier};
use crate::cubic::{derivative_poly, lambda_poly, lambdas, stationary_points, LambdaSet, PointKind, StationaryProfile};
use crate::interval::{Bound, Endpoint, Interval, Window};
use crate::locus::Locus;
use crate::poly::{Poly, QuarticCoeffs, Sign};
use crate::rational::{int, Rational};
use crate::resolvent::{markers, Regime};
use crate::surd::QuadSurd;

/// The tangent line of slope `-c` touching the quartic's graph at a stationary
/// point `mu`, written `-c x - delta`, and the other two abscissae `xi` where the
/// special quartic `S(x) + c x + delta` vanishes.
#[derive(Clone, Debug)]
pub struct SpecialTangent {
    pub mu: &'static str,
    pub kind: PointKind,
    /// Multiplicity of `mu` as a root of `f'`.
    pub derivative_multiplicity: u32,
    pub locus: Locus,
    /// Sign of `f(mu)`; `-d` lies at or above `-delta` exactly when it is `<= 0`.
    pub f_sign: Sign,
    /// `-delta = S(mu) + c mu`.
    pub neg_delta: Bound,
    pub neg_delta_zero: bool,
    pub xi: Vec<(String, Locus)>,
    /// The two `xi` coincide.
    pub xi_double: bool,
}

fn tangent_disc(f: &QuarticCoeffs) -> Poly {
    // discriminant of x^2 + (a + 2mu) x + (b + 3mu^2 + 2a mu), as a polynomial in mu
    Poly::new(vec![&f.a * &f.a - int(4) * &f.b, int(-4) * &f.a, int(-8)])
}

/// Whether the simple root isolated by a `Root` locus is also a root of `g`.
fn shares_root(g: &Poly, locus: &Locus) -> bool {
    match locus {
        Locus::Exact(q) => g.eval(q).is_zero(),
        Locus::Root { poly, root } => {
            let h = g.gcd(poly);
            h.degree().unwrap_or(0) > 0 && h.sign_at(&root.lo) != h.sign_at(&root.hi)
        }
        _ => unreachable!("stationary points are rational or isolated roots"),
    }
}

pub fn special_tangents(f: &QuarticCoeffs, profile: &StationaryProfile) -> Vec<SpecialTangent> {
    let fp = f.poly();
    let dpoly = derivative_poly(f);
    let level = &Poly::from_ints(&[0, 1]) * &lambda_poly(f);
    let disc = tangent_disc(f);
    let shift = -&f.a / int(2);
    let coarse = Rational::new(1.into(), num_bigint::BigInt::one() << 40usize);
    let enclose = |locus: &Locus, width: &Rational| {
        let mut t = locus.clone();
        t.refine_to(width);
        let (l, h) = t.bracket();
        let (lo, hi) = level.range_enclosure(&l, &h);
        Bound::enclosed(lo, hi)
    };
    let mut out: Vec<SpecialTangent> = profile
        .points
        .iter()
        .map(|p| {
            let mut locus = Locus::root(dpoly.clone(), p.root.clone());
            let f_sign = sign_at_locus(&fp, &mut locus);
            let idx = &p.name[2..];
            let neg_delta_zero = shares_root(&level, &locus);
            let neg_delta = match locus.exact() {
                Some(q) => Bound::exact(&level.eval(&q)),
                None if neg_delta_zero => Bound::exact(&Rational::zero()),
                None => enclose(&locus, &coarse),
            };
            let (xi, xi_double) = match locus.exact() {
                Some(q) => {
                    let dv = disc.eval(&q);
                    if dv.is_negative() {
                        (vec![], false)
                    } else if dv.is_zero() {
                        (vec![(format!("xi{idx}_1=xi{idx}_2"), Locus::Exact(&shift - &q))], true)
                    } else {
                        let mk = |s: i64| Locus::surd(QuadSurd::new(&shift - &q, Rational::new(s.into(), 2.into()), dv.clone()).expect("positive"));
                        (vec![(format!("xi{idx}_1"), mk(1)), (format!("xi{idx}_2"), mk(-1))], false)
                    }
                }
                None if shares_root(&disc, &locus) => {
                    (vec![(format!("xi{idx}_1=xi{idx}_2"), Locus::Reflect { base: Box::new(locus.clone()), offset: shift.clone() })], true)
                }
                None => {
                    let mut t = locus.clone();
                    let s = loop {
                        let (l, h) = t.bracket();
                        if let Some(s) = disc.certified_sign(&l, &h) {
                            break s;
                        }
                        t.refine();
                    };
                    if s == Sign::Neg {
                        (vec![], false)
                    } else {
                        let mk = |plus| Locus::tangent(t.clone(), disc.clone(), shift.clone(), plus);
                        (vec![(format!("xi{idx}_1"), mk(true)), (format!("xi{idx}_2"), mk(false))], false)
                    }
                }
            };
            SpecialTangent {
                mu: p.name,
                kind: p.kind,
                derivative_multiplicity: p.root.multiplicity,
                locus,
                f_sign,
                neg_delta,
                neg_delta_zero,
                xi,
                xi_double,
            }
        })
        .collect();
    // intercepts whose coarse enclosures overlap are re-enclosed at 1e-40;
    // the label treats values still overlapping there as equal
    let tight = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(40));
    for i in 0..out.len() {
        for j in 0..i {
            if overlaps(&out[i].neg_delta, &out[j].neg_delta) {
                for k in [i, j] {
                    if out[k].locus.exact().is_none() && !out[k].neg_delta_zero {
                        out[k].neg_delta = enclose(&out[k].locus, &tight);
                    }
                }
            }
        }
    }
    out
}

fn overlaps(x: &Bound, y: &Bound) -> bool {
    match (x, y) {
        (Bound::Finite { lo: l1, hi: h1, .. }, Bound::Finite { lo: l2, hi: h2, .. }) => l1 <= h2 && l2 <= h1,
        _ => false,
    }
}

/// Root count read off the signs of `f` at the stationary points alone: a root
/// for every stationary zero plus one per strict sign change between
/// neighbouring stationary points (the ends count as positive).
pub fn count_from_critical_signs(tangents: &[SpecialTangent]) -> usize {
    let mut signs = vec![Sign::Pos];
    signs.extend(tangents.iter().map(|t| t.f_sign));
    signs.push(Sign::Pos);
    let zeros = tangents.iter().filter(|t| t.f_sign == Sign::Zero).count();
    let changes = signs.windows(2).filter(|w| w[0] != Sign::Zero && w[1] != Sign::Zero && w[0] != w[1]).count();
    zeros + changes
}

pub fn classify_cubic_tier(f: &QuarticCoeffs) -> RootReport {
    let profile = stationary_points(f);
    let tangents = special_tangents(f, &profile);
    cubic_tier(f, &profile, &lambdas(f), &tangents)
}

pub(crate) fn cubic_tier(f: &QuarticCoeffs, _profile: &StationaryProfile, lambdas: &LambdaSet, tangents: &[SpecialTangent]) -> RootReport {
    let fp = f.poly();
    let mut marks = Vec::new();
    for t in tangents {
        let mut m = Landmark::with_sign(t.mu, t.locus.clone(), t.f_sign);
        m.stationary = Some((t.kind, t.derivative_multiplicity));
        marks.push(m);
        for (name, locus) in &t.xi {
            // the special quartic vanishes at xi, so f(xi) = d - delta = f(mu)
            marks.push(Landmark::with_sign(name.clone(), locus.clone(), t.f_sign));
        }
    }
    let lp = lambda_poly(f);
    for (name, root) in &lambdas.roots {
        marks.push(Landmark::new(*name, Locus::root(lp.clone(), root.clone()), &fp));
    }
    marks.push(Landmark::new("0", Locus::Exact(Rational::zero()), &fp));
    if !f.c.is_zero() {
        marks.push(Landmark::new("-d/c", Locus::Exact(-&f.d / &f.c), &fp));
    }
    let m = markers(&f.a, &f.b, &f.c);
    if m.regime == Regime::Rho {
        for p in &m.points {
            marks.push(Landmark::new(p.name, Locus::surd(p.x.clone()), &fp));
        }
    }

    let line = SignLine::build(&fp, marks);
    let roots = isolate_from_line(&line);
    let count = roots.len();
    debug_assert_eq!(count, count_from_critical_signs(tangents), "landmark count disagrees with stationary-sign count for {f}");
    let repeated = roots.iter().any(|r| r.multiplicity.unwrap_or(1) > 1);
    RootReport {
        tier: Tier::Cubic,
        count: Some(count),
        possible_counts: vec![count],
        roots,
        ambiguous: vec![],
        repeated_root_possible: repeated,
    }
}

fn isolate_from_line(line: &SignLine) -> Vec<RootEntry> {
    let gaps = line.gaps();
    let mut out = Vec::new();
    for (g, gap) in gaps.iter().enumerate() {
        // no stationary point falls in a gap, so the quartic is monotone there
        if gap.lo_sign != Sign::Zero && gap.hi_sign != Sign::Zero && gap.lo_sign != gap.hi_sign {
            let lo = gap.left.map_or_else(Endpoint::neg_inf, |ci| {
                let (label, bound) = line.edge_label(ci, true);
                Endpoint::new(label, bound)
            });
            let hi = gap.right.map_or_else(Endpoint::pos_inf, |ci| {
                let (label, bound) = line.edge_label(ci, false);
                Endpoint::new(label, bound)
            });
            out.push(RootEntry {
                interval: Interval { lo, hi, lo_closed: false, hi_closed: false, window: gap.window.clone() },
                sign: line.gap_side(g),
                multiplicity: Some(1),
                max_roots: 1,
            });
        }
        if let Some(ci) = gap.right.filter(|&ci| line.clusters[ci].root) {
            out.push(root_point(line, ci));
        }
    }
    out
}

/// Entry for a cluster of landmarks at which the quartic vanishes.
pub(crate) fn root_point(line: &SignLine, ci: usize) -> RootEntry {
    let c = &line.clusters[ci];
    let names: Vec<&str> = c.members.iter().map(|&m| line.marks[m].name.as_str()).collect();
    let shown = c.members.iter().copied().find(|&m| line.marks[m].is_exact());
    let bound = match shown {
        Some(m) => line.marks[m].bound(),
        None => Bound::enclosed(c.lo.clone(), c.hi.clone()),
    };
    let multiplicity = c
        .members
        .iter()
        .find_map(|&m| line.marks[m].stationary.map(|(_, k)| k + 1))
        .unwrap_or(1);
    RootEntry {
        interval: Interval::point(&names.join("="), bound, Window::closed(c.lo.clone(), c.hi.clone())),
        sign: line.cluster_side(ci),
        multiplicity: Some(multiplicity),
        max_roots: 1,
    }
}
