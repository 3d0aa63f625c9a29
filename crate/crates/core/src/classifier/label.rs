use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::cubic_tier::{special_tangents, SpecialTangent};
use crate::cubic::stationary_points;
use crate::interval::Bound;
use crate::poly::{QuarticCoeffs, Sign};
use crate::rational::{frac, Rational};
use crate::resolvent::{chain_slot, markers, MarkerSet};
use crate::surd::QuadSurd;

/// Position in the atlas of cases: a row from `b`, a column from `a` and `c`,
/// and a subcase from `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseLabel {
    pub row: u8,
    pub column: u8,
    /// Rank of `-d` among the tangent intercepts `-delta_i` and zero.
    pub cubic_subcase: u8,
    /// Rank of `-d` among the marker-line ordinates and zero.
    pub quadratic_subcase: u8,
    /// Boundary equalities met exactly (e.g. `c=c0`, `-d=0`).
    pub ties: Vec<String>,
}

impl CaseLabel {
    pub fn figure(&self) -> String {
        format!("{}.{}", self.row, self.column)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}({})", self.row, self.column, roman(self.quadratic_subcase))
    }
}

pub fn roman(n: u8) -> String {
    const R: [&str; 10] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"];
    R.get((n as usize).wrapping_sub(1)).map_or_else(|| n.to_string(), |s| s.to_string())
}

pub fn case_label(f: &QuarticCoeffs) -> CaseLabel {
    let tangents = special_tangents(f, &stationary_points(f));
    label_from(f, &markers(&f.a, &f.b, &f.c), &tangents)
}

fn row_of(a: &Rational, b: &Rational, ties: &mut Vec<String>) -> u8 {
    let q = a * a / Rational::from_integer(4.into());
    if a.is_zero() {
        ties.push("a=0".into());
    }
    if b.is_negative() {
        return 1;
    }
    if b.is_zero() {
        ties.push("b=0".into());
    }
    let steps: [(Rational, &str); 4] = [
        (q.clone(), "b=a^2/4"),
        (frac(9, 8) * &q, "b=(9/8)(a^2/4)"),
        (frac(4, 3) * &q, "b=(4/3)(a^2/4)"),
        (frac(3, 2) * &q, "b=(3/2)(a^2/4)"),
    ];
    for (i, (t, name)) in steps.iter().enumerate() {
        match b.cmp(t) {
            Ordering::Less => return 2 + i as u8,
            Ordering::Equal => {
                ties.push((*name).into());
                return 2 + i as u8;
            }
            Ordering::Greater => {}
        }
    }
    6
}

fn same_value(x: &Bound, y: &Bound) -> bool {
    match (x, y) {
        (Bound::Finite { lo: l1, hi: h1, .. }, Bound::Finite { lo: l2, hi: h2, .. }) => l1 <= h2 && l2 <= h1,
        _ => false,
    }
}

pub(crate) fn label_from(f: &QuarticCoeffs, ms: &MarkerSet, tangents: &[SpecialTangent]) -> CaseLabel {
    let mut ties = Vec::new();
    let row = row_of(&f.a, &f.b, &mut ties);

    let slot = chain_slot(&f.a, &f.b, &f.c);
    ties.extend(slot.ties.iter().map(|t| format!("c={t}")));
    let separators = match row {
        1..=4 => 6,
        5 => 4,
        _ => 1,
    };
    let c_nonneg = !f.c.is_negative();
    if f.c.is_zero() {
        ties.push("c=0".into());
    }
    let within = 1 + slot.below + slot.ties.len() + usize::from(c_nonneg);
    let half = if f.a.is_negative() { 0 } else { separators + 1 };
    let column = (half + within) as u8;

    // cubic subcase: -d against the distinct intercepts -delta_i and 0
    let d_nonpos = !f.d.is_positive();
    if f.d.is_zero() {
        ties.push("-d=0".into());
    }
    let mut at_or_below = usize::from(d_nonpos);
    let mut seen: Vec<&Bound> = Vec::new();
    for t in tangents {
        if t.f_sign == Sign::Zero {
            ties.push(format!("-d=-delta{}", &t.mu[2..]));
        }
        if t.neg_delta_zero || seen.iter().any(|b| same_value(b, &t.neg_delta)) {
            continue;
        }
        seen.push(&t.neg_delta);
        if t.f_sign != Sign::Pos {
            at_or_below += 1;
        }
    }
    let cubic_subcase = 1 + at_or_below as u8;

    // quadratic subcase: -d against the marker ordinates and 0
    let mut points: Vec<(&str, QuadSurd)> = vec![("0", QuadSurd::rational(Rational::zero()))];
    for (name, v) in &ms.ordinates {
        if !points.iter().any(|(_, p)| p.cmp_exact(v) == Ordering::Equal) {
            points.push((name, v.clone()));
        }
    }
    let mut at_or_below = 0;
    for (name, p) in &points {
        match p.add_rational(&f.d).sign() {
            Sign::Pos => {}
            Sign::Zero => {
                if *name != "0" {
                    ties.push(format!("-d={name}"));
                }
                at_or_below += 1;
            }
            Sign::Neg => at_or_below += 1,
        }
    }
    CaseLabel { row, column, cubic_subcase, quadratic_subcase: 1 + at_or_below as u8, ties }
}
