//! Orders landmarks on the real line with certified quartic signs.
//!
//! Every landmark ends up with a rational bracket on which the quartic has a
//! strict constant sign, or (for landmarks where it vanishes) on which the
//! square-free part is strictly monotone. Overlapping brackets are then either
//! the same root or share a sign, so the line splits into disjoint clusters and
//! the gaps between them.

use crate::cubic::PointKind;
use crate::interval::{Bound, Window};
use crate::locus::Locus;
use crate::poly::{Poly, Sign};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Landmark {
    pub name: String,
    pub locus: Locus,
    pub fsign: Sign,
    /// Kind and `f'` multiplicity when the landmark is a stationary point.
    pub stationary: Option<(PointKind, u32)>,
    pub approx: f64,
}

impl Landmark {
    /// Landmark whose quartic sign is decided here.
    pub fn new(name: impl Into<String>, mut locus: Locus, f: &Poly) -> Landmark {
        let fsign = sign_at_locus(f, &mut locus);
        Landmark::with_sign(name, locus, fsign)
    }

    /// Landmark whose quartic sign is known from an identity.
    pub fn with_sign(name: impl Into<String>, locus: Locus, fsign: Sign) -> Landmark {
        let approx = locus.approx();
        Landmark { name: name.into(), locus, fsign, stationary: None, approx }
    }

    pub fn is_exact(&self) -> bool {
        self.locus.as_surd().is_some()
    }

    pub fn bound(&self) -> Bound {
        match self.locus.as_surd() {
            Some(s) if s.is_rational() => Bound::exact(&s.u),
            Some(s) => Bound::surd(&s),
            None => {
                let (lo, hi) = self.locus.bracket();
                Bound::Finite { approx: self.approx, lo, hi }
            }
        }
    }
}

/// Exact sign of `f` at a point given by a rational, a surd or an isolated root.
pub(crate) fn sign_at_locus(f: &Poly, locus: &mut Locus) -> Sign {
    loop {
        match locus {
            Locus::Exact(q) => return f.sign_at(q),
            Locus::Surd { value, .. } => return value.eval_poly(f).sign(),
            Locus::Root { poly, root } => {
                let g = f.gcd(poly);
                if g.degree().unwrap_or(0) > 0 && g.sign_at(&root.lo) != g.sign_at(&root.hi) {
                    return Sign::Zero;
                }
                if let Some(s) = f.certified_sign(&root.lo, &root.hi) {
                    return s;
                }
                locus.refine();
            }
            Locus::Reflect { .. } | Locus::Tangent { .. } => panic!("sign of a derived locus must come from an identity"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Cluster {
    pub members: Vec<usize>,
    pub lo: Rational,
    pub hi: Rational,
    pub root: bool,
}

/// Open stretch between consecutive clusters (or out to infinity).
#[derive(Clone, Debug)]
pub(crate) struct Gap {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub lo_sign: Sign,
    pub hi_sign: Sign,
    pub window: Window,
}

pub(crate) struct SignLine {
    pub marks: Vec<Landmark>,
    pub clusters: Vec<Cluster>,
    f: Poly,
    qd: Poly,
}

const REFINE_BUDGET: usize = 50_000;

impl SignLine {
    pub fn build(f: &Poly, marks: Vec<Landmark>) -> SignLine {
        let qd = f.squarefree().derivative();
        let mut line = SignLine { marks, clusters: Vec::new(), f: f.clone(), qd };
        for i in 0..line.marks.len() {
            line.certify(i);
        }
        line.separate();
        line.cluster();
        line
    }

    fn certified(&self, i: usize) -> bool {
        let m = &self.marks[i];
        let (lo, hi) = m.locus.bracket();
        match m.fsign {
            Sign::Zero => matches!(self.qd.certified_sign(&lo, &hi), Some(Sign::Pos | Sign::Neg)),
            s => self.f.certified_sign(&lo, &hi) == Some(s),
        }
    }

    fn certify(&mut self, i: usize) {
        let mut budget = REFINE_BUDGET;
        while !self.certified(i) && budget > 0 {
            self.marks[i].locus.refine();
            budget -= 1;
        }
        debug_assert!(budget > 0, "could not certify landmark {}", self.marks[i].name);
    }

    fn overlaps(&self, i: usize, j: usize) -> bool {
        let (li, hi) = self.marks[i].locus.bracket();
        let (lj, hj) = self.marks[j].locus.bracket();
        li <= hj && lj <= hi
    }

    /// Refines until no root landmark overlaps a non-root one.
    fn separate(&mut self) {
        let n = self.marks.len();
        for _ in 0..REFINE_BUDGET {
            let conflict = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| (self.marks[i].fsign == Sign::Zero) != (self.marks[j].fsign == Sign::Zero) && self.overlaps(i, j));
            let Some((i, j)) = conflict else { return };
            for k in [i, j] {
                self.marks[k].locus.refine();
                self.certify(k);
            }
        }
        debug_assert!(false, "landmark separation did not converge");
    }

    fn cluster(&mut self) {
        let mut order: Vec<usize> = (0..self.marks.len()).collect();
        order.sort_by(|&i, &j| {
            let (li, _) = self.marks[i].locus.bracket();
            let (lj, _) = self.marks[j].locus.bracket();
            li.cmp(&lj).then(self.marks[i].approx.total_cmp(&self.marks[j].approx))
        });
        let mut clusters: Vec<Cluster> = Vec::new();
        for i in order {
            let (lo, hi) = self.marks[i].locus.bracket();
            let root = self.marks[i].fsign == Sign::Zero;
            match clusters.last_mut() {
                Some(c) if lo <= c.hi => {
                    debug_assert_eq!(c.root, root);
                    c.members.push(i);
                    if hi > c.hi {
                        c.hi = hi;
                    }
                }
                _ => clusters.push(Cluster { members: vec![i], lo, hi, root }),
            }
        }
        // inside a cluster, report members left to right
        for c in &mut clusters {
            c.members.sort_by(|&i, &j| self.marks[i].approx.total_cmp(&self.marks[j].approx));
        }
        self.clusters = clusters;
    }

    fn edge_sign(&self, ci: usize, right: bool) -> Sign {
        let c = &self.clusters[ci];
        if !c.root {
            return self.marks[c.members[0]].fsign;
        }
        self.f.sign_at(if right { &c.hi } else { &c.lo })
    }

    pub fn gaps(&self) -> Vec<Gap> {
        let n = self.clusters.len();
        (0..=n)
            .map(|g| {
                let left = g.checked_sub(1);
                let right = (g < n).then_some(g);
                let lo_sign = left.map_or_else(|| self.f.sign_at_infinity(true), |ci| self.edge_sign(ci, true));
                let hi_sign = right.map_or_else(|| self.f.sign_at_infinity(false), |ci| self.edge_sign(ci, false));
                let window = Window::open(left.map(|ci| self.clusters[ci].hi.clone()), right.map(|ci| self.clusters[ci].lo.clone()));
                Gap { left, right, lo_sign, hi_sign, window }
            })
            .collect()
    }

    /// Label and position of the cluster member nearest its right (or left) edge,
    /// with coinciding members joined by `=`.
    pub fn edge_label(&self, ci: usize, right: bool) -> (String, Bound) {
        let members = &self.clusters[ci].members;
        let pick = if right { *members.last().unwrap() } else { members[0] };
        let x = self.marks[pick].approx;
        let tol = 1e-12 * x.abs().max(1.0);
        let names: Vec<&str> = members
            .iter()
            .filter(|&&m| (self.marks[m].approx - x).abs() <= tol)
            .map(|&m| self.marks[m].name.as_str())
            .collect();
        // prefer an exactly known member for the reported position
        let shown = members
            .iter()
            .copied()
            .filter(|&m| (self.marks[m].approx - x).abs() <= tol)
            .find(|&m| self.marks[m].is_exact())
            .unwrap_or(pick);
        (names.join("="), self.marks[shown].bound())
    }

    pub fn find(&self, name: &str) -> Option<&Landmark> {
        self.marks.iter().find(|m| m.name == name)
    }

    /// Index of the cluster holding the landmark `0`.
    pub fn zero_cluster(&self) -> usize {
        self.clusters.iter().position(|c| c.members.iter().any(|&m| self.marks[m].name == "0")).expect("0 is always a landmark")
    }

    /// Which side of zero the gap `g` (left of cluster `g`) lies on.
    pub fn gap_side(&self, g: usize) -> Sign {
        if g <= self.zero_cluster() {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn cluster_side(&self, ci: usize) -> Sign {
        Sign::of(&Rational::from_integer((ci as i64 - self.zero_cluster() as i64).into()))
    }
}
