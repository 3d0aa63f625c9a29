//! Independent root counting with Sturm sequences, used to check reports.
//!
//! Nothing here looks at landmarks or case labels: the input is the quartic and
//! a report, the output is a list of disagreements.

use num_traits::{Signed, Zero};

use crate::classifier::{RootReport, Tier};
use crate::error::{Error, Result};
use crate::interval::{Interval, Window};
use crate::poly::{Poly, QuarticCoeffs, Sign};
use crate::rational::Rational;

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub seq: Vec<Poly>,
}

pub fn sturm_chain_of(p: &Poly) -> SturmChain {
    let q = p.squarefree();
    let mut seq = vec![q.clone(), q.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    SturmChain { seq }
}

pub fn sturm_chain(f: &QuarticCoeffs) -> SturmChain {
    sturm_chain_of(&f.poly())
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs.filter(|s| *s != Sign::Zero) {
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    fn at(&self, x: Option<&Rational>, neg_inf: bool) -> usize {
        match x {
            Some(x) => variations(self.seq.iter().map(|p| p.sign_at(x))),
            None => variations(self.seq.iter().map(|p| p.sign_at_infinity(neg_inf))),
        }
    }

    fn is_root(&self, x: &Rational) -> bool {
        self.seq[0].eval(x).is_zero()
    }

    /// Distinct real roots overall.
    pub fn total(&self) -> usize {
        self.at(None, true) - self.at(None, false)
    }

    /// Distinct roots between `lo` and `hi` (`None` = infinite), honouring
    /// whether the finite ends are included.
    pub fn count_between(&self, lo: Option<&Rational>, hi: Option<&Rational>, lo_closed: bool, hi_closed: bool) -> Result<usize> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l > h {
                return Err(Error::InvalidInterval);
            }
            if l == h {
                return Ok(usize::from(lo_closed && hi_closed && self.is_root(l)));
            }
        }
        // V(lo) - V(hi) counts the half-open (lo, hi]
        let mut n = self.at(lo, true) as isize - self.at(hi, false) as isize;
        if let Some(h) = hi {
            if !hi_closed && self.is_root(h) {
                n -= 1;
            }
        }
        if let Some(l) = lo {
            if lo_closed && self.is_root(l) {
                n += 1;
            }
        }
        Ok(n.max(0) as usize)
    }

    pub fn count_in_window(&self, w: &Window) -> Result<usize> {
        self.count_between(w.lo.as_ref(), w.hi.as_ref(), w.closed, w.closed)
    }
}

/// Distinct roots in the certified window of an interval.
pub fn count_roots_in(chain: &SturmChain, interval: &Interval) -> Result<usize> {
    chain.count_in_window(&interval.window)
}

/// Multiplicity of the roots in a window, from the square-free factorization;
/// `None` if the window holds no root or roots of differing multiplicity.
pub fn multiplicity_in(factors: &[(Poly, u32)], w: &Window) -> Option<u32> {
    let chains: Vec<(SturmChain, u32)> = factors.iter().map(|(p, k)| (sturm_chain_of(p), *k)).collect();
    multiplicity_with(&chains, w)
}

fn multiplicity_with(chains: &[(SturmChain, u32)], w: &Window) -> Option<u32> {
    let found: Vec<u32> = chains
        .iter()
        .filter(|(c, _)| c.count_in_window(w).unwrap_or(0) > 0)
        .map(|&(_, k)| k)
        .collect();
    match found.as_slice() {
        [k] => Some(*k),
        _ => None,
    }
}

/// Real roots counted with multiplicity.
pub fn total_multiplicity(f: &QuarticCoeffs) -> usize {
    f.poly().yun().iter().map(|(p, k)| sturm_chain_of(p).total() * *k as usize).sum()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub oracle_count: usize,
    pub violations: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_report(f: &QuarticCoeffs, report: &RootReport) -> Verdict {
    let chain = sturm_chain(f);
    let total = chain.total();
    let factors = f.poly().yun();
    // a single factor is the square-free part, whose chain is already built
    let factor_chains: Vec<(SturmChain, u32)> = match factors.as_slice() {
        [(_, k)] => vec![(chain.clone(), *k)],
        _ => factors.iter().map(|(p, k)| (sturm_chain_of(p), *k)).collect(),
    };
    // repeated complex pairs leave every real root simple
    let repeated = factor_chains.iter().any(|(c, k)| *k > 1 && c.total() > 0);
    let mut v = Verdict { oracle_count: total, violations: Vec::new() };
    let mut note = |msg: String| v.violations.push(msg);

    if !report.possible_counts.contains(&total) {
        note(format!("true count {total} not in possible counts {:?}", report.possible_counts));
    }
    if repeated && !report.repeated_root_possible {
        note("repeated root present but not allowed for".into());
    }
    let mut seen = 0;
    for (i, e) in report.roots.iter().enumerate() {
        let n = match count_roots_in(&chain, &e.interval) {
            Ok(n) => n,
            Err(err) => {
                note(format!("root {i}: {err}"));
                continue;
            }
        };
        seen += n;
        match report.tier {
            Tier::Cubic => {
                if n != 1 {
                    note(format!("root {i} {}: interval holds {n} roots", e.interval));
                } else if let Some(m) = e.multiplicity {
                    let want = multiplicity_with(&factor_chains, &e.interval.window);
                    if want != Some(m) {
                        note(format!("root {i} {}: multiplicity {m}, oracle {want:?}", e.interval));
                    }
                }
            }
            Tier::Quadratic => {
                if n == 0 || n > e.max_roots as usize || (!repeated && n % 2 == 0) {
                    note(format!("guaranteed {i} {}: holds {n} roots (max {})", e.interval, e.max_roots));
                }
            }
        }
        let side = match (&e.interval.window.lo, &e.interval.window.hi) {
            (Some(lo), _) if lo.is_positive() => Sign::Pos,
            (_, Some(hi)) if hi.is_negative() => Sign::Neg,
            _ => e.sign,
        };
        if n > 0 && side != e.sign {
            note(format!("root {i} {}: reported sign {:?} but window is {:?}", e.interval, e.sign, side));
        }
    }
    for (i, g) in report.ambiguous.iter().enumerate() {
        match count_roots_in(&chain, &g.interval) {
            Ok(n) => {
                seen += n;
                if n > g.max_roots as usize || (g.even && n % 2 == 1) {
                    note(format!("ambiguous {i} {}: holds {n} roots (max {})", g.interval, g.max_roots));
                }
            }
            Err(err) => note(format!("ambiguous {i}: {err}")),
        }
    }
    if let Some(c) = report.count {
        if c != total {
            note(format!("reported count {c}, oracle {total}"));
        }
    }
    if seen != total {
        note(format!("intervals account for {seen} roots, oracle {total}"));
    }
    v
}
