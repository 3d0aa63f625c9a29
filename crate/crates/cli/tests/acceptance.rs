//! Acceptance criteria 1-7, one PASS/FAIL line each.
//!
//! Everything runs inside a single test so the timed criteria are not
//! competing with other tests for the CPU.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use quartic_core::classifier::stationary_isolation;
use quartic_core::cubic::{cubic_discriminants, lambdas, stationary_points, ProfileKind};
use quartic_core::interval::Bound;
use quartic_core::oracle::{sturm_chain, total_multiplicity};
use quartic_core::rational::{frac, int, Rational};
use quartic_core::resolvent::eta_theta;
use quartic_core::{classify, verify_report, QuarticCoeffs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn near(got: f64, want: f64, what: &str) -> Result<(), String> {
    // NaN (a missing value) fails too
    let ok = (got - want).abs() <= 0.01;
    ensure!(ok, "{what} = {got:.4}, expected {want} +- 0.01");
    Ok(())
}

fn near_all(got: &[f64], want: &[f64], what: &str) -> Result<(), String> {
    ensure!(got.len() == want.len(), "{what}: got {got:?}, expected {want:?}");
    for (g, w) in got.iter().zip(want) {
        near(*g, *w, what)?;
    }
    Ok(())
}

fn random_quartics(rng: &mut ChaCha8Rng, n: usize) -> Vec<QuarticCoeffs> {
    let mut draw = || {
        let den = rng.gen_range(1..=16i64);
        let num = rng.gen_range(-10 * den..=10 * den);
        Rational::new(num.into(), den.into())
    };
    (0..n).map(|_| QuarticCoeffs::new(draw(), draw(), draw(), draw())).collect()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let f = QuarticCoeffs::from_ints(1, -3, -1, 1);
    let c = classify(&f);
    let elapsed = start.elapsed();

    let mu: Vec<f64> = c.profile.points.iter().map(|p| p.root.approx()).collect();
    let mut mu_desc = mu.clone();
    mu_desc.reverse();
    near_all(&mu_desc, &[1.00, -0.16, -1.59], "mu")?;
    let lam = |n: &str| c.lambdas.roots.iter().find(|(k, _)| *k == n).map(|(_, r)| r.approx()).unwrap_or(f64::NAN);
    near_all(&[lam("lambda1"), lam("lambda0"), lam("lambda2")], &[1.48, -0.31, -2.17], "lambda")?;

    let ch = &c.chain;
    let sv = |s: &Option<quartic_core::QuadSurd>| s.as_ref().map_or(f64::NAN, |s| s.to_f64());
    near(sv(&ch.c2), -5.00, "c2")?;
    near(sv(&ch.c1), 1.75, "c1")?;
    near(sv(&ch.gamma2), -3.42, "gamma2")?;
    near(sv(&ch.gamma1), 1.27, "gamma1")?;
    ensure!(ch.c0 == frac(-13, 8), "c0 = {}", ch.c0);
    near(quartic_core::rational::to_f64(&ch.d0), 2.64, "d0")?;

    let mut rho: Vec<f64> = c.markers.points.iter().map(|p| p.x.to_f64()).collect();
    rho.sort_by(|a, b| b.total_cmp(a));
    near_all(&rho, &[1.30, -2.30], "rho")?;

    let nd = |m: &str| c.special_tangents.iter().find(|t| t.mu == m).map_or(f64::NAN, |t| t.neg_delta.approx());
    near_all(&[nd("mu1"), nd("mu2"), nd("mu3")], &[-2.00, 0.08, -3.62], "-delta")?;

    let (al, be) = c.double_tangent.as_ref().ok_or("no double tangent")?;
    near(al.to_f64(), 1.05, "alpha")?;
    near(be.to_f64(), -1.55, "beta")?;

    ensure!(c.cubic.count == Some(4), "count {:?}", c.cubic.count);
    let x1 = c.cubic.roots.last().ok_or("no roots")?;
    let (lo, hi) = (x1.interval.lo.bound.approx(), x1.interval.hi.bound.approx());
    ensure!(lo >= 1.30 - 0.01 && hi <= 1.48 + 0.01, "x1 in ({lo}, {hi})");
    ensure!(c.label.row == 1 && c.label.column == 11 && c.label.quadratic_subcase == 2, "label {}", c.label);
    ensure!(verify_report(&f, &c.cubic).passed() && verify_report(&f, &c.quadratic).passed(), "oracle violation");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("label {}, x1 in ({lo:.2}, {hi:.2}), {elapsed:?}", c.label))
}

fn stationary_intervals() -> Outcome {
    let f = QuarticCoeffs::from_ints(1, -5, -1, 1);
    let c = classify(&f);
    near(c.chain.c2.as_ref().ok_or("no c2")?.to_f64(), -9.41, "c2")?;
    near(c.chain.c1.as_ref().ok_or("no c1")?.to_f64(), 4.16, "c1")?;
    let et = eta_theta(&f.a, &f.b).ok_or("no eta/theta")?;
    near_all(&[et.eta1.to_f64(), et.eta2.to_f64()], &[0.70, -1.20], "eta")?;
    near_all(&[et.theta1.to_f64(), et.theta2.to_f64()], &[-2.14, 1.64], "theta")?;

    // -2.14 < mu3 < -1.20 < mu2 < 0.70 < mu1 < 1.64, checked on exact enclosures
    let br = stationary_isolation(&f);
    ensure!(br.len() == 3, "{} brackets", br.len());
    let mus = stationary_points(&f);
    for (b, name) in br.iter().zip(["mu3", "mu2", "mu1"]) {
        let p = mus.get(name).ok_or(format!("no {name}"))?;
        let (Bound::Finite { lo: blo, .. }, Bound::Finite { hi: bhi, .. }) = (&b.interval.lo.bound, &b.interval.hi.bound) else {
            return Err(format!("{name} bracket unbounded"));
        };
        ensure!(blo < &p.root.lo && p.root.hi < *bhi, "{name} not inside {}", b.interval);
    }
    let ends: Vec<f64> = br.iter().flat_map(|b| [b.interval.lo.bound.approx(), b.interval.hi.bound.approx()]).collect();
    near_all(&ends, &[-2.14, -1.20, -1.20, 0.70, 0.70, 1.64], "chain")?;
    let mu: Vec<f64> = mus.points.iter().map(|p| p.root.approx()).collect();
    near_all(&mu, &[-1.96, -0.10, 1.31], "mu")?;
    Ok("chain -2.14 < mu3 < -1.20 < mu2 < 0.70 < mu1 < 1.64 holds".into())
}

fn oracle_sweep() -> Outcome {
    let cases = random_quartics(&mut ChaCha8Rng::seed_from_u64(7), 10_000);
    let start = Instant::now();
    for f in &cases {
        let c = classify(f);
        let chain = sturm_chain(f);
        let distinct = chain.total();
        ensure!(c.cubic.count == Some(distinct), "{f}: cubic count {:?}, Sturm {distinct}", c.cubic.count);
        ensure!(c.cubic.total_multiplicity() == Some(total_multiplicity(f) as u32), "{f}: multiplicity mismatch");
        for r in &c.cubic.roots {
            let n = chain.count_in_window(&r.interval.window).map_err(|e| e.to_string())?;
            ensure!(n == 1, "{f}: interval {} holds {n} roots", r.interval);
        }
        ensure!(c.quadratic.possible_counts.contains(&distinct), "{f}: {distinct} not in {:?}", c.quadratic.possible_counts);
        let v = verify_report(f, &c.quadratic);
        ensure!(v.passed(), "{f}: quadratic tier {:?}", v.violations);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "10000 cases took {elapsed:?}");
    Ok(format!("10000/10000 agree with the Sturm oracle in {:.1} s", elapsed.as_secs_f64()))
}

fn boundary_suite() -> Outcome {
    // (x + a/4)^4 = x^4 + a x^3 + 3a^2/8 x^2 + a^3/16 x + a^4/256
    for a in -8..=8i64 {
        let r = frac(a, 4);
        let f = QuarticCoeffs::new(int(a), int(6) * &r * &r, int(4) * &r * &r * &r, &r * &r * &r * &r);
        let c = classify(&f);
        ensure!(c.profile.kind == ProfileKind::Quadruple, "a={a}: profile {:?}", c.profile.kind);
        ensure!(c.cubic.count == Some(1), "a={a}: count {:?}", c.cubic.count);
        let root = &c.cubic.roots[0];
        ensure!(root.multiplicity == Some(4), "a={a}: multiplicity {:?}", root.multiplicity);
        ensure!(root.interval.lo.bound.exact_value() == Some(&-&r) && root.interval.is_point(), "a={a}: root {}", root.interval);
        // at a = 0 every b-boundary coincides and the labeller reports the simplest ones
        let b_tie = if a == 0 { "b=0" } else { "b=(3/2)(a^2/4)" };
        ensure!(c.label.ties.iter().any(|t| t == b_tie) && c.label.ties.iter().any(|t| t == "-d=-delta1"), "a={a}: ties {:?}", c.label.ties);
        ensure!(verify_report(&f, &c.cubic).passed(), "a={a}: oracle violation");
    }

    let mut n = 0;
    for r in -3..=3i64 {
        for s in -3..=3i64 {
            if r == s {
                continue;
            }
            let (r, s) = (int(r), int(s));
            for d in [-2i64, 0, 1, 5] {
                // f' = 4 (x - r)^2 (x - s): a saddle at r
                let f1 = QuarticCoeffs::new(
                    -frac(4, 3) * (int(2) * &r + &s),
                    int(2) * (&r * &r + int(2) * &r * &s),
                    -int(4) * &r * &r * &s,
                    int(d),
                );
                ensure!(cubic_discriminants(&f1).delta1 == int(0), "{f1}: delta1 nonzero");
                ensure!(matches!(stationary_points(&f1).kind, ProfileKind::SaddleMinLeft | ProfileKind::SaddleMinRight), "{f1}: no saddle");
                // x^3 + a x^2 + b x + c = (x - r)^2 (x - s): a double level point at r
                let f2 = QuarticCoeffs::new(-(int(2) * &r + &s), &r * &r + int(2) * &r * &s, -&r * &r * &s, int(d));
                ensure!(cubic_discriminants(&f2).delta2 == int(0), "{f2}: delta2 nonzero");
                ensure!(lambdas(&f2).roots.iter().any(|(_, l)| l.multiplicity >= 2), "{f2}: no double lambda");
                for f in [&f1, &f2] {
                    let c = classify(f);
                    ensure!(verify_report(f, &c.cubic).passed() && verify_report(f, &c.quadratic).passed(), "{f}: oracle violation");
                    ensure!(c.cubic.total_multiplicity() == Some(total_multiplicity(f) as u32), "{f}: multiplicity mismatch");
                    n += 1;
                }
            }
        }
    }
    Ok(format!("17 quadruple-root cases exact; {n} delta1=0 / delta2=0 cases clean"))
}

/// The literal claim puts the negative root below `-d/c`. It cannot: for
/// `x < -d/c` both `c x + d` and `x^2 (x^2 + a x + b)` are positive. The
/// oracle checks the corrected split, root in `(-d/c, 0)`, and the claim is
/// reported as unattainable.
fn positive_b_heuristics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = Vec::new();
    while cases.len() < 2000 {
        let f = random_quartics(&mut rng, 1).pop().unwrap();
        if f.b > frac(3, 8) * &f.a * &f.a {
            cases.push(f);
        }
    }
    let mut both_negative = 0;
    let mut literal_holds = 0;
    for f in &cases {
        let c = classify(f);
        let chain = sturm_chain(f);
        let n = chain.total();
        ensure!(n <= 2 && c.cubic.count == Some(n), "{f}: {n} roots");
        if f.c < int(0) && f.d < int(0) {
            both_negative += 1;
            ensure!(n == 2, "{f}: {n} roots");
            let cut = -&f.d / &f.c;
            let count = |lo: Option<&Rational>, hi: Option<&Rational>| chain.count_between(lo, hi, false, false).map_err(|e| e.to_string());
            if count(None, Some(&cut))? == 1 {
                literal_holds += 1;
            }
            ensure!(count(Some(&cut), Some(&int(0)))? == 1, "{f}: no root in (-d/c, 0)");
            let l1 = lambdas(f).roots.iter().find(|(k, _)| *k == "lambda1").map(|(_, r)| r.clone()).ok_or(format!("{f}: no lambda1"))?;
            ensure!(l1.lo > int(0), "{f}: lambda1 not positive");
            ensure!(count(Some(&l1.hi), None)? == 1 && count(Some(&l1.lo), None)? == 1, "{f}: no single root above lambda1");
        }
    }
    let summary = format!("2000 cases, counts in {{0,1,2}}; {both_negative} with c<0, d<0 have one root above lambda1");
    if literal_holds < both_negative {
        return Err(format!(
            "{UNATTAINABLE_TAG}{summary}, but the negative root lies below -d/c in {literal_holds}/{both_negative}; it lies in (-d/c, 0) in all of them (f > 0 left of -d/c)"
        ));
    }
    Ok(summary)
}

fn mirror_symmetry() -> Outcome {
    let cases = random_quartics(&mut ChaCha8Rng::seed_from_u64(13), 1000);
    for f in &cases {
        let (c, m) = (classify(f), classify(&f.mirrored()));
        ensure!(c.cubic.count == m.cubic.count, "{f}: counts {:?} vs {:?}", c.cubic.count, m.cubic.count);
        for (r, s) in c.cubic.roots.iter().zip(m.cubic.roots.iter().rev()) {
            let (a, b) = (&r.interval, &s.interval);
            ensure!(a.lo_closed == b.hi_closed && a.hi_closed == b.lo_closed, "{f}: closedness {a} vs {b}");
            ensure!(mirrored(&a.lo.bound, &b.hi.bound) && mirrored(&a.hi.bound, &b.lo.bound), "{f}: {a} vs mirrored {b}");
            ensure!(r.multiplicity == s.multiplicity, "{f}: multiplicities differ");
        }
    }
    Ok("1000 cases, equal counts, endpoints negate and swap".into())
}

/// `x` and `-y` agree to within their enclosure widths.
fn mirrored(x: &Bound, y: &Bound) -> bool {
    match (x, y) {
        (Bound::NegInf, Bound::PosInf) | (Bound::PosInf, Bound::NegInf) => true,
        (Bound::Finite { lo: xl, hi: xh, .. }, Bound::Finite { lo: yl, hi: yh, .. }) => {
            let slack = (xh - xl) + (yh - yl) + frac(1, 1_000_000_000);
            (xl + yh).abs_diff_ok(&slack) && (xh + yl).abs_diff_ok(&slack)
        }
        _ => false,
    }
}

trait Slack {
    fn abs_diff_ok(&self, slack: &Rational) -> bool;
}

impl Slack for Rational {
    fn abs_diff_ok(&self, slack: &Rational) -> bool {
        self <= slack && -self <= *slack
    }
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_quartic");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let sweep = ["sweep", "--random", "1000", "--seed", "7"];
    let (s1, s2) = (run(&sweep)?, run(&sweep)?);
    ensure!(s1.status.success(), "sweep failed: {}", String::from_utf8_lossy(&s1.stderr));
    ensure!(s1.stdout == s2.stdout, "sweep output differs between runs");
    ensure!(s1.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count() == 1001, "sweep row count");
    for coeffs in [["1", "-3", "-1", "1"], ["1", "-5", "-1", "1"], ["0", "0", "0", "1"], ["-4", "6", "-4", "1"]] {
        let args = ["tune", "--a", coeffs[0], "--b", coeffs[1], "--c", coeffs[2], "--d", coeffs[3]];
        let (t1, t2) = (run(&args)?, run(&args)?);
        ensure!(t1.status.success() && !t1.stdout.is_empty(), "tune failed for {coeffs:?}");
        ensure!(t1.stdout == t2.stdout, "tune output differs for {coeffs:?}");
    }
    Ok("sweep --random 1000 --seed 7 and tune are byte-identical across runs".into())
}

/// Criteria whose literal statement is mathematically false. They print FAIL
/// but only fail the test if the corrected property broke as well.
const UNATTAINABLE: &[usize] = &[5];
const UNATTAINABLE_TAG: &str = "unattainable as stated: ";

#[test]
fn acceptance() {
    let criteria: [Check; 7] = [
        ("worked example", worked_example),
        ("stationary intervals", stationary_intervals),
        ("oracle sweep", oracle_sweep),
        ("boundary suite", boundary_suite),
        ("b > (3/2)(a^2/4) properties", positive_b_heuristics),
        ("mirror symmetry", mirror_symmetry),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let line = match &outcome {
            Ok(msg) => format!("PASS criterion {}: {name}: {msg}", i + 1),
            Err(msg) => format!("FAIL criterion {}: {name}: {msg}", i + 1),
        };
        // written past the harness capture so the lines always show up
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
        match &outcome {
            Err(msg) if UNATTAINABLE.contains(&(i + 1)) && msg.starts_with(UNATTAINABLE_TAG) => {}
            Err(_) => failed.push(i + 1),
            Ok(_) if UNATTAINABLE.contains(&(i + 1)) => failed.push(i + 1),
            Ok(_) => {}
        }
    }
    assert!(failed.is_empty(), "unexpected outcome for criteria {failed:?}");
}
