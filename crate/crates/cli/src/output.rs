//! JSON and CSV rendering of classifications.

use quartic_core::classifier::SpecialTangent;
use quartic_core::interval::{Bound, Interval};
use quartic_core::{
    roman_numeral, AmbiguousGap, Classification, Poly, QuadSurd, Rational, RootEntry, RootReport, Sign, Verdict,
};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// How floating-point values are rounded on output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    /// Twelve significant digits.
    Full,
    /// Two decimal places, as in the printed tables.
    Paper,
}

impl Precision {
    pub fn round(self, x: f64) -> f64 {
        let r = match self {
            Precision::Full => format!("{x:.11e}").parse().unwrap_or(x),
            Precision::Paper => (x * 100.0).round() / 100.0,
        };
        r + 0.0
    }

    pub fn num(self, x: f64) -> Value {
        if x.is_finite() {
            json!(self.round(x))
        } else if x > 0.0 {
            json!("+inf")
        } else {
            json!("-inf")
        }
    }
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Neg => "neg",
        Sign::Zero => "zero",
        Sign::Pos => "pos",
    }
}

fn q(r: &Rational) -> f64 {
    quartic_core::rational::to_f64(r)
}

struct Ctx {
    p: Precision,
}

impl Ctx {
    fn surd(&self, s: &QuadSurd) -> Value {
        self.p.num(s.to_f64())
    }

    fn opt_surd(&self, s: &Option<QuadSurd>) -> Value {
        s.as_ref().map_or(Value::Null, |s| self.surd(s))
    }

    fn bound(&self, b: &Bound) -> Value {
        self.p.num(b.approx())
    }

    /// Flat interval record: `lo`, `hi`, their labels, exact values when
    /// rational, and closedness.
    fn interval(&self, iv: &Interval) -> Value {
        let mut m = Map::new();
        for (key, e) in [("lo", &iv.lo), ("hi", &iv.hi)] {
            m.insert(key.into(), self.bound(&e.bound));
            m.insert(format!("{key}_label"), json!(e.label));
            if let Some(v) = e.bound.exact_value() {
                m.insert(format!("{key}_exact"), json!(v.to_string()));
            }
        }
        m.insert("lo_closed".into(), json!(iv.lo_closed));
        m.insert("hi_closed".into(), json!(iv.hi_closed));
        m.insert("display".into(), json!(iv.to_string()));
        Value::Object(m)
    }

    fn root(&self, r: &RootEntry) -> Value {
        let mut v = self.interval(&r.interval);
        v["sign"] = json!(sign_str(r.sign));
        match r.multiplicity {
            Some(m) => v["multiplicity"] = json!(m),
            None => v["max_roots"] = json!(r.max_roots),
        }
        v
    }

    fn ambiguous(&self, g: &AmbiguousGap) -> Value {
        let mut v = self.interval(&g.interval);
        v["max_roots"] = json!(g.max_roots);
        v["even"] = json!(g.even);
        v
    }

    fn report(&self, r: &RootReport) -> Value {
        let mut v = json!({
            "tier": r.tier.name(),
            "count": r.count,
            "possible_counts": r.possible_counts,
            "repeated_root_possible": r.repeated_root_possible,
        });
        match r.tier {
            quartic_core::Tier::Cubic => {
                v["roots"] = r.roots.iter().map(|e| self.root(e)).collect();
                v["total_multiplicity"] = json!(r.total_multiplicity());
            }
            quartic_core::Tier::Quadratic => {
                v["guaranteed"] = r.roots.iter().map(|e| self.root(e)).collect();
                v["ambiguous_pairs"] = r.ambiguous.iter().map(|g| self.ambiguous(g)).collect();
            }
        }
        v
    }

    fn tangent(&self, t: &SpecialTangent) -> Value {
        json!({
            "mu": t.mu,
            "kind": t.kind.name(),
            "x": self.p.num(t.locus.approx()),
            "f_sign": sign_str(t.f_sign),
            "neg_delta": self.bound(&t.neg_delta),
            "xi": t.xi.iter().map(|(n, l)| json!({ "name": n, "x": self.p.num(l.approx()) })).collect::<Vec<_>>(),
        })
    }
}

pub fn verdict_json(cubic: &Verdict, quadratic: &Verdict) -> Value {
    json!({
        "count": cubic.oracle_count,
        "cubic_tier": if cubic.passed() { "pass" } else { "fail" },
        "quadratic_tier": if quadratic.passed() { "pass" } else { "fail" },
        "violations": cubic.violations.iter().map(|v| format!("cubic: {v}")).chain(quadratic.violations.iter().map(|v| format!("quadratic: {v}"))).collect::<Vec<_>>(),
    })
}

pub fn classification_json(c: &Classification, cubic_v: &Verdict, quad_v: &Verdict, p: Precision) -> Value {
    let cx = Ctx { p };
    let f = &c.coeffs;
    let dq = f.depress();
    let ch = &c.chain;
    let slot = |s: &quartic_core::resolvent::ChainSlot| json!({ "below": s.below, "ties": s.ties });
    let lambdas: Vec<Value> = c
        .lambdas
        .roots
        .iter()
        .map(|(n, r)| json!({ "name": n, "x": p.num(r.approx()), "multiplicity": r.multiplicity }))
        .collect();
    let stationary: Vec<Value> = c
        .profile
        .points
        .iter()
        .map(|s| json!({ "name": s.name, "kind": s.kind.name(), "x": p.num(s.root.approx()), "bracket": [p.num(q(&s.root.lo)), p.num(q(&s.root.hi))], "multiplicity": s.root.multiplicity }))
        .collect();
    let brackets: Vec<Value> = c
        .stationary_brackets
        .iter()
        .map(|b| json!({ "name": b.name, "kind": b.kind.name(), "interval": cx.interval(&b.interval) }))
        .collect();
    let markers = json!({
        "regime": c.markers.regime.name(),
        "points": c.markers.points.iter().map(|m| json!({
            "name": m.name, "x": cx.surd(&m.x), "height": cx.surd(&m.height), "ordinate": cx.surd(&m.ordinate), "ordinate_name": m.ordinate_name,
        })).collect::<Vec<_>>(),
        "ordinates": c.markers.ordinates.iter().map(|(n, v)| json!({ "name": n, "value": cx.surd(v) })).collect::<Vec<_>>(),
        "extras": c.markers.extras.iter().map(|(n, v)| (n.to_string(), cx.surd(v))).collect::<Map<_, _>>(),
    });
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": { "a": f.a.to_string(), "b": f.b.to_string(), "c": f.c.to_string(), "d": f.d.to_string() },
        "case": {
            "row": c.label.row,
            "column": c.label.column,
            "subcase": roman_numeral(c.label.quadratic_subcase),
            "cubic_subcase": roman_numeral(c.label.cubic_subcase),
            "label": c.label.to_string(),
            "ties": c.label.ties,
        },
        "depressed": { "p": p.num(q(&dq.p)), "q": p.num(q(&dq.q)), "r": p.num(q(&dq.r)) },
        "discriminants": {
            "delta1": p.num(q(&c.discriminants.delta1)),
            "delta2": p.num(q(&c.discriminants.delta2)),
        },
        "chain": {
            "c0": p.num(q(&ch.c0)), "d0": p.num(q(&ch.d0)),
            "c1": cx.opt_surd(&ch.c1), "c2": cx.opt_surd(&ch.c2),
            "gamma1": cx.opt_surd(&ch.gamma1), "gamma2": cx.opt_surd(&ch.gamma2),
            "c_slot": slot(&ch.c_slot), "zero_slot": slot(&ch.zero_slot),
        },
        "markers": markers,
        "double_tangent": c.double_tangent.as_ref().map_or(Value::Null, |(al, be)| json!({ "alpha": cx.surd(al), "beta": cx.surd(be) })),
        "eta_theta": c.eta_theta.as_ref().map_or(Value::Null, |e| json!({
            "eta1": cx.surd(&e.eta1), "eta2": cx.surd(&e.eta2), "theta1": cx.surd(&e.theta1), "theta2": cx.surd(&e.theta2),
        })),
        "stationary": { "kind": c.profile.kind.name(), "points": stationary, "brackets": brackets },
        "lambdas": lambdas,
        "special_tangents": c.special_tangents.iter().map(|t| cx.tangent(t)).collect::<Vec<_>>(),
        "cubic_tier": cx.report(&c.cubic),
        "quadratic_tier": cx.report(&c.quadratic),
        "oracle": verdict_json(cubic_v, quad_v),
    })
}

pub const CSV_HEADER: &str = "a,b,c,d,row,column,subcase,count,oracle_count,verdict";

pub fn csv_row(c: &Classification, cubic_v: &Verdict, quad_v: &Verdict) -> String {
    let f = &c.coeffs;
    let verdict = if cubic_v.passed() && quad_v.passed() { "pass" } else { "fail" };
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        f.a,
        f.b,
        f.c,
        f.d,
        c.label.row,
        c.label.column,
        roman_numeral(c.label.quadratic_subcase),
        c.cubic.count.map_or_else(String::new, |n| n.to_string()),
        cubic_v.oracle_count,
        verdict
    )
}

/// Sub-quartic and the line `-c x - d` sampled on a grid, then the landmark
/// abscissae and separator lines.
pub fn plot_data(c: &Classification, lo: &Rational, hi: &Rational, samples: usize, p: Precision) -> String {
    let f = &c.coeffs;
    let sub: Poly = f.subquartic();
    let mut out = String::from("# samples\nx,subquartic,line\n");
    let n = samples - 1;
    for i in 0..=n {
        let x = lo + (hi - lo) * Rational::new((i as i64).into(), (n as i64).into());
        let line = -(&f.c * &x) - &f.d;
        out += &format!("{},{},{}\n", fmt(p, q(&x)), fmt(p, q(&sub.eval(&x))), fmt(p, q(&line)));
    }
    out += "# landmarks\nname,x\n";
    let mut marks: Vec<(String, f64)> = Vec::new();
    for s in &c.profile.points {
        marks.push((s.name.into(), s.root.approx()));
    }
    for (n, r) in &c.lambdas.roots {
        marks.push(((*n).into(), r.approx()));
    }
    for t in &c.special_tangents {
        for (n, l) in &t.xi {
            marks.push((n.clone(), l.approx()));
        }
    }
    for m in &c.markers.points {
        marks.push((m.name.into(), m.x.to_f64()));
    }
    if let Some((al, be)) = &c.double_tangent {
        marks.push(("alpha".into(), al.to_f64()));
        marks.push(("beta".into(), be.to_f64()));
    }
    for (name, x) in marks {
        out += &format!("{name},{}\n", fmt(p, x));
    }
    out += "# separators\nname,slope,intercept\n";
    let slope = fmt(p, -q(&f.c));
    out += &format!("privileged,{slope},0\n");
    out += &format!("level,{slope},{}\n", fmt(p, -q(&f.d)));
    for t in &c.special_tangents {
        out += &format!("tangent_{},{slope},{}\n", t.mu, fmt(p, t.neg_delta.approx()));
    }
    for (n, v) in &c.markers.ordinates {
        out += &format!("{n},{slope},{}\n", fmt(p, v.to_f64()));
    }
    out
}

fn fmt(p: Precision, x: f64) -> String {
    format!("{}", p.round(x))
}
