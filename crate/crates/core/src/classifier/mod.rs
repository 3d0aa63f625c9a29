//! Two-tier root classification.
//!
//! The cubic tier places the real roots among the stationary points `mu`,
//! the level points `lambda` (where `f = d`), the special tangent points `xi`
//! and a few rational landmarks; the count is exact. The quadratic tier uses
//! only square-root landmarks and reports guaranteed roots plus ambiguous pairs.

mod cubic_tier;
pub(crate) mod engine;
mod label;
mod quadratic_tier;
mod stationary;

pub use cubic_tier::{classify_cubic_tier, count_from_critical_signs, special_tangents, SpecialTangent};
pub use label::{case_label, roman, CaseLabel};
pub use quadratic_tier::classify_quadratic_tier;
pub use stationary::{stationary_isolation, StationaryBracket};

use crate::cubic::{cubic_discriminants, lambdas, stationary_points, CubicDiscriminants, LambdaSet, StationaryProfile};
use crate::interval::Interval;
use crate::poly::{QuarticCoeffs, Sign};
use crate::resolvent::{double_tangent, eta_theta, markers, resolvent_chain, EtaTheta, MarkerSet, ResolventChain};
use crate::surd::QuadSurd;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Cubic,
    Quadratic,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Cubic => "cubic",
            Tier::Quadratic => "quadratic",
        }
    }
}

/// A root, or for the quadratic tier an interval holding an odd number of roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootEntry {
    pub interval: Interval,
    pub sign: Sign,
    /// Exact multiplicity (cubic tier only).
    pub multiplicity: Option<u32>,
    /// Upper bound on distinct roots inside (always 1 in the cubic tier).
    pub max_roots: u32,
}

/// An interval that may hold roots, at most `max_roots` of them.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbiguousGap {
    pub interval: Interval,
    pub max_roots: u32,
    /// The count is even (the ends share a sign and roots are simple).
    pub even: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub tier: Tier,
    /// Number of distinct real roots when the tier decides it.
    pub count: Option<usize>,
    pub possible_counts: Vec<usize>,
    pub roots: Vec<RootEntry>,
    pub ambiguous: Vec<AmbiguousGap>,
    /// Whether the quartic may have a repeated root (relaxes parity arguments).
    pub repeated_root_possible: bool,
}

impl RootReport {
    /// Total multiplicity of the isolated roots (cubic tier).
    pub fn total_multiplicity(&self) -> Option<u32> {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Everything computed for one quartic.
#[derive(Clone, Debug)]
pub struct Classification {
    pub coeffs: QuarticCoeffs,
    pub label: CaseLabel,
    pub chain: ResolventChain,
    pub discriminants: CubicDiscriminants,
    pub markers: MarkerSet,
    pub double_tangent: Option<(QuadSurd, QuadSurd)>,
    pub eta_theta: Option<EtaTheta>,
    pub profile: StationaryProfile,
    pub stationary_brackets: Vec<StationaryBracket>,
    pub lambdas: LambdaSet,
    pub special_tangents: Vec<SpecialTangent>,
    pub cubic: RootReport,
    pub quadratic: RootReport,
}

pub fn classify(f: &QuarticCoeffs) -> Classification {
    let profile = stationary_points(f);
    let lambdas = lambdas(f);
    let tangents = special_tangents(f, &profile);
    let cubic = cubic_tier::cubic_tier(f, &profile, &lambdas, &tangents);
    let markers = markers(&f.a, &f.b, &f.c);
    Classification {
        coeffs: f.clone(),
        label: label::label_from(f, &markers, &tangents),
        chain: resolvent_chain(f),
        discriminants: cubic_discriminants(f),
        double_tangent: double_tangent(&f.a, &f.b),
        eta_theta: eta_theta(&f.a, &f.b),
        stationary_brackets: stationary_isolation(f),
        quadratic: classify_quadratic_tier(f),
        markers,
        profile,
        lambdas,
        special_tangents: tangents,
        cubic,
    }
}
