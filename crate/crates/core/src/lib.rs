//! Exact classification of the real roots of monic quartics
//! `x^4 + a x^3 + b x^2 + c x + d` with rational coefficients.
//!
//! The cubic tier isolates every real root between landmarks built from the
//! stationary points and level points; the quadratic tier works from square-root
//! landmarks only and reports what it can guarantee. A Sturm-sequence oracle
//! checks both.
//!
//! ```
//! use quartic_core::{classify, verify_report, QuarticCoeffs};
//!
//! let f = QuarticCoeffs::from_ints(1, -3, -1, 1);
//! let c = classify(&f);
//! assert_eq!(c.cubic.count, Some(4));
//! assert_eq!(c.label.to_string(), "1.11(ii)");
//! assert!(verify_report(&f, &c.cubic).passed());
//! ```

pub mod classifier;
pub mod cubic;
pub mod error;
pub mod interval;
pub mod locus;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod resolvent;
pub mod surd;
pub mod tunes;

pub use classifier::roman as roman_numeral;
pub use classifier::{
    case_label, classify, classify_cubic_tier, classify_quadratic_tier, AmbiguousGap, CaseLabel, Classification, RootEntry, RootReport,
    StationaryBracket, Tier,
};
pub use cubic::{cubic_discriminants, lambdas, solve_cubic_real, stationary_points, CertifiedRoot, ProfileKind, StationaryProfile};
pub use error::{Error, Result};
pub use interval::{Bound, Endpoint, Interval, Window};
pub use oracle::{count_roots_in, sturm_chain, verify_report, SturmChain, Verdict};
pub use poly::{depress, eval_quartic, DepressedQuartic, Poly, QuarticCoeffs, Sign};
pub use rational::{parse_rational, Rational};
pub use resolvent::{double_tangent, eta_theta, markers, resolvent_chain, MarkerSet, Regime, ResolventChain};
pub use surd::{surd_sign, QuadSurd};
pub use tunes::{tune_of, tune_of_tier, Tune};
