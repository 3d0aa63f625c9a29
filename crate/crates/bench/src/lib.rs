//! Shared inputs for the criterion benches.

use quartic_core::{QuarticCoeffs, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The fixed quartics exercised by name in the benches.
pub fn named() -> Vec<(&'static str, QuarticCoeffs)> {
    vec![
        ("four_roots", QuarticCoeffs::from_ints(1, -3, -1, 1)),
        ("three_stationary", QuarticCoeffs::from_ints(1, -5, -1, 1)),
        ("quadruple", QuarticCoeffs::from_ints(-4, 6, -4, 1)),
        ("no_roots", QuarticCoeffs::from_ints(0, 1, 0, 1)),
    ]
}

/// Seeded random quartics, coefficients in `[-10, 10]` with denominators up to 16.
pub fn corpus(seed: u64, n: usize) -> Vec<QuarticCoeffs> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || {
        let den = rng.gen_range(1..=16i64);
        let num = rng.gen_range(-10 * den..=10 * den);
        Rational::new(num.into(), den.into())
    };
    (0..n).map(|_| QuarticCoeffs::new(draw(), draw(), draw(), draw())).collect()
}
