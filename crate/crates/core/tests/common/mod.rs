use quartic_core::rational::Rational;
use quartic_core::QuarticCoeffs;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rational in `[-max, max]` with denominator at most `max_den`.
pub fn random_rational(rng: &mut impl Rng, max: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-max * den..=max * den);
    Rational::new(num.into(), den.into())
}

pub fn random_quartics(seed: u64, n: usize, max: i64, max_den: i64) -> Vec<QuarticCoeffs> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut r = || random_rational(&mut rng, max, max_den);
            QuarticCoeffs::new(r(), r(), r(), r())
        })
        .collect()
}

/// Every small-integer quartic in a box; rich in exact ties and repeated roots.
pub fn integer_box(r: i64) -> Vec<QuarticCoeffs> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    out.push(QuarticCoeffs::from_ints(a, b, c, d));
                }
            }
        }
    }
    out
}
