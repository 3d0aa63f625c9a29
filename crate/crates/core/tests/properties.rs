use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use quartic_core::oracle::sturm_chain_of;
use quartic_core::rational::{simplest_between, Rational};
use quartic_core::{classify, classify_quadratic_tier, solve_cubic_real, Poly, QuadSurd, QuarticCoeffs, Sign};

fn rational(max: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(move |d| (-max * d..=max * d).prop_map(move |n| Rational::new(n.into(), d.into())))
}

fn quartic() -> impl Strategy<Value = QuarticCoeffs> {
    (rational(10, 16), rational(10, 16), rational(10, 16), rational(10, 16)).prop_map(|(a, b, c, d)| QuarticCoeffs::new(a, b, c, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(20, 12), 1..=max_deg + 1).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sign_at_matches_eval(p in poly(6), x in rational(30, 40)) {
        prop_assert_eq!(p.sign_at(&x), Sign::of(&p.eval(&x)));
    }

    #[test]
    fn certified_sign_is_sound(p in poly(5), a in rational(5, 8), w in rational(1, 64)) {
        let (lo, hi) = (a.clone(), &a + w.abs());
        if let Some(s) = p.certified_sign(&lo, &hi) {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            for x in [&lo, &mid, &hi] {
                prop_assert_eq!(p.sign_at(x), s);
            }
        }
        let (elo, ehi) = p.range_enclosure(&lo, &hi);
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        for x in [&lo, &mid, &hi] {
            let v = p.eval(x);
            prop_assert!(elo <= v && v <= ehi);
        }
    }

    #[test]
    fn gcd_recovers_common_factor(p in poly(3), q in poly(3), r in poly(2)) {
        prop_assume!(!p.is_zero() && !q.is_zero() && !r.is_zero());
        let g = (&p * &r).gcd(&(&q * &r));
        // r divides the gcd, and the gcd divides both products
        prop_assert!(g.div_rem(&r).1.is_zero());
        prop_assert!((&p * &r).div_rem(&g).1.is_zero());
        prop_assert!((&q * &r).div_rem(&g).1.is_zero());
    }

    #[test]
    fn simplest_between_is_simplest(a in rational(6, 200), w in rational(1, 200)) {
        let (lo, hi) = (a.clone(), &a + w.abs());
        let s = simplest_between(&lo, &hi);
        prop_assert!(lo <= s && s <= hi);
        let den = s.denom().clone();
        let mut d = BigInt::one();
        while d < den {
            // no multiple of 1/d lies in [lo, hi]
            let k = (Rational::from_integer(d.clone()) * &lo).ceil();
            prop_assert!(k > Rational::from_integer(d.clone()) * &hi);
            d += 1;
        }
    }

    #[test]
    fn surd_order_agrees_with_floats(u1 in rational(10, 9), v1 in rational(5, 9), s1 in 0i64..50,
                                    u2 in rational(10, 9), v2 in rational(5, 9), s2 in 0i64..50) {
        let x = QuadSurd::new(u1, v1, Rational::from_integer(s1.into())).unwrap();
        let y = QuadSurd::new(u2, v2, Rational::from_integer(s2.into())).unwrap();
        let ord = x.cmp_exact(&y);
        prop_assert_eq!(y.cmp_exact(&x), ord.reverse());
        prop_assert_eq!(x.cmp_exact(&x), Ordering::Equal);
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(ord, fx.partial_cmp(&fy).unwrap());
        }
        let (lo, hi) = x.bracket(40);
        prop_assert!(x.cmp_rational(&lo) != Ordering::Less && x.cmp_rational(&hi) != Ordering::Greater);
    }

    #[test]
    fn cubic_roots_are_isolated(p3 in rational(5, 6), p2 in rational(10, 6), p1 in rational(10, 6), p0 in rational(10, 6)) {
        prop_assume!(!p3.is_zero());
        let roots = solve_cubic_real(&p3, &p2, &p1, &p0).unwrap();
        let p = Poly::new(vec![p0, p1, p2, p3]);
        let chain = sturm_chain_of(&p);
        prop_assert_eq!(roots.len(), chain.total());
        let mut mult = 0;
        for (i, r) in roots.iter().enumerate() {
            prop_assert_eq!(chain.count_between(Some(&r.lo), Some(&r.hi), true, true).unwrap(), 1);
            if let Some(x) = &r.exact {
                prop_assert!(p.eval(x).is_zero());
            }
            if i > 0 {
                prop_assert!(roots[i - 1].hi < r.lo);
            }
            mult += r.multiplicity;
        }
        let ints: u32 = p.yun().iter().map(|(q, k)| sturm_chain_of(q).total() as u32 * k).sum();
        prop_assert_eq!(mult, ints);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mirror_negates_roots(f in quartic()) {
        let (c, m) = (classify(&f), classify(&f.mirrored()));
        prop_assert_eq!(c.cubic.count, m.cubic.count);
        let xs: Vec<f64> = c.cubic.roots.iter().map(|r| (r.interval.lo.bound.approx() + r.interval.hi.bound.approx()) / 2.0).collect();
        let mut ys: Vec<f64> = m.cubic.roots.iter().map(|r| -(r.interval.lo.bound.approx() + r.interval.hi.bound.approx()) / 2.0).collect();
        ys.reverse();
        // midpoints of unbounded intervals are infinite on both sides alike
        for (x, y) in xs.iter().zip(&ys) {
            prop_assert!(x == y || (x - y).abs() < 1e-6 || x.is_infinite() && y.is_infinite());
        }
        let mult: Vec<_> = c.cubic.roots.iter().map(|r| r.multiplicity).collect();
        let mut mm: Vec<_> = m.cubic.roots.iter().map(|r| r.multiplicity).collect();
        mm.reverse();
        prop_assert_eq!(mult, mm);
    }

    #[test]
    fn quadratic_tier_admits_the_true_count(f in quartic()) {
        let total = quartic_core::sturm_chain(&f).total();
        let q = classify_quadratic_tier(&f);
        prop_assert!(q.possible_counts.contains(&total), "{} not in {:?}", total, q.possible_counts);
        prop_assert!(q.roots.len() <= total);
        prop_assert!(q.possible_counts.iter().all(|&n| n <= 4));
    }

    #[test]
    fn reported_roots_change_sign_or_are_even(f in quartic()) {
        let c = classify(&f);
        let p = f.poly();
        for r in &c.cubic.roots {
            let w = &r.interval.window;
            let k = r.multiplicity.unwrap();
            prop_assert!((1..=4).contains(&k));
            if let (Some(lo), Some(hi), false) = (&w.lo, &w.hi, w.closed) {
                let (sl, sh) = (p.sign_at(lo), p.sign_at(hi));
                if sl != Sign::Zero && sh != Sign::Zero {
                    prop_assert_eq!(k % 2 == 1, sl != sh, "{}", f);
                }
            }
        }
    }
}
