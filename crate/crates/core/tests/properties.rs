use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use virasoro_o::arith::{rat, solve_line_integer_points, Rational};
use virasoro_o::block::{build_line, classify, enumerate_weights, precedes, weight_hc, BlockDescriptor, WeightHC};
use virasoro_o::homology::{ext_simple_simple, pf_identity_check};

fn q(n: i64, d: i64) -> Rational {
    rat(n, d)
}

/// `h² - S h + P`, whose roots are the Kac weights `h_{r,s}` and `h_{s,r}` at central charge `c`.
fn kac_polynomial(h: &Rational, c: &Rational, r: i64, s: i64) -> Rational {
    let sigma = (q(13, 1) - c) / q(6, 1);
    let (a, b) = (q(r * r - 1, 1), q(s * s - 1, 1));
    let cc = q(2 - 2 * r * s, 1);
    let sum = ((q(r * r + s * s - 2, 1)) * &sigma + q(4 - 4 * r * s, 1)) / q(4, 1);
    let prod = (&a * &b * (&sigma * &sigma - q(2, 1)) + &a * &a + &b * &b + &cc * &sigma * (&a + &b) + &cc * &cc)
        / q(16, 1);
    h * h - sum * h + prod
}

/// `c` and `h_{r,s}` for the rational parameter `t`.
fn kac_weight(t: &Rational, r: i64, s: i64) -> WeightHC {
    let one = q(1, 1);
    let c = q(13, 1) - q(6, 1) * (t + &one / t);
    let x = q(r, 1) * t - q(s, 1);
    let y = t - &one;
    let h = (&x * &x - &y * &y) / (q(4, 1) * t);
    WeightHC::new(h, c)
}

fn rational_t() -> impl Strategy<Value = BigRational> {
    (1i64..6, 1i64..6).prop_map(|(n, d)| q(n, d))
}

fn blocks() -> Vec<BlockDescriptor> {
    vec![
        classify(&weight_hc((0, 1), (0, 1)), 24).unwrap(),
        classify(&weight_hc((1, 1), (1, 1)), 24).unwrap(),
        classify(&weight_hc((1, 1), (26, 1)), 24).unwrap(),
        classify(&weight_hc((0, 1), (2, 1)), 8).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn line_points_are_kac_zeros(t in rational_t(), r in 1i64..5, s in 1i64..5, window in 4u64..16) {
        let w = kac_weight(&t, r, s);
        let mut found = 0;
        for line in build_line(&w) {
            let Some(beta) = line.beta.as_ref() else { continue };
            let pts = solve_line_integer_points(&line.nu, beta, window).unwrap();
            for (pr, ps) in &pts.points {
                let (pr, ps) = (i64::try_from(pr).unwrap(), i64::try_from(ps).unwrap());
                prop_assert!(kac_polynomial(&w.h, &w.c, pr, ps).is_zero(), "({pr}, {ps}) on {w}");
                found += 1;
            }
        }
        prop_assert!(found > 0);
    }

    #[test]
    fn classification_is_window_stable(t in rational_t(), r in 1i64..4, s in 1i64..4) {
        let w = kac_weight(&t, r, s);
        if let Ok(small) = classify(&w, 8) {
            let large = classify(&w, 24).unwrap();
            prop_assert_eq!(&small.kind, &large.kind);
            prop_assert_eq!(small.boundary, large.boundary);
            for x in &small.weights {
                prop_assert!(large.contains(x), "{} missing at window 24", x);
            }
        }
    }

    #[test]
    fn order_is_a_partial_order(bi in 0usize..4, i in 0usize..40, j in 0usize..40, k in 0usize..40) {
        let b = &blocks()[bi];
        let ws = enumerate_weights(b, 4).unwrap();
        let (x, y, z) = (&ws[i % ws.len()], &ws[j % ws.len()], &ws[k % ws.len()]);
        prop_assert!(precedes(b, x, x).unwrap());
        if precedes(b, x, y).unwrap() && precedes(b, y, x).unwrap() {
            prop_assert_eq!(x, y);
        }
        if precedes(b, x, y).unwrap() && precedes(b, y, z).unwrap() {
            prop_assert!(precedes(b, x, z).unwrap());
        }
    }

    #[test]
    fn ext_is_symmetric_and_parity_graded(bi in 0usize..4, i in 0usize..40, j in 0usize..40, n in 0u64..9) {
        let b = &blocks()[bi];
        let ws = enumerate_weights(b, 4).unwrap();
        let (x, y) = (&ws[i % ws.len()], &ws[j % ws.len()]);
        let e = ext_simple_simple(b, x, y, n).unwrap();
        prop_assert_eq!(e, ext_simple_simple(b, y, x, n).unwrap());
        if (n as i64 - (x.level - y.level)).rem_euclid(2) == 1 {
            prop_assert_eq!(e, 0);
        }
        prop_assert!(pf_identity_check(b, x, y, n).unwrap());
    }
}
