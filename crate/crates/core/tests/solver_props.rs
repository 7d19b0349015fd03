mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use pathspec::roots::{count_numerically_real, real_root_count_exact, solve, SolveConfig};
use pathspec::seq::{fibonacci, pell};

use common::{problem, residual_violations, unpaired_conjugate, vieta_errors, zero_root_error};

fn constants(n: usize) -> Vec<BigInt> {
    let (f, p) = (fibonacci(n + 1), pell(n + 1));
    vec![BigInt::from(0), f.clone(), -f, p.clone(), -p]
}

#[test]
fn numeric_real_roots_match_exact_count() {
    let cfg = SolveConfig::default();
    for n in 1..=60 {
        for c in constants(n) {
            let prob = problem(n, c.clone());
            let roots = solve(&prob, &cfg).unwrap();
            let exact = real_root_count_exact(&prob);
            assert!(!roots.has_repeated_roots(), "n={n} c={c}");
            assert_eq!(
                count_numerically_real(&roots, 1e-9),
                exact.count,
                "n={n} c={c}"
            );
        }
    }
}

#[test]
fn zero_shift_matches_cosine_formula() {
    let cfg = SolveConfig::default();
    for n in 1..=60 {
        let roots = solve(&problem(n, 0), &cfg).unwrap();
        assert!(zero_root_error(n, &roots) <= 1e-10, "n={n}");
    }
}

#[test]
fn repeated_roots_keep_invariants() {
    // λ² - 1 = -1 has the double root 0
    let prob = problem(2, -1);
    let roots = solve(&prob, &SolveConfig::default()).unwrap();
    assert!(roots.has_repeated_roots());
    assert_eq!(roots.len(), 2);
    assert!(residual_violations(&prob, &roots).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vieta_conjugates_and_residuals(n in 1usize..80, pick in 0usize..6, small in -50i64..50) {
        let c = if pick < 5 { constants(n)[pick].clone() } else { BigInt::from(small) };
        let prob = problem(n, c);
        let roots = solve(&prob, &SolveConfig::default()).unwrap();
        prop_assert_eq!(roots.len(), n);

        let (sum_err, prod_err) = vieta_errors(&prob, &roots);
        prop_assert!(sum_err <= 1e-9, "sum error {}", sum_err);
        prop_assert!(prod_err <= 1e-9, "product error {}", prod_err);

        let points = roots.to_points();
        prop_assert_eq!(unpaired_conjugate(&points, 1e-9), None);
        prop_assert!(residual_violations(&prob, &roots).is_empty());
        prop_assert!(roots.residual_bound() <= 1e-12);

        for w in points.windows(2) {
            prop_assert!(w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 <= w[1].1));
        }
    }

    #[test]
    fn solving_is_deterministic(n in 1usize..40, c in -100i64..100) {
        let prob = problem(n, c);
        let cfg = SolveConfig::default();
        let a = solve(&prob, &cfg).unwrap();
        let b = solve(&prob, &cfg).unwrap();
        prop_assert_eq!(a.roots(), b.roots());
        prop_assert_eq!(a.precision_bits(), b.precision_bits());
    }
}
