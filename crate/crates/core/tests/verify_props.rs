use num_bigint::BigInt;
use num_rational::BigRational;

use pathspec::verify::{
    boundary_residual, conjecture_suite, containment_check, eq1_monotonicity_check, eq1_sum,
    imaginary_root_check, real_count_conjecture_check, VerificationReport,
};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn assert_all(reports: impl IntoIterator<Item = VerificationReport>) {
    for r in reports {
        assert!(
            r.passed,
            "{}: {:?} {:?}",
            r.check_name, r.subject, r.witnesses
        );
        assert!(!r.witnesses.is_empty());
    }
}

#[test]
fn imaginary_roots_unique_over_samples() {
    let samples = [q(1, 2), q(-1, 2), q(2, 1), q(-2, 1), q(3, 2), q(-3, 2)];
    assert_all((1..=50).map(|k| imaginary_root_check(k, &samples).unwrap()));
}

#[test]
fn eq1_sum_is_monotone() {
    let points = [
        q(0, 1),
        q(1, 2),
        q(-1, 2),
        q(1, 1),
        q(-1, 1),
        q(3, 2),
        q(-3, 2),
        q(2, 1),
        q(-2, 1),
    ];
    for k in 1..=50 {
        assert_all(points.iter().map(|a| eq1_monotonicity_check(k, a).unwrap()));
        // the j = 2k term is 1 for every a
        assert_eq!(eq1_sum(k, &q(0, 1)), q(1, 1));
    }
}

#[test]
fn real_counts_for_fibonacci_shift() {
    assert_all((1..=60).map(|n| real_count_conjecture_check(n).unwrap()));
}

#[test]
fn containment_for_multiples_of_four() {
    assert_all(
        (4..=64)
            .step_by(4)
            .map(|n| containment_check(n, 1e-9).unwrap()),
    );
    // other n are reported without being asserted
    let r = containment_check(7, 1e-9).unwrap();
    assert!(!r.asserted && r.ok());
}

#[test]
fn boundary_residual_shrinks_with_n() {
    let values: Vec<f64> = [20, 40, 80, 160]
        .iter()
        .map(|&n| boundary_residual(n).unwrap())
        .collect();
    for w in values.windows(2) {
        assert!(w[1] <= 1.1 * w[0], "{values:?}");
    }
    assert!(boundary_residual(100).unwrap() <= 1e-2);
    assert!(boundary_residual(200).unwrap() <= boundary_residual(100).unwrap());
}

#[test]
fn conjecture_suite_reports_every_n_in_order() {
    let reports = conjecture_suite(13);
    assert_eq!(reports.len(), 13);
    for (i, r) in reports.iter().enumerate() {
        assert_eq!(r.subject["n"], i + 1);
        assert!(r.passed, "{:?}", r.witnesses);
        assert_eq!(r.witnesses["im_bound_asserted"], (i + 1) % 4 == 0);
    }
    let fit13 = &reports[12].witnesses["fit"];
    assert!(fit13["a_tilde"].as_f64().unwrap() < 5f64.sqrt() + 0.2);
    assert!(fit13["b_tilde"].as_f64().unwrap() < 1.2);
    assert!(reports[0].witnesses["fit"]["error"].is_string());
    assert!(reports[1].witnesses["fit"]["error"].is_string());
}
