use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use pathspec::poly::{
    chebyshev_u, compose_u_neg_half, cycle_recursion_check, eval_exact, path_charpoly,
    path_charpoly_recursive, path_charpoly_table, GaussianRational, IntPolynomial,
};
use pathspec::seq::{binomial, fib_binomial_identity_check, fibonacci, fibonacci_table, pell};

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn path_minus_t(n: usize, t: i64) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(-t)
                    } else if i.abs_diff(j) == 1 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn closed_form_recurrence_and_substitution_agree() {
    let table = path_charpoly_table(500);
    for n in 1..=500 {
        let closed = path_charpoly(n).unwrap();
        assert_eq!(closed, table[n - 1], "table n={n}");
        if n % 25 == 0 || n < 40 {
            assert_eq!(
                closed,
                path_charpoly_recursive(n).unwrap(),
                "recursive n={n}"
            );
            assert_eq!(closed, compose_u_neg_half(n).unwrap(), "substitution n={n}");
        }
    }
}

#[test]
fn parity_of_path_polynomials() {
    for (i, f) in path_charpoly_table(500).iter().enumerate() {
        let n = i + 1;
        let expected = if n % 2 == 0 { f.clone() } else { -f };
        assert_eq!(f.reflect(), expected, "n={n}");
        assert_eq!(f.degree(), n);
        assert_eq!(
            f.leading(),
            if n % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        );
    }
}

#[test]
fn determinant_oracle_small_orders() {
    for n in 1..=12 {
        let f = path_charpoly(n).unwrap();
        for t in -4..=4 {
            assert_eq!(
                f.eval(&BigInt::from(t)),
                bareiss_det(path_minus_t(n, t)),
                "n={n} t={t}"
            );
        }
    }
}

#[test]
fn eval_at_two_matches_integer_horner() {
    for f in path_charpoly_table(300) {
        let mut acc = BigInt::zero();
        for c in f.coeffs().iter().rev() {
            acc = acc * 2 + c;
        }
        let z = GaussianRational::from_integer(BigInt::from(2));
        assert_eq!(eval_exact(&f, &z), GaussianRational::from_integer(acc));
    }
}

#[test]
fn cycle_recursion_in_monic_convention() {
    for n in 3..=200 {
        let r = cycle_recursion_check(n).unwrap();
        assert!(r.passed, "n={n}: {:?}", r.witnesses);
    }
}

#[test]
fn sequence_recurrences_and_identity() {
    let fib = fibonacci_table(5001);
    for n in 2..=5000 {
        assert_eq!(fib[n], &fib[n - 1] + &fib[n - 2]);
    }
    for n in (2..=400).chain((401..=5000).step_by(131)).chain([5000]) {
        assert_eq!(fibonacci(n), fib[n], "n={n}");
        assert_eq!(pell(n), pell(n - 1) * 2 + pell(n - 2), "n={n}");
    }
    for k in 0..=500 {
        assert!(fib_binomial_identity_check(k).passed, "k={k}");
    }
}

/// `f_n(a + bi)` by the three-term recurrence over Gaussian integers.
fn recurrence_value(n: usize, a: i64, b: i64) -> (BigInt, BigInt) {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    // f_{-1} = 0, f_0 = 1
    let mut prev = (BigInt::zero(), BigInt::zero());
    let mut cur = (BigInt::one(), BigInt::zero());
    for _ in 0..n {
        let next = (
            -(&a * &cur.0 - &b * &cur.1) - &prev.0,
            -(&a * &cur.1 + &b * &cur.0) - &prev.1,
        );
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

proptest! {
    #[test]
    fn gaussian_evaluation_matches_recurrence(n in 1usize..150, a in -5i64..=5, b in -5i64..=5) {
        let f = path_charpoly(n).unwrap();
        let z = GaussianRational::new(BigInt::from(a).into(), BigInt::from(b).into());
        let (re, im) = recurrence_value(n, a, b);
        prop_assert_eq!(eval_exact(&f, &z), GaussianRational::new(re.into(), im.into()));
    }

    #[test]
    fn chebyshev_u_relation(n in 1usize..200, x in -20i64..=20) {
        // f_n(x) = U_n(-x/2), compared at even integers to stay integral
        let f = path_charpoly(n).unwrap();
        let u = chebyshev_u(n);
        prop_assert_eq!(f.eval(&BigInt::from(2 * x)), u.eval(&BigInt::from(-x)));
    }

    #[test]
    fn pascal_rule(n in 1u64..300, k in 1u64..300) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn coefficient_text_round_trips(coeffs in prop::collection::vec(-1000i64..1000, 0..12)) {
        let p = IntPolynomial::from_i64s(&coeffs);
        let back: IntPolynomial = p.to_coeff_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert!(p.coeffs().last().is_none_or(|c| !c.is_zero()));
        prop_assert!(p.content().is_zero() || p.content().is_positive());
    }
}
