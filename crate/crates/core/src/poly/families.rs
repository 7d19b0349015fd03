use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::det::{charpoly_from_adjacency, cycle_adjacency};
use super::{GaussianRational, IntPolynomial};
use crate::seq::{binomial, fibonacci, fibonacci_table};
use crate::verify::{bigint_value, Tolerance, VerificationReport};
use crate::{Error, Result};

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(format!("{what} requires n >= 1")))
    } else {
        Ok(())
    }
}

/// `f_n(λ) = det(A(P_n) - λI)` from the closed formula
/// `Σ_k (-1)^(n+k) C(n-k, k) λ^(n-2k)`.
pub fn path_charpoly(n: usize) -> Result<IntPolynomial> {
    require_positive(n, "path_charpoly")?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = binomial((n - k) as u64, k as u64);
        coeffs[n - 2 * k] = if (n + k).is_multiple_of(2) { c } else { -c };
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `f_n` from `f_n = -λ f_{n-1} - f_{n-2}` seeded with `f_1 = -λ`, `f_2 = λ² - 1`.
pub fn path_charpoly_recursive(n: usize) -> Result<IntPolynomial> {
    require_positive(n, "path_charpoly_recursive")?;
    Ok(path_charpoly_table(n).pop().expect("table has n entries"))
}

/// `[f_1, ..., f_n]` by the three-term recurrence.
pub fn path_charpoly_table(n: usize) -> Vec<IntPolynomial> {
    let neg_lambda = IntPolynomial::from_i64s(&[0, -1]);
    let mut out: Vec<IntPolynomial> = Vec::with_capacity(n);
    for m in 1..=n {
        let next = match m {
            1 => neg_lambda.clone(),
            2 => IntPolynomial::from_i64s(&[-1, 0, 1]),
            _ => &(&neg_lambda * &out[m - 2]) - &out[m - 3],
        };
        out.push(next);
    }
    out
}

/// `det(A(C_n) - λI)` computed from the cycle's adjacency matrix.
pub fn cycle_charpoly(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle_charpoly requires n >= 3, got {n}"
        )));
    }
    Ok(charpoly_from_adjacency(&cycle_adjacency(n)))
}

fn chebyshev(n: usize, second: &IntPolynomial) -> IntPolynomial {
    let two_x = IntPolynomial::from_i64s(&[0, 2]);
    let (mut prev, mut cur) = (IntPolynomial::constant(1), second.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = x`.
pub fn chebyshev_t(n: usize) -> IntPolynomial {
    chebyshev(n, &IntPolynomial::from_i64s(&[0, 1]))
}

/// Chebyshev polynomial of the second kind, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(n: usize) -> IntPolynomial {
    chebyshev(n, &IntPolynomial::from_i64s(&[0, 2]))
}

/// `U_n(-x/2)` computed over the rationals; every coefficient must come out
/// integral or the substitution fails with [`Error::NonIntegral`].
pub fn compose_u_neg_half(n: usize) -> Result<IntPolynomial> {
    require_positive(n, "compose_u_neg_half")?;
    let u = chebyshev_u(n);
    let neg_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut scale = BigRational::one();
    let mut coeffs = Vec::with_capacity(u.coeffs().len());
    for (m, c) in u.coeffs().iter().enumerate() {
        let v = BigRational::from_integer(c.clone()) * &scale;
        if !v.is_integer() {
            return Err(Error::NonIntegral {
                degree: m,
                value: v.to_string(),
            });
        }
        coeffs.push(v.to_integer());
        scale *= &neg_half;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `[U_0(-i/2), ..., U_n(-i/2)]` by running the Chebyshev recurrence directly
/// in Gaussian-rational arithmetic.
pub fn u_at_neg_half_i(n: usize) -> Vec<GaussianRational> {
    let x = GaussianRational::imaginary(BigRational::new((-1).into(), 2.into()));
    let two_x = &x + &x;
    let mut out = Vec::with_capacity(n + 1);
    out.push(GaussianRational::one());
    if n >= 1 {
        out.push(two_x.clone());
    }
    for m in 2..=n {
        let next = &(&two_x * &out[m - 1]) - &out[m - 2];
        out.push(next);
    }
    out
}

fn lemma_report(n: usize, value: &GaussianRational, fib: &BigInt) -> VerificationReport {
    let expected =
        GaussianRational::i_pow(3 * n as u64).scale(&BigRational::from_integer(fib.clone()));
    let passed = *value == expected;
    VerificationReport::new("lemma_fib", Tolerance::Exact)
        .subject("n", n)
        .witness("u_n_at_neg_half_i", Value::String(value.to_string()))
        .witness("expected", Value::String(expected.to_string()))
        .witness("fibonacci_n_plus_1", bigint_value(fib))
        .finish(passed)
}

/// Checks `U_n(-i/2) = i^(3n) F_{n+1}` exactly.
pub fn lemma_fib_check(n: usize) -> VerificationReport {
    let values = u_at_neg_half_i(n);
    lemma_report(n, &values[n], &fibonacci(n + 1))
}

/// [`lemma_fib_check`] for every `1 <= n <= n_max`, sharing one recurrence run.
pub fn lemma_fib_sweep(n_max: usize) -> Vec<VerificationReport> {
    let values = u_at_neg_half_i(n_max);
    let fib = fibonacci_table(n_max + 2);
    (1..=n_max)
        .map(|n| lemma_report(n, &values[n], &fib[n + 1]))
        .collect()
}

/// Tests the cycle recursion `p_n^cyc = p_n - p_{n-2} - 2` against the
/// determinant, where `p = (-1)^n det(A - λI)` is the monic convention. The
/// literal form in the `det(A - λI)` convention is recorded as a witness; it
/// holds only for even `n`.
pub fn cycle_recursion_check(n: usize) -> Result<VerificationReport> {
    let direct = cycle_charpoly(n)?;
    let f_n = path_charpoly(n)?;
    let f_n2 = path_charpoly(n - 2)?;
    let two = BigInt::from(2);

    let sign = |p: &IntPolynomial| if n.is_multiple_of(2) { p.clone() } else { -p };
    let monic_direct = sign(&direct);
    let monic_recursion = (&sign(&f_n) - &sign(&f_n2)).shift_constant(&two);
    let literal = (&f_n - &f_n2).shift_constant(&two);

    let passed = monic_direct == monic_recursion;
    let mut report = VerificationReport::new("cycle_recursion", Tolerance::Exact)
        .subject("n", n)
        .subject("convention", "monic det(λI - A)")
        .witness("determinant", direct.to_coeff_string())
        .witness("monic_recursion", monic_recursion.to_coeff_string())
        .witness("literal_form_holds", literal == direct);
    if !passed {
        let diff = &monic_direct - &monic_recursion;
        report.push_witness("difference", diff.to_coeff_string());
        report.push_witness(
            "max_abs_difference",
            bigint_value(
                &diff
                    .coeffs()
                    .iter()
                    .map(Signed::abs)
                    .max()
                    .unwrap_or_default(),
            ),
        );
    }
    Ok(report.finish(passed))
}

/// The recursion `f_n^cyc = f_n - f_{n-2} - 2` read literally in the
/// `det(A - λI)` convention. It fails for every odd `n`.
pub fn cycle_recursion_literal_check(n: usize) -> Result<VerificationReport> {
    let direct = cycle_charpoly(n)?;
    let literal = (&path_charpoly(n)? - &path_charpoly(n - 2)?).shift_constant(&BigInt::from(2));
    let passed = direct == literal;
    let mut report = VerificationReport::new("cycle_recursion_literal", Tolerance::Exact)
        .subject("n", n)
        .subject("convention", "det(A - λI)")
        .witness("determinant", direct.to_coeff_string())
        .witness("literal_recursion", literal.to_coeff_string());
    if !passed {
        report.push_witness("difference", (&direct - &literal).to_coeff_string());
    }
    Ok(report.finish(passed))
}
