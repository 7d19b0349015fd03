//! Exact integer sequences: Fibonacci (`F_0 = 0, F_1 = 1`), Pell
//! (`P_0 = 0, P_1 = 1, P_n = 2P_{n-1} + P_{n-2}`) and binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::verify::{bigint_value, Tolerance, VerificationReport};

/// Two-term linear recurrence `x_n = m * x_{n-1} + x_{n-2}` from `(0, 1)`.
fn lucas_sequence(n: usize, m: u32) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * m + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn fibonacci(n: usize) -> BigInt {
    lucas_sequence(n, 1)
}

pub fn pell(n: usize) -> BigInt {
    lucas_sequence(n, 2)
}

/// `F_0, ..., F_{len-1}`.
pub fn fibonacci_table(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..len {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    out
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Checks `F_{4k+1} = sum_{j=0}^{2k} C(4k-j, j)` exactly.
pub fn fib_binomial_identity_check(k: u64) -> VerificationReport {
    let m = 4 * k;
    let mut term = BigInt::one();
    let mut sum = BigInt::zero();
    for j in 0..=2 * k {
        sum += &term;
        // C(m-j-1, j+1) = C(m-j, j) (m-2j)(m-2j-1) / ((j+1)(m-j))
        if j < 2 * k {
            term = term * ((m - 2 * j) * (m - 2 * j - 1)) / ((j + 1) * (m - j));
        }
    }
    let fib = fibonacci((4 * k + 1) as usize);
    let passed = sum == fib;
    VerificationReport::new("fib_binomial_identity", Tolerance::Exact)
        .subject("k", k)
        .witness("binomial_sum", bigint_value(&sum))
        .witness("fibonacci", bigint_value(&fib))
        .finish(passed)
}
