//! Square-free decomposition, used so that repeated roots are solved once and
//! reported with their multiplicity instead of stalling the inclusion test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

const PRIMES: [u64; 3] = [(1 << 61) - 1, 1_000_000_007, 998_244_353];

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, q);
        }
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod b` over `Z/q`, with `b` nonzero and trimmed.
fn rem_mod(mut a: Vec<u64>, b: &[u64], q: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = pow_mod(b[db], q - 2, q);
    while a.len() > db {
        let top = a.len() - 1;
        let t = mul_mod(a[top], inv, q);
        if t != 0 {
            let off = top - db;
            for (k, &bc) in b.iter().enumerate() {
                a[off + k] = (a[off + k] + q - mul_mod(t, bc, q)) % q;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

fn gcd_degree_mod(p: &IntPolynomial, q: u64) -> Option<usize> {
    let modulus = BigInt::from(q);
    let reduce = |c: &BigInt| c.mod_floor(&modulus).to_u64().expect("residue fits in u64");
    let mut a: Vec<u64> = p.coeffs().iter().map(reduce).collect();
    let mut b: Vec<u64> = p.derivative().coeffs().iter().map(reduce).collect();
    // the reduction must keep both degrees for the modular gcd to bound the true one
    if a.last() == Some(&0) || b.is_empty() || b.last() == Some(&0) {
        return None;
    }
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_mod(a, &b, q);
        a = std::mem::replace(&mut b, r);
    }
    Some(a.len() - 1)
}

/// True when `gcd(p, p')` is constant modulo some good prime, which proves
/// `p` square-free. A `false` answer is inconclusive.
pub(crate) fn is_squarefree_fast(p: &IntPolynomial) -> bool {
    PRIMES.iter().any(|&q| gcd_degree_mod(p, q) == Some(0))
}

type RatPoly = Vec<BigRational>;

fn rtrim(mut v: RatPoly) -> RatPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rderiv(p: &RatPoly) -> RatPoly {
    rtrim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(k.into()))
            .collect(),
    )
}

fn rsub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    rtrim(
        (0..n)
            .map(|k| {
                a.get(k).cloned().unwrap_or_else(BigRational::zero)
                    - b.get(k).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect(),
    )
}

fn rdivrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let t = &r[i + db] / &lc;
        for (k, bc) in b.iter().enumerate() {
            r[i + k] -= &t * bc;
        }
        q[i] = t;
    }
    (rtrim(q), rtrim(r))
}

fn rmonic(p: RatPoly) -> RatPoly {
    match p.last().cloned() {
        Some(lc) => p.into_iter().map(|c| c / &lc).collect(),
        None => p,
    }
}

fn rgcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = rdivrem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    rmonic(a)
}

fn rdiv(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (q, r) = rdivrem(a, b);
    debug_assert!(
        r.is_empty(),
        "inexact division in square-free decomposition"
    );
    q
}

fn to_integer_poly(p: &RatPoly) -> IntPolynomial {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPolynomial::new(
        p.iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

/// Yun's algorithm over the rationals: `p = c · Π a_i^i` with each `a_i`
/// square-free and pairwise coprime. Returns the nonconstant `(a_i, i)`.
pub(crate) fn squarefree_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let f: RatPoly = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let fp = rderiv(&f);
    let a0 = rgcd(&f, &fp);
    let mut b = rdiv(&f, &a0);
    let c = rdiv(&fp, &a0);
    let mut d = rsub(&c, &rderiv(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = rgcd(&b, &d);
        b = rdiv(&b, &a);
        let c = rdiv(&d, &a);
        d = rsub(&c, &rderiv(&b));
        if a.len() > 1 {
            out.push((to_integer_poly(&a), i));
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn detects_squarefree() {
        assert!(is_squarefree_fast(&p(&[-1, 0, 1])));
        assert!(!is_squarefree_fast(&p(&[0, 0, 1])));
        // (x - 1)^2 (x + 2)
        assert!(!is_squarefree_fast(&p(&[2, -3, 0, 1])));
    }

    #[test]
    fn yun_factors() {
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let f = squarefree_decomposition(&p(&[2, -3, 0, 1]));
        assert_eq!(f, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        // 3 x^2
        let f = squarefree_decomposition(&p(&[0, 0, 3]));
        assert_eq!(f, vec![(p(&[0, 1]), 2)]);
        // square-free input comes back whole
        let f = squarefree_decomposition(&p(&[-1, 0, 2]));
        assert_eq!(f, vec![(p(&[-1, 0, 2]), 1)]);
    }
}
