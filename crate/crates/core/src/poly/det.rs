//! `det(A - λI)` for undirected graphs straight from the adjacency matrix.
//! The characteristic polynomial is computed modulo word-sized primes by
//! reduction to Hessenberg form, then lifted by the Chinese remainder theorem
//! past a Hadamard-type bound on the coefficients.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rug::Integer;

use super::IntPolynomial;
/// Symmetric 0/1 adjacency matrix stored as neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    neighbours: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut neighbours = vec![Vec::new(); n];
        for &(a, b) in edges {
            assert!(
                a < n && b < n && a != b,
                "bad edge ({a}, {b}) for {n} vertices"
            );
            if !neighbours[a].contains(&b) {
                neighbours[a].push(b);
                neighbours[b].push(a);
            }
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Self { neighbours }
    }

    pub fn order(&self) -> usize {
        self.neighbours.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    /// Dense 0/1 matrix, row-major.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut m = vec![vec![0; n]; n];
        for (i, list) in self.neighbours.iter().enumerate() {
            for &j in list {
                m[i][j] = 1;
            }
        }
        m
    }
}

/// Path `v_0 - v_1 - ... - v_{n-1}`.
pub fn path_adjacency(n: usize) -> Adjacency {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Adjacency::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_adjacency(n: usize) -> Adjacency {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Adjacency::from_edges(n, &edges)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Coefficients of `det(xI - A) mod p`, lowest degree first.
fn charpoly_mod(adj: &Adjacency, p: u64) -> Vec<u64> {
    let n = adj.order();
    let mut h: Vec<Vec<u64>> = adj
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as u64).collect())
        .collect();

    // similarity transforms to upper Hessenberg form
    for m in 1..n {
        let Some(i) = (m..n).find(|&r| h[r][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in &mut h {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for r in m + 1..n {
            if h[r][m - 1] == 0 {
                continue;
            }
            let u = mul_mod(h[r][m - 1], inv, p);
            let (upper, lower) = h.split_at_mut(r);
            for (x, &y) in lower[0].iter_mut().zip(&upper[m]) {
                *x = (*x + p - mul_mod(u, y, p)) % p;
            }
            for row in &mut h {
                let add = mul_mod(u, row[r], p);
                row[m] = (row[m] + add) % p;
            }
        }
    }

    // chars[k] = charpoly of the leading k×k block
    let mut chars: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &chars[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - mul_mod(h[m][m], c, p)) % p;
        }
        let mut sub_prod = 1u64;
        for i in (0..m).rev() {
            sub_prod = mul_mod(sub_prod, h[i + 1][i], p);
            if sub_prod == 0 {
                break;
            }
            let w = mul_mod(h[i][m], sub_prod, p);
            if w == 0 {
                continue;
            }
            for (d, &c) in chars[i].iter().enumerate() {
                next[d] = (next[d] + p - mul_mod(w, c, p)) % p;
            }
        }
        chars.push(next);
    }
    chars.pop().unwrap_or_default()
}

/// Bits needed for `2 max_k |coeff_k| + 1`: each coefficient is a sum of at
/// most `2^n` principal minors, each bounded by the product of row norms.
fn coefficient_bits(adj: &Adjacency) -> u64 {
    let half_log: f64 = (0..adj.order())
        .map(|v| (adj.neighbours(v).len().max(1) as f64).log2() / 2.0)
        .sum();
    adj.order() as u64 + half_log.ceil() as u64 + 2
}

/// `det(A - λI)` as an exact integer polynomial of degree `n`.
pub fn charpoly_from_adjacency(adj: &Adjacency) -> IntPolynomial {
    let n = adj.order();
    let needed = coefficient_bits(adj);
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); n + 1];
    let mut prime = Integer::from(1u64 << 61);
    while modulus.bits() <= needed {
        prime.next_prime_mut();
        let p = prime.to_u64().expect("prime below 2^62");
        let image = charpoly_mod(adj, p);
        let m_inv = inv_mod((&modulus % p).to_u64().expect("reduced"), p);
        for (x, &r) in residues.iter_mut().zip(&image) {
            let current = (&*x % p).to_u64().expect("reduced");
            let t = mul_mod((r + p - current) % p, m_inv, p);
            *x += &modulus * t;
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    let sign_flip = n % 2 == 1;
    let coeffs = residues
        .into_iter()
        .map(|x| {
            let c = if x > half { x - &modulus } else { x };
            if sign_flip {
                -c
            } else {
                c
            }
        })
        .collect();
    IntPolynomial::new(coeffs)
}
