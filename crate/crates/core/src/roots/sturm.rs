//! Exact real-root counting with a Sturm chain over the integers.
//!
//! The chain is built from pseudo-remainders scaled so that every member
//! differs from the classical rational Sturm sequence by a positive constant,
//! which leaves all sign patterns unchanged.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::IntPolynomial;

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    /// Chain of the square-free part of `p`, so that roots of `p` and
    /// `gcd(p, p')` never zero out every member at once.
    pub fn new(p: &IntPolynomial) -> Self {
        let first = Self::build(p);
        let g = first.chain.last().expect("chain is nonempty");
        if first.chain.len() < 2 || g.degree() == 0 {
            return first;
        }
        let reduced = first.chain[0]
            .exact_div(g)
            .expect("gcd divides the polynomial");
        Self::build(&reduced)
    }

    fn build(p: &IntPolynomial) -> Self {
        let mut chain = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if d.is_zero() {
            return Self { chain };
        }
        chain.push(d);
        loop {
            let len = chain.len();
            let (a, b) = (&chain[len - 2], &chain[len - 1]);
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1) · rem, so -rem has the sign of -prem · sign(lc)^(δ+1)
            let delta = a.degree() - b.degree();
            let flip = b.leading().is_negative() && (delta + 1) % 2 == 1;
            let next = r.primitive_part();
            chain.push(if flip { next } else { -next });
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.chain.iter().map(|p| sign(&p.leading())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.chain.iter().map(|p| {
            let s = sign(&p.leading());
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn variations_at(&self, x: &BigInt) -> usize {
        variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Number of distinct roots in `(-inf, 0)`.
    pub fn count_negative(&self) -> usize {
        let zero = BigInt::zero();
        let at_zero_is_root = self.chain[0].eval(&zero).is_zero();
        self.variations_at_neg_inf() - self.variations_at(&zero) - usize::from(at_zero_is_root)
    }
}
