use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact complex number `re + im·i` with rational parts.
///
/// `BigRational` keeps both parts reduced with positive denominators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_integer(x: BigInt) -> Self {
        Self::new(BigRational::from_integer(x), BigRational::zero())
    }

    /// The purely imaginary point `a·i`.
    pub fn imaginary(a: BigRational) -> Self {
        Self::new(BigRational::zero(), a)
    }

    /// `i^k`.
    pub fn i_pow(k: u64) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_integer(-BigInt::one()),
            _ => -&Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im < BigRational::zero() {
                    write!(f, "{} - {}i", self.re, -&self.im)
                } else {
                    write!(f, "{} + {}i", self.re, self.im)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn i_powers_cycle() {
        let i = GaussianRational::i();
        let mut acc = GaussianRational::one();
        for k in 0..12 {
            assert_eq!(acc, GaussianRational::i_pow(k));
            acc = &acc * &i;
        }
    }

    #[test]
    fn reduced_parts() {
        let z = GaussianRational::new(q(2, 4), q(-3, -6));
        assert_eq!(z.re, q(1, 2));
        assert_eq!(*z.im.denom(), BigInt::from(2));
        assert_eq!(z.to_string(), "1/2 + 1/2i");
        let w = &z * &z;
        assert_eq!(w, GaussianRational::imaginary(q(1, 2)));
        assert_eq!((&z - &z), GaussianRational::zero());
        assert_eq!((-&z).to_string(), "-1/2 - 1/2i");
    }
}
