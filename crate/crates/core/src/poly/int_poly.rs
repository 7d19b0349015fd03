use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GaussianRational;
use crate::{Error, Result};

/// Dense univariate polynomial with exact integer coefficients, lowest degree
/// first. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k)
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Subtracts `c` from the constant term.
    pub fn shift_constant(&self, c: &BigInt) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        coeffs[0] -= c;
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Exact Horner evaluation at a Gaussian rational point.
    pub fn eval_exact(&self, z: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| {
                &(&acc * z) + &GaussianRational::from_integer(c.clone())
            })
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg p - deg d + 1) * p mod d`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = divisor.degree();
        let lc = divisor.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        let steps = r.len() - dd;
        for _ in 0..steps {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            if !t.is_zero() {
                let off = top - dd;
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    r[off + k] -= &t * dc;
                }
            }
            r.pop();
        }
        Self::new(r)
    }

    /// Exact quotient `self / divisor` when the division leaves no remainder
    /// and every quotient coefficient is an integer.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let dd = divisor.degree();
        let lc = divisor.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = i + dd;
            let (t, rem) = r[top].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            if !t.is_zero() {
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    r[i + k] -= &t * dc;
                }
            }
            q[i] = t;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Space-separated decimal coefficients, lowest degree first.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Human-readable form with the given variable name, highest degree first.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty("λ"))
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("coefficient {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        Ok(Self::new(coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), 1);
        assert_eq!(p(&[]).degree(), 0);
        assert_eq!(p(&[3, 0, -2]).leading(), BigInt::from(-2));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(&a + &b, p(&[0, 1, 1]));
        assert_eq!(a.derivative(), p(&[0, 2]));
        assert_eq!(p(&[0, 2, 0, -1]).reflect(), p(&[0, -2, 0, 1]));
        assert_eq!(a.shift(2), p(&[0, 0, -1, 0, 1]));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(p(&[-1, 1])));
        assert_eq!(a.exact_div(&p(&[2, 1])), None);
        assert_eq!(p(&[1, 0, 2]).exact_div(&p(&[0, 2])), None);
        // 2x^2 + 1 mod (2x + 1): lc^2 * p = (2x-1)(2x+1)*... remainder 6
        assert_eq!(p(&[1, 0, 2]).pseudo_rem(&p(&[1, 2])), p(&[6]));
        assert_eq!(p(&[6, 0, 4, -2]).content(), BigInt::from(2));
        assert_eq!(p(&[6, 0, 4, -2]).primitive_part(), p(&[3, 0, 2, -1]));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p(&[-1, 0, 1]).to_coeff_string(), "-1 0 1");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "λ^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-λ");
        assert_eq!(p(&[2, 3, 0, -1]).to_string(), "-λ^3 + 3λ + 2");
        assert_eq!(IntPolynomial::zero().to_coeff_string(), "0");
        assert_eq!(
            "2 3 0 -1".parse::<IntPolynomial>().unwrap(),
            p(&[2, 3, 0, -1])
        );
        assert!("1 x".parse::<IntPolynomial>().is_err());
        assert!("".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn evaluation() {
        let f4 = p(&[1, 0, -3, 0, 1]);
        assert_eq!(f4.eval(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(
            f4.eval_exact(&GaussianRational::i()),
            GaussianRational::from_integer(5.into())
        );
        assert_eq!(
            p(&[-1, 0, 1]).eval_exact(&GaussianRational::from_integer(1.into())),
            GaussianRational::zero()
        );
        let neg_half_i =
            GaussianRational::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(
            p(&[0, -1]).eval_exact(&neg_half_i),
            GaussianRational::new(BigRational::zero(), BigRational::new(1.into(), 2.into()))
        );
    }
}
