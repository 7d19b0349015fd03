use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive};
use rug::integer::Order;
use rug::{Assign, Float, Integer};

use crate::poly::IntPolynomial;

/// Precision used for magnitudes and error bounds, where only a few
/// significant bits matter but the exponent range must be unbounded.
pub(crate) const BOUND_PREC: u32 = 64;

/// Complex number with `rug::Float` parts at a shared precision.
#[derive(Debug, Clone, PartialEq)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `|z|` rounded to [`BOUND_PREC`] bits.
    pub fn abs_bound(&self) -> Float {
        let re = Float::with_val(BOUND_PREC, &self.re);
        re.hypot(&Float::with_val(BOUND_PREC, &self.im))
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    /// Lexicographic order on the double-precision rounding of `(re, im)`,
    /// ties broken at full precision, so printed values also appear sorted.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.to_f64(), other.to_f64());
        a.0.total_cmp(&b.0)
            .then(a.1.total_cmp(&b.1))
            .then_with(|| self.lex_cmp_exact(other))
    }

    /// Lexicographic order on `(re, im)` at full precision.
    pub fn lex_cmp_exact(&self, other: &Self) -> Ordering {
        self.re
            .partial_cmp(&other.re)
            .unwrap_or(Ordering::Equal)
            .then(self.im.partial_cmp(&other.im).unwrap_or(Ordering::Equal))
    }
}

pub(crate) fn to_rug(x: &BigInt) -> Integer {
    let (sign, digits) = x.to_u64_digits();
    let mag = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// `ln |x|` for an arbitrarily large integer; `-inf` for zero.
pub(crate) fn ln_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift)
        .to_f64()
        .expect("64-bit value fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Value and derivative of a polynomial at a complex point, together with
/// the absolute Horner sum `Σ |c_k| |z|^k` that bounds rounding error.
pub(crate) struct Evaluation {
    pub value: MpComplex,
    pub deriv: MpComplex,
    pub abs_sum: Float,
}

/// Horner evaluator holding the coefficients rounded to a working precision.
pub(crate) struct Evaluator {
    prec: u32,
    coeffs: Vec<Float>,
    abs_coeffs: Vec<Float>,
    t1: Float,
    t2: Float,
}

impl Evaluator {
    pub fn new(poly: &IntPolynomial, prec: u32) -> Self {
        let coeffs: Vec<Float> = poly
            .coeffs()
            .iter()
            .map(|c| Float::with_val(prec, to_rug(c)))
            .collect();
        let abs_coeffs = coeffs
            .iter()
            .map(|c| Float::with_val(BOUND_PREC, c.abs_ref()))
            .collect();
        Self {
            prec,
            coeffs,
            abs_coeffs,
            t1: Float::new(prec),
            t2: Float::new(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&mut self, z: &MpComplex) -> Evaluation {
        let n = self.degree();
        let p = self.prec;
        let mut v = MpComplex::zero(p);
        let mut d = MpComplex::zero(p);
        v.re.assign(&self.coeffs[n]);
        let zabs = z.abs_bound();
        let mut s = self.abs_coeffs[n].clone();
        let (t1, t2) = (&mut self.t1, &mut self.t2);
        for k in (0..n).rev() {
            // d <- d*z + v
            t1.assign(&d.re * &z.re);
            *t1 -= &d.im * &z.im;
            *t1 += &v.re;
            t2.assign(&d.re * &z.im);
            *t2 += &d.im * &z.re;
            *t2 += &v.im;
            std::mem::swap(&mut d.re, t1);
            std::mem::swap(&mut d.im, t2);
            // v <- v*z + c_k
            t1.assign(&v.re * &z.re);
            *t1 -= &v.im * &z.im;
            *t1 += &self.coeffs[k];
            t2.assign(&v.re * &z.im);
            *t2 += &v.im * &z.re;
            std::mem::swap(&mut v.re, t1);
            std::mem::swap(&mut v.im, t2);
            // s <- s*|z| + |c_k|
            s *= &zabs;
            s += &self.abs_coeffs[k];
        }
        Evaluation {
            value: v,
            deriv: d,
            abs_sum: s,
        }
    }
}
