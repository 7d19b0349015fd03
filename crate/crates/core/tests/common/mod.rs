#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use rug::Float;

use pathspec::poly::IntPolynomial;
use pathspec::roots::{path_zero_roots, RootSet, ShiftedProblem};

fn to_float(c: &BigInt, prec: u32) -> Float {
    Float::with_val(prec, Float::parse(c.to_string()).expect("integer literal"))
}

/// `(Σρ - expected) / scale` and `(Πρ - expected) / scale` from Vieta's formulas.
pub fn vieta_errors(problem: &ShiftedProblem, roots: &RootSet) -> (f64, f64) {
    let p = problem.shifted();
    let n = p.degree();
    let prec = roots.precision_bits() * 2;
    let lead = to_float(&p.leading(), prec);

    let mut sum = (Float::new(prec), Float::new(prec));
    let mut prod = (Float::with_val(prec, 1), Float::new(prec));
    let mut abs_sum = Float::new(prec);
    for z in roots.roots() {
        sum.0 += &z.re;
        sum.1 += &z.im;
        abs_sum += Float::with_val(prec, z.re.hypot_ref(&z.im));
        let re = Float::with_val(prec, &prod.0 * &z.re) - Float::with_val(prec, &prod.1 * &z.im);
        let im = Float::with_val(prec, &prod.0 * &z.im) + Float::with_val(prec, &prod.1 * &z.re);
        prod = (re, im);
    }

    let expected_sum = -to_float(&p.coeff(n - 1), prec) / &lead;
    let sum_scale = Float::with_val(prec, expected_sum.abs_ref())
        .max(&abs_sum)
        .max(&Float::with_val(prec, 1));
    let sum_err = Float::with_val(prec, (sum.0 - &expected_sum).hypot(&sum.1)) / sum_scale;

    let mut expected_prod = to_float(&p.coeff(0), prec) / &lead;
    if n % 2 == 1 {
        expected_prod = -expected_prod;
    }
    let prod_scale = Float::with_val(prec, expected_prod.abs_ref()).max(&Float::with_val(prec, 1));
    let prod_err = Float::with_val(prec, (prod.0 - &expected_prod).hypot(&prod.1)) / prod_scale;
    (sum_err.to_f64(), prod_err.to_f64())
}

/// Index of a root whose conjugate has no partner within `tol · max(1, |ρ|)`.
pub fn unpaired_conjugate(points: &[(f64, f64)], tol: f64) -> Option<usize> {
    let mut used = vec![false; points.len()];
    for (i, &(x, y)) in points.iter().enumerate() {
        let scale = tol * x.hypot(y).max(1.0);
        let partner = (0..points.len())
            .find(|&j| !used[j] && (points[j].0 - x).hypot(points[j].1 + y) <= scale);
        match partner {
            Some(j) => used[j] = true,
            None => return Some(i),
        }
    }
    None
}

/// Roots violating `|p(ρ)| <= residual_bound · max_k |c_k| max(1,|ρ|)^k`,
/// with `p(ρ)` re-evaluated at twice the working precision.
pub fn residual_violations(problem: &ShiftedProblem, roots: &RootSet) -> Vec<usize> {
    let p = problem.shifted();
    let prec = roots.precision_bits() * 2;
    let coeffs: Vec<Float> = p.coeffs().iter().map(|c| to_float(c, prec)).collect();
    let bound = roots.residual_bound() * (1.0 + 1e-9);
    roots
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, z)| {
            let (mut re, mut im) = (Float::new(prec), Float::new(prec));
            for c in coeffs.iter().rev() {
                let nr =
                    Float::with_val(prec, &re * &z.re) - Float::with_val(prec, &im * &z.im) + c;
                let ni = Float::with_val(prec, &re * &z.im) + Float::with_val(prec, &im * &z.re);
                re = nr;
                im = ni;
            }
            let value = re.hypot(&im).to_f64();
            let base = z.re.to_f64().hypot(z.im.to_f64()).max(1.0);
            let scale = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| to_float(c, 64).abs().to_f64() * base.powi(k as i32))
                .fold(0.0, f64::max);
            value > bound * scale
        })
        .map(|(i, _)| i)
        .collect()
}

/// Largest distance between the roots of `f_n(λ) = 0` and `2cos(sπ/(n+1))`.
pub fn zero_root_error(n: usize, roots: &RootSet) -> f64 {
    let reference = path_zero_roots(n, 128).expect("n >= 1");
    roots
        .to_points()
        .iter()
        .zip(&reference)
        .map(|(&(x, y), r)| (x - r.to_f64()).hypot(y))
        .fold(0.0, f64::max)
}

pub fn problem(n: usize, c: impl Into<BigInt>) -> ShiftedProblem {
    ShiftedProblem::new(n, c).expect("n >= 1")
}

pub fn coefficient_text(p: &IntPolynomial) -> String {
    p.to_coeff_string()
}
