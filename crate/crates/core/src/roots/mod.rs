//! Solving `f_n(λ) = c` over the complex numbers and counting its real
//! solutions exactly.

mod aberth;
mod mpc;
mod squarefree;
mod sturm;

use num_bigint::BigInt;
use rug::float::Constant;
use rug::Float;
use serde::Serialize;

pub use mpc::MpComplex;
pub use sturm::SturmChain;

use crate::poly::{path_charpoly, IntPolynomial};
use crate::seq::fibonacci;
use crate::{Error, Result};

/// `f_n(λ) - c` for the path graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedProblem {
    n: usize,
    c: BigInt,
    shifted: IntPolynomial,
}

impl ShiftedProblem {
    pub fn new(n: usize, c: impl Into<BigInt>) -> Result<Self> {
        let c = c.into();
        let shifted = path_charpoly(n)?.shift_constant(&c);
        Ok(Self { n, c, shifted })
    }

    /// The primary case `c = F_{n+1}`.
    pub fn fibonacci(n: usize) -> Result<Self> {
        Self::new(n, fibonacci(n + 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn shifted(&self) -> &IntPolynomial {
        &self.shifted
    }

    /// Joukowski radius `ρ = max(|c|^(1/n), 1 + 1/n)` of the starting
    /// points; the floor keeps them off the real axis when `c` is small.
    pub fn start_rho(&self) -> f64 {
        let ln_c = mpc::ln_abs(&self.c);
        let from_c = if ln_c.is_finite() {
            (ln_c / self.n as f64).exp()
        } else {
            0.0
        };
        from_c.max(1.0 + 1.0 / self.n as f64)
    }
}

/// Working-precision controls for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveConfig {
    pub start_bits: u32,
    pub max_bits: u32,
    /// Bound on both the relative residual and the relative inclusion radius.
    pub tolerance: f64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            start_bits: 128,
            max_bits: 16384,
            tolerance: 1e-12,
        }
    }
}

impl SolveConfig {
    /// Sets the starting precision, raising the ceiling if it would fall below it.
    pub fn with_start_bits(mut self, bits: u32) -> Self {
        self.start_bits = bits;
        self.max_bits = self.max_bits.max(bits);
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.start_bits < 53 || self.max_bits < self.start_bits {
            return Err(Error::InvalidArgument(format!(
                "precision range {}..{} bits is invalid (need 53 <= start <= max)",
                self.start_bits, self.max_bits
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerance {} must lie in (0, 1)",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// All `n` complex roots of a shifted problem, sorted lexicographically by
/// `(re, im)` and repeated according to multiplicity.
#[derive(Debug, Clone)]
pub struct RootSet {
    roots: Vec<MpComplex>,
    residuals: Vec<f64>,
    error_radii: Vec<f64>,
    residual_bound: f64,
    precision_bits: u32,
    iterations: usize,
    repeated: bool,
}

impl RootSet {
    pub fn roots(&self) -> &[MpComplex] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Per-root bound on `|shifted(ρ)| / S(ρ)` with
    /// `S(ρ) = max_k |coeff_k| max(1, |ρ|)^k`, rounding error included.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    /// Radius of a disc around each approximation known to contain a root.
    pub fn error_radii(&self) -> &[f64] {
        &self.error_radii
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Whether the shifted polynomial had a repeated root.
    pub fn has_repeated_roots(&self) -> bool {
        self.repeated
    }

    /// Roots rounded to double precision.
    pub fn to_points(&self) -> Vec<(f64, f64)> {
        self.roots.iter().map(MpComplex::to_f64).collect()
    }
}

/// Solves `f_n(λ) = c` at adaptive precision.
pub fn solve(problem: &ShiftedProblem, cfg: &SolveConfig) -> Result<RootSet> {
    cfg.validate()?;
    let poly = problem.shifted();
    if poly.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let rho = problem.start_rho();

    let factors = if squarefree::is_squarefree_fast(poly) {
        vec![(poly.clone(), 1)]
    } else {
        squarefree::squarefree_decomposition(poly)
    };
    let repeated = factors.iter().any(|&(_, m)| m > 1);

    let mut roots = Vec::with_capacity(poly.degree());
    let mut radii = Vec::with_capacity(poly.degree());
    let mut prec = cfg.start_bits;
    let mut iterations = 0;
    for (factor, multiplicity) in &factors {
        let mut cert = aberth::solve_squarefree(factor, rho, cfg)?;
        snap_real_roots(&mut cert.roots, &cert.ln_radii);
        prec = prec.max(cert.prec);
        iterations += cert.iterations;
        for (z, ln_r) in cert.roots.into_iter().zip(cert.ln_radii) {
            for _ in 0..*multiplicity {
                roots.push(z.clone());
                radii.push(ln_r.exp());
            }
        }
    }
    for z in &mut roots {
        z.set_prec(prec);
    }

    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| roots[a].lex_cmp(&roots[b]));
    let roots: Vec<MpComplex> = order.iter().map(|&i| roots[i].clone()).collect();
    let error_radii: Vec<f64> = order.iter().map(|&i| radii[i]).collect();

    let residuals = relative_residuals(poly, &roots, prec);
    let residual_bound = residuals.iter().copied().fold(0.0, f64::max);
    if residual_bound > cfg.tolerance {
        return Err(Error::PrecisionExhausted {
            bits: prec,
            residual: residual_bound,
        });
    }
    Ok(RootSet {
        roots,
        residuals,
        error_radii,
        residual_bound,
        precision_bits: prec,
        iterations,
        repeated,
    })
}

/// Sets `Im ρ = 0` for roots proven real: the inclusion disc meets the real
/// axis and its mirror image meets no other disc, so the conjugate root, which
/// lies in the mirror image, must be the root itself.
fn snap_real_roots(roots: &mut [MpComplex], ln_radii: &[f64]) {
    let centres: Vec<(f64, f64)> = roots.iter().map(MpComplex::to_f64).collect();
    let radii: Vec<f64> = ln_radii.iter().map(|r| r.exp()).collect();
    let slack =
        |a: (f64, f64), b: (f64, f64)| 4.0 * f64::EPSILON * a.0.hypot(a.1).max(b.0.hypot(b.1));
    let is_real: Vec<bool> = (0..roots.len())
        .map(|k| {
            let (x, y) = centres[k];
            if y.is_nan() || y.abs() > radii[k] {
                return false;
            }
            (0..roots.len()).filter(|&j| j != k).all(|j| {
                let d = (centres[j].0 - x).hypot(centres[j].1 + y);
                d > radii[k] + radii[j] + slack(centres[k], centres[j])
            })
        })
        .collect();
    for (z, real) in roots.iter_mut().zip(is_real) {
        if real {
            z.im = Float::with_val(z.im.prec(), 0);
        }
    }
}

/// `(|p̂(ρ)| + rounding bound) / max_k |c_k| max(1,|ρ|)^k` for each root.
fn relative_residuals(poly: &IntPolynomial, roots: &[MpComplex], prec: u32) -> Vec<f64> {
    let mut ev = mpc::Evaluator::new(poly, prec);
    let noise = Float::with_val(mpc::BOUND_PREC, 8 * (poly.degree() + 1)) >> prec;
    let ln_coeffs: Vec<f64> = poly.coeffs().iter().map(mpc::ln_abs).collect();
    roots
        .iter()
        .map(|z| {
            let e = ev.eval(z);
            let numer = e.value.abs_bound() + Float::with_val(mpc::BOUND_PREC, &noise * &e.abs_sum);
            let ln_numer = if numer.is_zero() {
                f64::NEG_INFINITY
            } else {
                numer.ln().to_f64()
            };
            let base = z.abs_bound().to_f64().max(1.0).ln();
            let ln_scale = ln_coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| c + j as f64 * base)
                .fold(f64::NEG_INFINITY, f64::max);
            (ln_numer - ln_scale).exp()
        })
        .collect()
}

/// Distinct real roots of a shifted problem, and how many are negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RealRootCount {
    pub count: usize,
    pub negative_count: usize,
}

/// Exact Sturm-chain count of the distinct real solutions of `f_n(λ) = c`.
pub fn real_root_count_exact(problem: &ShiftedProblem) -> RealRootCount {
    let chain = SturmChain::new(problem.shifted());
    RealRootCount {
        count: chain.count_real(),
        negative_count: chain.count_negative(),
    }
}

/// The zeros `2 cos(sπ/(n+1))`, `s = 1..n`, of `f_n`, ascending, at `prec` bits.
pub fn path_zero_roots(n: usize, prec: u32) -> Result<Vec<Float>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "path_zero_roots requires n >= 1".into(),
        ));
    }
    let pi = Float::with_val(prec, Constant::Pi);
    let mut out: Vec<Float> = (1..=n)
        .map(|s| {
            let angle = Float::with_val(prec, &pi * s as u32) / (n as u32 + 1);
            let mut r = angle.cos() * 2u32;
            // cos(π/2) rounds to a tiny nonzero value; the middle zero is exact
            if 2 * s == n + 1 {
                r = Float::with_val(prec, 0);
            }
            r
        })
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    Ok(out)
}

/// Number of roots with `|Im| <= threshold`, counting multiplicity.
pub fn count_numerically_real(roots: &RootSet, threshold: f64) -> usize {
    roots
        .roots()
        .iter()
        .filter(|z| z.im.to_f64().abs() <= threshold)
        .count()
}
