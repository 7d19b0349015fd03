//! Aberth–Ehrlich simultaneous iteration with precision doubling.
//!
//! Each precision level iterates until every approximation either stops
//! moving at the working precision or its residual sinks below the rounding
//! noise of the Horner evaluation. The level is accepted once the inclusion
//! discs `|z - z_k| <= n |W_k|` (with `W_k` the Weierstrass correction,
//! inflated by the rounding bound) are pairwise disjoint and each radius is
//! below the requested relative tolerance; otherwise the precision doubles
//! and iteration resumes from the current approximations.

use std::f64::consts::{LN_2, PI};

use rug::Float;

use super::mpc::{ln_abs, Evaluator, MpComplex, BOUND_PREC};
use super::SolveConfig;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Fixed angular offset of the starting points; it breaks the even/odd
/// symmetry of `f_n` so that no two guesses are conjugate.
pub(crate) const START_ANGLE_OFFSET: f64 = 0.3;

#[derive(Debug, Clone)]
pub(crate) struct Certified {
    pub roots: Vec<MpComplex>,
    pub ln_radii: Vec<f64>,
    pub prec: u32,
    pub iterations: usize,
}

/// Starting points `-(w_k + 1/w_k)` with `w_k = ρ e^{i(2πk/m + offset)}`.
///
/// Writing `λ = -(w + 1/w)` turns `f_n(λ)` into
/// `(-1)^n (w^{n+1} - w^{-(n+1)}) / (w - 1/w)`, so the solutions of
/// `f_n(λ) = c` sit close to the image of the circle `|w| = |c|^{1/n}`,
/// an ellipse with semi-axes `ρ + 1/ρ` and `ρ - 1/ρ`.
pub(crate) fn initial_guesses(m: usize, rho: f64, prec: u32) -> Vec<MpComplex> {
    (0..m)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / m as f64 + START_ANGLE_OFFSET;
            let (s, c) = theta.sin_cos();
            let re = -(rho + 1.0 / rho) * c;
            let im = -(rho - 1.0 / rho) * s;
            MpComplex::from_f64(prec, re, im)
        })
        .collect()
}

/// Relative rounding-noise factor of a degree-`n` Horner evaluation at `prec` bits.
fn noise_factor(n: usize, prec: u32) -> Float {
    Float::with_val(BOUND_PREC, 8 * (n + 1)) >> prec
}

fn cinv(re: f64, im: f64) -> (f64, f64) {
    let den = re * re + im * im;
    (re / den, -im / den)
}

/// Runs Aberth sweeps (Gauss–Seidel order) at the evaluator's precision.
/// Returns the number of sweeps performed.
fn iterate(ev: &mut Evaluator, roots: &mut [MpComplex], max_sweeps: usize) -> usize {
    let n = roots.len();
    let prec = ev.prec();
    let noise = noise_factor(n, prec);
    let step_tol = Float::with_val(BOUND_PREC, 1) >> prec.saturating_sub(6);
    let mut approx: Vec<(f64, f64)> = roots.iter().map(MpComplex::to_f64).collect();
    let mut done = vec![false; n];
    let mut sweeps = 0;

    while sweeps < max_sweeps {
        sweeps += 1;
        let mut active = false;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let e = ev.eval(&roots[k]);
            if e.value.abs_bound() <= Float::with_val(BOUND_PREC, &noise * &e.abs_sum) {
                done[k] = true;
                continue;
            }
            active = true;

            // Σ_{j≠k} 1/(z_k - z_j); double precision suffices because the
            // sum only enters the correction through the product N·S.
            let (zr, zi) = approx[k];
            let (mut sr, mut si) = (0.0, 0.0);
            for (j, &(wr, wi)) in approx.iter().enumerate() {
                if j != k {
                    let (ir, ii) = cinv(zr - wr, zi - wi);
                    if ir.is_finite() && ii.is_finite() {
                        sr += ir;
                        si += ii;
                    }
                }
            }

            let den = Float::with_val(prec, e.deriv.re.square_ref())
                + Float::with_val(prec, e.deriv.im.square_ref());
            let delta = if den.is_zero() {
                fallback_step(prec, sr, si)
            } else {
                let (v, d) = (&e.value, &e.deriv);
                let nr = (Float::with_val(prec, &v.re * &d.re)
                    + Float::with_val(prec, &v.im * &d.im))
                    / &den;
                let ni = (Float::with_val(prec, &v.im * &d.re)
                    - Float::with_val(prec, &v.re * &d.im))
                    / &den;
                let (fr, fi) = (nr.to_f64(), ni.to_f64());
                let wr = 1.0 - (fr * sr - fi * si);
                let wi = -(fr * si + fi * sr);
                let (ir, ii) = cinv(wr, wi);
                if ir.is_finite() && ii.is_finite() && (wr != 0.0 || wi != 0.0) {
                    let re = Float::with_val(prec, &nr * ir) - Float::with_val(prec, &ni * ii);
                    let im = Float::with_val(prec, &nr * ii) + Float::with_val(prec, &ni * ir);
                    MpComplex { re, im }
                } else {
                    fallback_step(prec, sr, si)
                }
            };

            roots[k].re -= &delta.re;
            roots[k].im -= &delta.im;
            approx[k] = roots[k].to_f64();
            let zabs = roots[k].abs_bound();
            if delta.abs_bound() <= Float::with_val(BOUND_PREC, &step_tol * &zabs) {
                done[k] = true;
            }
        }
        if !active {
            break;
        }
    }
    sweeps
}

/// `-1/S`, the limit of the Aberth step when the Newton quotient blows up.
fn fallback_step(prec: u32, sr: f64, si: f64) -> MpComplex {
    let (ir, ii) = cinv(-sr, -si);
    if ir.is_finite() && ii.is_finite() {
        MpComplex::from_f64(prec, ir, ii)
    } else {
        MpComplex::from_f64(prec, 1e-3, 1e-3)
    }
}

/// Either the log inclusion radii of a certified level, or the worst
/// relative residual bound seen when certification fails.
fn certify(
    ev: &mut Evaluator,
    roots: &[MpComplex],
    ln_coeffs: &[f64],
    tol: f64,
) -> std::result::Result<Vec<f64>, f64> {
    let n = roots.len();
    let prec = ev.prec();
    let noise = noise_factor(n, prec);
    let ln_lead = *ln_coeffs.last().expect("nonzero polynomial");
    let ln_n = (n as f64).ln();
    let ln_tol = tol.ln();
    let approx: Vec<(f64, f64)> = roots.iter().map(MpComplex::to_f64).collect();

    let mut ln_radii = Vec::with_capacity(n);
    let mut worst_residual: f64 = 0.0;
    let mut ok = true;
    for (k, z) in roots.iter().enumerate() {
        let e = ev.eval(z);
        let numer = e.value.abs_bound() + Float::with_val(BOUND_PREC, &noise * &e.abs_sum);
        let ln_numer = if numer.is_zero() {
            f64::NEG_INFINITY
        } else {
            numer.ln().to_f64()
        };

        let (zr, zi) = approx[k];
        let zabs = zr.hypot(zi);
        let mut ln_prod = 0.0;
        let mut min_ln_dist = f64::INFINITY;
        for (j, &(wr, wi)) in approx.iter().enumerate() {
            if j == k {
                continue;
            }
            let mut dist = (zr - wr).hypot(zi - wi);
            if dist <= 1e-12 * zabs.max(1.0) {
                // too close for doubles; take the difference at full precision
                let dr = Float::with_val(prec, &z.re - &roots[j].re);
                let di = Float::with_val(prec, &z.im - &roots[j].im);
                let d = Float::with_val(BOUND_PREC, dr.hypot(&di));
                dist = if d.is_zero() {
                    0.0
                } else {
                    d.ln().to_f64().exp()
                };
                if dist == 0.0 {
                    return Err(f64::INFINITY);
                }
            }
            let ln_d = dist.ln();
            ln_prod += ln_d;
            min_ln_dist = min_ln_dist.min(ln_d);
        }

        let ln_r = ln_n + ln_numer - ln_lead - ln_prod;
        let ln_scale_base = zabs.max(1.0).ln();
        let ln_scale = ln_coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| c + j as f64 * ln_scale_base)
            .fold(f64::NEG_INFINITY, f64::max);
        let residual = (ln_numer - ln_scale).exp();
        worst_residual = worst_residual.max(residual);

        let small = ln_r <= ln_tol + ln_scale_base;
        let isolated = n == 1 || ln_r < min_ln_dist - LN_2;
        if !(small && isolated && residual <= tol) {
            ok = false;
        }
        ln_radii.push(ln_r);
    }
    if ok {
        Ok(ln_radii)
    } else {
        Err(worst_residual)
    }
}

/// Roots of a square-free polynomial of degree >= 1.
pub(crate) fn solve_squarefree(
    poly: &IntPolynomial,
    rho: f64,
    cfg: &SolveConfig,
) -> Result<Certified> {
    let n = poly.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let ln_coeffs: Vec<f64> = poly.coeffs().iter().map(ln_abs).collect();
    let mut prec = cfg.start_bits;
    let mut roots = initial_guesses(n, rho, prec);
    let mut iterations = 0;
    loop {
        let mut ev = Evaluator::new(poly, prec);
        for z in &mut roots {
            z.set_prec(prec);
        }
        iterations += iterate(&mut ev, &mut roots, 100 + 2 * n);
        match certify(&mut ev, &roots, &ln_coeffs, cfg.tolerance) {
            Ok(ln_radii) => {
                return Ok(Certified {
                    roots,
                    ln_radii,
                    prec,
                    iterations,
                })
            }
            Err(residual) if prec >= cfg.max_bits => {
                return Err(Error::PrecisionExhausted {
                    bits: prec,
                    residual,
                })
            }
            Err(_) => prec = prec.saturating_mul(2).min(cfg.max_bits),
        }
    }
}
