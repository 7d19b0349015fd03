//! Origin-centred, axis-aligned ellipse fit `A x² + B y² = 1` by linear least
//! squares over the squared coordinates.

use serde::Serialize;

use crate::{Error, Result};

/// Relative determinant below which the 2×2 normal matrix counts as singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipseFit {
    /// Least-squares coefficient of `x²`.
    pub coeff_a: f64,
    /// Least-squares coefficient of `y²`.
    pub coeff_b: f64,
    /// Semi-axis along the real direction, `1/√Ã`.
    pub a_tilde: f64,
    /// Semi-axis along the imaginary direction, `1/√B̃`.
    pub b_tilde: f64,
    pub rmse: f64,
    pub eccentricity: f64,
}

/// The reference ellipse `x²/λ² + y²/κ² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipseSpec {
    pub lambda_axis: f64,
    pub kappa_axis: f64,
}

impl EllipseSpec {
    pub fn new(lambda_axis: f64, kappa_axis: f64) -> Result<Self> {
        if !(lambda_axis > 0.0 && kappa_axis > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "ellipse axes must be positive, got ({lambda_axis}, {kappa_axis})"
            )));
        }
        Ok(Self {
            lambda_axis,
            kappa_axis,
        })
    }

    /// `E(√5, 1)`.
    pub fn sqrt5_by_1() -> Self {
        Self {
            lambda_axis: 5f64.sqrt(),
            kappa_axis: 1.0,
        }
    }

    /// `x²/λ² + y²/κ²`; equals 1 on the boundary.
    pub fn form(&self, x: f64, y: f64) -> f64 {
        (x / self.lambda_axis).powi(2) + (y / self.kappa_axis).powi(2)
    }
}

struct NormalEquations {
    xx: f64,
    xy: f64,
    yy: f64,
    bx: f64,
    by: f64,
}

fn normal_equations(points: &[(f64, f64)]) -> NormalEquations {
    let mut ne = NormalEquations {
        xx: 0.0,
        xy: 0.0,
        yy: 0.0,
        bx: 0.0,
        by: 0.0,
    };
    for &(x, y) in points {
        let (x2, y2) = (x * x, y * y);
        ne.xx += x2 * x2;
        ne.xy += x2 * y2;
        ne.yy += y2 * y2;
        ne.bx += x2;
        ne.by += y2;
    }
    ne
}

/// `‖Mᵀ(M[A, B]ᵀ - 1)‖∞`, the gradient of the least-squares objective.
pub fn normal_equation_residual(points: &[(f64, f64)], coeff_a: f64, coeff_b: f64) -> f64 {
    let ne = normal_equations(points);
    let rx = ne.xx * coeff_a + ne.xy * coeff_b - ne.bx;
    let ry = ne.xy * coeff_a + ne.yy * coeff_b - ne.by;
    rx.abs().max(ry.abs())
}

/// Least-squares ellipse through `points`.
pub fn fit_ellipse(points: &[(f64, f64)]) -> Result<EllipseFit> {
    if points.len() < 2 {
        return Err(Error::DegenerateGeometry(format!(
            "need at least 2 points, got {}",
            points.len()
        )));
    }
    let ne = normal_equations(points);
    let det = ne.xx * ne.yy - ne.xy * ne.xy;
    let largest = ne.xx.abs().max(ne.yy.abs()).max(ne.xy.abs());
    if det.is_nan() || det.abs() <= SINGULARITY_THRESHOLD * largest * largest {
        return Err(Error::DegenerateGeometry(format!(
            "normal matrix is singular (det {det:e}, largest entry {largest:e})"
        )));
    }
    let coeff_a = (ne.yy * ne.bx - ne.xy * ne.by) / det;
    let coeff_b = (ne.xx * ne.by - ne.xy * ne.bx) / det;
    if !(coeff_a > 0.0 && coeff_b > 0.0) {
        return Err(Error::DegenerateGeometry(format!(
            "best fit is not an ellipse (A = {coeff_a:e}, B = {coeff_b:e})"
        )));
    }
    let a_tilde = 1.0 / coeff_a.sqrt();
    let b_tilde = 1.0 / coeff_b.sqrt();
    Ok(EllipseFit {
        coeff_a,
        coeff_b,
        a_tilde,
        b_tilde,
        rmse: rmse(points, a_tilde, b_tilde)?,
        eccentricity: eccentricity(a_tilde, b_tilde),
    })
}

/// Root-mean-square of `x²/a² + y²/b² - 1` over the points.
pub fn rmse(points: &[(f64, f64)], a: f64, b: f64) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("rmse of an empty point set".into()));
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "semi-axes must be positive, got ({a}, {b})"
        )));
    }
    let sum: f64 = points
        .iter()
        .map(|&(x, y)| ((x / a).powi(2) + (y / b).powi(2) - 1.0).powi(2))
        .sum();
    Ok((sum / points.len() as f64).sqrt())
}

/// `√(1 - (min/max)²)` of the two semi-axes.
pub fn eccentricity(a: f64, b: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    (1.0 - (lo / hi).powi(2)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S5: f64 = 2.236_067_977_499_79;

    #[test]
    fn fits_points_on_sqrt5_ellipse() {
        let t = 2.0 / S5;
        let fit = fit_ellipse(&[(S5, 0.0), (0.0, 1.0), (1.0, t), (-1.0, -t)]).unwrap();
        assert!((fit.a_tilde - S5).abs() < 1e-12);
        assert!((fit.b_tilde - 1.0).abs() < 1e-12);
        assert!(fit.rmse < 1e-12);
    }

    #[test]
    fn fits_unit_circle() {
        let fit = fit_ellipse(&[(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]).unwrap();
        assert_eq!((fit.a_tilde, fit.b_tilde, fit.rmse), (1.0, 1.0, 0.0));
        assert_eq!(fit.eccentricity, 0.0);
    }

    #[test]
    fn collinear_real_points_are_degenerate() {
        let err = fit_ellipse(&[(1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateGeometry(_)));
        assert!(fit_ellipse(&[(1.0, 1.0)]).is_err());
    }

    #[test]
    fn hyperbolic_fit_is_degenerate() {
        // x² - y² = 1 fits exactly with B < 0
        let pts = [(1.0, 0.0), (2f64.sqrt(), 1.0), (5f64.sqrt(), 2.0)];
        assert!(matches!(
            fit_ellipse(&pts),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn rmse_examples() {
        assert_eq!(rmse(&[(S5, 0.0)], S5, 1.0).unwrap(), 0.0);
        assert_eq!(rmse(&[(0.0, 0.0)], 1.0, 1.0).unwrap(), 1.0);
        assert!((rmse(&[(1.0, 0.0), (0.0, 0.0)], 1.0, 1.0).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(rmse(&[], 1.0, 1.0).is_err());
        assert!(rmse(&[(1.0, 0.0)], 0.0, 1.0).is_err());
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(eccentricity(1.0, 1.0), 0.0);
        assert!((eccentricity(S5, 1.0) - 2.0 / S5).abs() < 1e-15);
        assert_eq!(eccentricity(1.0, S5), eccentricity(S5, 1.0));
    }

    #[test]
    fn reference_form() {
        let e = EllipseSpec::sqrt5_by_1();
        assert!((e.form(S5, 0.0) - 1.0).abs() < 1e-15);
        assert_eq!(e.form(0.0, 1.0), 1.0);
        assert!(EllipseSpec::new(-1.0, 1.0).is_err());
    }

    fn ellipse_points(a: f64, b: f64, angles: &[f64]) -> Vec<(f64, f64)> {
        angles.iter().map(|t| (a * t.cos(), b * t.sin())).collect()
    }

    proptest! {
        #[test]
        fn eccentricity_symmetric(a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
            prop_assert_eq!(eccentricity(a, b), eccentricity(b, a));
            let e = eccentricity(a, b);
            prop_assert!((0.0..1.0).contains(&e));
        }

        #[test]
        fn normal_equations_satisfied(
            pts in prop::collection::vec((-3.0f64..3.0, -2.0f64..2.0), 4..40)
        ) {
            if let Ok(fit) = fit_ellipse(&pts) {
                let ne = normal_equations(&pts);
                let scale = ne.bx.abs().max(ne.by.abs());
                prop_assert!(normal_equation_residual(&pts, fit.coeff_a, fit.coeff_b) <= 1e-8 * scale);
            }
        }

        #[test]
        fn scale_covariance(
            a in 0.5f64..5.0, b in 0.5f64..5.0, s in 0.1f64..10.0,
            base in 0.05f64..1.0,
        ) {
            let angles: Vec<f64> = (0..8).map(|k| base + k as f64 * 0.7).collect();
            let pts = ellipse_points(a, b, &angles);
            let scaled: Vec<_> = pts.iter().map(|&(x, y)| (s * x, s * y)).collect();
            let f1 = fit_ellipse(&pts).unwrap();
            let f2 = fit_ellipse(&scaled).unwrap();
            prop_assert!((f2.a_tilde - s * f1.a_tilde).abs() <= 1e-9 * s * f1.a_tilde);
            prop_assert!((f2.b_tilde - s * f1.b_tilde).abs() <= 1e-9 * s * f1.b_tilde);
            prop_assert!(f2.rmse < 1e-9);
        }
    }
}
