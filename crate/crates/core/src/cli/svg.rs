//! Root-cloud plot with the fitted and reference ellipses.

use std::fmt::Write;

use crate::fit::{EllipseFit, EllipseSpec};

const WIDTH: f64 = 600.0;
const HEIGHT: f64 = 320.0;
const X_RANGE: (f64, f64) = (-3.0, 3.0);
const Y_RANGE: (f64, f64) = (-1.6, 1.6);

fn px_x(x: f64) -> f64 {
    (x - X_RANGE.0) / (X_RANGE.1 - X_RANGE.0) * WIDTH
}

fn px_y(y: f64) -> f64 {
    (Y_RANGE.1 - y) / (Y_RANGE.1 - Y_RANGE.0) * HEIGHT
}

fn scale_x() -> f64 {
    WIDTH / (X_RANGE.1 - X_RANGE.0)
}

fn scale_y() -> f64 {
    HEIGHT / (Y_RANGE.1 - Y_RANGE.0)
}

/// SVG document with one `<circle>` per root and two `<ellipse>` elements.
pub fn render(
    title: &str,
    points: &[(f64, f64)],
    fit: &EllipseFit,
    reference: &EllipseSpec,
) -> String {
    let (cx, cy) = (px_x(0.0), px_y(0.0));
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{cy:.3}" x2="{WIDTH}" y2="{cy:.3}" stroke="#999999" stroke-width="0.5"/>"##
    );
    let _ = writeln!(
        s,
        r##"<line x1="{cx:.3}" y1="0" x2="{cx:.3}" y2="{HEIGHT}" stroke="#999999" stroke-width="0.5"/>"##
    );
    let _ = writeln!(
        s,
        r##"<ellipse class="reference" cx="{cx:.3}" cy="{cy:.3}" rx="{:.3}" ry="{:.3}" fill="none" stroke="#1f77b4" stroke-dasharray="4 3"/>"##,
        reference.lambda_axis * scale_x(),
        reference.kappa_axis * scale_y()
    );
    let _ = writeln!(
        s,
        r##"<ellipse class="fitted" cx="{cx:.3}" cy="{cy:.3}" rx="{:.3}" ry="{:.3}" fill="none" stroke="#d62728"/>"##,
        fit.a_tilde * scale_x(),
        fit.b_tilde * scale_y()
    );
    for &(x, y) in points {
        let _ = writeln!(
            s,
            r#"<circle class="root" cx="{:.3}" cy="{:.3}" r="2.5" fill="black"/>"#,
            px_x(x),
            px_y(y)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
