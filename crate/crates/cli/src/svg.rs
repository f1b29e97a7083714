use crate::error::CliError;
use qsic::arith::rational;
use qsic::numeric::numeric_eigenvalues;
use qsic::realroots::{isolate_real_roots, refine};
use qsic::Pencil;
use std::fmt::Write;

const COLORS: [&str; 4] = ["#1b6ca8", "#d1495b", "#2e933c", "#8d5fd3"];

/// Plots the four eigenvalues of `λA - B` over `[lambda_min, lambda_max]`
/// as an SVG 1.1 document. Real roots of `det(λA - B)` in range are marked
/// on the λ-axis.
pub fn render_eigencurve_svg(
    pencil: &Pencil,
    lambda_min: f64,
    lambda_max: f64,
    width: u32,
    height: u32,
) -> Result<String, CliError> {
    if !(lambda_min.is_finite() && lambda_max.is_finite()) || lambda_min >= lambda_max {
        return Err(CliError::Precondition(format!("empty λ range [{lambda_min}, {lambda_max}]")));
    }
    if width == 0 || height == 0 {
        return Err(CliError::Precondition(format!("image size {width}x{height} has no area")));
    }
    let samples = (width as usize).max(2);
    let span = lambda_max - lambda_min;
    let lams: Vec<f64> = (0..=samples).map(|i| lambda_min + span * i as f64 / samples as f64).collect();
    let eig: Vec<[f64; 4]> = lams.iter().map(|&l| numeric_eigenvalues(pencil, l).eigenvalues).collect();

    let (mut lo, mut hi) = (0.0f64, 0.0f64);
    for e in eig.iter().flatten() {
        lo = lo.min(*e);
        hi = hi.max(*e);
    }
    let pad = ((hi - lo) * 0.05).max(1e-9);
    let (lo, hi) = (lo - pad, hi + pad);
    let (w, h) = (width as f64, height as f64);
    let x = |l: f64| (l - lambda_min) / span * w;
    let y = |u: f64| h - (u - lo) / (hi - lo) * h;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<title>eigenvalue curve of λA - B for λ in [{lambda_min}, {lambda_max}]</title>").unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let y0 = y(0.0);
    writeln!(out, r#"<line class="axis" x1="0" y1="{y0:.3}" x2="{w}" y2="{y0:.3}" stroke="black" stroke-width="1"/>"#).unwrap();
    for (k, color) in COLORS.iter().enumerate() {
        let pts: Vec<String> = lams.iter().zip(&eig).map(|(&l, e)| format!("{:.3},{:.3}", x(l), y(e[k]))).collect();
        writeln!(
            out,
            r#"<polyline class="branch" data-branch="{}" fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            k + 1,
            pts.join(" ")
        )
        .unwrap();
    }
    let tol = rational(1, 1 << 24);
    for root in isolate_real_roots(pencil.characteristic_polynomial()) {
        let root = refine(&root, &tol);
        let l = root.approx_f64();
        if l < lambda_min || l > lambda_max {
            continue;
        }
        writeln!(
            out,
            r#"<circle class="root" cx="{:.3}" cy="{y0:.3}" r="4" fill="none" stroke="black" data-lambda="{l}" data-interval="[{}, {}]" data-multiplicity="{}"/>"#,
            x(l),
            root.lo(),
            root.hi(),
            root.multiplicity()
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
