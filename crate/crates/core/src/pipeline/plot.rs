//! Static SVG scatter plots of persistence diagrams.

use std::fmt::Write as _;
use std::path::Path;

use crate::diagram::PersistenceDiagram;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 50.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Marker shape for a homology dimension; dimensions above 3 reuse the cross.
fn marker(dim: usize, x: f64, y: f64) -> String {
    let color = COLORS[dim.min(COLORS.len() - 1)];
    let r = 4.0;
    match dim {
        0 => format!(r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r}" fill="{color}" fill-opacity="0.7"/>"#),
        1 => format!(
            r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="{color}" fill-opacity="0.7"/>"#,
            x,
            y - r,
            x - r,
            y + r,
            x + r,
            y + r
        ),
        2 => format!(
            r#"<rect x="{:.2}" y="{:.2}" width="{}" height="{}" fill="{color}" fill-opacity="0.7"/>"#,
            x - r,
            y - r,
            2.0 * r,
            2.0 * r
        ),
        _ => format!(
            r#"<path d="M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}" stroke="{color}" stroke-width="2"/>"#,
            x - r,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r,
            x + r,
            y - r
        ),
    }
}

fn label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// Renders a finite diagram: axes, the diagonal, one marker style per
/// dimension and a legend of the dimensions present.
///
/// # Panics
/// If the diagram has an essential point; regularize it first.
pub fn render_svg(diagram: &PersistenceDiagram, title: &str) -> String {
    assert!(
        diagram.points().iter().all(|p| !p.is_essential()),
        "plot a regularized diagram"
    );
    let lo = diagram.points().iter().map(|p| p.birth).fold(0.0, f64::min);
    let mut hi = diagram.points().iter().map(|p| p.death).fold(lo, f64::max);
    if hi <= lo {
        hi = lo + 1.0;
    }
    let plot = SIZE - 2.0 * MARGIN;
    let sx = |v: f64| MARGIN + (v - lo) / (hi - lo) * plot;
    let sy = |v: f64| SIZE - MARGIN - (v - lo) / (hi - lo) * plot;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" text-anchor="middle" font-size="13">{}</text>"#,
        SIZE / 2.0,
        escape(title)
    );
    // axes
    let (x0, y0, x1, y1) = (sx(lo), sy(lo), sx(hi), sy(hi));
    let _ = writeln!(
        s,
        r#"<path d="M{x0:.2},{y1:.2}L{x0:.2},{y0:.2}L{x1:.2},{y0:.2}" fill="none" stroke="black"/>"#
    );
    for k in 0..=4 {
        let v = lo + (hi - lo) * k as f64 / 4.0;
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{y0:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            sx(v),
            sx(v),
            y0 + 4.0,
            sx(v),
            y0 + 16.0,
            label(v)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{x0:.2}" y2="{:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 4.0,
            sy(v),
            sy(v),
            x0 - 6.0,
            sy(v) + 4.0,
            label(v)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">birth</text>"#,
        SIZE / 2.0,
        SIZE - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" text-anchor="middle" transform="rotate(-90 14 {})">death</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );
    let _ = writeln!(
        s,
        r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="grey" stroke-dasharray="4 3"/>"#
    );

    for p in diagram.points() {
        let _ = writeln!(s, "{}", marker(p.dim, sx(p.birth), sy(p.death)));
    }

    let mut dims: Vec<usize> = diagram.points().iter().map(|p| p.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    for (i, &d) in dims.iter().enumerate() {
        let y = MARGIN + 8.0 + 16.0 * i as f64;
        let x = SIZE - MARGIN - 40.0;
        let _ = writeln!(s, "{}", marker(d, x, y));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">H{d}</text>"#, x + 10.0, y + 4.0);
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Writes [`render_svg`] output to `path`.
pub fn plot_diagram(diagram: &PersistenceDiagram, title: &str, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(diagram, title))
}
