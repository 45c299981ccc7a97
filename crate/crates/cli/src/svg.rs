//! Static SVG drawing of a Newton diagram: vertices, compact faces and the
//! two unbounded rays.

use std::fmt::Write;

use polar_core::NewtonDiagram;

const SIZE: f64 = 420.0;
const MARGIN: f64 = 40.0;

pub fn render(d: &NewtonDiagram) -> String {
    let vs = d.vertices();
    let extent = vs.iter().flat_map(|&(a, b)| [a, b]).max().unwrap_or(0).max(1) as f64 + 1.0;
    let unit = (SIZE - 2.0 * MARGIN) / extent;
    let px = |a: f64| MARGIN + a * unit;
    let py = |b: f64| SIZE - MARGIN - b * unit;

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let (o, top, right) = (px(0.0), py(extent), px(extent));
    let _ = writeln!(s, r##"<path d="M {o} {top} L {o} {y0} L {right} {y0}" stroke="#888888" fill="none"/>"##, y0 = py(0.0));

    let first = vs[0];
    let last = vs[vs.len() - 1];
    let mut path = format!("M {} {}", px(first.0 as f64), top);
    for &(a, b) in vs {
        let _ = write!(path, " L {} {}", px(a as f64), py(b as f64));
    }
    let _ = write!(path, " L {} {}", right, py(last.1 as f64));
    let _ = writeln!(s, r##"<path d="{path}" stroke="#1f4e8c" stroke-width="2" fill="#dce6f2" fill-opacity="0.6"/>"##);

    for &(a, b) in vs {
        let (x, y) = (px(a as f64), py(b as f64));
        let _ = writeln!(s, r##"<circle cx="{x}" cy="{y}" r="3.5" fill="#1f4e8c"/>"##);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-family="monospace" font-size="12">({a},{b})</text>"#, x + 6.0, y - 6.0);
    }
    s.push_str("</svg>\n");
    s
}
