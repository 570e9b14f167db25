//! Static SVG drawings of complexes, for figures only.
//!
//! Coordinates are converted to floating point here and nowhere else.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::PlanarComplex;
use crate::exactgeom::Vec2;

fn f(q: &crate::Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// Draws each complex in its color. Rays are cut at a margin around all
/// vertices; stroke width grows with the weight.
pub fn render(layers: &[(&PlanarComplex, &str)]) -> String {
    let pts: Vec<&Vec2> = layers.iter().flat_map(|(c, _)| c.vertices()).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (-1.0f64, -1.0f64, 1.0f64, 1.0f64);
    for p in &pts {
        x0 = x0.min(f(&p.x));
        y0 = y0.min(f(&p.y));
        x1 = x1.max(f(&p.x));
        y1 = y1.max(f(&p.y));
    }
    let margin = 0.3 * (x1 - x0).max(y1 - y0) + 1.0;
    let (x0, y0, x1, y1) = (x0 - margin, y0 - margin, x1 + margin, y1 + margin);
    let reach = 2.0 * (x1 - x0 + y1 - y0);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {} {} {}" width="480" height="480">"#,
        -y1,
        x1 - x0,
        y1 - y0
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" fill="none" stroke-linecap="round">"#);
    let unit = (x1 - x0) / 200.0;
    for (c, color) in layers {
        for e in c.edges() {
            let a = &c.vertices()[e.start];
            let (ax, ay) = (f(&a.x), f(&a.y));
            let weight = f(&e.weight.norm_sq()).sqrt();
            let (bx, by) = match e.end {
                Some(j) => (f(&c.vertices()[j].x), f(&c.vertices()[j].y)),
                None => {
                    let (dx, dy) = (f(&e.weight.x), f(&e.weight.y));
                    let n = (dx * dx + dy * dy).sqrt();
                    (ax + reach * dx / n, ay + reach * dy / n)
                }
            };
            let _ = writeln!(
                out,
                r#"<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{color}" stroke-width="{}"/>"#,
                unit * (1.0 + weight.log2().max(0.0))
            );
        }
        for v in c.vertices() {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}" fill="{color}"/>"#,
                f(&v.x),
                f(&v.y),
                2.0 * unit
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
