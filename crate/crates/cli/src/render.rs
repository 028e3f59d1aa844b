//! Lossy visual renderings of a representation.
//!
//! Shared grid edges are genuinely collinear in the model; both renderers
//! pull them apart for legibility.  The SVG view offsets each owner's
//! stroke by 0.15 grid units per layer, so an edge shared by k paths
//! shows as k parallel strokes.  The ASCII view uses one character cell
//! per grid unit at double resolution — lattice points on even cells,
//! edges on the odd cells between them — and marks multi-owned edges
//! with the owner count instead of `-`/`|`.  Both outputs are pure
//! functions of the input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use epg_core::verify::edge_ownership;
use epg_core::{EpgRepresentation, GridEdge};

/// Pixels per grid unit.
const SCALE: f64 = 40.0;
/// Outer margin in pixels.
const MARGIN: f64 = 24.0;
/// Per-layer stroke offset, in grid units.
const LAYER_OFFSET: f64 = 0.15;

fn bounds(rep: &EpgRepresentation) -> Option<(i64, i64, i64, i64)> {
    let mut b: Option<(i64, i64, i64, i64)> = None;
    for path in rep.paths().values() {
        for s in path.segments() {
            for p in [s.a(), s.b()] {
                b = Some(match b {
                    None => (p.x, p.x, p.y, p.y),
                    Some((x0, x1, y0, y1)) => {
                        (x0.min(p.x), x1.max(p.x), y0.min(p.y), y1.max(p.y))
                    }
                });
            }
        }
    }
    b
}

/// The stroke offset of `v` on edge `e`: owners are layered in id order,
/// centered on the true position.
fn layer_offset(owners: &std::collections::BTreeSet<usize>, v: usize) -> f64 {
    let rank = owners.iter().position(|&w| w == v).expect("v owns e") as f64;
    (rank - (owners.len() as f64 - 1.0) / 2.0) * LAYER_OFFSET
}

/// Renders the representation as a standalone SVG document with one
/// `<path>` element and one legend entry per vertex.
pub fn svg(rep: &EpgRepresentation, labels: &BTreeMap<usize, String>) -> String {
    let Some((min_x, max_x, min_y, max_y)) = bounds(rep) else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1\" height=\"1\"/>\n".into();
    };
    let own = edge_ownership(rep);
    let ids = rep.vertex_ids();
    let label_of = |v: usize| labels.get(&v).cloned().unwrap_or_else(|| v.to_string());

    let tx = |x: i64| (x - min_x) as f64 * SCALE + MARGIN;
    let ty = |y: i64| (max_y - y) as f64 * SCALE + MARGIN;
    let draw_w = (max_x - min_x) as f64 * SCALE + 2.0 * MARGIN;
    let legend_w = 40.0
        + 9.0
            * ids
                .iter()
                .map(|&v| label_of(v).len())
                .max()
                .unwrap_or(1) as f64;
    let width = draw_w + legend_w;
    let height = ((max_y - min_y) as f64 * SCALE + 2.0 * MARGIN)
        .max(MARGIN + ids.len() as f64 * 18.0 + MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">"
    );
    let _ = writeln!(out, "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    let color = |i: usize| format!("hsl({}, 70%, 42%)", i * 360 / ids.len().max(1));
    for (i, &v) in ids.iter().enumerate() {
        let mut d = String::new();
        for s in rep.path(v).expect("id comes from the rep").segments() {
            for e in s.unit_edges() {
                let off = layer_offset(&own[&e], v) * SCALE;
                let (p, q) = e.endpoints();
                let (x1, y1, x2, y2) = if e.horizontal {
                    (tx(p.x), ty(p.y) + off, tx(q.x), ty(q.y) + off)
                } else {
                    (tx(p.x) + off, ty(p.y), tx(q.x) + off, ty(q.y))
                };
                let _ = write!(d, "M {x1:.1} {y1:.1} L {x2:.1} {y2:.1} ");
            }
        }
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"3.5\" \
             stroke-linecap=\"round\"/>",
            d.trim_end(),
            color(i)
        );
    }

    // Legend: one swatch and label per vertex.
    for (i, &v) in ids.iter().enumerate() {
        let y = MARGIN + i as f64 * 18.0;
        let _ = writeln!(
            out,
            "  <line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"{}\" \
             stroke-width=\"3.5\"/>",
            draw_w + 6.0,
            draw_w + 26.0,
            color(i)
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"13\">{}</text>",
            draw_w + 32.0,
            y + 4.5,
            escape(&label_of(v))
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the representation as a character grid.
pub fn ascii(rep: &EpgRepresentation) -> String {
    let Some((min_x, max_x, min_y, max_y)) = bounds(rep) else {
        return String::new();
    };
    let own = edge_ownership(rep);
    let cols = 2 * (max_x - min_x) as usize + 1;
    let rows = 2 * (max_y - min_y) as usize + 1;
    let mut canvas = vec![vec![' '; cols]; rows];

    let col = |x: i64| 2 * (x - min_x) as usize;
    let row = |y: i64| 2 * (max_y - y) as usize;

    for path in rep.paths().values() {
        for s in path.segments() {
            for p in s.points() {
                canvas[row(p.y)][col(p.x)] = '+';
            }
        }
    }
    for (e, owners) in &own {
        let glyph = match owners.len() {
            0 | 1 => {
                if e.horizontal {
                    '-'
                } else {
                    '|'
                }
            }
            k => char::from_digit(k.min(9) as u32, 10).expect("k <= 9"),
        };
        let GridEdge { p, horizontal } = *e;
        if horizontal {
            canvas[row(p.y)][col(p.x) + 1] = glyph;
        } else {
            canvas[row(p.y) - 1][col(p.x)] = glyph;
        }
    }

    let mut out = String::new();
    for line in canvas {
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
