//! Plots a weight arrangement as a standalone SVG document.
//!
//! Each edge's weight function becomes one line in the (lambda, weight)
//! plane and sweep breakpoints are marked as vertical rules. Rendering is
//! presentational: coordinates go through f64, exactness does not matter
//! here.

use num_traits::ToPrimitive;
use std::fmt::Write;

use crate::graph::EdgeColor;
use crate::rational::{integer, Rational};
use crate::sweep::TreeSequence;
use crate::ParametricGraph;

const WIDTH: f64 = 1000.0;
const HEIGHT: f64 = 600.0;
const PAD: f64 = 40.0;

/// Colors for edges without a construction color, cycled by edge id.
const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

fn css_color(c: EdgeColor) -> &'static str {
    match c {
        EdgeColor::Green => "#1a9850",
        EdgeColor::Red => "#d73027",
        EdgeColor::Blue => "#4575b4",
    }
}

/// The plotted parameter window: one unit beyond the extreme breakpoints,
/// or `[-1, 1]` when the sequence has a single interval.
fn window(seq: &TreeSequence) -> (Rational, Rational) {
    let bps = seq.breakpoints();
    match (bps.first(), bps.last()) {
        (Some(lo), Some(hi)) => (*lo - integer(1), *hi + integer(1)),
        _ => (integer(-1), integer(1)),
    }
}

/// Renders the arrangement of `g`'s weight lines over `seq`'s breakpoint
/// range as an SVG 1.1 document.
pub fn plot(g: &ParametricGraph, seq: &TreeSequence) -> String {
    let (lo, hi) = window(seq);
    let (lo_f, hi_f) = (to_f64(&lo), to_f64(&hi));

    let mut w_min = f64::INFINITY;
    let mut w_max = f64::NEG_INFINITY;
    let mut lines = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let y0 = to_f64(&e.weight.evaluate(&lo));
        let y1 = to_f64(&e.weight.evaluate(&hi));
        w_min = w_min.min(y0.min(y1));
        w_max = w_max.max(y0.max(y1));
        lines.push((y0, y1));
    }
    if !w_min.is_finite() || w_min > w_max {
        (w_min, w_max) = (0.0, 1.0);
    }
    if w_max - w_min < 1e-9 {
        w_min -= 0.5;
        w_max += 0.5;
    }

    let x_of = |lambda: f64| PAD + (lambda - lo_f) / (hi_f - lo_f) * (WIDTH - 2.0 * PAD);
    let y_of = |weight: f64| HEIGHT - PAD - (weight - w_min) / (w_max - w_min) * (HEIGHT - 2.0 * PAD);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r##"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="#999"/>"##,
        WIDTH - 2.0 * PAD,
        HEIGHT - 2.0 * PAD
    );

    for bp in seq.breakpoints() {
        let x = x_of(to_f64(bp));
        let _ = writeln!(
            s,
            r##"<line class="breakpoint" x1="{x:.2}" y1="{PAD}" x2="{x:.2}" y2="{}" stroke="#bbb" stroke-dasharray="4 3"/>"##,
            HEIGHT - PAD
        );
    }

    for (e, (y0, y1)) in g.edges().iter().zip(&lines) {
        let color = match e.metadata.color {
            Some(c) => css_color(c),
            None => PALETTE[e.id % PALETTE.len()],
        };
        let _ = writeln!(
            s,
            r#"<line class="edge" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="1.5"/>"#,
            x_of(lo_f),
            y_of(*y0),
            x_of(hi_f),
            y_of(*y1),
        );
    }

    let _ = writeln!(
        s,
        r##"<text x="{PAD}" y="{}" font-size="12" fill="#333">lambda = {lo}</text>"##,
        HEIGHT - PAD + 16.0
    );
    let _ = writeln!(
        s,
        r##"<text x="{}" y="{}" font-size="12" fill="#333" text-anchor="end">lambda = {hi}</text>"##,
        WIDTH - PAD,
        HEIGHT - PAD + 16.0
    );
    s.push_str("</svg>\n");
    s
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational in plotting range")
}
