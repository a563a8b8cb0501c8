//! Deterministic SVG rendering of the universal-cover picture: the unit
//! grid with its three line families, the segment `(0,0) -> (a,b)`, and
//! the crossing points labeled by their letters.
//!
//! Output is a pure function of the input vector: fixed element order,
//! fixed numeric formatting, no timestamps, so golden files stay stable.

use std::fmt::Write;

use crate::lattice_words::{crossing_points, WordsError};
use crate::rank2_roots::LatticeVector;

const UNIT: f64 = 48.0;
const MARGIN: f64 = 36.0;

fn fmt_len(v: f64) -> String {
    format!("{v:.2}")
}

/// Renders the crossing picture for `[a,b]` in `P+`.
pub fn render(v: LatticeVector) -> Result<String, WordsError> {
    let points = crossing_points(v)?;
    let (a, b) = (v.a(), v.b());
    let width = a as f64 * UNIT + 2.0 * MARGIN;
    let height = b as f64 * UNIT + 2.0 * MARGIN;
    // SVG y grows downward; the picture's y grows upward.
    let tx = |x: f64| MARGIN + x * UNIT;
    let ty = |y: f64| height - MARGIN - y * UNIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt_len(width),
        fmt_len(height),
        fmt_len(width),
        fmt_len(height)
    );
    let _ = writeln!(out, "  <title>crossing word of [{a},{b}]</title>");
    let _ = writeln!(
        out,
        "  <g stroke=\"#b0b0b0\" stroke-width=\"1\" fill=\"none\">"
    );
    // horizontal lines y = j (letter 1)
    for j in 0..=b {
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt_len(tx(0.0)),
            fmt_len(ty(j as f64)),
            fmt_len(tx(a as f64)),
            fmt_len(ty(j as f64))
        );
    }
    // vertical lines x = i (letter 3)
    for i in 0..=a {
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt_len(tx(i as f64)),
            fmt_len(ty(0.0)),
            fmt_len(tx(i as f64)),
            fmt_len(ty(b as f64))
        );
    }
    // anti-diagonals x + y = k (letter 2), clipped to the grid rectangle
    for k in 1..a + b {
        let x0 = (k - b).max(0) as f64;
        let y0 = (k as f64 - x0).min(b as f64);
        let x1 = k.min(a) as f64;
        let y1 = k as f64 - x1;
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt_len(tx(x0)),
            fmt_len(ty(y0)),
            fmt_len(tx(x1)),
            fmt_len(ty(y1))
        );
    }
    let _ = writeln!(out, "  </g>");
    // the segment itself
    let _ = writeln!(
        out,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c02020\" stroke-width=\"2\"/>",
        fmt_len(tx(0.0)),
        fmt_len(ty(0.0)),
        fmt_len(tx(a as f64)),
        fmt_len(ty(b as f64))
    );
    // crossings in parameter order with their letters
    for (num, den, letter) in points {
        let t = num as f64 / den as f64;
        let (cx, cy) = (t * a as f64, t * b as f64);
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#c02020\"/>",
            fmt_len(tx(cx)),
            fmt_len(ty(cy))
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" font-family=\"monospace\" fill=\"#202020\">{}</text>",
            fmt_len(tx(cx) + 5.0),
            fmt_len(ty(cy) - 5.0),
            letter
        );
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
