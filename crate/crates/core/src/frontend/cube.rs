//! Structure coordinates drawn on the cube, as text or SVG.
//!
//! Vertex `(x, y, z)` sits in the octant given by the label's factor
//! polarities. The drawing is an oblique projection: `+y` recedes up and to
//! the right.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::algebra::Multivector;
use crate::clusters::{to_structure_coords, Label, StructureCoords};
use crate::error::{Error, Result};

/// Coordinates at or below this magnitude draw as zero.
pub const ZERO_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeFormat {
    Ascii,
    Svg,
}

impl FromStr for CubeFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(CubeFormat::Ascii),
            "svg" => Ok(CubeFormat::Svg),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

pub fn render_cube(m: &Multivector, format: CubeFormat) -> String {
    let coords = to_structure_coords(m);
    match format {
        CubeFormat::Ascii => ascii(m, &coords),
        CubeFormat::Svg => svg(&coords),
    }
}

/// `"+"`, `"-"` or `"0"`.
pub fn glyph(v: f64) -> char {
    if v.abs() <= ZERO_TOLERANCE {
        '0'
    } else if v > 0.0 {
        '+'
    } else {
        '-'
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

/// The twelve edges as label pairs differing in one factor.
fn edges() -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for a in Label::ALL {
        for bit in [1u8, 2, 4] {
            let b = Label::from_negative_mask(a.negative_mask() ^ bit);
            if a.negative_mask() < b.negative_mask() {
                out.push((a, b));
            }
        }
    }
    out
}

const ROWS: usize = 13;
const COLS: usize = 46;

fn cell(l: Label) -> (usize, usize) {
    let [x, y, z] = l.vertex();
    let row = if z > 0 { 0 } else { 8 } + if y > 0 { 0 } else { 4 };
    let col = if x > 0 { 28 } else { 8 } + if y > 0 { 8 } else { 0 };
    (row, col)
}

fn ascii(m: &Multivector, coords: &StructureCoords) -> String {
    let mut grid = vec![vec![' '; COLS]; ROWS];
    // Back edges go down first so the front face draws over them.
    let mut ordered = edges();
    ordered.sort_by_key(|(a, b)| -(a.vertex()[1] as i32 + b.vertex()[1] as i32));
    for (a, b) in ordered {
        let ((r0, c0), (r1, c1)) = (cell(a), cell(b));
        if r0 == r1 {
            for cell in &mut grid[r0][c0.min(c1) + 2..c0.max(c1) - 1] {
                *cell = '-';
            }
        } else if c0 == c1 {
            for row in grid.iter_mut().take(r0.max(r1)).skip(r0.min(r1) + 1) {
                row[c0] = '|';
            }
        } else {
            // Depth edge: front vertex is lower-left of the back one.
            let (fr, fc) = if r0 > r1 { (r0, c0) } else { (r1, c1) };
            for k in 1..4 {
                grid[fr - k][fc + 2 * k] = '/';
            }
        }
    }
    for l in Label::ALL {
        let (r, c) = cell(l);
        let mark = ['[', glyph(coords.get(l)), ']'];
        for (k, ch) in mark.into_iter().enumerate() {
            grid[r][c - 1 + k] = ch;
        }
        let name: Vec<char> = l.name().chars().collect();
        if l.vertex()[0] > 0 {
            for (k, ch) in name.iter().enumerate() {
                grid[r][c + 3 + k] = *ch;
            }
        } else {
            let start = c - 2 - name.len();
            for (k, ch) in name.iter().enumerate() {
                grid[r][start + k] = *ch;
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "m = {m}");
    out.push('\n');
    for row in grid {
        let line: String = row.into_iter().collect();
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out.push('\n');
    for (l, v) in coords.iter() {
        let [x, y, z] = l.vertex();
        let _ = writeln!(
            out,
            "{:<4} ({},{},{})  {}  {}",
            l.name(),
            sign_char(x),
            sign_char(y),
            sign_char(z),
            glyph(v),
            v
        );
    }
    out
}

const POSITIVE_FILL: &str = "#2ca02c";
const NEGATIVE_FILL: &str = "#1f77b4";

fn point(l: Label) -> (f64, f64) {
    let [x, y, z] = l.vertex().map(f64::from);
    (
        70.0 + (x + 1.0) * 80.0 + (y + 1.0) * 35.0,
        60.0 + (1.0 - z) * 80.0 + (1.0 - y) * 35.0,
    )
}

fn svg(coords: &StructureCoords) -> String {
    let max = coords.iter().fold(0.0f64, |acc, (_, v)| acc.max(v.abs()));
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"380\" height=\"340\" viewBox=\"0 0 380 340\">\n",
    );
    out.push_str("  <rect width=\"380\" height=\"340\" fill=\"white\"/>\n");
    for (a, b) in edges() {
        let ((x0, y0), (x1, y1)) = (point(a), point(b));
        let _ = writeln!(
            out,
            "  <line x1=\"{x0:.1}\" y1=\"{y0:.1}\" x2=\"{x1:.1}\" y2=\"{y1:.1}\" stroke=\"#999999\" stroke-width=\"1.5\"/>"
        );
    }
    for (l, v) in coords.iter() {
        let (x, y) = point(l);
        let style = match glyph(v) {
            '0' => "fill=\"white\" stroke=\"#444444\" stroke-width=\"1.5\"".to_string(),
            '+' => format!("fill=\"{POSITIVE_FILL}\""),
            _ => format!("fill=\"{NEGATIVE_FILL}\""),
        };
        let r = if glyph(v) == '0' {
            5.0
        } else {
            5.0 + 10.0 * v.abs() / max
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{r:.2}\" {style}/>"
        );
        let name = l.name();
        let text = match name.strip_suffix("bar") {
            Some(base) => format!("<tspan text-decoration=\"overline\">{base}</tspan>"),
            None => name.to_string(),
        };
        let tx = if l.vertex()[0] > 0 {
            x + 18.0
        } else {
            x - 18.0
        };
        let anchor = if l.vertex()[0] > 0 { "start" } else { "end" };
        let _ = writeln!(
            out,
            "  <text x=\"{tx:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"{anchor}\">{text} {v}</text>",
            y + 4.0
        );
    }
    out.push_str("</svg>\n");
    out
}
