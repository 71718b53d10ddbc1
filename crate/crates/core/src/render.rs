//! ASCII and SVG pictures of diagrams and tableaux.
//!
//! Everything is first placed on a grid of unit squares in plane coordinates:
//! a square is named by its east edge `x` and south edge `y`. Tower cells sit
//! in the first quadrant, virtual cells are reflected across `x + y = 0` into
//! the third, and Rothe cells `(row, col)` hang below the axis in the fourth.

use std::fmt::Write;

use crate::balanced::RotheLabeling;
use crate::perm::RotheDiagram;
use crate::rothify::CompleteTowerTableau;
use crate::tableau::TowerTableau;
use crate::tower::TowerDiagram;

#[derive(Clone, Debug)]
pub enum Drawable {
    Diagram(TowerDiagram),
    Tableau(TowerTableau),
    Complete(CompleteTowerTableau),
    Rothe(RotheLabeling),
    RotheShape(RotheDiagram),
}

#[derive(Clone, Debug)]
struct Square {
    x: i64,
    y: i64,
    text: Option<String>,
}

#[derive(Clone, Debug, Default)]
struct Grid {
    squares: Vec<Square>,
    /// columns `x_lo + 1 ..= x_hi`
    x_lo: i64,
    x_hi: i64,
    /// rows `y_lo ..= y_hi - 1`
    y_lo: i64,
    y_hi: i64,
    axes: bool,
}

impl Grid {
    fn fit(squares: Vec<Square>, axes: bool) -> Grid {
        let mut g = Grid {
            axes,
            ..Grid::default()
        };
        for s in &squares {
            g.x_lo = g.x_lo.min(s.x - 1);
            g.x_hi = g.x_hi.max(s.x);
            g.y_lo = g.y_lo.min(s.y);
            g.y_hi = g.y_hi.max(s.y + 1);
        }
        g.squares = squares;
        g
    }

    fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    fn at(&self, x: i64, y: i64) -> Option<&Square> {
        self.squares.iter().find(|s| s.x == x && s.y == y)
    }
}

fn tower_squares(t: &TowerTableau, labelled: bool) -> Vec<Square> {
    t.cells()
        .map(|(c, v)| Square {
            x: c.col as i64,
            y: c.ht as i64,
            text: labelled.then(|| v.to_string()),
        })
        .collect()
}

fn virtual_squares(t: &TowerTableau) -> Vec<Square> {
    t.cells()
        .map(|(c, v)| Square {
            x: -(c.ht as i64),
            y: -(c.col as i64),
            text: Some(v.to_string()),
        })
        .collect()
}

fn rothe_squares(cells: impl Iterator<Item = ((usize, usize), Option<usize>)>) -> Vec<Square> {
    cells
        .map(|((row, col), v)| Square {
            x: col as i64,
            y: -(row as i64),
            text: v.map(|v| v.to_string()),
        })
        .collect()
}

fn grid_of(d: &Drawable) -> Grid {
    match d {
        Drawable::Diagram(shape) => {
            let filled = TowerTableau::natural(shape);
            Grid::fit(tower_squares(&filled, false), true)
        }
        Drawable::Tableau(t) => Grid::fit(tower_squares(t, true), true),
        Drawable::Complete(c) => {
            let mut squares = tower_squares(&c.main, true);
            squares.extend(virtual_squares(&c.virtual_tableau));
            squares.extend(rothe_squares(
                c.rothify()
                    .labels()
                    .iter()
                    .map(|(&cell, &v)| (cell, Some(v))),
            ));
            Grid::fit(squares, true)
        }
        Drawable::Rothe(l) => rothe_square_grid(rothe_squares(
            l.labels().iter().map(|(&cell, &v)| (cell, Some(v))),
        )),
        Drawable::RotheShape(d) => {
            rothe_square_grid(rothe_squares(d.cells.iter().map(|&cell| (cell, None))))
        }
    }
}

/// The `n × n` square holding the cells, without axes.
fn rothe_square_grid(squares: Vec<Square>) -> Grid {
    let mut g = Grid::fit(squares, false);
    let n = g.x_hi.max(-g.y_lo);
    g.x_hi = n;
    g.y_lo = -n;
    g
}

pub fn ascii(d: &Drawable) -> String {
    let g = grid_of(d);
    if g.is_empty() {
        return String::new();
    }
    let width = g
        .squares
        .iter()
        .filter_map(|s| s.text.as_ref().map(String::len))
        .max()
        .unwrap_or(1);
    let split_x = g.axes && g.x_lo < 0;
    let mut out = String::new();
    let rule = |out: &mut String| {
        let mut line = String::new();
        for x in g.x_lo + 1..=g.x_hi {
            if split_x && x == 1 {
                line.push('+');
            }
            line.push_str(&"-".repeat(width + 1));
        }
        out.push_str(line.trim_end_matches(' '));
        out.push('\n');
    };
    for y in (g.y_lo..g.y_hi).rev() {
        let mut line = String::new();
        for x in g.x_lo + 1..=g.x_hi {
            if split_x && x == 1 {
                line.push('|');
            }
            let slot = match g.at(x, y) {
                Some(Square { text: Some(t), .. }) => format!("{t:>width$}"),
                Some(Square { text: None, .. }) => "#".repeat(width),
                None => format!("{:>width$}", "."),
            };
            line.push_str(&slot);
            line.push(' ');
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if g.axes && y == 0 {
            rule(&mut out);
        }
    }
    out
}

const UNIT: i64 = 10;
const MARGIN: i64 = 5;

pub fn svg(d: &Drawable) -> String {
    let g = grid_of(d);
    let cols = g.x_hi - g.x_lo;
    let rows = g.y_hi - g.y_lo;
    let w = cols * UNIT + 2 * MARGIN;
    let h = rows * UNIT + 2 * MARGIN;
    // plane coordinates to SVG user units
    let px = |x: i64| (x - g.x_lo) * UNIT + MARGIN;
    let py = |y: i64| (g.y_hi - y) * UNIT + MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    if !g.is_empty() {
        out.push_str(r##"<g stroke="#bbbbbb" stroke-width="0.3" stroke-dasharray="1,1">"##);
        out.push('\n');
        for x in g.x_lo..=g.x_hi {
            writeln!(
                out,
                r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
                px(x),
                py(g.y_hi),
                py(g.y_lo)
            )
            .unwrap();
        }
        for y in g.y_lo..=g.y_hi {
            writeln!(
                out,
                r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
                py(y),
                px(g.x_lo),
                px(g.x_hi)
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    if g.axes && !g.is_empty() {
        writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="0.8"/>"#,
            px(g.x_lo),
            px(g.x_hi),
            y = py(0)
        )
        .unwrap();
        writeln!(
            out,
            r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black" stroke-width="0.8"/>"#,
            py(g.y_hi),
            py(g.y_lo),
            x = px(0)
        )
        .unwrap();
    }
    for s in &g.squares {
        let (left, top) = (px(s.x - 1), py(s.y + 1));
        let fill = if s.text.is_some() { "white" } else { "#dddddd" };
        writeln!(
            out,
            r#"<rect x="{left}" y="{top}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="black" stroke-width="0.5"/>"#
        )
        .unwrap();
        if let Some(t) = &s.text {
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="6" font-family="monospace" text-anchor="middle" dominant-baseline="central">{t}</text>"#,
                left + UNIT / 2,
                top + UNIT / 2
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
