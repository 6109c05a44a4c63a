//! Deterministic SVG renderings of the six figures.
//!
//! Every coordinate is an integer and elements are emitted in a fixed
//! order, so equal parameters always give byte-identical documents.

use std::fmt::Write;

use enumerlab_core::budget::Budget;
use enumerlab_core::listmatrix::entry;
use enumerlab_core::pairing::{node_to_pair, row_label, NodeAddr, ZigzagWalk};
use enumerlab_core::tree::children;
use enumerlab_core::Error;
use num_traits::ToPrimitive;

/// Hard cap on drawn elements, applied on top of the enumeration budget.
pub const RENDER_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, Default)]
pub struct FigParams {
    pub depth: Option<u64>,
    pub rows: Option<u64>,
    pub cols: Option<u64>,
    pub grid: Option<u64>,
    pub diagonals: Option<u64>,
}

const MARGIN: i64 = 40;
const STEP: i64 = 30;
const CELL_W: i64 = 24;
const CELL_H: i64 = 20;

struct Svg {
    body: String,
    width: i64,
    height: i64,
}

impl Svg {
    fn new(width: i64, height: i64) -> Self {
        Svg {
            body: String::new(),
            width,
            height,
        }
    }

    fn line(&mut self, class: &str, (x1, y1): (i64, i64), (x2, y2): (i64, i64)) {
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
        );
    }

    fn text(&mut self, class: &str, (x, y): (i64, i64), content: impl std::fmt::Display) {
        let _ = writeln!(
            self.body,
            r#"  <text class="{class}" x="{x}" y="{y}">{content}</text>"#
        );
    }

    fn dot(&mut self, class: &str, (x, y): (i64, i64)) {
        let _ = writeln!(self.body, r#"  <circle class="{class}" cx="{x}" cy="{y}" r="3"/>"#);
    }

    fn polyline(&mut self, class: &str, points: &[(i64, i64)]) {
        if points.len() < 2 {
            return;
        }
        let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(self.body, r#"  <polyline class="{class}" points="{}"/>"#, pts.join(" "));
    }

    fn finish(self, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
        let _ = writeln!(out, "  <title>{title}</title>");
        out.push_str(concat!(
            "  <style>\n",
            "    line.grid { stroke: #999; stroke-width: 1 }\n",
            "    line.edge, line.projection { stroke: #000; stroke-width: 2 }\n",
            "    polyline.walk { fill: none; stroke: #000; stroke-width: 2 }\n",
            "    text { font-family: monospace; font-size: 12px; text-anchor: middle }\n",
            "  </style>\n"
        ));
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn check(items: u64, budget: Budget) -> Result<(), Error> {
    budget.check_count(items)?;
    Budget::new(RENDER_LIMIT).expect("nonzero").check_count(items)
}

fn grid_point(m: u64, n: u64) -> (i64, i64) {
    (MARGIN + STEP * m as i64, MARGIN + STEP * n as i64)
}

/// Grid lines for columns and rows `0..size`, labelled along the top and left.
fn grid(svg: &mut Svg, size: u64) {
    let last = size.saturating_sub(1);
    for k in 0..size {
        svg.line("grid", grid_point(k, 0), grid_point(k, last));
        svg.line("grid", grid_point(0, k), grid_point(last, k));
    }
    for k in 0..size {
        let (x, _) = grid_point(k, 0);
        svg.text("col", (x, MARGIN - 16), k);
        let (_, y) = grid_point(0, k);
        svg.text("row", (MARGIN - 20, y + 4), k);
    }
}

fn grid_svg(size: u64) -> Svg {
    let extent = 2 * MARGIN + STEP * size.saturating_sub(1) as i64;
    Svg::new(extent, extent)
}

pub fn render_figure(n: u8, params: &FigParams, budget: Budget) -> Result<String, Error> {
    match n {
        1 => figure1(params, budget),
        2 => figure2(params, budget),
        3 => figure3(params, budget),
        4 => figure4(params, budget),
        5 => figure5(params, budget),
        6 => figure6(params, budget),
        _ => unreachable!("figure number validated by the argument parser"),
    }
}

fn figure1(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let size = p.grid.unwrap_or(10);
    check(size.saturating_mul(size), budget)?;
    let mut svg = grid_svg(size);
    grid(&mut svg, size);
    Ok(svg.finish("Figure 1: the grid N x N"))
}

fn figure2(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let depth = p.depth.unwrap_or(4);
    if depth >= 16 {
        return Err(Error::DepthLimit {
            requested: num_bigint::BigUint::from(1u32) << (depth + 1),
            budget: RENDER_LIMIT,
        });
    }
    check((1u64 << (depth + 1)) - 1, budget)?;
    let leaf_gap = 24i64;
    let level_gap = 80i64;
    let height = leaf_gap * (1i64 << depth) + 2 * MARGIN;
    let width = level_gap * depth as i64 + 2 * MARGIN;
    let mut svg = Svg::new(width, height);
    let pos = |a: &NodeAddr| -> (i64, i64) {
        let k = a.level();
        let j = a.offset().to_i64().expect("small tree");
        let half = (leaf_gap / 2) << (depth - k);
        (MARGIN + level_gap * k as i64, MARGIN + (2 * j + 1) * half)
    };
    let mut frontier = vec![NodeAddr::root()];
    svg.dot("node", pos(&frontier[0]));
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for node in &frontier {
            let from = pos(node);
            let (zero, one) = children(node);
            for (child, label) in [(zero, 0), (one, 1)] {
                let to = pos(&child);
                svg.line("edge", from, to);
                svg.text("branch", ((from.0 + to.0) / 2, (from.1 + to.1) / 2 - 4), label);
                svg.dot("node", to);
                next.push(child);
            }
        }
        frontier = next;
    }
    for k in 1..=depth {
        svg.text("level", (MARGIN + level_gap * k as i64, height - 10), k);
    }
    Ok(svg.finish("Figure 2: the binary tree"))
}

fn figure3(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let depth = p.depth.unwrap_or(3);
    if depth >= 12 {
        return Err(Error::DepthLimit {
            requested: num_bigint::BigUint::from(1u32) << (2 * depth),
            budget: RENDER_LIMIT,
        });
    }
    let size = p.grid.unwrap_or(10).max(1 << depth);
    check(size.saturating_mul(size), budget)?;
    let mut svg = grid_svg(size);
    grid(&mut svg, size);
    let at = |a: &NodeAddr| {
        let q = node_to_pair(a);
        grid_point(q.m.to_u64().expect("small"), q.n.to_u64().expect("small"))
    };
    let mut frontier = vec![NodeAddr::root()];
    svg.dot("node", at(&frontier[0]));
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for node in &frontier {
            let (zero, one) = children(node);
            for child in [zero, one] {
                svg.line("projection", at(node), at(&child));
                svg.dot("node", at(&child));
                next.push(child);
            }
        }
        frontier = next;
    }
    Ok(svg.finish("Figure 3: the tree projected on the grid"))
}

fn figure4(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let diagonals = p.diagonals.unwrap_or(4);
    let size = p.grid.unwrap_or(10).max(diagonals);
    let steps = diagonals.saturating_mul(diagonals + 1) / 2;
    check(size.saturating_mul(size).max(steps), budget)?;
    let mut svg = grid_svg(size);
    grid(&mut svg, size);
    let points: Vec<(u64, u64)> = ZigzagWalk::new().take(steps as usize).collect();
    let drawn: Vec<(i64, i64)> = points.iter().map(|&(m, n)| grid_point(m, n)).collect();
    svg.polyline("walk", &drawn);
    for (i, &(x, y)) in drawn.iter().enumerate() {
        svg.text("index", (x + 9, y - 5), i);
    }
    Ok(svg.finish("Figure 4: the zigzag walk"))
}

fn cell(r: u64, c: u64) -> (i64, i64) {
    (MARGIN + 20 + CELL_W * c as i64, MARGIN + CELL_H * r as i64)
}

fn matrix(svg: &mut Svg, rows: u64, cols: u64) {
    for c in 0..cols {
        let (x, _) = cell(0, c);
        svg.text("col", (x, MARGIN - CELL_H), c);
    }
    for r in 0..rows {
        for c in 0..cols {
            let (x, y) = cell(r, c);
            svg.text("bit", (x, y), entry(r, c));
        }
    }
}

fn matrix_svg(rows: u64, cols: u64) -> Svg {
    Svg::new(
        2 * MARGIN + 20 + CELL_W * cols as i64,
        2 * MARGIN + CELL_H * rows as i64,
    )
}

fn figure5(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let rows = p.rows.unwrap_or(17);
    let cols = p.cols.unwrap_or(5);
    check(rows.saturating_mul(cols), budget)?;
    let mut svg = matrix_svg(rows, cols);
    matrix(&mut svg, rows, cols);
    for r in 0..rows {
        let (_, y) = cell(r, 0);
        svg.text("row", (MARGIN - 10, y), r);
    }
    Ok(svg.finish("Figure 5: the truth-table matrix"))
}

fn figure6(p: &FigParams, budget: Budget) -> Result<String, Error> {
    let rows = p.rows.unwrap_or(7);
    let cols = p.cols.unwrap_or(rows).max(rows);
    check(rows.saturating_mul(cols), budget)?;
    let mut svg = matrix_svg(rows, cols);
    matrix(&mut svg, rows, cols);
    for r in 0..rows {
        let (_, y) = cell(r, 0);
        svg.text("label", (MARGIN - 10, y), row_label(r));
    }
    if rows > 0 {
        let steps = row_label(rows - 1).to_u64().expect("small") + 1;
        let path: Vec<(i64, i64)> = ZigzagWalk::new()
            .take(steps as usize)
            .map(|(m, n)| {
                let (x, y) = cell(n, m);
                (x, y - 4)
            })
            .collect();
        svg.polyline("walk", &path);
    }
    Ok(svg.finish("Figure 6: zigzag labels over the matrix"))
}
