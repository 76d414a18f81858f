//! SVG charts: stem across, filtration up, weight projected out.

use crate::gradedalg::{Order, Summand, TriDeg};
use crate::sliceassembly::Page;
use std::collections::BTreeMap;
use std::fmt::Write;

const CELL: f64 = 48.0;
const MARGIN: f64 = 40.0;
const LEGEND_W: f64 = 230.0;

/// Shape classes used on charts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Glyph {
    /// Z/2, drawn as a bullet
    Bullet,
    /// Z, an open square
    Free,
    /// Z/2^n with n > 1, a square with subscript n
    Cyclic,
    /// iota-marked (cokernel) class, a triangle
    Triangle,
    /// a named 2-power multiple (kernel class), a diamond
    Diamond,
}

impl Glyph {
    pub const ALL: [Glyph; 5] = [Glyph::Bullet, Glyph::Free, Glyph::Cyclic, Glyph::Triangle, Glyph::Diamond];

    pub fn of(s: &Summand) -> Glyph {
        let m = s.name.single();
        if m.is_some_and(|m| m.iota) {
            Glyph::Triangle
        } else if m.is_some_and(|m| m.two > 0) {
            Glyph::Diamond
        } else {
            match s.order {
                Order::Free => Glyph::Free,
                Order::Tor(1) => Glyph::Bullet,
                Order::Tor(_) => Glyph::Cyclic,
            }
        }
    }

    pub fn legend(self) -> &'static str {
        match self {
            Glyph::Bullet => "Z/2",
            Glyph::Free => "Z",
            Glyph::Cyclic => "Z/2^n (n shown)",
            Glyph::Triangle => "iota class, order 2^n",
            Glyph::Diamond => "2-divisible class, order 2^n",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChartSpec {
    pub title: String,
    pub s: (i32, i32),
    pub f: (i32, i32),
    pub legend: Vec<Glyph>,
    pub arrows: bool,
}

impl ChartSpec {
    pub fn for_page(page: &Page, title: impl Into<String>) -> ChartSpec {
        let w = page.window;
        ChartSpec { title: title.into(), s: (w.s.lo, w.s.hi), f: (w.f.lo, w.f.hi), legend: Glyph::ALL.to_vec(), arrows: true }
    }
}

fn x(spec: &ChartSpec, s: f64) -> f64 {
    MARGIN + (s - spec.s.0 as f64 + 0.5) * CELL
}

fn y(spec: &ChartSpec, f: f64) -> f64 {
    MARGIN + (spec.f.1 as f64 - f + 0.5) * CELL
}

fn subscript(s: &Summand) -> Option<u32> {
    match s.order {
        Order::Tor(n) if n > 1 => Some(n),
        _ => None,
    }
}

fn draw(out: &mut String, g: Glyph, cx: f64, cy: f64, r: f64, sub: Option<u32>) {
    match g {
        Glyph::Bullet => writeln!(out, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}" fill="black"/>"#, r * 0.7),
        Glyph::Free | Glyph::Cyclic => writeln!(
            out,
            r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="white" stroke="black"/>"#,
            cx - r,
            cy - r,
            2.0 * r,
            2.0 * r
        ),
        Glyph::Triangle => writeln!(
            out,
            r#"<polygon points="{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}" fill="white" stroke="black"/>"#,
            cx,
            cy - r,
            cx - r,
            cy + r,
            cx + r,
            cy + r
        ),
        Glyph::Diamond => writeln!(
            out,
            r#"<polygon points="{:.1},{:.1} {:.1},{:.1} {:.1},{:.1} {:.1},{:.1}" fill="white" stroke="black"/>"#,
            cx,
            cy - r,
            cx + r,
            cy,
            cx,
            cy + r,
            cx - r,
            cy
        ),
    }
    .unwrap();
    if let Some(n) = sub {
        writeln!(out, r#"<text x="{:.1}" y="{:.1}" font-size="7" text-anchor="middle">{n}</text>"#, cx, cy + r * 0.45).unwrap();
    }
}

/// Positions of every summand of the page inside its (s, f) cell.
fn layout(spec: &ChartSpec, page: &Page) -> BTreeMap<(TriDeg, usize), (f64, f64, f64)> {
    let mut cells: BTreeMap<(i32, i32), Vec<(TriDeg, usize)>> = BTreeMap::new();
    for (d, g) in &page.groups {
        if d.s < spec.s.0 || d.s > spec.s.1 || d.f < spec.f.0 || d.f > spec.f.1 {
            continue;
        }
        for i in 0..g.len() {
            cells.entry((d.s, d.f)).or_default().push((*d, i));
        }
    }
    let mut pos = BTreeMap::new();
    for ((s, f), items) in cells {
        let n = items.len();
        let cols = (n as f64).sqrt().ceil() as usize;
        let rows = n.div_ceil(cols);
        let step = CELL / (cols.max(rows) as f64 + 1.0);
        let r = (step * 0.4).min(6.0);
        for (k, key) in items.into_iter().enumerate() {
            let (i, j) = (k / cols, k % cols);
            let cx = x(spec, s as f64) - CELL / 2.0 + step * (j as f64 + 1.0);
            let cy = y(spec, f as f64) - CELL / 2.0 + step * (i as f64 + 1.0);
            pos.insert(key, (cx, cy, r));
        }
    }
    pos
}

/// Render a page. Each summand in range becomes one glyph; nonzero matrix entries of
/// the differential become line segments.
pub fn render_svg(spec: &ChartSpec, page: &Page) -> String {
    let width = 2.0 * MARGIN + (spec.s.1 - spec.s.0 + 1) as f64 * CELL + LEGEND_W;
    let height = 2.0 * MARGIN + (spec.f.1 - spec.f.0 + 1) as f64 * CELL;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" font-family="sans-serif">"#
    )
    .unwrap();
    writeln!(out, r#"<title>{}</title>"#, escape(&spec.title)).unwrap();
    writeln!(out, r#"<g stroke="lightgray" stroke-width="0.5">"#).unwrap();
    for s in spec.s.0..=spec.s.1 + 1 {
        let xx = x(spec, s as f64 - 0.5);
        writeln!(out, r#"<line x1="{xx:.1}" y1="{:.1}" x2="{xx:.1}" y2="{:.1}"/>"#, MARGIN, height - MARGIN).unwrap();
    }
    for f in spec.f.0..=spec.f.1 + 1 {
        let yy = y(spec, f as f64 - 0.5);
        writeln!(out, r#"<line x1="{:.1}" y1="{yy:.1}" x2="{:.1}" y2="{yy:.1}"/>"#, MARGIN, width - MARGIN - LEGEND_W).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g font-size="9" text-anchor="middle">"#).unwrap();
    for s in spec.s.0..=spec.s.1 {
        writeln!(out, r#"<text x="{:.1}" y="{:.1}">{s}</text>"#, x(spec, s as f64), height - MARGIN + 12.0).unwrap();
    }
    for f in spec.f.0..=spec.f.1 {
        writeln!(out, r#"<text x="{:.1}" y="{:.1}">{f}</text>"#, MARGIN - 12.0, y(spec, f as f64) + 3.0).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    let pos = layout(spec, page);
    if spec.arrows {
        writeln!(out, r#"<g stroke="black" stroke-width="0.6">"#).unwrap();
        for (d, m) in &page.diff.blocks {
            let t = d.add(page.diff.shift);
            for j in 0..m.cols {
                for i in 0..m.rows {
                    if m[(i, j)] == 0 {
                        continue;
                    }
                    if let (Some(a), Some(b)) = (pos.get(&(*d, j)), pos.get(&(t, i))) {
                        writeln!(out, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#, a.0, a.1, b.0, b.1).unwrap();
                    }
                }
            }
        }
        writeln!(out, "</g>").unwrap();
    }
    for ((d, i), (cx, cy, r)) in &pos {
        let s = &page.groups[d][*i];
        writeln!(
            out,
            r#"<g class="summand" data-deg="{},{},{}" data-order="{}"><title>{} {}</title>"#,
            d.s,
            d.f,
            d.w,
            s.order.group_string(false),
            s.order.group_string(false),
            escape(&s.name.ascii())
        )
        .unwrap();
        draw(&mut out, Glyph::of(s), *cx, *cy, *r, subscript(s));
        writeln!(out, "</g>").unwrap();
    }
    let lx = width - LEGEND_W + 10.0;
    writeln!(out, r#"<g class="legend" font-size="10">"#).unwrap();
    for (k, g) in spec.legend.iter().enumerate() {
        let ly = MARGIN + 10.0 + 20.0 * k as f64;
        draw(&mut out, *g, lx + 6.0, ly, 5.0, None);
        writeln!(out, r#"<text x="{:.1}" y="{:.1}">{}</text>"#, lx + 18.0, ly + 3.0, g.legend()).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Glyphs a page needs.
pub fn glyphs_used(page: &Page) -> Vec<Glyph> {
    let mut v: Vec<Glyph> = page.groups.values().flatten().map(Glyph::of).collect();
    v.sort();
    v.dedup();
    v
}
