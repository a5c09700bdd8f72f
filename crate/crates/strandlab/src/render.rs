//! SVG and TikZ figures for strand diagrams, annulus arc diagrams, ternary
//! trees and lattice paths. Output depends only on the input.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::io::{DocKind, DocumentEnvelope, IoError};
use crate::quiver::Sign;
use crate::strands::{ArcDiagram, StrandDiagram};
use crate::typea::{LatticePath, TernaryTree, TreeNode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

/// Drawing primitives in a y-down coordinate system.
#[derive(Debug, Clone, PartialEq)]
enum Item {
    Circle { x: f64, y: f64, r: f64, fill: bool },
    Line(Vec<(f64, f64)>),
    Path(Vec<(f64, f64)>),
    Curve(Vec<[(f64, f64); 4]>),
    Text { x: f64, y: f64, s: String },
}

struct Figure {
    w: f64,
    h: f64,
    items: Vec<Item>,
}

fn f(x: f64) -> String {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

impl Figure {
    fn svg(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
            f(self.w),
            f(self.h),
            f(self.w),
            f(self.h)
        )
        .unwrap();
        for it in &self.items {
            match it {
                Item::Circle { x, y, r, fill } => {
                    let fill = if *fill { "black" } else { "none" };
                    writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"black\"/>", f(*x), f(*y), f(*r)).unwrap();
                }
                Item::Line(pts) => {
                    let p: Vec<String> = pts.iter().map(|(x, y)| format!("{},{}", f(*x), f(*y))).collect();
                    writeln!(s, "<polyline points=\"{}\" fill=\"none\" stroke=\"#bbb\"/>", p.join(" ")).unwrap();
                }
                Item::Path(pts) => {
                    let p: Vec<String> = pts.iter().map(|(x, y)| format!("{},{}", f(*x), f(*y))).collect();
                    writeln!(s, "<polyline points=\"{}\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>", p.join(" ")).unwrap();
                }
                Item::Curve(segs) => {
                    let mut d = format!("M {} {}", f(segs[0][0].0), f(segs[0][0].1));
                    for c in segs {
                        write!(d, " C {} {} {} {} {} {}", f(c[1].0), f(c[1].1), f(c[2].0), f(c[2].1), f(c[3].0), f(c[3].1)).unwrap();
                    }
                    writeln!(s, "<path d=\"{d}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>").unwrap();
                }
                Item::Text { x, y, s: t } => {
                    writeln!(s, "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{t}</text>", f(*x), f(*y)).unwrap();
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }

    fn tikz(&self) -> String {
        // TikZ is y-up; flip and scale to centimetres
        let k = 0.02;
        let p = |x: f64, y: f64| format!("({},{})", f(x * k), f((self.h - y) * k));
        let mut s = String::from("\\begin{tikzpicture}\n");
        for it in &self.items {
            match it {
                Item::Circle { x, y, r, fill } => {
                    let cmd = if *fill { "\\fill" } else { "\\draw" };
                    writeln!(s, "  {cmd} {} circle ({});", p(*x, *y), f(r * k)).unwrap();
                }
                Item::Line(pts) => {
                    let v: Vec<String> = pts.iter().map(|(x, y)| p(*x, *y)).collect();
                    writeln!(s, "  \\draw[gray] {};", v.join(" -- ")).unwrap();
                }
                Item::Path(pts) => {
                    let v: Vec<String> = pts.iter().map(|(x, y)| p(*x, *y)).collect();
                    writeln!(s, "  \\draw[red, thick] {};", v.join(" -- ")).unwrap();
                }
                Item::Curve(segs) => {
                    let mut d = p(segs[0][0].0, segs[0][0].1);
                    for c in segs {
                        write!(d, " .. controls {} and {} .. {}", p(c[1].0, c[1].1), p(c[2].0, c[2].1), p(c[3].0, c[3].1)).unwrap();
                    }
                    writeln!(s, "  \\draw[blue, thick] {d};").unwrap();
                }
                Item::Text { x, y, s: t } => {
                    writeln!(s, "  \\node at {} {{{t}}};", p(*x, *y)).unwrap();
                }
            }
        }
        s.push_str("\\end{tikzpicture}\n");
        s
    }

    fn emit(&self, fmt: Format) -> String {
        match fmt {
            Format::Svg => self.svg(),
            Format::Tikz => self.tikz(),
        }
    }
}

/// Cubic segments through sample points (Catmull-Rom).
fn smooth(pts: &[(f64, f64)]) -> Vec<[(f64, f64); 4]> {
    let n = pts.len();
    (0..n - 1)
        .map(|i| {
            let p0 = pts[i.saturating_sub(1)];
            let (p1, p2) = (pts[i], pts[i + 1]);
            let p3 = pts[(i + 2).min(n - 1)];
            let c1 = (p1.0 + (p2.0 - p0.0) / 6.0, p1.1 + (p2.1 - p0.1) / 6.0);
            let c2 = (p2.0 - (p3.0 - p1.0) / 6.0, p2.1 - (p3.1 - p1.1) / 6.0);
            [p1, c1, c2, p2]
        })
        .collect()
}

fn annulus(d: &ArcDiagram) -> Figure {
    let (cx, cy, big, small) = (150.0, 150.0, 120.0, 40.0);
    let nn = (d.n + 1) as f64;
    let mut items = vec![
        Item::Circle { x: cx, y: cy, r: big, fill: false },
        Item::Circle { x: cx, y: cy, r: small, fill: false },
    ];
    // cover point p sits at angle 2πp/N clockwise from the top
    let at = |p: f64, r: f64| {
        let t = 2.0 * PI * p / nn;
        (cx + r * t.sin(), cy - r * t.cos())
    };
    let inner = |p: i64| p.rem_euclid(d.n as i64 + 1) == 0;
    for s in d.strands() {
        let (ri, rj) = (if inner(s.i) { small } else { big }, if inner(s.j) { small } else { big });
        let samples = 24 + 8 * (s.len() as usize / (d.n + 1));
        let pts: Vec<(f64, f64)> = (0..=samples)
            .map(|k| {
                let t = k as f64 / samples as f64;
                let mut r = ri + (rj - ri) * t;
                if inner(s.i) == inner(s.j) {
                    let depth = if inner(s.i) { 0.5 } else { -0.5 };
                    r += depth * (big - small) * (PI * t).sin();
                }
                at(s.i as f64 + (s.j - s.i) as f64 * t, r)
            })
            .collect();
        items.push(Item::Curve(smooth(&pts)));
    }
    let (x, y) = at(0.0, small);
    items.push(Item::Circle { x, y, r: 3.0, fill: true });
    let (x, y) = at(0.0, small + 14.0);
    items.push(Item::Text { x, y: y + 4.0, s: "0".into() });
    for i in 1..=d.n {
        let (x, y) = at(i as f64, big);
        items.push(Item::Circle { x, y, r: 3.0, fill: true });
        let (x, y) = at(i as f64, big + 14.0);
        items.push(Item::Text { x, y: y + 4.0, s: i.to_string() });
    }
    Figure { w: 300.0, h: 300.0, items }
}

fn strand_line(d: &StrandDiagram) -> Figure {
    let (lo, hi) = match d.strands.iter().map(|s| (s.i, s.j)).reduce(|a, b| (a.0.min(b.0), a.1.max(b.1))) {
        Some(r) if !d.line.periodic => (0.min(r.0), (d.line.signs.len() as i64 - 1).max(r.1)),
        Some(r) => r,
        None => (0, d.line.signs.len() as i64 - 1),
    };
    let step = 40.0;
    let x = |p: i64| 30.0 + step * (p - lo) as f64;
    let span = (hi - lo) as f64;
    let y0 = 40.0 + step * span / 2.0;
    let mut items = vec![Item::Line(vec![(x(lo) - 15.0, y0), (x(hi) + 15.0, y0)])];
    for s in &d.strands {
        let h = step * (s.len() as f64) * 0.6;
        let dir = |p: i64| if d.line.sign(p) == Sign::Plus { -1.0 } else { 1.0 };
        let (a, b) = ((x(s.i), y0), (x(s.j), y0));
        items.push(Item::Curve(vec![[a, (a.0, y0 + dir(s.i) * h), (b.0, y0 + dir(s.j) * h), b]]));
    }
    for p in lo..=hi {
        items.push(Item::Circle { x: x(p), y: y0, r: 3.0, fill: true });
        let sign = d.line.sign(p).symbol();
        items.push(Item::Text { x: x(p), y: y0 + 18.0, s: format!("{p}{sign}") });
    }
    Figure { w: x(hi) + 30.0, h: 2.0 * y0, items }
}

fn path_figure(p: &LatticePath) -> Figure {
    let u = 20.0;
    let pts = p.points();
    let (w, h) = pts.iter().fold((0, 0), |acc, &(x, y)| (acc.0.max(x), acc.1.max(y)));
    let tr = |x: i64, y: i64| (20.0 + u * x as f64, 20.0 + u * (h - y) as f64);
    let mut items = Vec::new();
    for gx in 0..=w {
        items.push(Item::Line(vec![tr(gx, 0), tr(gx, h)]));
    }
    for gy in 0..=h {
        items.push(Item::Line(vec![tr(0, gy), tr(w, gy)]));
    }
    let poly: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| tr(x, y)).collect();
    items.push(Item::Path(poly.clone()));
    for &(x, y) in &poly {
        items.push(Item::Circle { x, y, r: 2.0, fill: true });
    }
    Figure { w: 40.0 + u * w as f64, h: 40.0 + u * h as f64, items }
}

fn tree_figure(t: &TernaryTree) -> Figure {
    fn leaves(t: &Option<Box<TreeNode>>) -> usize {
        match t {
            None => 1,
            Some(n) => n.children().iter().map(|c| leaves(c)).sum(),
        }
    }
    fn place(t: &Option<Box<TreeNode>>, left: f64, depth: f64, items: &mut Vec<Item>) -> (f64, f64) {
        let (dx, dy) = (18.0, 50.0);
        let width = leaves(t) as f64 * dx;
        let pos = (left + width / 2.0, 30.0 + depth * dy);
        match t {
            None => items.push(Item::Circle { x: pos.0, y: pos.1, r: 2.0, fill: true }),
            Some(n) => {
                let mut l = left;
                for c in n.children() {
                    let w = leaves(c) as f64 * dx;
                    let cp = place(c, l, depth + 1.0, items);
                    items.push(Item::Line(vec![pos, cp]));
                    l += w;
                }
                items.push(Item::Circle { x: pos.0, y: pos.1, r: 10.0, fill: false });
                items.push(Item::Text { x: pos.0, y: pos.1 - 14.0, s: n.label.clone() });
            }
        }
        pos
    }
    fn depth(t: &Option<Box<TreeNode>>) -> usize {
        match t {
            None => 0,
            Some(n) => 1 + n.children().iter().map(|c| depth(c)).max().unwrap_or(0),
        }
    }
    let root = t.root.clone().map(Box::new);
    let mut items = Vec::new();
    place(&root, 10.0, 0.0, &mut items);
    Figure { w: 20.0 + leaves(&root) as f64 * 18.0, h: 60.0 + depth(&root) as f64 * 50.0, items }
}

pub fn render_arcs(d: &ArcDiagram, fmt: Format) -> String {
    annulus(d).emit(fmt)
}

pub fn render_strands(d: &StrandDiagram, fmt: Format) -> String {
    strand_line(d).emit(fmt)
}

pub fn render_path(p: &LatticePath, fmt: Format) -> String {
    path_figure(p).emit(fmt)
}

pub fn render_tree(t: &TernaryTree, fmt: Format) -> String {
    tree_figure(t).emit(fmt)
}

pub fn render(doc: &DocumentEnvelope, fmt: Format) -> Result<String, IoError> {
    match doc.kind {
        DocKind::ArcDiagram | DocKind::Triangulation => Ok(render_arcs(&doc.payload(doc.kind)?, fmt)),
        DocKind::StrandDiagram => Ok(render_strands(&doc.payload(doc.kind)?, fmt)),
        DocKind::Path => Ok(render_path(&doc.payload(doc.kind)?, fmt)),
        DocKind::Tree => Ok(render_tree(&doc.payload(doc.kind)?, fmt)),
        k => Err(IoError::Unsupported(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_one_path() {
        let p: LatticePath = "URRR".parse().unwrap();
        let svg = render_path(&p, Format::Svg);
        assert!(svg.contains("points=\"20,40 20,20 40,20 60,20 80,20\""));
        assert_eq!(svg, render_path(&p, Format::Svg));
    }

    #[test]
    fn empty_annulus() {
        let d = ArcDiagram::new(3, vec![]).unwrap();
        let svg = render_arcs(&d, Format::Svg);
        assert_eq!(svg.matches("<path").count(), 0);
        assert_eq!(svg.matches("<circle").count(), 6);
    }
}
