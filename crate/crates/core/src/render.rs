//! SVG diagrams of a configuration and its fold solutions.
//!
//! World coordinates have `y` pointing up; the flip to SVG's downward `y`
//! happens only inside [`Viewport::to_pixel`]. Every marker and line carries an
//! `id` so diagrams can be inspected programmatically.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::foldconfig::FoldConfig;
use crate::foldsolve::FoldSolution;
use crate::geometry::{self, Line, Point};

pub const DEFAULT_PANEL_PX: u32 = 480;
pub const DEFAULT_MARGIN_PX: u32 = 24;

const STYLE: &str = "\
.axis{stroke:#9a9a9a;stroke-width:1}\
.construction{stroke:#000000;stroke-width:1.5;fill:none}\
.fold{stroke:#d62728;stroke-width:2;fill:none}\
.guide{stroke:#7f7f7f;stroke-width:1;stroke-dasharray:5,4;fill:none}\
.point{fill:#000000}\
.fold-point{fill:#d62728}\
.label{font-family:serif;font-size:15px;font-style:italic;fill:#000000}\
.value{font-family:sans-serif;font-size:11px;fill:#d62728}\
.panel-label{font-family:sans-serif;font-size:15px;fill:#000000}\
.frame{stroke:#dddddd;stroke-width:1;fill:#ffffff}";

/// A world window mapped onto a pixel rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub width_px: u32,
    pub height_px: u32,
    pub margin_px: u32,
}

impl Viewport {
    pub fn is_valid(&self) -> bool {
        let finite = [self.xmin, self.xmax, self.ymin, self.ymax].iter().all(|v| v.is_finite());
        finite
            && self.xmax > self.xmin
            && self.ymax > self.ymin
            && self.width_px > 2 * self.margin_px
            && self.height_px > 2 * self.margin_px
    }

    fn inner(&self) -> (f64, f64) {
        (
            f64::from(self.width_px - 2 * self.margin_px),
            f64::from(self.height_px - 2 * self.margin_px),
        )
    }

    pub fn to_pixel(&self, p: Point) -> (f64, f64) {
        let (w, h) = self.inner();
        let m = f64::from(self.margin_px);
        (
            m + (p.x - self.xmin) / (self.xmax - self.xmin) * w,
            m + (self.ymax - p.y) / (self.ymax - self.ymin) * h,
        )
    }

    pub fn from_pixel(&self, px: f64, py: f64) -> Point {
        let (w, h) = self.inner();
        let m = f64::from(self.margin_px);
        Point::new(
            self.xmin + (px - m) / w * (self.xmax - self.xmin),
            self.ymax - (py - m) / h * (self.ymax - self.ymin),
        )
    }

    /// Bounding box of `points` padded by 20% and widened so both axes share
    /// one scale.
    pub fn fit(points: &[Point], width_px: u32, height_px: u32, margin_px: u32) -> Self {
        let finite: Vec<Point> = points.iter().copied().filter(|p| p.is_finite()).collect();
        let (mut xmin, mut xmax, mut ymin, mut ymax) = finite.iter().fold(
            (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
            |(a, b, c, d), p| (a.min(p.x), b.max(p.x), c.min(p.y), d.max(p.y)),
        );
        if finite.is_empty() {
            (xmin, xmax, ymin, ymax) = (-1.0, 1.0, -1.0, 1.0);
        }
        let span = (xmax - xmin).max(ymax - ymin).max(1e-9);
        let pad_x = 0.2 * (xmax - xmin).max(0.05 * span);
        let pad_y = 0.2 * (ymax - ymin).max(0.05 * span);
        (xmin, xmax, ymin, ymax) = (xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y);

        let inner_w = f64::from(width_px.saturating_sub(2 * margin_px).max(1));
        let inner_h = f64::from(height_px.saturating_sub(2 * margin_px).max(1));
        let per_px = ((xmax - xmin) / inner_w).max((ymax - ymin) / inner_h);
        let (cx, cy) = (0.5 * (xmin + xmax), 0.5 * (ymin + ymax));
        let (hw, hh) = (0.5 * per_px * inner_w, 0.5 * per_px * inner_h);
        Self {
            xmin: cx - hw,
            xmax: cx + hw,
            ymin: cy - hh,
            ymax: cy + hh,
            width_px,
            height_px,
            margin_px,
        }
    }

    fn contains(&self, p: Point) -> bool {
        (self.xmin..=self.xmax).contains(&p.x) && (self.ymin..=self.ymax).contains(&p.y)
    }

    /// The part of `line` inside the window, if any.
    fn clip(&self, line: &Line) -> Option<(Point, Point)> {
        let dir = line.direction();
        let center = Point::new(0.5 * (self.xmin + self.xmax), 0.5 * (self.ymin + self.ymax));
        // parametrize from the point of the line closest to the window centre
        let base = center - line.normal() * (line.signed_distance(center) / line.normal().norm());
        let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (d, lo, hi, v) in [
            (dir.x, self.xmin, self.xmax, base.x),
            (dir.y, self.ymin, self.ymax, base.y),
        ] {
            if d.abs() < 1e-15 {
                if v < lo || v > hi {
                    return None;
                }
                continue;
            }
            let (a, b) = ((lo - v) / d, (hi - v) / d);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
        (t1 > t0).then(|| (base + dir * t0, base + dir * t1))
    }
}

/// Formats `v` with four significant digits.
pub fn format_sig4(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let digits = v.abs().log10().floor() as i32;
    let decimals = (3 - digits).max(0) as usize;
    let s = format!("{v:.decimals$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => s,
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// The points a diagram of `sol` marks, in drawing order.
fn marked_points(cfg: &FoldConfig, sol: &FoldSolution) -> Vec<(&'static str, &'static str, Point, bool)> {
    let mut pts = vec![
        ("Q", "Q", cfg.q_point(), false),
        ("Q-image", "Q′", sol.q_image, true),
        ("P", "P", cfg.p_point(), false),
        ("P-image", "P′", sol.p_image, true),
        ("t", "t", Point::new(sol.t, 0.0), true),
        ("mid-PP", "", cfg.p_point().midpoint(sol.p_image), true),
    ];
    if let Ok(geometry::Intersection::Point(x)) = geometry::intersect(&sol.xi, &cfg.n_line()) {
        let size = cfg.max_magnitude().max(sol.t.abs()).max(1.0);
        if x.norm() <= 10.0 * size {
            pts.push(("pivot", "", x, true));
        }
    }
    pts
}

fn bounding_points(cfg: &FoldConfig, sol: &FoldSolution) -> Vec<Point> {
    let mut pts: Vec<Point> = marked_points(cfg, sol).into_iter().map(|(_, _, p, _)| p).collect();
    pts.push(Point::new(0.0, 0.0));
    pts
}

struct Canvas<'a> {
    out: &'a mut String,
    vp: Viewport,
    prefix: String,
}

impl Canvas<'_> {
    fn px(&self, p: Point) -> (f64, f64) {
        self.vp.to_pixel(p)
    }

    fn line(&mut self, id: &str, class: &str, line: &Line, label: Option<&str>) {
        let Some((a, b)) = self.vp.clip(line) else {
            return;
        };
        let ((x1, y1), (x2, y2)) = (self.px(a), self.px(b));
        let _ = writeln!(
            self.out,
            r#"<line id="{}line-{id}" class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#,
            self.prefix
        );
        if let Some(label) = label {
            // label sits a little inside the window from the upper end
            let end = if a.y > b.y || (a.y == b.y && a.x > b.x) { a } else { b };
            let other = if end == a { b } else { a };
            let at = end + (other - end) * 0.06;
            let (x, y) = self.px(at);
            let _ = writeln!(
                self.out,
                r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#,
                x + 6.0,
                y,
                xml_escape(label)
            );
        }
    }

    fn segment(&mut self, id: &str, a: Point, b: Point) {
        let ((x1, y1), (x2, y2)) = (self.px(a), self.px(b));
        let _ = writeln!(
            self.out,
            r#"<line id="{}seg-{id}" class="guide" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#,
            self.prefix
        );
    }

    fn point(&mut self, id: &str, label: &str, p: Point, on_fold: bool) {
        if !self.vp.contains(p) {
            return;
        }
        let (x, y) = self.px(p);
        let class = if on_fold { "fold-point" } else { "point" };
        let _ = writeln!(
            self.out,
            r#"<circle id="{}pt-{id}" class="{class}" cx="{x:.2}" cy="{y:.2}" r="3"/>"#,
            self.prefix
        );
        if !label.is_empty() {
            let _ = writeln!(
                self.out,
                r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#,
                x + 5.0,
                y - 6.0,
                xml_escape(label)
            );
        }
    }

    fn value(&mut self, id: &str, p: Point, text: &str) {
        let (x, y) = self.px(p);
        let _ = writeln!(
            self.out,
            r#"<text id="{}value-{id}" class="value" x="{:.2}" y="{:.2}">{}</text>"#,
            self.prefix,
            x + 5.0,
            y + 16.0,
            xml_escape(text)
        );
    }

    fn draw(&mut self, cfg: &FoldConfig, sol: &FoldSolution) {
        let (w, h) = (self.vp.width_px, self.vp.height_px);
        let _ = writeln!(
            self.out,
            r#"<rect class="frame" x="0" y="0" width="{w}" height="{h}"/>"#
        );
        self.line("x-axis", "axis", &Line::horizontal(0.0), None);
        self.line("y-axis", "axis", &Line::vertical(0.0), None);
        self.line("l", "construction", &cfg.l_line(), Some("ℓ"));
        self.line("m", "construction", &cfg.m_line(), Some("m"));
        self.line("n", "construction", &cfg.n_line(), Some("n"));
        self.segment("QQ", cfg.q_point(), sol.q_image);
        self.segment("PP", cfg.p_point(), sol.p_image);
        self.line("xi", "fold", &sol.xi, Some("ξ"));
        self.line("chi", "fold", &sol.chi, Some("χ"));
        for (id, label, p, on_fold) in marked_points(cfg, sol) {
            self.point(id, label, p, on_fold);
        }
        self.value("t", Point::new(sol.t, 0.0), &format_sig4(sol.t));
    }
}

fn open_svg(out: &mut String, width: u32, height: u32) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
}

/// One solution drawn over its configuration. An invalid `vp` falls back to
/// the automatic fit.
pub fn render_solution(cfg: &FoldConfig, sol: &FoldSolution, vp: Option<Viewport>) -> String {
    let vp = vp.filter(Viewport::is_valid).unwrap_or_else(|| {
        Viewport::fit(&bounding_points(cfg, sol), DEFAULT_PANEL_PX, DEFAULT_PANEL_PX, DEFAULT_MARGIN_PX)
    });
    let mut out = String::new();
    open_svg(&mut out, vp.width_px, vp.height_px);
    Canvas {
        out: &mut out,
        vp,
        prefix: String::new(),
    }
    .draw(cfg, sol);
    out.push_str("</svg>\n");
    out
}

/// Panel label for the `i`-th solution: `a`, `b`, ..., `z`, `aa`, ...
pub fn panel_name(i: usize) -> String {
    let mut n = i;
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (n % 26) as u8);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

/// Shared viewport used by every panel of [`render_gallery`].
pub fn gallery_viewport(cfg: &FoldConfig, sols: &[FoldSolution]) -> Viewport {
    let pts: Vec<Point> = sols.iter().flat_map(|s| bounding_points(cfg, s)).collect();
    Viewport::fit(&pts, DEFAULT_PANEL_PX, DEFAULT_PANEL_PX, DEFAULT_MARGIN_PX)
}

/// Two-column grid with one panel per solution, labelled `a)`, `b)`, ... in
/// the order given.
pub fn render_gallery(cfg: &FoldConfig, sols: &[FoldSolution]) -> Result<String> {
    if sols.is_empty() {
        return Err(Error::EmptySolutions);
    }
    let vp = gallery_viewport(cfg, sols);
    let cols = sols.len().min(2) as u32;
    let rows = sols.len().div_ceil(2) as u32;
    let (pw, ph) = (vp.width_px, vp.height_px);
    let mut out = String::new();
    open_svg(&mut out, cols * pw, rows * ph);
    for (i, sol) in sols.iter().enumerate() {
        let name = panel_name(i);
        let (col, row) = (i as u32 % 2, i as u32 / 2);
        let _ = writeln!(
            out,
            r#"<g id="panel-{name}" transform="translate({},{})">"#,
            col * pw,
            row * ph
        );
        Canvas {
            out: &mut out,
            vp,
            prefix: format!("{name}-"),
        }
        .draw(cfg, sol);
        let _ = writeln!(out, r#"<text class="panel-label" x="8" y="20">{name})</text>"#);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
