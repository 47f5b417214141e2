//! SVG 1.1 output.
//!
//! This is the only place exact coordinates become decimals. Geometry is
//! written in math orientation inside a `scale(1,-1)` group, so polygon
//! points read exactly like the rational coordinates they come from.

use std::fmt::Write as _;

use taxisect_core::kernel::Point;
use taxisect_core::Rational;

use super::scene::{Dash, Item, LabelAt, Scene, Shape, Stroke, ViewBox};

/// Significant digits used for every serialized coordinate.
pub const SIGNIFICANT_DIGITS: u32 = 12;

const INK: &str = "#1a1a1a";
const MUTED: &str = "#7a7a7a";
const ACCENT: &str = "#c0392b";

fn num(r: &Rational) -> String {
    r.to_decimal_string(SIGNIFICANT_DIGITS)
}

fn pair(p: &Point) -> String {
    format!("{},{}", num(&p.x), num(&p.y))
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

struct Metrics {
    thin: Rational,
    regular: Rational,
    bold: Rational,
    dot: Rational,
    big_dot: Rational,
    font: Rational,
    dash: Rational,
    nudge: Rational,
}

impl Metrics {
    fn for_viewbox(vb: &ViewBox) -> Metrics {
        let e = vb.extent();
        let part = |d: i64| &e / Rational::from(d);
        Metrics {
            thin: part(400),
            regular: part(250),
            bold: part(120),
            dot: part(150),
            big_dot: part(90),
            font: part(25),
            dash: part(80),
            nudge: part(60),
        }
    }

    fn width(&self, s: Stroke) -> &Rational {
        match s {
            Stroke::Thin => &self.thin,
            Stroke::Regular => &self.regular,
            Stroke::Bold => &self.bold,
        }
    }
}

fn colour(item: &Item) -> &'static str {
    match (item.style.stroke, item.style.dash) {
        (Stroke::Bold, _) => ACCENT,
        (_, Dash::Dashed) => MUTED,
        _ => INK,
    }
}

fn stroke_attrs(item: &Item, m: &Metrics) -> String {
    let mut s = format!(r#"fill="none" stroke="{}" stroke-width="{}""#, colour(item), num(m.width(item.style.stroke)));
    if item.style.dash == Dash::Dashed {
        let _ = write!(s, r#" stroke-dasharray="{},{}""#, num(&m.dash), num(&m.dash));
    }
    s
}

fn label_anchor(item: &Item, vb: &ViewBox) -> Option<Point> {
    match &item.shape {
        Shape::Point(p) => Some(p.clone()),
        Shape::Segment(p, q) => Some(p.lerp(q, &Rational::frac(1, 2))),
        // a quarter of the way down the NE edge: corners and edge midpoints
        // are where constructed points tend to land
        Shape::Circle(c) => {
            let r = c.radius();
            Some(c.center().offset(&(r * Rational::frac(1, 4)), &(r * Rational::frac(3, 4))))
        }
        Shape::Polyline(ps) => ps.last().cloned(),
        Shape::Line(l) => vb.clip_line(l).map(|(_, q)| q),
        Shape::Ray(r) => vb.clip_ray(r).map(|(_, q)| q),
    }
}

fn write_item(out: &mut String, item: &Item, vb: &ViewBox, m: &Metrics) {
    match &item.shape {
        Shape::Point(p) => {
            let r = if item.style.stroke == Stroke::Bold { &m.big_dot } else { &m.dot };
            let _ = writeln!(
                out,
                r#"<circle class="point" cx="{}" cy="{}" r="{}" fill="{}"/>"#,
                num(&p.x),
                num(&p.y),
                num(r),
                colour(item)
            );
        }
        Shape::Segment(p, q) => write_line(out, p, q, item, m),
        Shape::Line(l) => {
            if let Some((p, q)) = vb.clip_line(l) {
                write_line(out, &p, &q, item, m);
            }
        }
        Shape::Ray(r) => {
            if let Some((p, q)) = vb.clip_ray(r) {
                write_line(out, &p, &q, item, m);
            }
        }
        Shape::Circle(c) => {
            let pts: Vec<String> = c.vertices().iter().map(pair).collect();
            let _ = writeln!(out, r#"<polygon class="circle" points="{}" {}/>"#, pts.join(" "), stroke_attrs(item, m));
        }
        Shape::Polyline(ps) => {
            let pts: Vec<String> = ps.iter().map(pair).collect();
            let _ = writeln!(out, r#"<polyline points="{}" {}/>"#, pts.join(" "), stroke_attrs(item, m));
        }
    }
}

fn write_line(out: &mut String, p: &Point, q: &Point, item: &Item, m: &Metrics) {
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {}/>"#,
        num(&p.x),
        num(&p.y),
        num(&q.x),
        num(&q.y),
        stroke_attrs(item, m)
    );
}

fn write_label(out: &mut String, item: &Item, vb: &ViewBox, m: &Metrics) {
    let (Some(text), Some(at)) = (&item.label, label_anchor(item, vb)) else { return };
    let (sx, sy, anchor) = match item.style.label_at {
        LabelAt::NorthEast => (1, 1, "start"),
        LabelAt::NorthWest => (-1, 1, "end"),
        LabelAt::SouthEast => (1, -1, "start"),
        LabelAt::SouthWest => (-1, -1, "end"),
    };
    let x = &at.x + &m.nudge * Rational::from(sx);
    let mut y = &at.y + &m.nudge * Rational::from(sy);
    if sy < 0 {
        // baseline sits below the anchor by a font height
        y -= &m.font * Rational::frac(3, 4);
    }
    // The enclosing group flips y, so the text flips back and uses -y.
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" transform="scale(1,-1)" font-family="serif" font-size="{}" text-anchor="{}" fill="{}">{}</text>"#,
        num(&x),
        num(&-y),
        num(&m.font),
        anchor,
        colour(item),
        escape(text)
    );
}

/// Renders `scene` as a standalone SVG document. Identical scenes give
/// byte-identical output.
pub fn emit_svg(scene: &Scene) -> String {
    let vb = scene.effective_viewbox();
    let m = Metrics::for_viewbox(&vb);
    let (w, h) = (vb.width(), vb.height());
    let pixels = Rational::from(600);
    let (pw, ph) = if w >= h { (pixels.clone(), &pixels * &h / &w) } else { (&pixels * &w / &h, pixels.clone()) };
    let top = -&vb.max.y;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(&pw),
        num(&ph),
        num(&vb.min.x),
        num(&top),
        num(&w),
        num(&h)
    );
    let _ = writeln!(
        out,
        r##"<rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="#ffffff" stroke="none"/>"##,
        num(&vb.min.x),
        num(&top),
        num(&w),
        num(&h)
    );
    for (i, panel) in scene.panels.iter().enumerate() {
        let _ = writeln!(out, r#"<g class="panel" id="panel-{i}" transform="scale(1,-1)">"#);
        if let Some(title) = &panel.title {
            let _ = writeln!(out, "<title>{}</title>", escape(title));
        }
        for item in &panel.items {
            write_item(&mut out, item, &vb, &m);
        }
        for item in &panel.items {
            write_label(&mut out, item, &vb, &m);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
