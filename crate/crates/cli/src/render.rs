//! Static drawings of planar networks. Output depends only on the input,
//! so rendering the same network twice yields identical bytes.

use std::collections::BTreeSet;
use std::fmt::Write;

use hivenet::network::VertexKind;
use hivenet::weight::rational_to_f64;
use hivenet::{EdgeId, PlanarNetwork, Point, Weighting};

const SCALE_X: f64 = 60.0;
const SCALE_Y: f64 = 50.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Svg,
    Dot,
}

#[derive(Debug, Clone, Default)]
pub struct RenderOptions<'a> {
    pub weights: Option<&'a Weighting>,
    pub highlight: BTreeSet<EdgeId>,
    /// Label edges by id when no weight is shown.
    pub edge_ids: bool,
}

pub fn render(net: &PlanarNetwork, opts: &RenderOptions<'_>, format: Format) -> String {
    match format {
        Format::Svg => svg(net, opts),
        Format::Dot => dot(net, opts),
    }
}

fn edge_label(id: EdgeId, opts: &RenderOptions<'_>) -> Option<String> {
    match opts.weights.and_then(|w| w.try_get(id)) {
        Some(w) => Some(w.to_string()),
        None => opts.edge_ids.then(|| format!("e{id}")),
    }
}

struct Frame {
    x0: f64,
    y_top: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(net: &PlanarNetwork) -> Self {
        let ys = net
            .vertices()
            .iter()
            .map(|v| v.y())
            .chain(net.edges().iter().flat_map(|e| e.bends.iter().map(|p| &p.y)))
            .map(rational_to_f64);
        let (lo, hi) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| (lo.min(y), hi.max(y)));
        let (lo, hi) = if lo.is_finite() { (lo, hi) } else { (0.0, 1.0) };
        let a = rational_to_f64(net.a());
        let b = rational_to_f64(net.b());
        Frame {
            x0: a,
            y_top: hi,
            width: (b - a) * SCALE_X + 2.0 * MARGIN,
            height: (hi - lo) * SCALE_Y + 2.0 * MARGIN,
        }
    }

    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) * SCALE_X
    }

    fn y(&self, y: f64) -> f64 {
        MARGIN + (self.y_top - y) * SCALE_Y
    }

    fn point(&self, p: &Point) -> (f64, f64) {
        (self.x(rational_to_f64(&p.x)), self.y(rational_to_f64(&p.y)))
    }
}

fn svg(net: &PlanarNetwork, opts: &RenderOptions<'_>) -> String {
    let f = Frame::new(net);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = f.width,
        h = f.height
    );
    out.push_str("<g class=\"strip\" stroke=\"#999999\" stroke-dasharray=\"4 4\">\n");
    let mut lines = vec![net.a(), net.b()];
    lines.extend(net.middle());
    for x in lines {
        let x = f.x(rational_to_f64(x));
        let _ = writeln!(out, r#"<line x1="{x:.2}" y1="0" x2="{x:.2}" y2="{:.2}"/>"#, f.height);
    }
    out.push_str("</g>\n");

    // highlighted edges go last so they are drawn on top
    let mut edges: Vec<_> = net.edges().iter().collect();
    edges.sort_by_key(|e| (opts.highlight.contains(&e.id), e.id));
    out.push_str("<g class=\"edges\" fill=\"none\">\n");
    for e in &edges {
        let pts: Vec<String> =
            net.edge_points(e).into_iter().map(|p| f.point(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let style = if opts.highlight.contains(&e.id) {
            r##"stroke="#d62728" stroke-width="4""##
        } else {
            r##"stroke="#000000" stroke-width="1.5""##
        };
        let _ = writeln!(out, r#"<polyline id="e{}" points="{}" {style}/>"#, e.id, pts.join(" "));
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n");
    for e in net.edges() {
        let Some(label) = edge_label(e.id, opts) else { continue };
        let pts = net.edge_points(e);
        let (x1, y1) = f.point(pts[0]);
        let (x2, y2) = f.point(pts[1]);
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">{label}</text>"#, (x1 + x2) / 2.0, (y1 + y2) / 2.0 - 4.0);
    }
    out.push_str("</g>\n");

    out.push_str("<g class=\"vertices\" stroke=\"#000000\">\n");
    for v in net.vertices() {
        let (x, y) = f.point(&v.pos);
        let fill = match net.kind_of(v) {
            VertexKind::Internal if !net.is_on_middle(v.id) => "#000000",
            _ => "#ffffff",
        };
        let _ = writeln!(out, r#"<circle id="v{}" cx="{x:.2}" cy="{y:.2}" r="3" fill="{fill}"/>"#, v.id);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn dot(net: &PlanarNetwork, opts: &RenderOptions<'_>) -> String {
    let mut out = String::from("digraph network {\n  rankdir=LR;\n  node [shape=circle, width=0.15, label=\"\"];\n");
    for v in net.vertices() {
        let shape = match net.kind_of(v) {
            VertexKind::Source => ", shape=box",
            VertexKind::Sink => ", shape=doublecircle",
            _ => "",
        };
        let _ = writeln!(out, "  v{} [xlabel=\"{}\"{shape}];", v.id, v.id);
    }
    for e in net.edges() {
        let mut attrs = Vec::new();
        if let Some(label) = edge_label(e.id, opts) {
            attrs.push(format!("label=\"{label}\""));
        }
        if opts.highlight.contains(&e.id) {
            attrs.push("color=red, penwidth=3".to_string());
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        let _ = writeln!(out, "  v{} -> v{}{attrs};", e.tail, e.head);
    }
    out.push_str("}\n");
    out
}
