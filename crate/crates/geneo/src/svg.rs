//! Minimal SVG rendering of persistence diagrams.
//!
//! Square plot, birth on the x axis and death on the y axis, with the
//! diagonal drawn for reference. Finite pairs are filled circles; essential
//! classes, which never die, are upward arrows at their birth position.
//! Output text is deterministic for identical input.

use crate::persistence::PersistenceDiagram;

const MIN_SIZE: u32 = 100;

fn fmt_px(x: f64) -> String {
    format!("{x:.2}")
}

/// Renders a diagram to SVG text. Sizes below 100 pixels are clamped up.
pub fn render_diagram_svg(diagram: &PersistenceDiagram, size: u32) -> String {
    let size = size.max(MIN_SIZE) as f64;
    let margin = size * 0.12;
    let span = size - 2.0 * margin;

    // Data range over every birth and death; degenerate ranges get padding.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &(b, d) in diagram.finite_deg0() {
        lo = lo.min(b);
        hi = hi.max(d);
    }
    for &b in diagram
        .essential_deg0()
        .iter()
        .chain(diagram.essential_deg1())
    {
        lo = lo.min(b);
        hi = hi.max(b);
    }
    if !lo.is_finite() {
        lo = 0.0;
        hi = 1.0;
    }
    if hi - lo < 1e-12 {
        lo -= 0.5;
        hi += 0.5;
    }
    let pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;

    let x = |v: f64| margin + (v - lo) / (hi - lo) * span;
    let y = |v: f64| size - margin - (v - lo) / (hi - lo) * span;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    ));
    // Axes along the plot edges.
    out.push_str(&format!(
        "  <line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt_px(margin),
        fmt_px(size - margin),
        fmt_px(size - margin),
        fmt_px(size - margin),
    ));
    out.push_str(&format!(
        "  <line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt_px(margin),
        fmt_px(size - margin),
        fmt_px(margin),
        fmt_px(margin),
    ));
    // The diagonal birth = death.
    out.push_str(&format!(
        "  <line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"4 2\"/>\n",
        fmt_px(x(lo)),
        fmt_px(y(lo)),
        fmt_px(x(hi)),
        fmt_px(y(hi)),
    ));

    for &(b, d) in diagram.finite_deg0() {
        out.push_str(&format!(
            "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3.5\" fill=\"steelblue\"/>\n",
            fmt_px(x(b)),
            fmt_px(y(d)),
        ));
    }

    // Essential classes: an upward arrow at the birth abscissa, reaching the
    // top of the plot area.
    let arrow = |birth: f64, class: &str, color: &str, out: &mut String| {
        let ax = x(birth);
        let tip = margin;
        let tail = margin + span * 0.18;
        out.push_str(&format!(
            "  <path class=\"arrow {class}\" d=\"M {x0} {tail} L {x0} {tip} M {xl} {head} L {x0} {tip} L {xr} {head}\" stroke=\"{color}\" fill=\"none\"/>\n",
            x0 = fmt_px(ax),
            tail = fmt_px(tail),
            tip = fmt_px(tip),
            xl = fmt_px(ax - 3.0),
            xr = fmt_px(ax + 3.0),
            head = fmt_px(tip + 5.0),
        ));
    };
    for &b in diagram.essential_deg0() {
        arrow(b, "essential-deg0", "firebrick", &mut out);
    }
    for &b in diagram.essential_deg1() {
        arrow(b, "essential-deg1", "darkgreen", &mut out);
    }

    out.push_str("</svg>\n");
    out
}
