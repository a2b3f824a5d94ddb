//! The `bary` subcommand: projection plus the SVG 1.1 and TSV emitters.

use std::fmt::Write as _;

use tropcomm_core::{
    basis_commuting_cone, concurrency_check, triangle_plot, ConcurrencyReport, DiagonalCase,
    FiniteMat2, LineStyle, PlotAnchor, TrianglePlot, TRIANGLE,
};

use crate::report::header;
use crate::{sig9, CliError, RunConfig};

#[derive(Debug)]
pub struct BaryOutcome {
    pub plot: TrianglePlot,
    pub concurrency: ConcurrencyReport,
}

/// Projects the basis of `a` and runs the concurrency check. Equal
/// diagonals have six generators and no planar projection, so they are
/// rejected as unsupported.
pub fn run_bary(a: &FiniteMat2, cfg: &RunConfig) -> Result<BaryOutcome, CliError> {
    let basis = basis_commuting_cone(a, cfg.tol);
    if basis.case() == DiagonalCase::Equal {
        return Err(CliError::Unsupported(String::from(
            "projection undefined for equal diagonal",
        )));
    }
    let plot =
        triangle_plot(&basis, cfg.tol).map_err(|e| CliError::Unsupported(format!("{e}")))?;
    let concurrency =
        concurrency_check(&basis, cfg.tol).map_err(|e| CliError::Unsupported(format!("{e}")))?;
    Ok(BaryOutcome { plot, concurrency })
}

/// The side-channel summary printed to stderr: where the cevians meet
/// and how far apart the pairwise intersections were.
pub fn render_bary_summary(out: &BaryOutcome, cfg: &RunConfig) -> String {
    let mut text = format!(
        "{}\nomega = ({}, {})\nconcurrency residual = {:.3e}",
        header("bary", cfg),
        sig9(out.concurrency.omega[0]),
        sig9(out.concurrency.omega[1]),
        out.concurrency.residual,
    );
    if !out.concurrency.pass {
        write!(text, "\nwarning: concurrency check failed at tol {:e}", cfg.tol).unwrap();
    }
    text
}

/// One row per projected point: `label phi1 phi2 phi3 x y`, tab
/// separated, nine significant digits.
pub fn emit_tsv(plot: &TrianglePlot) -> String {
    let mut out = String::from("label\tphi1\tphi2\tphi3\tx\ty\n");
    for p in &plot.points {
        let [x, y] = p.to_cartesian(&TRIANGLE);
        let [p1, p2, p3] = p.phi();
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            p.label(),
            sig9(p1),
            sig9(p2),
            sig9(p3),
            sig9(x),
            sig9(y)
        )
        .unwrap();
    }
    out
}

const SVG_W: f64 = 480.0;
const SVG_H: f64 = 460.0;

fn screen([x, y]: [f64; 2]) -> [f64; 2] {
    [40.0 + 400.0 * x, 420.0 - 400.0 * y]
}

/// SVG 1.1 rendering: triangle outline with corner labels, dotted
/// cevians, solid hull segments, labelled points and the marked
/// intersection. A plot with no points or segments yields just the
/// labelled triangle.
pub fn emit_svg(plot: &TrianglePlot) -> String {
    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_W}" height="{SVG_H}" viewBox="0 0 {SVG_W} {SVG_H}">"#
    )
    .unwrap();
    writeln!(svg, "  <title>commuting-cone barycentric projection</title>").unwrap();

    let corners: Vec<[f64; 2]> = TRIANGLE.iter().map(|&c| screen(c)).collect();
    let outline = corners
        .iter()
        .map(|c| format!("{:.2},{:.2}", c[0], c[1]))
        .collect::<Vec<_>>()
        .join(" ");
    writeln!(
        svg,
        r##"  <polygon points="{outline}" fill="none" stroke="#333333" stroke-width="1"/>"##
    )
    .unwrap();

    // corner labels sit just outside their vertex
    let offsets = [[-14.0, 16.0], [14.0, 16.0], [0.0, -10.0]];
    let anchors = ["end", "start", "middle"];
    for i in 0..3 {
        writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-family="monospace" font-size="13" text-anchor="{}">{}</text>"#,
            corners[i][0] + offsets[i][0],
            corners[i][1] + offsets[i][1],
            anchors[i],
            plot.corner_labels[i],
        )
        .unwrap();
    }

    for seg in &plot.segments {
        let from = screen(plot.anchor_position(seg.from));
        let to = screen(plot.anchor_position(seg.to));
        let style = match seg.style {
            LineStyle::Dotted => r##"stroke="#b03a2e" stroke-width="1" stroke-dasharray="5 4""##,
            LineStyle::Solid => r##"stroke="#1f618d" stroke-width="1.5""##,
        };
        writeln!(
            svg,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            from[0], from[1], to[0], to[1],
        )
        .unwrap();
    }

    for (i, p) in plot.points.iter().enumerate() {
        let pos = screen(p.to_cartesian(&TRIANGLE));
        writeln!(
            svg,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="#1f618d"/>"##,
            pos[0], pos[1],
        )
        .unwrap();
        // the apex point's label goes left to avoid the triangle edge
        let (dx, anchor) = if i == 0 { (-8.0, "end") } else { (8.0, "start") };
        writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="{anchor}">{}</text>"#,
            pos[0] + dx,
            pos[1] - 7.0,
            p.label(),
        )
        .unwrap();
    }

    if !plot.points.is_empty() || !plot.segments.is_empty() {
        let pos = screen(plot.anchor_position(PlotAnchor::Omega));
        writeln!(
            svg,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="3" fill="#b03a2e"/>"##,
            pos[0], pos[1],
        )
        .unwrap();
        writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-family="monospace" font-size="12" text-anchor="start">omega</text>"#,
            pos[0] + 7.0,
            pos[1] + 13.0,
        )
        .unwrap();
    }

    writeln!(svg, "</svg>").unwrap();
    svg
}
