use std::fmt::Write;

use super::{check_shape, gray_level, Alignment, Palette, RenderError, RenderSpec};
use crate::correspondence::Comparison;
use crate::eca::EcaDiagram;
use crate::engine::Pyramid;
use crate::pattern::HighlightMask;

const ECA_ON: &str = "#000000";
const ECA_OFF: &str = "#ffffff";

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" shape-rendering="crispEdges">"#
    );
}

fn rect(out: &mut String, x: f64, y: f64, size: f64, fill: &str) {
    let _ = writeln!(
        out,
        r#"<rect x="{x}" y="{y}" width="{size}" height="{size}" fill="{fill}"/>"#
    );
}

fn pyramid_cells(
    out: &mut String,
    pyramid: &Pyramid,
    mask: Option<&HighlightMask>,
    spec: &RenderSpec,
    origin: (f64, f64),
) {
    let px = spec.cell_px() as f64;
    for (t, row) in pyramid.rows().iter().enumerate() {
        let indent = match spec.alignment {
            Alignment::Centered => t as f64 * 0.5,
            Alignment::Left => 0.0,
        };
        let row_max = row.iter().copied().max().unwrap_or(0);
        for (i, &value) in row.iter().enumerate() {
            let fill = match (&spec.palette, mask.and_then(|m| m.get(t, i))) {
                (Palette::Highlight { on, .. }, Some(true)) => on.clone(),
                (Palette::Highlight { off, .. }, _) => off.clone(),
                (Palette::Grayscale, Some(true)) => "#000000".to_string(),
                (Palette::Grayscale, Some(false)) => "#ffffff".to_string(),
                (Palette::Grayscale, None) => {
                    let g = gray_level(value, row_max);
                    format!("#{g:02x}{g:02x}{g:02x}")
                }
            };
            rect(
                out,
                origin.0 + (indent + i as f64) * px,
                origin.1 + t as f64 * px,
                px,
                &fill,
            );
        }
    }
}

fn eca_cells(out: &mut String, diagram: &EcaDiagram, spec: &RenderSpec, origin: (f64, f64)) {
    let px = spec.cell_px() as f64;
    for (t, row) in diagram.rows().iter().enumerate() {
        for (i, &bit) in row.iter().enumerate() {
            let fill = if bit == 1 { ECA_ON } else { ECA_OFF };
            rect(
                out,
                origin.0 + i as f64 * px,
                origin.1 + t as f64 * px,
                px,
                fill,
            );
        }
    }
}

/// SVG 1.1 document with one square per cell, in row-major order.
pub fn render_svg(
    pyramid: &Pyramid,
    mask: Option<&HighlightMask>,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    check_shape(pyramid, mask)?;
    let px = spec.cell_px() as f64;
    let mut out = String::new();
    header(
        &mut out,
        pyramid.width() as f64 * px,
        pyramid.height() as f64 * px,
    );
    pyramid_cells(&mut out, pyramid, mask, spec, (0.0, 0.0));
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn render_eca_svg(diagram: &EcaDiagram, spec: &RenderSpec) -> String {
    let px = spec.cell_px() as f64;
    let mut out = String::new();
    header(
        &mut out,
        diagram.width() as f64 * px,
        diagram.height() as f64 * px,
    );
    eca_cells(&mut out, diagram, spec, (0.0, 0.0));
    out.push_str("</svg>\n");
    out
}

pub(super) fn render_comparison_svg(cmp: &Comparison, spec: &RenderSpec) -> String {
    let px = spec.cell_px() as f64;
    let top_w = cmp.diagram.width() as f64 * px;
    let top_h = cmp.diagram.height() as f64 * px;
    let bottom_w = cmp.pyramid.width() as f64 * px;
    let bottom_h = cmp.pyramid.height() as f64 * px;
    let width = top_w.max(bottom_w);
    let mut out = String::new();
    header(&mut out, width, top_h + px + bottom_h);
    out.push_str("<g id=\"reference\">\n");
    eca_cells(&mut out, &cmp.diagram, spec, ((width - top_w) / 2.0, 0.0));
    out.push_str("</g>\n<g id=\"pyramid\">\n");
    pyramid_cells(
        &mut out,
        &cmp.pyramid,
        Some(&cmp.mask),
        spec,
        ((width - bottom_w) / 2.0, top_h + px),
    );
    out.push_str("</g>\n</svg>\n");
    out
}
