//! Figure output for pyramids, highlight masks and reference diagrams.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::correspondence::Comparison;
use crate::eca::EcaDiagram;
use crate::engine::Pyramid;
use crate::pattern::HighlightMask;

mod ascii;
pub mod netpbm;
mod svg;

pub use ascii::{render_ascii, render_eca_ascii};
pub use netpbm::{decode_pbm, decode_pgm, NetpbmError, Raster};
pub use svg::{render_eca_svg, render_svg};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("highlight mask shape does not match the pyramid")]
    ShapeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Ascii,
    Pbm,
    Pgm,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" | "txt" => Ok(Format::Ascii),
            "pbm" => Ok(Format::Pbm),
            "pgm" => Ok(Format::Pgm),
            "svg" => Ok(Format::Svg),
            other => Err(format!(
                "unknown format {other:?} (expected ascii, pbm, pgm or svg)"
            )),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ascii => "ascii",
            Format::Pbm => "pbm",
            Format::Pgm => "pgm",
            Format::Svg => "svg",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Alignment {
    /// Each child drawn halfway between its two parents.
    #[default]
    Centered,
    Left,
}

impl FromStr for Alignment {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "centered" | "center" => Ok(Alignment::Centered),
            "left" => Ok(Alignment::Left),
            other => Err(format!(
                "unknown alignment {other:?} (expected centered or left)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Palette {
    /// Fixed colors for highlighted and plain cells (SVG color strings).
    Highlight { on: String, off: String },
    /// Gray level by value within each row: 0 is white, the row maximum black.
    Grayscale,
}

impl Default for Palette {
    fn default() -> Self {
        Palette::Highlight {
            on: "#000000".to_string(),
            off: "#ffffff".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    cell_px: usize,
    pub alignment: Alignment,
    pub palette: Palette,
    /// ASCII only: draw unmatched cells as `.` instead of their value.
    pub blank_unmatched: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            format: Format::Ascii,
            cell_px: 1,
            alignment: Alignment::Centered,
            palette: Palette::default(),
            blank_unmatched: false,
        }
    }
}

impl RenderSpec {
    pub fn new(format: Format) -> Self {
        RenderSpec {
            format,
            ..Default::default()
        }
    }

    /// Sets pixels per cell; values below 1 are clamped to 1.
    pub fn with_cell_px(mut self, cell_px: usize) -> Self {
        self.cell_px = cell_px.max(1);
        self
    }

    pub fn with_alignment(mut self, alignment: Alignment) -> Self {
        self.alignment = alignment;
        self
    }

    pub fn with_palette(mut self, palette: Palette) -> Self {
        self.palette = palette;
        self
    }

    pub fn with_blank_unmatched(mut self, blank: bool) -> Self {
        self.blank_unmatched = blank;
        self
    }

    pub fn cell_px(&self) -> usize {
        self.cell_px
    }

    /// Horizontal pixel offset of generation `t` in a raster.
    fn raster_indent(&self, t: usize) -> usize {
        match self.alignment {
            Alignment::Centered => t * self.cell_px / 2,
            Alignment::Left => 0,
        }
    }
}

fn check_shape(pyramid: &Pyramid, mask: Option<&HighlightMask>) -> Result<(), RenderError> {
    match mask {
        Some(m) if !m.is_congruent_to(pyramid) => Err(RenderError::ShapeMismatch),
        _ => Ok(()),
    }
}

/// `255 * (max - v) / max`, with all-zero rows white.
pub fn gray_level(value: u64, row_max: u64) -> u8 {
    if row_max == 0 {
        return Raster::WHITE;
    }
    let scaled = 255u128 * u128::from(row_max - value) / u128::from(row_max);
    scaled as u8
}

/// Rasterizes a triangular lattice of gray levels.
fn triangle_raster(rows: &[Vec<u8>], spec: &RenderSpec) -> Raster {
    let px = spec.cell_px;
    let width = rows.first().map_or(0, Vec::len);
    let mut raster = Raster::new(width * px, rows.len() * px);
    for (t, row) in rows.iter().enumerate() {
        let indent = spec.raster_indent(t);
        for (i, &level) in row.iter().enumerate() {
            if level != Raster::WHITE {
                raster.fill_rect(indent + i * px, t * px, px, px, level);
            }
        }
    }
    raster
}

pub fn mask_raster(mask: &HighlightMask, spec: &RenderSpec) -> Raster {
    let levels: Vec<Vec<u8>> = mask
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&lit| if lit { Raster::BLACK } else { Raster::WHITE })
                .collect()
        })
        .collect();
    triangle_raster(&levels, spec)
}

pub fn grayscale_raster(pyramid: &Pyramid, spec: &RenderSpec) -> Raster {
    let levels: Vec<Vec<u8>> = pyramid
        .rows()
        .iter()
        .map(|r| {
            let m = r.iter().copied().max().unwrap_or(0);
            r.iter().map(|&v| gray_level(v, m)).collect()
        })
        .collect();
    triangle_raster(&levels, spec)
}

pub fn eca_raster(diagram: &EcaDiagram, spec: &RenderSpec) -> Raster {
    let px = spec.cell_px;
    let mut raster = Raster::new(diagram.width() * px, diagram.height() * px);
    for (t, row) in diagram.rows().iter().enumerate() {
        for (i, &bit) in row.iter().enumerate() {
            if bit == 1 {
                raster.fill_rect(i * px, t * px, px, px, Raster::BLACK);
            }
        }
    }
    raster
}

/// Plain bitmap of a highlight mask: lit cells black, everything else white.
pub fn render_pbm(mask: &HighlightMask, spec: &RenderSpec) -> Vec<u8> {
    mask_raster(mask, spec).to_pbm()
}

/// Plain graymap. With a mask, lit cells are black and the rest white;
/// without one, each row is shaded by value.
pub fn render_pgm(
    pyramid: &Pyramid,
    mask: Option<&HighlightMask>,
    spec: &RenderSpec,
) -> Result<Vec<u8>, RenderError> {
    check_shape(pyramid, mask)?;
    let raster = match mask {
        Some(m) => mask_raster(m, spec),
        None => grayscale_raster(pyramid, spec),
    };
    Ok(raster.to_pgm())
}

/// Renders a pyramid in `spec.format`. PBM without a mask marks nonzero cells.
pub fn render_pyramid(
    pyramid: &Pyramid,
    mask: Option<&HighlightMask>,
    spec: &RenderSpec,
) -> Result<Vec<u8>, RenderError> {
    check_shape(pyramid, mask)?;
    match spec.format {
        Format::Ascii => render_ascii(pyramid, mask, spec).map(String::into_bytes),
        Format::Pbm => match mask {
            Some(m) => Ok(render_pbm(m, spec)),
            None => {
                let nonzero = HighlightMask::from_rows(
                    pyramid
                        .rows()
                        .iter()
                        .map(|r| r.iter().map(|&v| v != 0).collect())
                        .collect(),
                )
                .expect("pyramid rows are triangular");
                Ok(render_pbm(&nonzero, spec))
            }
        },
        Format::Pgm => render_pgm(pyramid, mask, spec),
        Format::Svg => render_svg(pyramid, mask, spec).map(String::into_bytes),
    }
}

pub fn render_eca(diagram: &EcaDiagram, spec: &RenderSpec) -> Vec<u8> {
    match spec.format {
        Format::Ascii => render_eca_ascii(diagram).into_bytes(),
        Format::Pbm => eca_raster(diagram, spec).to_pbm(),
        Format::Pgm => eca_raster(diagram, spec).to_pgm(),
        Format::Svg => render_eca_svg(diagram, spec).into_bytes(),
    }
}

/// Both panels of a comparison in one artifact: the reference diagram on top,
/// the highlighted pyramid below it, centered on the same column.
pub fn render_comparison(cmp: &Comparison, spec: &RenderSpec) -> Vec<u8> {
    match spec.format {
        Format::Ascii => {
            let glyphs = spec.clone().with_blank_unmatched(true);
            let mut out = render_eca_ascii(&cmp.diagram);
            out.push('\n');
            out.push_str(
                &render_ascii(&cmp.pyramid, Some(&cmp.mask), &glyphs)
                    .expect("comparison mask is built from its pyramid"),
            );
            out.into_bytes()
        }
        Format::Pbm | Format::Pgm => {
            let top = eca_raster(&cmp.diagram, spec);
            let bottom = mask_raster(&cmp.mask, spec);
            let gap = spec.cell_px;
            let width = top.width().max(bottom.width());
            let mut canvas = Raster::new(width, top.height() + gap + bottom.height());
            canvas.blit(&top, (width - top.width()) / 2, 0);
            canvas.blit(&bottom, (width - bottom.width()) / 2, top.height() + gap);
            if spec.format == Format::Pbm {
                canvas.to_pbm()
            } else {
                canvas.to_pgm()
            }
        }
        Format::Svg => svg::render_comparison_svg(cmp, spec).into_bytes(),
    }
}
