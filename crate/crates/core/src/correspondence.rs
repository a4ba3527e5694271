//! Cellwise comparison between a highlighted difference pyramid and an
//! elementary-automaton diagram, restricted to the light cone of an impulse.
//!
//! Drawn centered, pyramid cell `(g, i)` sits `2i + g` half-cells from the
//! left edge of the input row. With the impulse at input index `j`, that is an
//! offset of `2i + g - 2j` half-cells from the impulse column. One pyramid
//! half-cell is mapped to one diagram column, so generation `g` of the pyramid
//! lands on diagram row `g - lag`, column `center + 2i + g - 2j`.
//!
//! Rule 90 agrees with the `[1]` mask at lag 0. Rule 182 started from the same
//! single-1 seed carries the complement of Pascal row `g` on the columns
//! between its own generation-`g - 1` cone lattice, so it agrees with the
//! `[0]` mask at lag 1.

use crate::eca::{eca_evolve, impulse_row, Boundary, EcaDiagram, EcaError, EcaRule};
use crate::engine::{evolve_capped, Pyramid, Row};
use crate::fixtures::impulse_index;
use crate::pattern::{highlight_pyramid, HighlightMask, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Agreement {
    pub matching: usize,
    pub total: usize,
}

impl Agreement {
    pub fn ratio(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.matching as f64 / self.total as f64
        }
    }

    pub fn is_exact(&self) -> bool {
        self.total > 0 && self.matching == self.total
    }
}

/// Pyramid cells `(generation, index)` that causally depend on input cell `impulse`.
pub fn light_cone(
    height: usize,
    width: usize,
    impulse: usize,
) -> impl Iterator<Item = (usize, usize)> {
    (0..height).flat_map(move |g| {
        let lo = impulse.saturating_sub(g);
        let hi = impulse.min((width - g).saturating_sub(1));
        (lo..=hi).filter(move |_| g < width).map(move |i| (g, i))
    })
}

/// Diagram column holding pyramid cell `(g, i)` when the impulse sits at
/// input index `impulse` and diagram column `center`.
pub fn aligned_column(g: usize, i: usize, impulse: usize, center: usize) -> Option<usize> {
    let col = center as isize + 2 * i as isize + g as isize - 2 * impulse as isize;
    usize::try_from(col).ok()
}

pub fn cone_agreement(
    mask: &HighlightMask,
    impulse: usize,
    diagram: &EcaDiagram,
    center: usize,
    lag: usize,
) -> Agreement {
    let mut agreement = Agreement::default();
    for (g, i) in light_cone(mask.height(), mask.width(), impulse) {
        let Some(eca_row) = g.checked_sub(lag) else {
            continue;
        };
        let Some(col) = aligned_column(g, i, impulse, center) else {
            continue;
        };
        let Some(bit) = diagram.get(eca_row, col) else {
            continue;
        };
        agreement.total += 1;
        if mask.get(g, i) == Some(bit == 1) {
            agreement.matching += 1;
        }
    }
    agreement
}

/// Everything needed to lay a highlighted pyramid next to a reference
/// diagram of matching height.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub pyramid: Pyramid,
    pub mask: HighlightMask,
    pub diagram: EcaDiagram,
    /// Input index of the single 1, when the input is an impulse.
    pub impulse: Option<usize>,
    /// Column of the diagram's seed cell.
    pub center: usize,
}

impl Comparison {
    /// Evolves `input`, highlights `pattern`, and runs `rule` from a centered
    /// single-1 seed wide enough that no boundary reaches the drawn region.
    pub fn build(
        input: &Row,
        pattern: &Pattern,
        rule: &EcaRule,
        boundary: Boundary,
        max_generations: Option<usize>,
    ) -> Result<Self, EcaError> {
        let pyramid = evolve_capped(input, max_generations);
        let mask = highlight_pyramid(&pyramid, pattern);
        let generations = pyramid.height() - 1;
        let width = 2 * input.len() - 1;
        let center = (width - 1) / 2;
        let diagram = eca_evolve(&impulse_row(width)?, rule, generations, boundary)?;
        Ok(Comparison {
            impulse: impulse_index(input),
            pyramid,
            mask,
            diagram,
            center,
        })
    }

    pub fn agreement(&self, lag: usize) -> Option<Agreement> {
        self.impulse
            .map(|j| cone_agreement(&self.mask, j, &self.diagram, self.center, lag))
    }
}
