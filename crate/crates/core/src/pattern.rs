//! Row-wise highlighting of a value sequence `S` across a pyramid.
//!
//! A cell is lit when it lies inside at least one contiguous occurrence of the
//! pattern in its own row. Occurrences may overlap.

use thiserror::Error;

use crate::engine::{CellState, Pyramid, Row};
use crate::expression::InputExpression;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pattern must contain at least one value")]
pub struct EmptyPattern;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<CellState>);

impl Pattern {
    pub fn new(values: Vec<CellState>) -> Result<Self, EmptyPattern> {
        if values.is_empty() {
            return Err(EmptyPattern);
        }
        Ok(Pattern(values))
    }

    pub fn values(&self) -> &[CellState] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<&InputExpression> for Pattern {
    fn from(expr: &InputExpression) -> Self {
        Pattern(expr.values().to_vec())
    }
}

impl From<InputExpression> for Pattern {
    fn from(expr: InputExpression) -> Self {
        Pattern(expr.into_row().into_cells())
    }
}

/// Boolean lattice with the same triangular shape as the pyramid it was
/// computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighlightMask {
    rows: Vec<Vec<bool>>,
}

impl HighlightMask {
    /// Wraps raw rows, checking that row `t` has `rows[0].len() - t` cells.
    pub fn from_rows(rows: Vec<Vec<bool>>) -> Option<Self> {
        let width = rows.first()?.len();
        let triangular =
            rows.len() <= width && rows.iter().enumerate().all(|(t, r)| r.len() == width - t);
        triangular.then_some(HighlightMask { rows })
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn get(&self, generation: usize, index: usize) -> Option<bool> {
        self.rows.get(generation)?.get(index).copied()
    }

    pub fn is_congruent_to(&self, pyramid: &Pyramid) -> bool {
        self.rows.len() == pyramid.height()
            && self
                .rows
                .iter()
                .zip(pyramid.rows())
                .all(|(m, r)| m.len() == r.len())
    }

    pub fn count_lit(&self) -> usize {
        self.rows.iter().flatten().filter(|&&b| b).count()
    }
}

pub fn match_row(row: &Row, pattern: &Pattern) -> Vec<bool> {
    let s = pattern.values();
    let mut lit = vec![false; row.len()];
    if s.len() > row.len() {
        return lit;
    }
    // cells before `covered_until` are already lit by an earlier occurrence
    let mut covered_until = 0;
    for (start, window) in row.windows(s.len()).enumerate() {
        if window == s {
            let end = start + s.len();
            for cell in &mut lit[start.max(covered_until)..end] {
                *cell = true;
            }
            covered_until = end;
        }
    }
    lit
}

pub fn highlight_pyramid(pyramid: &Pyramid, pattern: &Pattern) -> HighlightMask {
    HighlightMask {
        rows: pyramid
            .rows()
            .iter()
            .map(|r| match_row(r, pattern))
            .collect(),
    }
}
