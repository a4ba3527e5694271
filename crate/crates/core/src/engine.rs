//! The absolute-difference automaton.
//!
//! Each cell holds a natural number. A generation is computed from the
//! previous one by replacing every adjacent pair `(a, b)` with `|a - b|`, so a
//! row of `n` cells shrinks by one cell per generation and the full evolution
//! is a triangle of `n` rows ending in a single cell.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// State of a single cell. Evolution never exceeds the largest input value,
/// so the width fixed at parse time bounds the whole run.
pub type CellState = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("row must contain at least one cell")]
    EmptyRow,
    #[error("row of length {len} is too short to step (need at least 2 cells)")]
    RowTooShort { len: usize },
    #[error("cell index {index} is outside generation {generation} (valid 0..={generation})")]
    IndexOutOfRange { generation: usize, index: usize },
}

/// One time slice: a nonempty sequence of cell states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row(Vec<CellState>);

impl Row {
    pub fn new(cells: Vec<CellState>) -> Result<Self, EngineError> {
        if cells.is_empty() {
            return Err(EngineError::EmptyRow);
        }
        Ok(Row(cells))
    }

    pub fn cells(&self) -> &[CellState] {
        &self.0
    }

    pub fn into_cells(self) -> Vec<CellState> {
        self.0
    }

    pub fn reversed(&self) -> Row {
        Row(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&c| c <= 1)
    }
}

impl Deref for Row {
    type Target = [CellState];

    fn deref(&self) -> &[CellState] {
        &self.0
    }
}

impl TryFrom<Vec<CellState>> for Row {
    type Error = EngineError;

    fn try_from(cells: Vec<CellState>) -> Result<Self, Self::Error> {
        Row::new(cells)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Applies the transition rule once: `out[i] = |row[i] - row[i + 1]|`.
pub fn step(row: &Row) -> Result<Row, EngineError> {
    if row.len() < 2 {
        return Err(EngineError::RowTooShort { len: row.len() });
    }
    Ok(Row(row.windows(2).map(|w| w[0].abs_diff(w[1])).collect()))
}

/// The full space-time triangle. `rows[t]` holds generation `t` and has
/// `width() - t` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pyramid {
    rows: Vec<Row>,
}

impl Pyramid {
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, generation: usize) -> Option<&Row> {
        self.rows.get(generation)
    }

    /// Number of generations stored, including the input row.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Length of the input row.
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// True when the evolution ran all the way down to a single cell.
    pub fn is_complete(&self) -> bool {
        self.rows.last().is_some_and(|r| r.len() == 1)
    }

    pub fn input(&self) -> &Row {
        &self.rows[0]
    }

    pub fn apex(&self) -> Option<CellState> {
        self.rows.last().filter(|r| r.len() == 1).map(|r| r[0])
    }
}

/// Evolves `input` down to its single-cell apex.
pub fn evolve(input: &Row) -> Pyramid {
    evolve_capped(input, None)
}

/// Like [`evolve`], but stops after at most `max_generations` steps, leaving
/// `min(n, max_generations + 1)` rows.
pub fn evolve_capped(input: &Row, max_generations: Option<usize>) -> Pyramid {
    let n = input.len();
    let height = match max_generations {
        Some(cap) => n.min(cap.saturating_add(1)),
        None => n,
    };
    let mut rows = Vec::with_capacity(height);
    rows.push(input.clone());
    while rows.len() < height {
        let next = step(rows.last().unwrap()).expect("rows above the apex have length >= 2");
        rows.push(next);
    }
    Pyramid { rows }
}

pub fn max_state(row: &Row) -> CellState {
    row.iter().copied().max().expect("rows are nonempty")
}

/// `binomial(t, i) mod 2`, via Lucas' theorem: the coefficient is odd iff
/// `i` and `t - i` share no set bits.
pub fn pascal_mod2_oracle(t: usize, i: usize) -> Result<u8, EngineError> {
    if i > t {
        return Err(EngineError::IndexOutOfRange {
            generation: t,
            index: i,
        });
    }
    Ok(u8::from(i & (t - i) == 0))
}
