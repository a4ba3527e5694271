//! Reference elementary cellular automaton (radius 1, two states) with
//! Wolfram rule numbering.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::engine::Row;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcaError {
    #[error("rule number {0} is outside 0..=255")]
    OutOfRange(i64),
    #[error("cell {index} has value {value}; elementary automata need 0 or 1")]
    NonBinaryCell { index: usize, value: u64 },
    #[error("width must be at least 1")]
    ZeroWidth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Boundary {
    /// Cells beyond either edge read as 0.
    #[default]
    ZeroPadded,
    /// The row wraps around.
    Periodic,
}

impl FromStr for Boundary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" | "zero-padded" => Ok(Boundary::ZeroPadded),
            "periodic" | "wrap" => Ok(Boundary::Periodic),
            other => Err(format!(
                "unknown boundary {other:?} (expected zero or periodic)"
            )),
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::ZeroPadded => "zero",
            Boundary::Periodic => "periodic",
        })
    }
}

/// A rule number together with its expanded lookup table. `table[k]` is the
/// successor of the neighborhood `(left, center, right)` whose bits read as
/// `k = 4 * left + 2 * center + right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EcaRule {
    number: u8,
    table: [u8; 8],
}

impl EcaRule {
    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn table(&self) -> &[u8; 8] {
        &self.table
    }

    pub fn apply(&self, left: u8, center: u8, right: u8) -> u8 {
        self.table[usize::from(left << 2 | center << 1 | right)]
    }
}

pub fn rule_table(number: i64) -> Result<EcaRule, EcaError> {
    let number = u8::try_from(number).map_err(|_| EcaError::OutOfRange(number))?;
    let mut table = [0u8; 8];
    for (k, entry) in table.iter_mut().enumerate() {
        *entry = (number >> k) & 1;
    }
    Ok(EcaRule { number, table })
}

fn check_binary(row: &Row) -> Result<(), EcaError> {
    match row.iter().position(|&c| c > 1) {
        Some(index) => Err(EcaError::NonBinaryCell {
            index,
            value: row[index],
        }),
        None => Ok(()),
    }
}

fn step_unchecked(row: &[u64], rule: &EcaRule, boundary: Boundary) -> Vec<u64> {
    let w = row.len();
    let cell = |i: isize| -> u8 {
        if (0..w as isize).contains(&i) {
            row[i as usize] as u8
        } else {
            match boundary {
                Boundary::ZeroPadded => 0,
                Boundary::Periodic => row[i.rem_euclid(w as isize) as usize] as u8,
            }
        }
    };
    (0..w as isize)
        .map(|i| u64::from(rule.apply(cell(i - 1), cell(i), cell(i + 1))))
        .collect()
}

pub fn eca_step(row: &Row, rule: &EcaRule, boundary: Boundary) -> Result<Row, EcaError> {
    check_binary(row)?;
    Ok(Row::new(step_unchecked(row, rule, boundary)).expect("width preserved"))
}

/// A constant-width space-time diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcaDiagram {
    rows: Vec<Row>,
    rule: EcaRule,
    boundary: Boundary,
}

impl EcaDiagram {
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    /// Number of stored rows, `generations + 1`.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rule(&self) -> &EcaRule {
        &self.rule
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn get(&self, generation: usize, column: usize) -> Option<u64> {
        self.rows.get(generation)?.get(column).copied()
    }
}

pub fn eca_evolve(
    initial: &Row,
    rule: &EcaRule,
    generations: usize,
    boundary: Boundary,
) -> Result<EcaDiagram, EcaError> {
    check_binary(initial)?;
    let mut rows = Vec::with_capacity(generations + 1);
    rows.push(initial.clone());
    for _ in 0..generations {
        let next = step_unchecked(rows.last().unwrap(), rule, boundary);
        rows.push(Row::new(next).expect("width preserved"));
    }
    Ok(EcaDiagram {
        rows,
        rule: *rule,
        boundary,
    })
}

/// `width` zeros with a single 1 in the middle (left of middle for even widths).
pub fn impulse_row(width: usize) -> Result<Row, EcaError> {
    if width == 0 {
        return Err(EcaError::ZeroWidth);
    }
    let mut cells = vec![0; width];
    cells[(width - 1) / 2] = 1;
    Ok(Row::new(cells).unwrap())
}
