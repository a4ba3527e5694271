use std::fmt;

use crate::engine::{CellState, Row};

/// A parsed input `P` (or pattern `S`) together with the text it came from.
#[derive(Debug, Clone)]
pub struct InputExpression {
    terms: Row,
    source_text: String,
}

impl InputExpression {
    pub fn new(terms: Row, source_text: impl Into<String>) -> Self {
        InputExpression {
            terms,
            source_text: source_text.into(),
        }
    }

    /// Builds an expression whose source text is the canonical serialization.
    pub fn from_row(terms: Row) -> Self {
        let source_text = terms.to_string();
        InputExpression { terms, source_text }
    }

    pub fn terms(&self) -> &Row {
        &self.terms
    }

    pub fn values(&self) -> &[CellState] {
        self.terms.cells()
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    pub fn into_row(self) -> Row {
        self.terms
    }
}

/// Equality is on the terms only; `"[2-0]"` and `"2-0-"` denote the same input.
impl PartialEq for InputExpression {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for InputExpression {}

impl fmt::Display for InputExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.terms, f)
    }
}

pub fn reverse_input(p: &InputExpression) -> InputExpression {
    InputExpression::from_row(p.terms.reversed())
}

/// Concatenates `p` with its own reversal. Every generation evolved from the
/// result is a palindrome.
pub fn make_symmetric(p: &InputExpression) -> InputExpression {
    let mut cells = p.values().to_vec();
    cells.extend(p.values().iter().rev());
    InputExpression::from_row(Row::new(cells).expect("doubling a nonempty row"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expr(cells: &[CellState]) -> InputExpression {
        InputExpression::from_row(Row::new(cells.to_vec()).unwrap())
    }

    #[test]
    fn symmetric_examples() {
        assert_eq!(make_symmetric(&expr(&[1, 5])), expr(&[1, 5, 5, 1]));
        assert_eq!(
            make_symmetric(&expr(&[2, 0, 1, 7, 2, 0, 1, 8])),
            expr(&[2, 0, 1, 7, 2, 0, 1, 8, 8, 1, 0, 2, 7, 1, 0, 2])
        );
        assert_eq!(make_symmetric(&expr(&[4])), expr(&[4, 4]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse_input(&expr(&[1, 5])), expr(&[5, 1]));
        assert_eq!(reverse_input(&expr(&[3])), expr(&[3]));
        assert_eq!(reverse_input(&expr(&[2, 0, 1])), expr(&[1, 0, 2]));
    }

    #[test]
    fn derived_source_text_is_canonical() {
        let s = make_symmetric(&expr(&[1, 5]));
        assert_eq!(s.source_text(), "1-5-5-1");
    }
}
