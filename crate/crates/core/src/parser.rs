//! Dash-separated natural-number notation, e.g. `2-0-1-7` or `[0-]`.
//!
//! ```text
//! expression := term ('-' term)* '-'?
//! term       := digit+
//! ```
//!
//! The dash is a separator, not subtraction. Whitespace around the whole
//! string and one matching pair of enclosing brackets (`[...]` or `(...)`) are
//! ignored; anything else outside the grammar is an error.

use thiserror::Error;

use crate::engine::{CellState, Row};
use crate::expression::InputExpression;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expression contains no terms")]
    EmptyExpression,
    #[error("invalid character {ch:?} at byte {offset}")]
    InvalidCharacter { ch: char, offset: usize },
    #[error("empty term at byte {offset} (leading or doubled '-')")]
    EmptyTerm { offset: usize },
    #[error("term starting at byte {offset} does not fit in a 64-bit cell")]
    ValueOverflow { offset: usize },
}

fn strip_brackets(s: &str) -> Option<&str> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| s.strip_prefix('(').and_then(|r| r.strip_suffix(')')))?;
    Some(inner)
}

pub fn parse_expression(text: &str) -> Result<InputExpression, ParseError> {
    let trimmed = text.trim();
    let mut base = text.len() - text.trim_start().len();
    let body = match strip_brackets(trimmed) {
        Some(inner) => {
            base += 1;
            inner
        }
        None => trimmed,
    };
    if body.is_empty() {
        return Err(ParseError::EmptyExpression);
    }

    let mut terms: Vec<CellState> = Vec::new();
    let mut current: Option<(CellState, usize)> = None;
    for (i, ch) in body.char_indices() {
        let offset = base + i;
        match ch {
            '0'..='9' => {
                let digit = CellState::from(ch as u8 - b'0');
                let (value, start) = current.unwrap_or((0, offset));
                let value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit))
                    .ok_or(ParseError::ValueOverflow { offset: start })?;
                current = Some((value, start));
            }
            '-' => match current.take() {
                Some((value, _)) => terms.push(value),
                None => return Err(ParseError::EmptyTerm { offset }),
            },
            _ => return Err(ParseError::InvalidCharacter { ch, offset }),
        }
    }
    if let Some((value, _)) = current {
        terms.push(value);
    }

    let row = Row::new(terms).map_err(|_| ParseError::EmptyExpression)?;
    Ok(InputExpression::new(row, text))
}

pub fn serialize_expression(p: &InputExpression) -> String {
    p.terms().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn values(text: &str) -> Vec<CellState> {
        parse_expression(text).unwrap().values().to_vec()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(values("2-0-1-4"), vec![2, 0, 1, 4]);
        assert_eq!(values("0-"), vec![0]);
        assert_eq!(values("9"), vec![9]);
        assert_eq!(values("21-5"), vec![21, 5]);
    }

    #[test]
    fn brackets_and_whitespace() {
        assert_eq!(values("[2-0-1-4]"), vec![2, 0, 1, 4]);
        assert_eq!(values("(1-5)"), vec![1, 5]);
        assert_eq!(values("  [0-]\n"), vec![0]);
        assert_eq!(values("1-2\n"), vec![1, 2]);
    }

    #[test]
    fn error_cases() {
        assert_eq!(parse_expression(""), Err(ParseError::EmptyExpression));
        assert_eq!(parse_expression("  \n"), Err(ParseError::EmptyExpression));
        assert_eq!(parse_expression("[]"), Err(ParseError::EmptyExpression));
        assert_eq!(
            parse_expression("-1"),
            Err(ParseError::EmptyTerm { offset: 0 })
        );
        assert_eq!(
            parse_expression("1--2"),
            Err(ParseError::EmptyTerm { offset: 2 })
        );
        assert_eq!(
            parse_expression("1--"),
            Err(ParseError::EmptyTerm { offset: 2 })
        );
        assert_eq!(
            parse_expression("1 - 2"),
            Err(ParseError::InvalidCharacter { ch: ' ', offset: 1 })
        );
        assert_eq!(
            parse_expression("1+2"),
            Err(ParseError::InvalidCharacter { ch: '+', offset: 1 })
        );
        assert_eq!(
            parse_expression("[1-[2]]"),
            Err(ParseError::InvalidCharacter { ch: '[', offset: 3 })
        );
        assert_eq!(
            parse_expression("[1-2)"),
            Err(ParseError::InvalidCharacter { ch: '[', offset: 0 })
        );
        assert_eq!(
            parse_expression("3-99999999999999999999"),
            Err(ParseError::ValueOverflow { offset: 2 })
        );
    }

    #[test]
    fn max_value_fits() {
        assert_eq!(values("18446744073709551615"), vec![u64::MAX]);
        assert_eq!(
            parse_expression("18446744073709551616"),
            Err(ParseError::ValueOverflow { offset: 0 })
        );
    }

    #[test]
    fn serialize_examples() {
        let p = parse_expression("[2-0-1-4-]").unwrap();
        assert_eq!(serialize_expression(&p), "2-0-1-4");
        assert_eq!(serialize_expression(&parse_expression("0").unwrap()), "0");
        assert_eq!(
            serialize_expression(&parse_expression("10-2").unwrap()),
            "10-2"
        );
    }

    #[test]
    fn source_text_is_kept() {
        let p = parse_expression(" [1-5] ").unwrap();
        assert_eq!(p.source_text(), " [1-5] ");
    }

    proptest! {
        #[test]
        fn round_trip(cells in prop::collection::vec(any::<u64>(), 1..40)) {
            let p = InputExpression::from_row(Row::new(cells.clone()).unwrap());
            let back = parse_expression(&serialize_expression(&p)).unwrap();
            prop_assert_eq!(back.values(), &cells[..]);
        }

        #[test]
        fn trailing_dash_is_ignored(cells in prop::collection::vec(0u64..1000, 1..20)) {
            let s = cells.iter().map(u64::to_string).collect::<Vec<_>>().join("-");
            prop_assert_eq!(parse_expression(&s), parse_expression(&format!("{s}-")));
        }

        #[test]
        fn never_panics(s in "\\PC*") {
            let _ = parse_expression(&s);
        }
    }
}
