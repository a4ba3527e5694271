//! Reference inputs, compiled in so reproductions cannot drift from the
//! source tree.

use thiserror::Error;

use crate::expression::InputExpression;
use crate::parser::parse_expression;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown fixture {0:?} (expected one of: default-p, a1, a2, p1, p1-new)")]
pub struct UnknownFixture(pub String);

pub const DEFAULT_P: &str = "2-0-1-7-0-4-7-8-9-0-9-8-7-4-0-7-1-0-2";

/// A single 1 in a sea of zeros (101 cells, the 1 at index 50).
pub const A1: &str = "0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-1-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-";

/// 67 cells seeding the rule-110-like structure.
pub const A2: &str = "9-9-1-0-5-0-9-8-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-4-5-1-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-";

pub const P1: &str = "2-0-1-7-2-0-1-8";

pub const P1_NEW: &str = "2-0-1-7-2-0-1-8-8-1-0-2-7-1-0-2";

/// Every generation of the default input, one line per generation.
pub const DEFAULT_P_EVOLUTION: [&str; 19] = [
    "2-0-1-7-0-4-7-8-9-0-9-8-7-4-0-7-1-0-2",
    "2-1-6-7-4-3-1-1-9-9-1-1-3-4-7-6-1-2",
    "1-5-1-3-1-2-0-8-0-8-0-2-1-3-1-5-1",
    "4-4-2-2-1-2-8-8-8-8-2-1-2-2-4-4",
    "0-2-0-1-1-6-0-0-0-6-1-1-0-2-0",
    "2-2-1-0-5-6-0-0-6-5-0-1-2-2",
    "0-1-1-5-1-6-0-6-1-5-1-1-0",
    "1-0-4-4-5-6-6-5-4-4-0-1",
    "1-4-0-1-1-0-1-1-0-4-1",
    "3-4-1-0-1-1-0-1-4-3",
    "1-3-1-1-0-1-1-3-1",
    "2-2-0-1-1-0-2-2",
    "0-2-1-0-1-2-0",
    "2-1-1-1-1-2",
    "1-0-0-0-1",
    "1-0-0-1",
    "1-0-1",
    "1-1",
    "0",
];

pub const FIXTURE_IDS: [&str; 5] = ["default-p", "a1", "a2", "p1", "p1-new"];

pub fn fixture_text(name: &str) -> Result<&'static str, UnknownFixture> {
    match name {
        "default-p" => Ok(DEFAULT_P),
        "a1" => Ok(A1),
        "a2" => Ok(A2),
        "p1" => Ok(P1),
        "p1-new" => Ok(P1_NEW),
        other => Err(UnknownFixture(other.to_string())),
    }
}

pub fn load_fixture(name: &str) -> Result<InputExpression, UnknownFixture> {
    let text = fixture_text(name)?;
    Ok(parse_expression(text).expect("compiled-in fixtures are valid"))
}

/// Position of the single 1 when `row` is zeros with exactly one 1.
pub fn impulse_index(values: &[u64]) -> Option<usize> {
    let mut found = None;
    for (i, &v) in values.iter().enumerate() {
        match v {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expression::make_symmetric;

    #[test]
    fn all_fixtures_load() {
        for id in FIXTURE_IDS {
            load_fixture(id).unwrap();
        }
        assert_eq!(load_fixture("a3"), Err(UnknownFixture("a3".to_string())));
    }

    #[test]
    fn default_p_values() {
        assert_eq!(
            load_fixture("default-p").unwrap().values(),
            &[2, 0, 1, 7, 0, 4, 7, 8, 9, 0, 9, 8, 7, 4, 0, 7, 1, 0, 2]
        );
        assert_eq!(
            load_fixture("p1").unwrap().values(),
            &[2, 0, 1, 7, 2, 0, 1, 8]
        );
    }

    #[test]
    fn a1_is_a_centered_impulse() {
        let a1 = load_fixture("a1").unwrap();
        assert_eq!(a1.values().len(), 101);
        assert_eq!(a1.values().iter().filter(|&&v| v == 1).count(), 1);
        assert!(a1.values().iter().all(|&v| v <= 1));
        assert_eq!(impulse_index(a1.values()), Some(50));
    }

    #[test]
    fn a2_transcription() {
        let a2 = load_fixture("a2").unwrap();
        assert_eq!(a2.values().len(), 67);
        assert_eq!(&a2.values()[..6], &[9, 9, 1, 0, 5, 0]);
        assert_eq!(impulse_index(a2.values()), None);
    }

    #[test]
    fn p1_new_is_symmetrized_p1() {
        let p1 = load_fixture("p1").unwrap();
        assert_eq!(make_symmetric(&p1), load_fixture("p1-new").unwrap());
    }

    #[test]
    fn impulse_detection() {
        assert_eq!(impulse_index(&[0, 0, 1]), Some(2));
        assert_eq!(impulse_index(&[0, 0, 0]), None);
        assert_eq!(impulse_index(&[1, 0, 1]), None);
        assert_eq!(impulse_index(&[0, 2, 0]), None);
    }
}
