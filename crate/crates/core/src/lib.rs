//! Absolute-difference cellular automaton.
//!
//! A row of natural numbers evolves by replacing each adjacent pair with the
//! absolute value of its difference, producing a triangular space-time
//! pyramid. The crate parses inputs in dash notation (`2-0-1-7`), evolves
//! them, highlights value patterns row by row, renders figures, and carries a
//! reference elementary cellular automaton for side-by-side comparisons.
//!
//! ```
//! use diffca_core::{evolve, parse_expression};
//!
//! let p = parse_expression("1-5-5-1").unwrap();
//! let pyramid = evolve(p.terms());
//! assert_eq!(pyramid.height(), 4);
//! assert!(pyramid.rows().iter().all(|r| r.is_palindrome()));
//! ```

pub mod correspondence;
pub mod eca;
pub mod engine;
pub mod expression;
pub mod fixtures;
pub mod parser;
pub mod pattern;
pub mod render;

pub use correspondence::{cone_agreement, light_cone, Agreement, Comparison};
pub use eca::{
    eca_evolve, eca_step, impulse_row, rule_table, Boundary, EcaDiagram, EcaError, EcaRule,
};
pub use engine::{
    evolve, evolve_capped, max_state, pascal_mod2_oracle, step, CellState, EngineError, Pyramid,
    Row,
};
pub use expression::{make_symmetric, reverse_input, InputExpression};
pub use fixtures::{load_fixture, UnknownFixture};
pub use parser::{parse_expression, serialize_expression, ParseError};
pub use pattern::{highlight_pyramid, match_row, EmptyPattern, HighlightMask, Pattern};
pub use render::{
    render_ascii, render_comparison, render_eca, render_pbm, render_pgm, render_pyramid,
    render_svg, Alignment, Format, Palette, RenderError, RenderSpec,
};
