//! Grid diagrams, grid states, gradings and the tilde grid complex.

pub mod alexander;
pub mod complex;
pub mod diagram;
pub mod grading;
pub mod rect;
pub mod state;

pub use alexander::alexander_from_poincare;
pub use complex::{boundary, GridComplex, Limits};
pub use diagram::{Cell, GridDiagram, MarkSet};
pub use grading::{grading, Grader, Gradings};
pub use rect::{rel_grading, Rect, RectChoice};
pub use state::{all_states, GridState};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("malformed grid: {0}")]
    MalformedGrid(String),
    #[error("overlapping markings: {0}")]
    OverlappingMarkings(String),
    #[error("state of size {state} does not fit a grid of size {grid}")]
    SizeMismatch { grid: usize, state: usize },
    #[error("expected a two-component link, found {0} component(s)")]
    NotTwoComponents(usize),
    #[error("grid size {n} exceeds the configured cap of {cap}")]
    GridTooLarge { n: usize, cap: usize },
}
