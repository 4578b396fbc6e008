//! Hasse diagrams of ideal posets and pictures of plane linear maps.

mod plane;
mod poset;

pub use plane::{emit_svg, transform_report, PlaneTransform, TransformClass, TransformReport};
pub use poset::{emit_dot, ideal_poset, PosetDiagram, PosetNode, MAX_LABEL_CHARS};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum VizError {
    #[error("ideal {0} appears more than once")]
    DuplicateIdeal(String),
    #[error("subset {subset} does not belong to a ring of size {size}")]
    UniverseMismatch { subset: String, size: usize },
    #[error("matrix entry {name} is not finite")]
    NonFinite { name: char },
}
