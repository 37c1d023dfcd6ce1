//! Rational linear combinations of classes `[BG]` of finite groups, with the
//! inertia operator and its relatives.

mod element;
mod ops;
mod stirling;
mod text;

pub use element::KGpdElement;
pub use ops::{
    eigen_components, filtration_degree, inertia, inertia_r, iterated_inertia,
    max_commuting_length, product, projection,
};
pub use stirling::StirlingTable;
pub use text::{parse_element, JsonTerm};

use crate::group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KGpdError {
    #[error("unknown group class {0:?}")]
    UnknownClass(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
