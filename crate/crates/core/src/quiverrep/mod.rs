//! Quivers, their finite-dimensional representations over a field, and the
//! homological algebra of the (hereditary) path algebra.

mod proj;
mod quiver;
mod rep;
mod tensor;

use thiserror::Error;

pub use proj::{
    ext1_dim, ext1_dim_with, injective, is_projective, proj_presentation, projective, projective_sum, regular_module,
    tor1_dim, PathCombo, ProjMorphism, ProjPresentation, TorDims,
};
pub use quiver::{Arrow, Path, Quiver};
pub use rep::{euler_form, hom_space, HomSpace, K0Class, QuiverRep, Quotient, RepMap};
pub use tensor::{tensor_dim, tensor_map_is_iso};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("a quiver needs at least one vertex")]
    NoVertices,
    #[error("arrow {arrow} refers to a missing vertex")]
    VertexOutOfRange { arrow: String },
    #[error("quiver has a directed cycle")]
    Cyclic,
    #[error("expected {expected} dimensions, found {found}")]
    DimensionCount { expected: usize, found: usize },
    #[error("expected {expected} arrow maps, found {found}")]
    ArrowCount { expected: usize, found: usize },
    #[error("map for arrow {arrow} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch { arrow: String, expected: (usize, usize), found: (usize, usize) },
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("subspaces are not stable under the arrow maps")]
    NotInvariant,
    #[error("vertex maps do not commute with the arrow maps")]
    NotMorphism,
}
