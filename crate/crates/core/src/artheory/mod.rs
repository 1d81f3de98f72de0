//! Auslander–Reiten theory for finite-dimensional representations of a
//! tame hereditary path algebra: transpose and translates, decomposition,
//! the defect, full morphisms, extensions, tubes and filtrations.

mod decompose;
mod defect;
mod extension;
mod filtration;
mod search;
mod translate;
mod tube;

use thiserror::Error;

use crate::quiverrep::QuiverError;

pub use decompose::{decompose, is_indecomposable, is_isomorphic};
pub use defect::{is_atomic_full, is_full, is_regular, is_simple_regular, DefectFunction};
pub use extension::{build_extension, ext_class_basis, extension_with_inclusion};
pub use filtration::{is_bound, u_filtration, BoundSet, Filtration};
pub use search::{find_submodule, SearchBudget};
pub use translate::{tau, tau_minus, transpose, transpose_from};
pub use tube::{a31_tube_modules, tube_catalog, TubeCatalog, TubeFamily, TubeModules};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("endomorphism algebra does not split over this field")]
    NonSplitField,
    #[error("source or target is not projective")]
    NonProjective,
    #[error("Ext^1 vanishes, there is no non-split extension")]
    NoExtension,
    #[error("extension class {index} out of range (dimension {dim})")]
    ClassIndexOutOfRange { index: usize, dim: usize },
    #[error("member {index} is not a bound module")]
    NotBound { index: usize },
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("unsupported quiver family: {0}")]
    UnsupportedFamily(String),
    #[error("quiver is not of tame type")]
    NotTame,
}
