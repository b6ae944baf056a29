//! Weighted KLRW loadings in affine type A: idempotents built from the
//! positioning function, rightward normalization, straight line diagrams
//! with their degrees, and semistandard tableaux.
//!
//! All coordinates are exact rationals. The quiver must have `e >= 2`.

mod affine;
mod loading;
mod normalize;
pub mod rat;
mod straight;
mod tableau;
mod tikz;

pub use affine::{affine_extend, position, AffineData};
pub use loading::{
    idempotent_loading, idempotent_loading_with, interacts, signature, unit_shifts, Kind, Loading, Origin, Red,
    Signature, Solid, StringDesc,
};
pub use normalize::{normalize_right, reshift};
pub use rat::Q;
pub use straight::{degree, straight_diagram, StraightDiagram};
pub use tableau::{
    canonical_tableau, dominated_by, enumerate_sstd, enumerate_sstd_all, graded_cell_dim,
    is_semistandard, tableau_degree, tableau_diagram, tableau_permutation, GradedDim, Tableau,
};
pub use tikz::{tikz_diagram, tikz_loading};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("epsilon must satisfy 0 < eps < 1/(2 n l_hat)")]
    EpsilonRange,
    #[error("{got} components exceed the affine level {max}")]
    TooManyComponents { got: usize, max: usize },
    #[error("e = 1 has two ghosts per solid and is not supported by diagrams")]
    DoubledEdge,
    #[error("ghost shifts must be positive, one per vertex")]
    BadShifts,
    #[error("two strings share the coordinate {x}")]
    Collision { x: String },
    #[error("solids {0:?} can be pulled arbitrarily far right")]
    Unsteady(Vec<usize>),
    #[error("the blocking constraints admit no solution")]
    Infeasible,
    #[error("tie-breaking between rigid groups is cyclic")]
    Ambiguous,
    #[error("diagram boundaries do not match: {0}")]
    Mismatch(String),
    #[error("sizes differ: {0} and {1}")]
    SizeMismatch(u32, u32),
    #[error(transparent)]
    Partition(#[from] partition_core::PartitionError),
}
