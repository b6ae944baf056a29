//! Subdivision of an edge `i -> i+1` of an affine type A quiver, acting on
//! idempotent loadings and straight line diagrams, with batch checks of
//! the resulting combinatorial identities.

mod subdivide;
mod tuples;
mod verify;

pub use subdivide::{subdivide_diagram, subdivide_diagram_with, subdivide_idempotent, subdivide_idempotent_with, Insertion, SubdivisionParams};
pub use tuples::{close_tuples, tuple_types, CloseTuple, CLOSE};
pub use verify::{
    check_degree_preserved, check_tuple_strip_types, level_one_cases, sampled_level_two, transport_labels,
    verify_degree_preservation, verify_equivalence_batch, verify_idempotent_batch, verify_idempotent_correspondence, verify_tuple_types,
    CaseReport, DegreeSample, EquivalenceGrid, IdempotentCase, Transport, VerificationReport,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SubdivisionError {
    #[error(transparent)]
    Diagram(#[from] diagram::DiagramError),
    #[error(transparent)]
    Strip(#[from] strips::StripError),
    #[error(transparent)]
    Quiver(#[from] quiver_core::QuiverError),
    #[error(transparent)]
    Partition(#[from] partition_core::PartitionError),
    #[error("subdivision parameters must satisfy 0 < eps' < t and t + eps' < gap/2; got t = {t}, eps' = {eps}, gap = {gap}")]
    Params { t: String, eps: String, gap: String },
    #[error("sizes differ: {0} and {1}")]
    SizeMismatch(u32, u32),
}
