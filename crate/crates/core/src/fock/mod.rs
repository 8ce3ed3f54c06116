//! Truncated Fock-space representation: the numeric oracle for the
//! symbolic engine.

mod basis;
mod rep;
mod sparse;

pub use basis::{basis, index_of, BasisState, Cutoff, SectorLabel};
pub use rep::{
    apply_generator, generator_matrix, matrix_of, matrix_of_with_phase, safe_mask,
    safe_mask_with_margin, safe_projector, safe_projector_with_margin, sector_image, spectrum,
    truncation_margin, word_matrix, word_truncation_margin, SectorImage, Spectrum,
    IDENTITY_TOLERANCE, ORACLE_TOLERANCE, SUPPORT_TOLERANCE,
};
pub use sparse::SparseOperator;
