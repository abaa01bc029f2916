//! Graded pieces of the inverse system `(I_n^arc)^perp`, its truncations,
//! and the structural cross-checks between the kernel description and the
//! minor descriptions.

mod elimination;
mod kernel;
mod substitution;
mod theorem;

pub use elimination::{
    check_elimination, elimination_outcome, restriction_span, stabilized_restriction,
    truncated_perp_basis, DegreeComparison, EliminationOutcome,
};
pub use kernel::{perp_graded_basis, perp_piece, PerpQuery};
pub use substitution::{
    diff_homogeneity_check, exp_substitution_check, linearity_check, linearity_outcome,
    LinearityOutcome,
};
pub use theorem::{check_theorem_main, theorem_main_outcome, wronskian_side, TheoremMainOutcome};
