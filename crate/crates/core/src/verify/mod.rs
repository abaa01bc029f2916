//! Verification driver: the dimension series, the lemma chain for the
//! triangular / scaled matrices, and a registry of named checks that
//! assemble into a deterministic JSON report.

mod checks;
mod lemmas;
mod registry;
mod report;

pub use checks::builtin_checks;
pub use lemmas::{closed_form_coefficients, dims_lemma_chain, series, LemmaChain, SeriesRow};
pub use registry::{Check, CheckContext, CheckRegistry};
pub use report::{verify_all, verify_with, CheckResult, VerificationReport};
