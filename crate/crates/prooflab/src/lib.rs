//! Proof-checking lab: a catalog of group identities with a uniform runner,
//! centralizer families, an entry-elimination chain and obstruction checks.

pub mod catalog;
pub mod centralizer;
pub mod chain;
pub mod error;
pub mod obstruction;
pub mod record;

pub use catalog::{builtin_catalog, full_catalog, skipped_claims};
pub use centralizer::{
    builtin_families, builtin_family, centralizer_agreement, centralizer_bruteforce, centralizer_check, family_over_fp,
    matrix_centralizer_a1, CentralizerFamily, CentralizerScan, SolutionSpace, DEFAULT_SWEEP_CAP,
};
pub use chain::{check_chain_claim, entry_chain_g2, final_normal_form_of_b, run_entry_chain, ChainStage, G2_CHAIN};
pub use error::ProofError;
pub use obstruction::{
    scalar_conjugacy_obstruction, short_root_coordinate, short_root_squares, symmetric_difference, transvection_criterion,
    transvection_element, transvection_square, Obstruction,
};
pub use record::{
    cached_group, catalog_from_json, catalog_to_json, mutate, run_catalog, run_identity, summarize, unit_ratio, Claim,
    Expected, Factor, IdentityRecord, NamedResidual, Report, Verdict,
};
