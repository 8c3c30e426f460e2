//! Factorizations in Chevalley groups: rank-one identities, the Gauss decomposition
//! for A1 over local rings, brute-force Bruhat decomposition over small fields, and
//! verification of claimed factorizations.

pub mod bruhat;
pub mod error;
pub mod gauss;
pub mod rank_one;

pub use bruhat::{bruhat_bruteforce, bruhat_cells, weyl_representatives, BruhatFactorization, WeylElement};
pub use error::DecompError;
pub use gauss::{gauss_decompose_a1, GaussFactorization};
pub use rank_one::{nilpotent_commute, rank_one_factor, verify_factorization, verify_matrices, Verification};
