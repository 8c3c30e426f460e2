//! Desk-scale certification that every class-preserving endomorphism of a small
//! elementary Chevalley group over a prime field is inner.

pub mod classes;
pub mod endo;
pub mod error;
pub mod modmat;
pub mod report;
pub mod table;

pub use classes::{conjugacy_classes, Classes};
pub use endo::{class_preserving_endos, extend_homomorphism, inner_map, is_inner, EndoMap};
pub use error::ShaError;
pub use modmat::ModMatrix;
pub use report::{sha_report, ShaOptions, ShaReport, ShaVerdict};
pub use table::{default_realization, generate_group, FiniteGroupTable, DEFAULT_CAP};
