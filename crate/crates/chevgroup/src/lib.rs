//! Chevalley groups of types A1, A2, B2, G2: Chevalley bases, matrix realizations,
//! symbolic group words and commutator relations.

pub mod basis;
mod calibrate;
pub mod error;
pub mod group;
pub mod relations;
pub mod word;

use std::fmt;
use std::str::FromStr;

pub use basis::{build_basis, ChevalleyBasis};
pub use error::ChevError;
pub use group::{pgl3_canonical, pgl3_equal, ChevalleyGroup, CommutatorRelation, RelationFactor};
pub use rootsys::{Root, SystemType};
pub use word::{GroupWord, Letter};

/// Matrix model in which group elements are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    /// Adjoint action on the Chevalley basis (dimension 3, 8, 10 or 14).
    Adjoint,
    /// 3x3 matrices for A2, compared up to scalars.
    Pgl3,
    /// 3x3 matrices for A1 on the basis of the symmetric square.
    A1Std,
}

impl Realization {
    pub fn supports(self, system: SystemType) -> bool {
        match self {
            Realization::Adjoint => true,
            Realization::Pgl3 => system == SystemType::A2,
            Realization::A1Std => system == SystemType::A1,
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Realization::Adjoint => "adjoint",
            Realization::Pgl3 => "pgl3",
            Realization::A1Std => "a1std",
        })
    }
}

impl FromStr for Realization {
    type Err = ChevError;
    fn from_str(s: &str) -> Result<Self, ChevError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "adjoint" | "ad" => Ok(Realization::Adjoint),
            "pgl3" => Ok(Realization::Pgl3),
            "a1std" => Ok(Realization::A1Std),
            _ => Err(ChevError::Parse(format!("unknown realization {s:?}"))),
        }
    }
}
