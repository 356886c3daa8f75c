//! Bijections between regions: the fundamental bijection on permutations,
//! extension and compression of labeled Dyck paths, the level-preserving
//! map `Φ` from (cycle form, semiorder region) pairs to Catalan regions,
//! and the splittings of a level-`l` region into level-1 pieces.

mod cycle;
mod decompose;
mod extension;
mod phi;

use alloc::string::String;
use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::dyck::DyckError;

pub use cycle::{
    all_cycle_forms, fundamental_bijection, inverse_fundamental, CycleForm, OrderedSetPartition,
};
pub use decompose::{phi_omega, phi_omega_inverse, varphi_ell, varphi_ell_inverse};
pub use extension::{omega_extension, q_compression};
pub use phi::{canonical_witness, phi, phi_inverse};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("expected {expected} cycles or pieces, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("compression partition does not refine the induced partition")]
    NotRefinement,
    #[error("region is not in the fundamental chamber")]
    NotInFundamentalChamber,
    #[error("operation needs a {0} arrangement")]
    WrongKind(&'static str),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
}
