//! m-Dyck paths and the tableau insertion map into regions of the
//! m-Catalan arrangement `C_{n,[m]}`.

mod mdyck;
mod tableau;

use alloc::string::String;
use thiserror::Error;

use crate::dyck::DyckError;

pub use mdyck::{enumerate_m_dyck, MDyckPath};
pub use tableau::{
    m_dyck_to_region, region_to_m_dyck, tableau_insert, tableau_to_tuple, YoungTableau,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McatError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("no region-feasible tableau exists for heights {0:?}")]
    NoFeasibleTableau(alloc::vec::Vec<usize>),
    #[error("enumeration of m-Dyck paths exceeds {0} paths")]
    ResourceLimit(usize),
    #[error(transparent)]
    Dyck(#[from] DyckError),
}
