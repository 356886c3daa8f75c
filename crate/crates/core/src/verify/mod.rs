//! Exact checks of the counting identities against enumerated censuses.
//!
//! Every check sweeps a parameter range and compares exact values; a
//! failing report carries the first (smallest) parameters where the two
//! sides differ.

mod checks;
mod store;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::bijection::BijectionError;
use crate::dyck::DyckError;
use crate::exactnum::NumError;
use crate::mcatalan::McatError;

pub use checks::{
    check_binomial_identity, check_catalan_convolution, check_charpoly_transition, check_egf_power,
    check_mcat_census, check_phi_bijection, check_raney_series, check_stirling_convolution,
    check_tableau_bijection, fitted_degree, probe_polynomiality,
};
pub use store::{CensusEntry, CensusStore, Enumerator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Mcat(#[from] McatError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

/// Where two sides of an identity first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub params: String,
    /// Number of exact comparisons made.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    /// Extra findings, e.g. fitted degrees of exploratory probes.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(name: &str, params: String) -> Self {
        Self {
            name: name.into(),
            params,
            checked: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Records one comparison; only the first mismatch is kept.
    pub(crate) fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        at: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        self.checked += 1;
        if lhs != rhs && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                at: at(),
                lhs: alloc::format!("{lhs}"),
                rhs: alloc::format!("{rhs}"),
            });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} [{}] {} comparisons",
            self.name, self.params, self.checked
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; at {}: {} != {}", c.at, c.lhs, c.rhs)?;
        }
        for note in &self.notes {
            write!(f, "; {note}")?;
        }
        Ok(())
    }
}
