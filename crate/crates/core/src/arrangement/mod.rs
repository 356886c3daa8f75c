//! Hyperplanes, exact feasibility of difference systems, region
//! enumeration, the recession-cone level oracle and characteristic
//! polynomials by finite-field point counting.

mod census;
mod charpoly;
mod cone;
mod constraint;
mod region;
mod spec;

use alloc::string::String;
use alloc::vec::Vec;
use thiserror::Error;

use crate::dyck::DyckError;
use crate::exactnum::Rational;

pub use census::{census_from_regions, chamber_census, level_census, LevelCensus};
pub use charpoly::{char_poly_finite_field, count_points_mod_p};
pub use cone::{fourier_motzkin_feasible, rank, recession_cone_dim, LinearInequality};
pub use constraint::{feasible, DifferenceConstraint, Infeasible, PathClosure};
pub use region::{
    enumerate_regions, enumerate_regions_with, region_of_point, EnumerationLimits, Region,
    RegionSearch,
};
pub use spec::{build_hyperplanes, ArrangementKind, ArrangementSpec, Hyperplane};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("invalid arrangement: {0}")]
    InvalidSpec(String),
    #[error("expected a point with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point lies on the hyperplane x{} - x{} = {c}", .i + 1, .j + 1)]
    OnHyperplane { i: usize, j: usize, c: Rational },
    #[error(transparent)]
    Infeasible(#[from] Infeasible),
    #[error("search limit of {explored} nodes reached after finding {found} regions")]
    ResourceLimit { explored: u64, found: usize },
    #[error("interpolated polynomial disagrees with the count at p = {prime}")]
    ValidationMismatch { prime: u64 },
    #[error(
        "level mismatch on region {intervals:?}: model says {model}, recession cone says {oracle}"
    )]
    OracleMismatch {
        intervals: Vec<usize>,
        model: usize,
        oracle: usize,
    },
    #[error(transparent)]
    Dyck(#[from] DyckError),
}
