//! Sign matrices, labeled Dyck paths and their tuples, interval orders,
//! partitions of permutations and the level formulas.

mod model;
mod order;
mod partition;
mod path;

use alloc::string::String;
use thiserror::Error;

use crate::arrangement::Infeasible;

pub use model::{
    all_words, associated_permutation, autonomous, canonical_label, dyck_tuple, interval_orders,
    label_class, level, region_partition, sign_matrices, tuple_feasible, DyckTuple,
};
pub use order::{IncomparabilityGraph, IntervalOrderTuple, Poset};
pub use partition::PermutationPartition;
pub use path::{render, DyckPath, LabeledDyckPath, SignMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("the braid arrangement (no offsets) has no Dyck model; use the geometric level")]
    BraidUnsupported,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("partitions are over different permutations")]
    BaseMismatch,
    #[error("operation needs a {0} arrangement")]
    WrongKind(&'static str),
    #[error(transparent)]
    Infeasible(#[from] Infeasible),
    #[error("level formulas disagree: {components} components but {primes} prime factors")]
    ModelMismatch { components: usize, primes: usize },
}

/// Formats a 0-based word as its 1-based one-line notation, e.g. `45312`.
/// Entries above 9 are separated by spaces.
pub fn word_string(word: &[usize]) -> String {
    use alloc::format;
    use alloc::vec::Vec;
    if word.iter().all(|&v| v < 9) {
        word.iter().map(|v| format!("{}", v + 1)).collect()
    } else {
        word.iter()
            .map(|v| format!("{}", v + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses one-line notation like `45312` (single digits) into a 0-based word.
pub fn parse_word(s: &str) -> Result<alloc::vec::Vec<usize>, DyckError> {
    use alloc::vec::Vec;
    let parts: Vec<usize> = if s.contains(' ') || s.contains(',') {
        s.split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| DyckError::Malformed(s.into()))
            })
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| DyckError::Malformed(s.into()))
            })
            .collect::<Result<_, _>>()?
    };
    let word: Vec<usize> = parts.into_iter().map(|v| v.wrapping_sub(1)).collect();
    if !is_permutation(&word) {
        return Err(DyckError::Malformed(alloc::format!(
            "{s:?} is not a permutation"
        )));
    }
    Ok(word)
}

/// Whether `word` lists each of `0..len` exactly once.
pub fn is_permutation(word: &[usize]) -> bool {
    let mut seen = alloc::vec![false; word.len()];
    word.iter()
        .all(|&v| v < word.len() && !core::mem::replace(&mut seen[v], true))
}
