use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::DyckError;

/// A permutation word cut into consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationPartition {
    blocks: Vec<Vec<usize>>,
}

impl PermutationPartition {
    /// Blocks are taken as given; empty blocks are dropped.
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        Self {
            blocks: blocks.into_iter().filter(|b| !b.is_empty()).collect(),
        }
    }

    /// Cuts `base` before each listed position (positions in `1..len`).
    pub fn from_cuts(base: Vec<usize>, cuts: &[usize]) -> Self {
        let cuts: BTreeSet<usize> = cuts
            .iter()
            .copied()
            .filter(|&c| c > 0 && c < base.len())
            .collect();
        let mut blocks = Vec::new();
        let mut start = 0;
        for c in cuts.into_iter().chain(core::iter::once(base.len())) {
            blocks.push(base[start..c].to_vec());
            start = c;
        }
        Self::new(blocks)
    }

    pub fn finest(base: Vec<usize>) -> Self {
        let cuts: Vec<usize> = (1..base.len()).collect();
        Self::from_cuts(base, &cuts)
    }

    pub fn coarsest(base: Vec<usize>) -> Self {
        Self::from_cuts(base, &[])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn base(&self) -> Vec<usize> {
        self.blocks.concat()
    }

    /// Positions in the base word where a new block starts (excluding 0).
    pub fn cuts(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |pos, b| {
                *pos += b.len();
                Some(*pos)
            })
            .filter(|&p| p < self.len())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Common refinement: its cuts are the union of both cut sets.
    pub fn meet(&self, other: &PermutationPartition) -> Result<PermutationPartition, DyckError> {
        if self.base() != other.base() {
            return Err(DyckError::BaseMismatch);
        }
        let mut cuts = self.cuts();
        cuts.extend(other.cuts());
        Ok(Self::from_cuts(self.base(), &cuts))
    }

    /// `self <= other` in the refinement order over the same base word.
    pub fn refines(&self, other: &PermutationPartition) -> bool {
        if self.base() != other.base() {
            return false;
        }
        let mine: BTreeSet<usize> = self.cuts().into_iter().collect();
        other.cuts().iter().all(|c| mine.contains(c))
    }

    /// Same number of blocks with the same contents block by block.
    pub fn equivalent(&self, other: &PermutationPartition) -> bool {
        self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| {
                let (mut a, mut b) = (a.clone(), b.clone());
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
    }

    /// Block index of every element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.len()];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = bi;
            }
        }
        out
    }
}

impl fmt::Display for PermutationPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<alloc::string::String> =
            self.blocks.iter().map(|b| super::word_string(b)).collect();
        f.write_str(&strs.join("|"))
    }
}
