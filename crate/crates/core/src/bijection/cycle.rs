use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::BijectionError;
use crate::dyck::{is_permutation, word_string};

/// A permutation in standard cycle notation: every cycle starts with its
/// largest element and cycles appear by increasing largest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleForm {
    cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    /// Standardises arbitrary cycles covering `0..n` exactly once.
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self, BijectionError> {
        let flat: Vec<usize> = cycles.concat();
        if cycles.iter().any(Vec::is_empty) || !is_permutation(&flat) {
            return Err(BijectionError::Malformed(
                "cycles must partition 0..n".into(),
            ));
        }
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|mut c| {
                let top = (0..c.len()).max_by_key(|&i| c[i]).expect("nonempty");
                c.rotate_left(top);
                c
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        Ok(Self { cycles })
    }

    /// `(0)(1)...(n-1)`
    pub fn identity(n: usize) -> Self {
        Self {
            cycles: (0..n).map(|i| alloc::vec![i]).collect(),
        }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of elements permuted.
    pub fn n(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// Number of cycles.
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The permutation as a map `i -> ω(i)`.
    pub fn as_map(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.n()];
        for c in &self.cycles {
            for (s, &v) in c.iter().enumerate() {
                out[v] = c[(s + 1) % c.len()];
            }
        }
        out
    }

    /// Cycle decomposition of a permutation map.
    pub fn from_map(map: &[usize]) -> Result<Self, BijectionError> {
        if !is_permutation(map) {
            return Err(BijectionError::Malformed("not a permutation".into()));
        }
        let mut seen = alloc::vec![false; map.len()];
        let mut cycles = Vec::new();
        for s in 0..map.len() {
            let mut c = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                c.push(v);
                v = map[v];
            }
            if !c.is_empty() {
                cycles.push(c);
            }
        }
        Self::new(cycles)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "({})", word_string(c))?;
        }
        Ok(())
    }
}

/// Erases the parentheses of the standard cycle notation.
pub fn fundamental_bijection(omega: &CycleForm) -> Vec<usize> {
    omega.cycles.concat()
}

/// Cuts a word before each left-to-right maximum; each piece is a cycle.
pub fn inverse_fundamental(word: &[usize]) -> CycleForm {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut top = None;
    for &v in word {
        if top.is_none_or(|t| v > t) {
            top = Some(v);
            cycles.push(Vec::new());
        }
        cycles.last_mut().expect("started").push(v);
    }
    CycleForm { cycles }
}

/// Every permutation of `0..n` in cycle form, ordered by its image under
/// the fundamental bijection.
pub fn all_cycle_forms(n: usize) -> Vec<CycleForm> {
    let items: Vec<usize> = (0..n).collect();
    crate::dyck::all_words(&items)
        .iter()
        .map(|w| inverse_fundamental(w))
        .collect()
}

/// Disjoint sets covering `0..n` in a significant order; each set sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, BijectionError> {
        if blocks.iter().any(Vec::is_empty) || !is_permutation(&blocks.concat()) {
            return Err(BijectionError::Malformed(
                "blocks must partition 0..n".into(),
            ));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| word_string(b)).collect();
        f.write_str(&parts.join("|"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::parse_word;
    use alloc::format;
    use alloc::vec;

    fn cyc(groups: &[&str]) -> CycleForm {
        CycleForm::new(
            groups
                .iter()
                .map(|g| g.chars().map(|c| c as usize - '1' as usize).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn worked_cycle_word() {
        let w = cyc(&["71", "43", "265"]);
        assert_eq!(format!("{w}"), "(43)(652)(71)");
        assert_eq!(fundamental_bijection(&w), parse_word("4365271").unwrap());
        assert_eq!(inverse_fundamental(&parse_word("4365271").unwrap()), w);
    }

    #[test]
    fn identity_and_inverse() {
        assert_eq!(
            fundamental_bijection(&CycleForm::identity(4)),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            format!("{}", inverse_fundamental(&parse_word("3415672").unwrap())),
            "(3)(41)(5)(6)(72)"
        );
    }

    #[test]
    fn maps_round_trip() {
        for w in all_cycle_forms(5) {
            assert_eq!(CycleForm::from_map(&w.as_map()).unwrap(), w);
            assert_eq!(inverse_fundamental(&fundamental_bijection(&w)), w);
        }
        assert_eq!(all_cycle_forms(5).len(), 120);
    }

    #[test]
    fn malformed() {
        assert!(CycleForm::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(OrderedSetPartition::new(vec![vec![0], vec![]]).is_err());
        assert_eq!(
            format!(
                "{}",
                OrderedSetPartition::new(vec![vec![3, 2], vec![0, 1]]).unwrap()
            ),
            "34|12"
        );
    }
}
