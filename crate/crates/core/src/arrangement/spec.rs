use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use super::ArrangementError;
use crate::exactnum::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrangementKind {
    /// `x_i - x_j = 0, ±a_1, ..., ±a_m`
    Catalan,
    /// `x_i - x_j = ±a_1, ..., ±a_m`
    Semiorder,
}

impl ArrangementKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ArrangementKind::Catalan => "catalan",
            ArrangementKind::Semiorder => "semiorder",
        }
    }
}

impl fmt::Display for ArrangementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Dimension, strictly decreasing positive offsets `a_1 > ... > a_m` and kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrangementSpec {
    n: usize,
    offsets: Vec<Rational>,
    kind: ArrangementKind,
}

impl ArrangementSpec {
    pub fn new(
        n: usize,
        offsets: Vec<Rational>,
        kind: ArrangementKind,
    ) -> Result<Self, ArrangementError> {
        if let Some(a) = offsets.iter().find(|a| !a.is_positive()) {
            return Err(ArrangementError::InvalidSpec(format!(
                "offset {a} is not positive"
            )));
        }
        if offsets.windows(2).any(|w| w[0] <= w[1]) {
            return Err(ArrangementError::InvalidSpec(
                "offsets must be strictly decreasing".into(),
            ));
        }
        if kind == ArrangementKind::Semiorder && offsets.is_empty() {
            return Err(ArrangementError::InvalidSpec(
                "semiorder type needs at least one offset".into(),
            ));
        }
        Ok(Self { n, offsets, kind })
    }

    /// Offsets `[m, m-1, ..., 1]`.
    pub fn integer_range(
        n: usize,
        m: usize,
        kind: ArrangementKind,
    ) -> Result<Self, ArrangementError> {
        let offsets = (1..=m as i64)
            .rev()
            .map(|a| Rational::from_integer(a.into()))
            .collect();
        Self::new(n, offsets, kind)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.offsets.len()
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    /// `a_k` for `k` in `1..=m`.
    pub fn offset(&self, k: usize) -> &Rational {
        &self.offsets[k - 1]
    }

    pub fn kind(&self) -> ArrangementKind {
        self.kind
    }

    /// The same offsets in another dimension.
    pub fn with_n(&self, n: usize) -> Self {
        Self { n, ..self.clone() }
    }

    pub fn with_kind(&self, kind: ArrangementKind) -> Result<Self, ArrangementError> {
        Self::new(self.n, self.offsets.clone(), kind)
    }

    /// Values of `x_i - x_j` at which a hyperplane sits, ascending.
    pub fn cut_points(&self) -> Vec<Rational> {
        let mut cuts: Vec<Rational> = self.offsets.iter().map(|a| -a.clone()).collect();
        if self.kind == ArrangementKind::Catalan {
            cuts.push(Rational::zero());
        }
        cuts.extend(self.offsets.iter().rev().cloned());
        cuts
    }

    /// Number of open intervals the cut points leave on each pair.
    pub fn intervals_per_pair(&self) -> usize {
        self.cut_points().len() + 1
    }

    /// Unordered pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.n)
    }

    /// Position of the pair `{i, j}` in [`ArrangementSpec::pairs`].
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }
}

pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// The locus `x_i - x_j = c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub i: usize,
    pub j: usize,
    pub c: Rational,
}

/// Hyperplanes pair by pair; within a pair the zero hyperplane comes first,
/// then `x_i - x_j = a_k` and `x_j - x_i = a_k` for `k = 1..m`.
pub fn build_hyperplanes(spec: &ArrangementSpec) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for (i, j) in spec.pairs() {
        if spec.kind == ArrangementKind::Catalan {
            out.push(Hyperplane {
                i,
                j,
                c: Rational::zero(),
            });
        }
        for a in &spec.offsets {
            out.push(Hyperplane { i, j, c: a.clone() });
        }
        for a in &spec.offsets {
            out.push(Hyperplane {
                i: j,
                j: i,
                c: a.clone(),
            });
        }
    }
    out
}
