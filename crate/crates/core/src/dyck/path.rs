use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_permutation, DyckError, PermutationPartition};

/// Square `+`/`-` matrix; `true` is `+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    n: usize,
    plus: Vec<bool>,
}

impl SignMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let plus = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self { n, plus }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_plus(&self, row: usize, col: usize) -> bool {
        self.plus[row * self.n + col]
    }

    pub fn plus_count(&self, row: usize) -> usize {
        (0..self.n).filter(|&c| self.is_plus(row, c)).count()
    }

    /// Reads off the Dyck path, checking the staircase shape: each row is
    /// `-...-+...+`, the diagonal and below are `-`, plus counts weakly
    /// decrease.
    pub fn to_dyck(&self) -> Result<DyckPath, DyckError> {
        let n = self.n;
        let mut alphas = Vec::with_capacity(n);
        for r in 0..n {
            let a = self.plus_count(r);
            if (0..n).any(|c| self.is_plus(r, c) != (c >= n - a)) {
                return Err(DyckError::Malformed(format!(
                    "row {} is not of the form -..-+..+",
                    r + 1
                )));
            }
            alphas.push(a);
        }
        DyckPath::new(alphas)
    }
}

/// Dyck path from `(0, n)` to `(n, 0)` weakly above `y = n - x`, stored by
/// the plus counts of its staircase matrix: row `r` (0-based) has its
/// south step at `x = n - alphas[r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    alphas: Vec<usize>,
}

impl DyckPath {
    pub fn new(alphas: Vec<usize>) -> Result<Self, DyckError> {
        let n = alphas.len();
        if alphas.windows(2).any(|w| w[0] < w[1]) {
            return Err(DyckError::Malformed(
                "plus counts must weakly decrease".into(),
            ));
        }
        if let Some(r) = (0..n).find(|&r| alphas[r] > n - 1 - r) {
            return Err(DyckError::Malformed(format!(
                "row {} dips below the diagonal",
                r + 1
            )));
        }
        Ok(Self { alphas })
    }

    /// The path with no `+` at all, `E^n S^n`.
    pub fn lowest(n: usize) -> Self {
        Self { alphas: vec![0; n] }
    }

    /// Parses a string of `E` and `S` steps.
    pub fn from_steps(steps: &str) -> Result<Self, DyckError> {
        let n = steps.len() / 2;
        let mut x = 0;
        let mut alphas = Vec::new();
        for ch in steps.chars() {
            match ch {
                'E' | 'e' => x += 1,
                'S' | 's' => alphas.push(
                    n.checked_sub(x)
                        .ok_or_else(|| DyckError::Malformed(steps.into()))?,
                ),
                _ => return Err(DyckError::Malformed(format!("unexpected step {ch:?}"))),
            }
        }
        if alphas.len() != n || x != n {
            return Err(DyckError::Malformed(format!(
                "{steps:?} does not end at (n, 0)"
            )));
        }
        Self::new(alphas)
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    pub fn steps(&self) -> String {
        let n = self.n();
        let mut out = String::with_capacity(2 * n);
        let mut x = 0;
        for &a in &self.alphas {
            while x < n - a {
                out.push('E');
                x += 1;
            }
            out.push('S');
        }
        out
    }

    /// `heights[i]` is the number of south steps before the `i`-th east step.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|i| self.alphas.iter().filter(|&&a| a >= n - i).count())
            .collect()
    }

    pub fn sign_matrix(&self) -> SignMatrix {
        let n = self.n();
        SignMatrix::from_fn(n, |r, c| c >= n - self.alphas[r])
    }

    /// Number of prime factors: one more than the number of interior
    /// points where the path touches `y = n - x`.
    pub fn prime_components(&self) -> usize {
        let n = self.n();
        if n == 0 {
            return 0;
        }
        1 + (0..n - 1).filter(|&r| self.alphas[r] == n - 1 - r).count()
    }

    /// Sizes of the prime factors in order.
    pub fn prime_sizes(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = Vec::new();
        let mut start = 0;
        for r in 0..n {
            if self.alphas[r] == n - 1 - r {
                out.push(r + 1 - start);
                start = r + 1;
            }
        }
        out
    }

    /// Componentwise `self <= other`.
    pub fn below(&self, other: &DyckPath) -> bool {
        self.n() == other.n() && self.alphas.iter().zip(&other.alphas).all(|(a, b)| a <= b)
    }
}

/// A Dyck path whose `i`-th east and south steps both carry `label[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDyckPath {
    pub path: DyckPath,
    pub label: Vec<usize>,
}

impl LabeledDyckPath {
    pub fn new(path: DyckPath, label: Vec<usize>) -> Result<Self, DyckError> {
        if label.len() != path.n() {
            return Err(DyckError::Malformed(
                "label length differs from path length".into(),
            ));
        }
        Ok(Self { path, label })
    }

    /// Cuts the label between positions whose east steps lie on different
    /// rows or whose south steps lie in different columns.
    pub fn induced_partition(&self) -> PermutationPartition {
        let h = self.path.heights();
        let a = self.path.alphas();
        let cuts: Vec<usize> = (1..self.path.n())
            .filter(|&i| h[i - 1] != h[i] || a[i - 1] != a[i])
            .collect();
        PermutationPartition::from_cuts(self.label.clone(), &cuts)
    }

    pub fn is_valid(&self) -> bool {
        is_permutation(&self.label)
    }
}

/// ASCII picture of a labeled staircase: column headers are the east-step
/// labels, row headers the south-step labels, cells the signs.
pub fn render(path: &LabeledDyckPath) -> String {
    let n = path.path.n();
    let width = format!("{}", n).len();
    let mut out = String::new();
    out.push_str(&" ".repeat(width + 1));
    for &l in &path.label {
        out.push_str(&format!(" {:>width$}", l + 1));
    }
    out.push('\n');
    let m = path.path.sign_matrix();
    for r in 0..n {
        out.push_str(&format!("{:>width$} ", path.label[r] + 1));
        for c in 0..n {
            out.push_str(&format!(
                " {:>width$}",
                if m.is_plus(r, c) { '+' } else { '-' }
            ));
        }
        out.push('\n');
    }
    out.push_str(&path.path.steps());
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::parse_word;

    #[test]
    fn steps_round_trip() {
        let d = DyckPath::new(vec![3, 2, 1, 0, 0]).unwrap();
        assert_eq!(d.steps(), "EESESESESS");
        assert_eq!(DyckPath::from_steps("EESESESESS").unwrap(), d);
        assert_eq!(DyckPath::lowest(3).steps(), "EEESSS");
        assert!(DyckPath::new(vec![1, 2]).is_err());
        assert!(DyckPath::new(vec![2, 0, 0]).is_ok());
        assert!(DyckPath::new(vec![3, 0, 0]).is_err());
        assert!(DyckPath::from_steps("SE").is_err());
    }

    #[test]
    fn prime_counts() {
        assert_eq!(DyckPath::new(vec![0, 0, 0]).unwrap().prime_components(), 1);
        assert_eq!(DyckPath::new(vec![2, 1, 0]).unwrap().prime_components(), 3);
        assert_eq!(DyckPath::new(vec![2, 0, 0]).unwrap().prime_components(), 2);
        assert_eq!(
            DyckPath::new(vec![2, 0, 0]).unwrap().prime_sizes(),
            vec![1, 2]
        );
        assert_eq!(
            DyckPath::new(vec![3, 2, 1, 0, 0])
                .unwrap()
                .prime_components(),
            1
        );
    }

    #[test]
    fn induced_partition_example() {
        let d = DyckPath::from_steps("EEEEESSSEESSSS").unwrap();
        let p = LabeledDyckPath::new(d, parse_word("3471526").unwrap())
            .unwrap()
            .induced_partition();
        assert_eq!(format!("{p}"), "347|15|26");
    }

    #[test]
    fn matrix_round_trip() {
        let d = DyckPath::new(vec![3, 2, 1, 0, 0]).unwrap();
        let m = d.sign_matrix();
        let plus: Vec<(usize, usize)> = (0..5)
            .flat_map(|r| (0..5).map(move |c| (r, c)))
            .filter(|&(r, c)| m.is_plus(r, c))
            .collect();
        assert_eq!(plus, vec![(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(m.to_dyck().unwrap(), d);
        let bad = SignMatrix::from_fn(2, |r, c| r == 0 && c == 0);
        assert!(bad.to_dyck().is_err());
        assert_eq!(
            SignMatrix::from_fn(3, |_, _| false)
                .to_dyck()
                .unwrap()
                .steps(),
            "EEESSS"
        );
    }

    #[test]
    fn rendering() {
        let d = LabeledDyckPath::new(DyckPath::new(vec![1, 0]).unwrap(), vec![1, 0]).unwrap();
        assert_eq!(render(&d), "   2 1\n2  - +\n1  - -\nESES\n");
    }
}
