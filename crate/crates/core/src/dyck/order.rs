use alloc::vec;
use alloc::vec::Vec;

/// Strict partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    less: Vec<bool>,
}

impl Poset {
    pub fn from_fn(n: usize, mut less: impl FnMut(usize, usize) -> bool) -> Self {
        let less = (0..n * n)
            .map(|idx| idx / n != idx % n && less(idx / n, idx % n))
            .collect();
        Self { n, less }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `i ≺ j`
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i * self.n + j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    /// Strict down-set `{l : l ≺ i}`.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&l| self.less(l, i)).collect()
    }

    /// Strict up-set `{l : i ≺ l}`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&l| self.less(i, l)).collect()
    }

    /// Transitive, irreflexive, and free of `2 + 2` (two disjoint
    /// incomparable chains of length two).
    pub fn is_interval_order(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if !self.less(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.less(b, c) && !self.less(a, c) {
                        return false;
                    }
                    for d in 0..n {
                        if self.less(c, d) && !self.less(a, d) && !self.less(c, b) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn incomparability(&self) -> IncomparabilityGraph {
        IncomparabilityGraph::new(self)
    }
}

/// Graph joining incomparable elements, with its connected components
/// listed from the bottom of the poset upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncomparabilityGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl IncomparabilityGraph {
    fn new(poset: &Poset) -> Self {
        let n = poset.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !poset.comparable(i, j) {
                    edges.push((i, j));
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for (u, cu) in comp.iter_mut().enumerate() {
                    if u != v && *cu == usize::MAX && !poset.comparable(u, v) {
                        *cu = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        // components of an interval order are totally ordered; an element of
        // minimal down-set size in a component sees exactly the earlier ones
        components.sort_by_key(|c| c.iter().map(|&v| poset.down_set(v).len()).min());
        Self {
            n,
            edges,
            components,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Number of connected components.
    pub fn omega(&self) -> usize {
        self.components.len()
    }
}

/// One interval order per offset: `i ≺_k j` iff `x_j - x_i > a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalOrderTuple {
    pub orders: Vec<Poset>,
}

impl IntervalOrderTuple {
    /// The order for offset `a_k`, `k` in `1..=m`.
    pub fn order(&self, k: usize) -> &Poset {
        &self.orders[k - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain() {
        let chain = Poset::from_fn(4, |i, j| i < j);
        assert!(chain.is_interval_order());
        assert_eq!(chain.incomparability().omega(), 4);
        let anti = Poset::from_fn(4, |_, _| false);
        assert_eq!(anti.incomparability().omega(), 1);
    }

    #[test]
    fn two_plus_two_is_not_interval() {
        let p = Poset::from_fn(4, |i, j| (i, j) == (0, 1) || (i, j) == (2, 3));
        assert!(!p.is_interval_order());
    }

    #[test]
    fn components_bottom_up() {
        // 2 < {0, 1} < 3 with 0, 1 incomparable
        let p = Poset::from_fn(4, |i, j| {
            matches!((i, j), (2, 0) | (2, 1) | (2, 3) | (0, 3) | (1, 3))
        });
        let g = p.incomparability();
        assert_eq!(g.components(), &[vec![2], vec![0, 1], vec![3]]);
        assert_eq!(g.edges(), &[(0, 1)]);
    }
}
