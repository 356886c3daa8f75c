use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use num_traits::Signed;

use super::constraint::{feasible, DifferenceConstraint, PathClosure};
use super::{ArrangementError, ArrangementSpec};
use crate::exactnum::Rational;

/// A connected component of the complement of the arrangement.
///
/// `intervals[p]` is the index of the open interval between consecutive
/// cut points (see [`ArrangementSpec::cut_points`]) containing `x_i - x_j`
/// for the `p`-th pair `(i, j)`, `i < j`. Equality and ordering ignore the
/// witness.
#[derive(Debug, Clone)]
pub struct Region {
    spec: ArrangementSpec,
    intervals: Vec<usize>,
    witness: Vec<Rational>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.intervals == other.intervals
    }
}

impl Eq for Region {}

impl Hash for Region {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
        self.intervals.hash(state);
    }
}

impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Region {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.spec, &self.intervals).cmp(&(&other.spec, &other.intervals))
    }
}

/// Open bounds `(lo, hi)` on `x_i - x_j` for interval `t` of `cuts`.
fn interval_bounds(cuts: &[Rational], t: usize) -> (Option<Rational>, Option<Rational>) {
    let lo = t.checked_sub(1).map(|s| cuts[s].clone());
    let hi = cuts.get(t).cloned();
    (lo, hi)
}

fn interval_constraints(
    cuts: &[Rational],
    i: usize,
    j: usize,
    t: usize,
) -> Vec<DifferenceConstraint> {
    let (lo, hi) = interval_bounds(cuts, t);
    let mut out = Vec::with_capacity(2);
    if let Some(lo) = lo {
        out.push(DifferenceConstraint::greater_than(i, j, lo));
    }
    if let Some(hi) = hi {
        out.push(DifferenceConstraint::less_than(i, j, hi));
    }
    out
}

impl Region {
    /// Builds the region with the given interval assignment, solving for a
    /// witness.
    pub fn from_intervals(
        spec: &ArrangementSpec,
        intervals: Vec<usize>,
    ) -> Result<Region, ArrangementError> {
        let pairs = spec.pairs();
        let k = spec.intervals_per_pair();
        if intervals.len() != pairs.len() || intervals.iter().any(|&t| t >= k) {
            return Err(ArrangementError::InvalidSpec(
                "malformed interval assignment".into(),
            ));
        }
        let region = Region {
            spec: spec.clone(),
            intervals,
            witness: Vec::new(),
        };
        let witness = feasible(&region.constraints(), spec.n())?;
        Ok(Region { witness, ..region })
    }

    pub fn spec(&self) -> &ArrangementSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn intervals(&self) -> &[usize] {
        &self.intervals
    }

    pub fn witness(&self) -> &[Rational] {
        &self.witness
    }

    /// Open bounds on `x_i - x_j` for any `i != j`.
    pub fn bounds(&self, i: usize, j: usize) -> (Option<Rational>, Option<Rational>) {
        let cuts = self.spec.cut_points();
        let (lo, hi) = interval_bounds(&cuts, self.intervals[self.spec.pair_index(i, j)]);
        if i < j {
            (lo, hi)
        } else {
            (hi.map(|c| -c), lo.map(|c| -c))
        }
    }

    /// The strict inequalities that define the region.
    pub fn constraints(&self) -> Vec<DifferenceConstraint> {
        let cuts = self.spec.cut_points();
        self.spec
            .pairs()
            .into_iter()
            .zip(&self.intervals)
            .flat_map(|((i, j), &t)| interval_constraints(&cuts, i, j, t))
            .collect()
    }

    pub fn contains(&self, point: &[Rational]) -> bool {
        point.len() == self.n() && self.constraints().iter().all(|c| c.holds(point))
    }

    /// A witness solved afresh from the defining inequalities.
    pub fn resolved_witness(&self) -> Vec<Rational> {
        feasible(&self.constraints(), self.n()).expect("region constraints are feasible")
    }

    /// Replaces the witness by another interior point.
    pub fn with_witness(&self, witness: Vec<Rational>) -> Result<Region, ArrangementError> {
        if witness.len() != self.n() {
            return Err(ArrangementError::DimensionMismatch {
                expected: self.n(),
                got: witness.len(),
            });
        }
        if !self.contains(&witness) {
            return Err(ArrangementError::InvalidSpec(
                "witness is not interior to the region".into(),
            ));
        }
        Ok(Region {
            witness,
            ..self.clone()
        })
    }

    /// Whether the region lies in the chamber `x_1 > x_2 > ... > x_n`.
    pub fn in_fundamental_chamber(&self) -> bool {
        self.spec
            .pairs()
            .into_iter()
            .all(|(i, j)| self.bounds(i, j).0.is_some_and(|lo| !lo.is_negative()))
    }
}

/// Guards against runaway searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Maximum number of search nodes (partial assignments) to visit.
    pub max_nodes: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_nodes: 50_000_000,
        }
    }
}

/// Depth-first search over per-pair interval choices. Pairs are assigned
/// in lexicographic order and intervals left to right, so concatenating
/// the subtrees of [`RegionSearch::prefixes`] in order reproduces the
/// sequential output.
#[derive(Debug, Clone)]
pub struct RegionSearch {
    spec: ArrangementSpec,
    pairs: Vec<(usize, usize)>,
    cuts: Vec<Rational>,
    limits: EnumerationLimits,
}

struct Walk {
    nodes: u64,
    out: Vec<Region>,
}

impl RegionSearch {
    pub fn new(spec: &ArrangementSpec, limits: EnumerationLimits) -> Self {
        Self {
            spec: spec.clone(),
            pairs: spec.pairs(),
            cuts: spec.cut_points(),
            limits,
        }
    }

    pub fn spec(&self) -> &ArrangementSpec {
        &self.spec
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    fn extend(&self, closure: &PathClosure, depth: usize, t: usize) -> Option<PathClosure> {
        let (i, j) = self.pairs[depth];
        let cs = interval_constraints(&self.cuts, i, j, t);
        // the two bounds of one interval never close a cycle together, so
        // checking each against the current closure decides feasibility
        for c in &cs {
            if let Some(back) = closure.bound(c.i, c.j) {
                if (back + &c.bound).is_negative() {
                    return None;
                }
            }
        }
        let mut probe = closure.clone();
        for c in &cs {
            let ok = probe.add(c);
            debug_assert!(ok);
        }
        Some(probe)
    }

    fn closure_for(&self, prefix: &[usize]) -> Option<PathClosure> {
        let mut closure = PathClosure::new(self.spec.n());
        for (depth, &t) in prefix.iter().enumerate() {
            closure = self.extend(&closure, depth, t)?;
        }
        Some(closure)
    }

    /// Feasible assignments of the first `depth` pairs, in search order.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<usize>> {
        let depth = depth.min(self.pairs.len());
        let mut frontier = vec![(Vec::new(), PathClosure::new(self.spec.n()))];
        for d in 0..depth {
            let mut next = Vec::new();
            for (prefix, closure) in frontier {
                for t in 0..self.cuts.len() + 1 {
                    if let Some(c) = self.extend(&closure, d, t) {
                        let mut p: Vec<usize> = prefix.clone();
                        p.push(t);
                        next.push((p, c));
                    }
                }
            }
            frontier = next;
        }
        frontier.into_iter().map(|(p, _)| p).collect()
    }

    /// All regions whose assignment starts with `prefix`.
    pub fn enumerate_subtree(&self, prefix: &[usize]) -> Result<Vec<Region>, ArrangementError> {
        let Some(closure) = self.closure_for(prefix) else {
            return Ok(Vec::new());
        };
        let mut walk = Walk {
            nodes: 0,
            out: Vec::new(),
        };
        let mut assignment = prefix.to_vec();
        self.dfs(&closure, &mut assignment, &mut walk)?;
        Ok(walk.out)
    }

    fn dfs(
        &self,
        closure: &PathClosure,
        assignment: &mut Vec<usize>,
        walk: &mut Walk,
    ) -> Result<(), ArrangementError> {
        let depth = assignment.len();
        if depth == self.pairs.len() {
            let region = Region::from_intervals(&self.spec, assignment.clone())?;
            walk.out.push(region);
            return Ok(());
        }
        for t in 0..self.cuts.len() + 1 {
            walk.nodes += 1;
            if walk.nodes > self.limits.max_nodes {
                return Err(ArrangementError::ResourceLimit {
                    explored: walk.nodes - 1,
                    found: walk.out.len(),
                });
            }
            if let Some(next) = self.extend(closure, depth, t) {
                assignment.push(t);
                self.dfs(&next, assignment, walk)?;
                assignment.pop();
            }
        }
        Ok(())
    }
}

/// Every region of the arrangement, in search order.
pub fn enumerate_regions(spec: &ArrangementSpec) -> Result<Vec<Region>, ArrangementError> {
    enumerate_regions_with(spec, EnumerationLimits::default())
}

pub fn enumerate_regions_with(
    spec: &ArrangementSpec,
    limits: EnumerationLimits,
) -> Result<Vec<Region>, ArrangementError> {
    RegionSearch::new(spec, limits).enumerate_subtree(&[])
}

/// The region containing `point`, which becomes its witness.
pub fn region_of_point(
    spec: &ArrangementSpec,
    point: &[Rational],
) -> Result<Region, ArrangementError> {
    if point.len() != spec.n() {
        return Err(ArrangementError::DimensionMismatch {
            expected: spec.n(),
            got: point.len(),
        });
    }
    let cuts = spec.cut_points();
    let mut intervals = Vec::new();
    for (i, j) in spec.pairs() {
        let d = &point[i] - &point[j];
        let t = cuts.partition_point(|c| *c < d);
        if cuts.get(t) == Some(&d) {
            return Err(ArrangementError::OnHyperplane { i, j, c: d });
        }
        intervals.push(t);
    }
    Ok(Region {
        spec: spec.clone(),
        intervals,
        witness: point.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::ArrangementKind::{Catalan, Semiorder};
    use crate::exactnum::{int, rat};

    fn spec(n: usize, m: usize, kind: super::super::ArrangementKind) -> ArrangementSpec {
        ArrangementSpec::integer_range(n, m, kind).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_regions(&spec(2, 1, Catalan)).unwrap().len(), 4);
        assert_eq!(enumerate_regions(&spec(3, 1, Catalan)).unwrap().len(), 30);
        assert_eq!(enumerate_regions(&spec(3, 1, Semiorder)).unwrap().len(), 19);
        assert_eq!(enumerate_regions(&spec(1, 2, Catalan)).unwrap().len(), 1);
        assert_eq!(enumerate_regions(&spec(0, 1, Catalan)).unwrap().len(), 1);
        assert_eq!(enumerate_regions(&spec(3, 0, Catalan)).unwrap().len(), 6);
    }

    #[test]
    fn witnesses_are_interior() {
        for r in enumerate_regions(&spec(3, 2, Semiorder)).unwrap() {
            assert!(r.contains(r.witness()));
            assert_eq!(r.witness().iter().min(), Some(&int(0)));
            assert_eq!(region_of_point(r.spec(), r.witness()).unwrap(), r);
        }
    }

    #[test]
    fn sharded_search_matches_sequential() {
        let s = spec(4, 1, Catalan);
        let search = RegionSearch::new(&s, EnumerationLimits::default());
        let all = search.enumerate_subtree(&[]).unwrap();
        let sharded: Vec<Region> = search
            .prefixes(2)
            .iter()
            .flat_map(|p| search.enumerate_subtree(p).unwrap())
            .collect();
        assert_eq!(all, sharded);
        assert_eq!(all.len(), 336);
    }

    #[test]
    fn resource_limit() {
        let err = enumerate_regions_with(&spec(4, 1, Catalan), EnumerationLimits { max_nodes: 50 })
            .unwrap_err();
        assert!(matches!(
            err,
            ArrangementError::ResourceLimit { explored: 50, .. }
        ));
    }

    #[test]
    fn point_location() {
        let s = spec(2, 1, Catalan);
        let r = region_of_point(&s, &[int(3), rat(1, 2)]).unwrap();
        assert_eq!(r.bounds(0, 1), (Some(int(1)), None));
        assert_eq!(r.bounds(1, 0), (None, Some(int(-1))));
        let err = region_of_point(&s, &[int(2), int(1)]).unwrap_err();
        assert_eq!(
            err,
            ArrangementError::OnHyperplane {
                i: 0,
                j: 1,
                c: int(1)
            }
        );
        assert!(region_of_point(&s, &[int(2)]).is_err());
    }

    #[test]
    fn chamber_symmetry() {
        let regions = enumerate_regions(&spec(3, 2, Catalan)).unwrap();
        let inside = regions
            .iter()
            .filter(|r| r.in_fundamental_chamber())
            .count();
        assert_eq!(regions.len(), 6 * inside);
    }
}
