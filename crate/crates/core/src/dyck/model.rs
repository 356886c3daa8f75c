use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{
    DyckError, DyckPath, IntervalOrderTuple, LabeledDyckPath, PermutationPartition, Poset,
    SignMatrix,
};
use crate::arrangement::{
    feasible, region_of_point, ArrangementKind, ArrangementSpec, DifferenceConstraint, Region,
};
use crate::exactnum::Rational;

/// Indices sorted by decreasing coordinate, ties by increasing index.
pub fn associated_permutation(x: &[Rational]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[b].cmp(&x[a]).then(a.cmp(&b)));
    idx
}

/// Labeled tuple `(D_1, ..., D_m)`, `D_k` read from the signs of
/// `x_{π(i)} - x_{π(j)} - a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckTuple {
    pub label: Vec<usize>,
    pub paths: Vec<DyckPath>,
}

impl DyckTuple {
    pub fn new(label: Vec<usize>, paths: Vec<DyckPath>) -> Result<Self, DyckError> {
        let n = label.len();
        if !super::is_permutation(&label) {
            return Err(DyckError::Malformed("label is not a permutation".into()));
        }
        if paths.iter().any(|p| p.n() != n) {
            return Err(DyckError::Malformed(
                "path length differs from label length".into(),
            ));
        }
        Ok(Self { label, paths })
    }

    /// `D_k` with its label, `k` in `1..=m`.
    pub fn labeled(&self, k: usize) -> LabeledDyckPath {
        LabeledDyckPath {
            path: self.paths[k - 1].clone(),
            label: self.label.clone(),
        }
    }

    /// Plus counts weakly grow with `k`.
    pub fn is_nested(&self) -> bool {
        self.paths.windows(2).all(|w| w[0].below(&w[1]))
    }

    /// Meet of the partitions induced by every path.
    pub fn partition(&self) -> PermutationPartition {
        let mut p = PermutationPartition::coarsest(self.label.clone());
        for k in 1..=self.paths.len() {
            p = p
                .meet(&self.labeled(k).induced_partition())
                .expect("same label");
        }
        p
    }
}

/// Associated permutation of the witness and the sign matrices
/// `M_k(i, j) = sgn(x_{π(i)} - x_{π(j)} - a_k)`.
pub fn sign_matrices(region: &Region) -> (Vec<usize>, Vec<SignMatrix>) {
    let pi = associated_permutation(region.witness());
    let mats = (1..=region.spec().m())
        .map(|k| {
            let a = region.spec().offset(k);
            SignMatrix::from_fn(region.n(), |r, c| plus(region, pi[r], pi[c], a))
        })
        .collect();
    (pi, mats)
}

/// Whether `x_i - x_j > a` throughout the region.
fn plus(region: &Region, i: usize, j: usize, a: &Rational) -> bool {
    if i == j {
        return false;
    }
    region.bounds(i, j).0.is_some_and(|lo| lo >= *a)
}

/// The labeled tuple of the region, labeled by the witness's associated
/// permutation.
pub fn dyck_tuple(region: &Region) -> DyckTuple {
    let (pi, mats) = sign_matrices(region);
    let paths = mats
        .iter()
        .map(|m| m.to_dyck().expect("region matrices are staircases"))
        .collect();
    DyckTuple { label: pi, paths }
}

/// Meet over `k` of the partitions induced by `D_{k,π}`.
pub fn region_partition(region: &Region) -> PermutationPartition {
    dyck_tuple(region).partition()
}

/// The label obtained by sorting every block of the region's partition in
/// increasing order; independent of the witness.
pub fn canonical_label(region: &Region) -> Vec<usize> {
    region_partition(region)
        .blocks()
        .iter()
        .flat_map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect()
}

/// All permutations that arise as associated permutations of points of a
/// semiorder-type region: rearrangements inside each block of its
/// partition, sorted.
pub fn label_class(region: &Region) -> Result<Vec<Vec<usize>>, DyckError> {
    if region.spec().kind() != ArrangementKind::Semiorder {
        return Err(DyckError::WrongKind("semiorder"));
    }
    let p = region_partition(region);
    let mut out = vec![Vec::new()];
    for block in p.blocks() {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        let perms = all_words(&sorted);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |q| {
                    let mut w = prefix.clone();
                    w.extend_from_slice(q);
                    w
                })
            })
            .collect();
    }
    out.sort();
    Ok(out)
}

/// All orderings of `items`, lexicographic when `items` is sorted.
pub fn all_words(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &v) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in all_words(&rest) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// `P_k`: `i ≺ j` iff `x_j - x_i > a_k` on the region.
pub fn interval_orders(region: &Region) -> IntervalOrderTuple {
    let orders = (1..=region.spec().m())
        .map(|k| {
            let a = region.spec().offset(k);
            Poset::from_fn(region.n(), |i, j| plus(region, j, i, a))
        })
        .collect();
    IntervalOrderTuple { orders }
}

/// Whether `i` and `j` have the same strict down-sets and up-sets in every
/// order of the tuple.
pub fn autonomous(orders: &IntervalOrderTuple, i: usize, j: usize) -> bool {
    orders.orders.iter().all(|p| {
        let strip =
            |v: Vec<usize>| -> Vec<usize> { v.into_iter().filter(|&l| l != i && l != j).collect() };
        !p.comparable(i, j)
            && strip(p.down_set(i)) == strip(p.down_set(j))
            && strip(p.up_set(i)) == strip(p.up_set(j))
    })
}

/// Level of a region from the Dyck model: prime factors of `D_1` for the
/// Catalan type, components of the incomparability graph of `P_1` for the
/// semiorder type (checked against the prime factors of `D_{1,π}`).
pub fn level(region: &Region) -> Result<usize, DyckError> {
    if region.spec().m() == 0 {
        return Err(DyckError::BraidUnsupported);
    }
    let primes = dyck_tuple(region).paths[0].prime_components();
    match region.spec().kind() {
        ArrangementKind::Catalan => Ok(primes),
        ArrangementKind::Semiorder => {
            let components = interval_orders(region).order(1).incomparability().omega();
            if components != primes {
                return Err(DyckError::ModelMismatch { components, primes });
            }
            Ok(components)
        }
    }
}

/// Solves for a region with the given labeled tuple, or certifies that no
/// region has it.
pub fn tuple_feasible(spec: &ArrangementSpec, tuple: &DyckTuple) -> Result<Region, DyckError> {
    let n = spec.n();
    if tuple.label.len() != n || tuple.paths.len() != spec.m() {
        return Err(DyckError::Malformed(
            "tuple shape does not match the arrangement".into(),
        ));
    }
    if !tuple.is_nested() {
        return Err(DyckError::Malformed("paths are not nested".into()));
    }
    let pi = &tuple.label;
    let mut cs = Vec::new();
    for r in 1..n {
        cs.push(match spec.kind() {
            ArrangementKind::Catalan => {
                DifferenceConstraint::greater_than(pi[r - 1], pi[r], Rational::zero())
            }
            ArrangementKind::Semiorder => {
                DifferenceConstraint::at_least(pi[r - 1], pi[r], Rational::zero())
            }
        });
    }
    for (k, path) in tuple.paths.iter().enumerate() {
        let a = spec.offset(k + 1);
        let m = path.sign_matrix();
        for r in 0..n {
            for c in r + 1..n {
                cs.push(if m.is_plus(r, c) {
                    DifferenceConstraint::greater_than(pi[r], pi[c], a.clone())
                } else {
                    DifferenceConstraint::less_than(pi[r], pi[c], a.clone())
                });
            }
        }
    }
    let x = feasible(&cs, n)?;
    region_of_point(spec, &x).map_err(|e| DyckError::Malformed(alloc::format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{enumerate_regions, recession_cone_dim};
    use crate::dyck::parse_word;
    use crate::exactnum::{int, rat};

    fn spec(n: usize, m: usize, kind: ArrangementKind) -> ArrangementSpec {
        ArrangementSpec::integer_range(n, m, kind).unwrap()
    }

    #[test]
    fn three_path_region() {
        // gaps 1.6, 1.6, 2.5, 2.5 realise the three pictured matrices
        let s = spec(5, 3, ArrangementKind::Catalan);
        let x = [rat(82, 10), rat(66, 10), int(5), rat(5, 2), int(0)];
        let r = region_of_point(&s, &x).unwrap();
        let t = dyck_tuple(&r);
        assert_eq!(t.label, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.paths[0].alphas(), &[3, 2, 1, 0, 0]);
        assert_eq!(t.paths[0].steps(), "EESESESESS");
        assert_eq!(t.paths[1].alphas(), &[3, 2, 2, 1, 0]);
        assert_eq!(t.paths[2].alphas(), &[4, 3, 2, 1, 0]);
        assert!(t.is_nested());
        assert_eq!(level(&r).unwrap(), 1);
        assert_eq!(recession_cone_dim(&r), 1);
    }

    #[test]
    fn semiorder_example_permutation() {
        let s = spec(5, 3, ArrangementKind::Semiorder);
        let x = [int(3), rat(22, 10), rat(45, 10), int(8), int(8)];
        let r = region_of_point(&s, &x).unwrap();
        let (pi, _) = sign_matrices(&r);
        assert_eq!(pi, parse_word("45312").unwrap());
        let t = dyck_tuple(&r);
        assert_eq!(t.paths[0].alphas(), &[3, 3, 0, 0, 0]);
        assert_eq!(t.paths[1].alphas(), &[3, 3, 1, 0, 0]);
        assert_eq!(t.paths[2].alphas(), &[3, 3, 2, 0, 0]);
        let g = interval_orders(&r).order(1).incomparability();
        assert_eq!(g.components(), &[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(level(&r).unwrap(), 2);
        assert_eq!(recession_cone_dim(&r), 2);
        // smallest offset gives the finer order with three components
        assert_eq!(
            interval_orders(&r).order(3).incomparability().components(),
            &[vec![0, 1], vec![2], vec![3, 4]]
        );
    }

    #[test]
    fn nested_tuple_can_be_infeasible() {
        let s = spec(5, 3, ArrangementKind::Catalan);
        let paths = [
            vec![2, 2, 1, 0, 0],
            vec![3, 3, 2, 1, 0],
            vec![4, 3, 2, 1, 0],
        ]
        .into_iter()
        .map(|a| DyckPath::new(a).unwrap())
        .collect();
        let t = DyckTuple::new(vec![0, 1, 2, 3, 4], paths).unwrap();
        assert!(matches!(
            tuple_feasible(&s, &t),
            Err(DyckError::Infeasible(_))
        ));
        let lowest = DyckTuple::new(vec![0, 1, 2, 3, 4], vec![DyckPath::lowest(5); 3]).unwrap();
        let r = tuple_feasible(&s, &lowest).unwrap();
        assert_eq!(level(&r).unwrap(), 1);
    }

    #[test]
    fn tuple_round_trip_and_levels() {
        for kind in [ArrangementKind::Catalan, ArrangementKind::Semiorder] {
            for (n, m) in [(3, 1), (3, 2), (4, 1)] {
                for r in enumerate_regions(&spec(n, m, kind)).unwrap() {
                    let t = dyck_tuple(&r);
                    assert!(t.is_nested());
                    assert_eq!(tuple_feasible(r.spec(), &t).unwrap(), r);
                    assert_eq!(level(&r).unwrap(), recession_cone_dim(&r));
                }
            }
        }
    }

    #[test]
    fn braid_has_no_model() {
        let r = enumerate_regions(&spec(2, 0, ArrangementKind::Catalan))
            .unwrap()
            .remove(0);
        assert_eq!(level(&r), Err(DyckError::BraidUnsupported));
    }

    #[test]
    fn label_class_of_partition_example() {
        let s = spec(7, 3, ArrangementKind::Semiorder);
        let x = [
            rat(47, 10),
            rat(16, 10),
            rat(475, 100),
            rat(471, 100),
            rat(66, 10),
            rat(25, 10),
            rat(161, 100),
        ];
        let r = region_of_point(&s, &x).unwrap();
        assert_eq!(alloc::format!("{}", region_partition(&r)), "5|341|6|72");
        let class = label_class(&r).unwrap();
        assert_eq!(class.len(), 12);
        assert!(class.contains(&parse_word("5431627").unwrap()));
        assert_eq!(canonical_label(&r), parse_word("5134627").unwrap());
    }

    #[test]
    fn permutations_listing() {
        assert_eq!(all_words(&[0, 1, 2]).len(), 6);
        assert_eq!(all_words(&[]), vec![Vec::<usize>::new()]);
    }
}
