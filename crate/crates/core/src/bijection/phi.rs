use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{inverse_fundamental, BijectionError, CycleForm};
use crate::arrangement::{
    feasible, region_of_point, ArrangementKind, DifferenceConstraint, Region,
};
use crate::dyck::{canonical_label, dyck_tuple, DyckError};
use crate::exactnum::Rational;

/// A witness of the region without ties whose associated permutation is
/// the canonical label (blocks of the region's partition in increasing
/// order).
pub fn canonical_witness(region: &Region) -> Vec<Rational> {
    let label = canonical_label(region);
    let mut cs = region.constraints();
    for w in label.windows(2) {
        cs.push(DifferenceConstraint::greater_than(
            w[0],
            w[1],
            Rational::zero(),
        ));
    }
    feasible(&cs, region.n()).expect("every label of the class is realised")
}

/// Spreads each coordinate `x_j` of a semiorder-type region over the
/// elements of the `j`-th cycle of `omega`: the `s`-th element (0-based)
/// of a cycle of length `n_j` gets `x_j + (n_j - 1 - s) ε`, with `ε`
/// small enough that no sign of `x_p - x_q - c`, `c` in `{0, ±a_k}`,
/// changes. Returns the Catalan-type region of the result.
pub fn phi(omega: &CycleForm, region: &Region) -> Result<Region, BijectionError> {
    let spec = region.spec();
    if spec.kind() != ArrangementKind::Semiorder {
        return Err(BijectionError::WrongKind("semiorder"));
    }
    if omega.len() != region.n() {
        return Err(BijectionError::CountMismatch {
            expected: region.n(),
            got: omega.len(),
        });
    }
    let n = omega.n();
    let target = spec.with_kind(ArrangementKind::Catalan)?.with_n(n);
    let x = canonical_witness(region);
    let smallest = spec
        .offsets()
        .last()
        .expect("semiorder has offsets")
        .clone();
    let mut delta = smallest;
    for p in 0..x.len() {
        for q in 0..x.len() {
            if p == q {
                continue;
            }
            let d = &x[p] - &x[q];
            for c in core::iter::once(Rational::zero()).chain(spec.offsets().iter().cloned()) {
                let gap = (&d - c).abs();
                if gap.is_positive() && gap < delta {
                    delta = gap;
                }
            }
        }
    }
    let eps = delta / Rational::from_integer(BigInt::from(n + 1));
    let mut y = vec![Rational::zero(); n];
    for (j, cycle) in omega.cycles().iter().enumerate() {
        for (s, &v) in cycle.iter().enumerate() {
            y[v] = &x[j] + &eps * Rational::from_integer(BigInt::from(cycle.len() - 1 - s));
        }
    }
    Ok(region_of_point(&target, &y)?)
}

/// Inverse of [`phi`]: cycles come from the blocks of the meet of the
/// partitions induced by the region's Dyck paths, and each cycle's
/// coordinates collapse to one.
pub fn phi_inverse(region: &Region) -> Result<(CycleForm, Region), BijectionError> {
    let spec = region.spec();
    if spec.kind() != ArrangementKind::Catalan {
        return Err(BijectionError::WrongKind("catalan"));
    }
    if spec.m() == 0 {
        return Err(DyckError::BraidUnsupported.into());
    }
    let q = dyck_tuple(region).partition();
    let cycles: Vec<Vec<usize>> = q
        .blocks()
        .iter()
        .flat_map(|b| inverse_fundamental(b).cycles().to_vec())
        .collect();
    let omega = CycleForm::new(cycles)?;
    let y = region.witness();
    let x: Vec<Rational> = omega
        .cycles()
        .iter()
        .map(|c| y[*c.last().expect("nonempty")].clone())
        .collect();
    let target = spec
        .with_kind(ArrangementKind::Semiorder)?
        .with_n(omega.len());
    let small = region_of_point(&target, &x)?;
    Ok((omega, small))
}
