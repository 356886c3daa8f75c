use alloc::vec::Vec;

use num_traits::One;

use super::{BijectionError, OrderedSetPartition};
use crate::arrangement::{region_of_point, ArrangementKind, Region};
use crate::dyck::{dyck_tuple, interval_orders, DyckError};
use crate::exactnum::Rational;

/// Splits a Catalan-type region of the fundamental chamber at the points
/// where its first Dyck path returns to the diagonal; each piece is the
/// level-1 region spanned by one group of consecutive coordinates.
pub fn varphi_ell(region: &Region) -> Result<Vec<Region>, BijectionError> {
    if region.spec().kind() != ArrangementKind::Catalan {
        return Err(BijectionError::WrongKind("catalan"));
    }
    if region.spec().m() == 0 {
        return Err(DyckError::BraidUnsupported.into());
    }
    if !region.in_fundamental_chamber() {
        return Err(BijectionError::NotInFundamentalChamber);
    }
    let sizes = dyck_tuple(region).paths[0].prime_sizes();
    let x = region.witness();
    let mut out = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for size in sizes {
        let part = &x[start..start + size];
        out.push(region_of_point(&region.spec().with_n(size), part)?);
        start += size;
    }
    Ok(out)
}

/// Stacks fundamental-chamber pieces from left to right, each one placed
/// more than `a_1` below the previous.
pub fn varphi_ell_inverse(parts: &[Region]) -> Result<Region, BijectionError> {
    let Some(first) = parts.first() else {
        return Err(BijectionError::CountMismatch {
            expected: 1,
            got: 0,
        });
    };
    let offsets = first.spec().offsets().to_vec();
    for p in parts {
        if p.spec().kind() != ArrangementKind::Catalan || p.spec().offsets() != offsets.as_slice() {
            return Err(BijectionError::Malformed(
                "pieces must share one Catalan-type offset set".into(),
            ));
        }
        if !p.in_fundamental_chamber() {
            return Err(BijectionError::NotInFundamentalChamber);
        }
    }
    let gap = offsets.first().cloned().unwrap_or_default() + Rational::one();
    let point = stack(parts.iter().map(|p| p.witness().to_vec()), &gap);
    let n = point.len();
    Ok(region_of_point(&first.spec().with_n(n), &point)?)
}

/// Concatenates groups of coordinates, shifting each group so its last
/// coordinate sits exactly `gap` above the first coordinate of the next.
fn stack(groups: impl DoubleEndedIterator<Item = Vec<Rational>>, gap: &Rational) -> Vec<Rational> {
    let mut rev: Vec<Vec<Rational>> = Vec::new();
    let mut floor: Option<Rational> = None;
    for g in groups.rev() {
        let shifted: Vec<Rational> = match (&floor, g.last()) {
            (Some(f), Some(last)) => {
                let t = f + gap - last;
                g.iter().map(|v| v + &t).collect()
            }
            _ => g,
        };
        floor = shifted.first().cloned().or(floor);
        rev.push(shifted);
    }
    rev.into_iter().rev().flatten().collect()
}

/// Splits a semiorder-type region along the components of the
/// incomparability graph of its first interval order, listed from the
/// lowest coordinates up; each block keeps its coordinates in index order.
pub fn phi_omega(region: &Region) -> Result<(OrderedSetPartition, Vec<Region>), BijectionError> {
    if region.spec().kind() != ArrangementKind::Semiorder {
        return Err(BijectionError::WrongKind("semiorder"));
    }
    let graph = interval_orders(region).order(1).incomparability();
    let blocks = graph.components().to_vec();
    let x = region.witness();
    let mut parts = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let point: Vec<Rational> = b.iter().map(|&i| x[i].clone()).collect();
        parts.push(region_of_point(&region.spec().with_n(b.len()), &point)?);
    }
    Ok((OrderedSetPartition::new(blocks)?, parts))
}

/// Reassembles a semiorder-type region from an ordered set partition and
/// one level-1 region per block, each block placed more than `a_1` above
/// the previous one.
pub fn phi_omega_inverse(
    blocks: &OrderedSetPartition,
    parts: &[Region],
) -> Result<Region, BijectionError> {
    if blocks.blocks().len() != parts.len() {
        return Err(BijectionError::CountMismatch {
            expected: blocks.blocks().len(),
            got: parts.len(),
        });
    }
    let Some(first) = parts.first() else {
        return Err(BijectionError::CountMismatch {
            expected: 1,
            got: 0,
        });
    };
    let spec = first.spec().with_n(blocks.n());
    let gap = spec.offsets()[0].clone() + Rational::one();
    let mut point = alloc::vec![Rational::default(); blocks.n()];
    let mut base = Rational::default();
    for (b, p) in blocks.blocks().iter().zip(parts) {
        if p.spec().kind() != ArrangementKind::Semiorder
            || p.spec().offsets() != spec.offsets()
            || p.n() != b.len()
        {
            return Err(BijectionError::Malformed(
                "piece does not match its block".into(),
            ));
        }
        let w = p.witness();
        let lo = w.iter().min().cloned().unwrap_or_default();
        let hi = w.iter().max().cloned().unwrap_or_default();
        for (&i, v) in b.iter().zip(w) {
            point[i] = v - &lo + &base;
        }
        base = base + (hi - lo) + &gap;
    }
    Ok(region_of_point(&spec, &point)?)
}
