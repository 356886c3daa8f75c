use alloc::vec::Vec;

use super::{inverse_fundamental, BijectionError, CycleForm};
use crate::dyck::{DyckPath, LabeledDyckPath, PermutationPartition};

/// Replaces the step labeled `i` by one step per element of the `i`-th
/// cycle of `omega`, labeled by the cycle's word. Rows of one cycle copy
/// the signs of the original row against other cycles and are `-` among
/// themselves.
pub fn omega_extension(
    d: &LabeledDyckPath,
    omega: &CycleForm,
) -> Result<LabeledDyckPath, BijectionError> {
    let k = d.path.n();
    if omega.len() != k {
        return Err(BijectionError::CountMismatch {
            expected: k,
            got: omega.len(),
        });
    }
    let m = d.path.sign_matrix();
    let size = |r: usize| omega.cycles()[d.label[r]].len();
    let mut label = Vec::with_capacity(omega.n());
    let mut alphas = Vec::with_capacity(omega.n());
    for r in 0..k {
        let alpha: usize = (0..k).filter(|&q| m.is_plus(r, q)).map(size).sum();
        for &v in &omega.cycles()[d.label[r]] {
            label.push(v);
            alphas.push(alpha);
        }
    }
    Ok(LabeledDyckPath::new(DyckPath::new(alphas)?, label)?)
}

/// Collapses every cycle read off the blocks of `q` (by the inverse
/// fundamental bijection) to a single step labeled by the cycle's index in
/// standard order. `q` must refine the partition induced by `d`.
pub fn q_compression(
    d: &LabeledDyckPath,
    q: &PermutationPartition,
) -> Result<(LabeledDyckPath, CycleForm), BijectionError> {
    if q.base() != d.label || !q.refines(&d.induced_partition()) {
        return Err(BijectionError::NotRefinement);
    }
    // cycles in word order with the position of their first step
    let mut pieces: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut pos = 0;
    for block in q.blocks() {
        for c in inverse_fundamental(block).cycles() {
            pieces.push((pos, c.clone()));
            pos += c.len();
        }
    }
    let omega = CycleForm::new(pieces.iter().map(|(_, c)| c.clone()).collect())?;
    let index_of = |c: &Vec<usize>| {
        omega
            .cycles()
            .iter()
            .position(|w| w[0] == c[0])
            .expect("cycle present")
    };
    let m = d.path.sign_matrix();
    let label: Vec<usize> = pieces.iter().map(|(_, c)| index_of(c)).collect();
    let alphas: Vec<usize> = pieces
        .iter()
        .map(|&(p, _)| pieces.iter().filter(|&&(p2, _)| m.is_plus(p, p2)).count())
        .collect();
    Ok((LabeledDyckPath::new(DyckPath::new(alphas)?, label)?, omega))
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

    fn worked_example() -> (LabeledDyckPath, CycleForm) {
        let small = LabeledDyckPath::new(
            DyckPath::from_steps("EESESS").unwrap(),
            parse_word("312").unwrap(),
        )
        .unwrap();
        (small, cyc(&["43", "652", "71"]))
    }

    #[test]
    fn extension_matches_worked_example() {
        let (small, omega) = worked_example();
        let big = omega_extension(&small, &omega).unwrap();
        assert_eq!(big.label, parse_word("7143652").unwrap());
        assert_eq!(big.path.alphas(), &[3, 3, 0, 0, 0, 0, 0]);
        assert_eq!(big.path.steps(), "EEEESSEEESSSSS");
    }

    #[test]
    fn compression_inverts_extension() {
        let (small, omega) = worked_example();
        let big = omega_extension(&small, &omega).unwrap();
        let q = PermutationPartition::from_cuts(big.label.clone(), &[2, 4]);
        assert_eq!(format!("{q}"), "71|43|652");
        let (back, w) = q_compression(&big, &q).unwrap();
        assert_eq!(back, small);
        assert_eq!(w, omega);
    }

    #[test]
    fn trivial_cases() {
        let d = LabeledDyckPath::new(DyckPath::new(vec![2, 1, 0]).unwrap(), vec![2, 0, 1]).unwrap();
        assert_eq!(omega_extension(&d, &CycleForm::identity(3)).unwrap(), d);
        let finest = PermutationPartition::finest(d.label.clone());
        assert_eq!(
            q_compression(&d, &finest).unwrap(),
            (d.clone(), CycleForm::identity(3))
        );
        let coarse = PermutationPartition::coarsest(d.label.clone());
        assert_eq!(
            q_compression(&d, &coarse),
            Err(BijectionError::NotRefinement)
        );
        assert!(matches!(
            omega_extension(&d, &CycleForm::identity(2)),
            Err(BijectionError::CountMismatch {
                expected: 3,
                got: 2
            })
        ));
    }
}
