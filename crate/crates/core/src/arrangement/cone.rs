use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::Region;
use crate::exactnum::Rational;

/// `coeffs · x <= rhs`, or `<` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub strict: bool,
}

impl LinearInequality {
    /// `x_i - x_j <= 0` (or `< 0`) in `n` variables.
    pub fn difference(n: usize, i: usize, j: usize, strict: bool) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i] = Rational::one();
        coeffs[j] = -Rational::one();
        Self {
            coeffs,
            rhs: Rational::zero(),
            strict,
        }
    }
}

/// Rows keyed by normalised coefficient vector, keeping the tightest
/// right-hand side (strict wins ties).
fn insert_row(rows: &mut BTreeMap<Vec<Rational>, (Rational, bool)>, row: LinearInequality) -> bool {
    let Some(lead) = row.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
        return if row.strict {
            row.rhs.is_positive()
        } else {
            !row.rhs.is_negative()
        };
    };
    let coeffs: Vec<Rational> = row.coeffs.iter().map(|c| c / &lead).collect();
    let rhs = row.rhs / &lead;
    match rows.get_mut(&coeffs) {
        Some(cur) => {
            if rhs < cur.0 || (rhs == cur.0 && row.strict) {
                *cur = (rhs, row.strict);
            }
        }
        None => {
            rows.insert(coeffs, (rhs, row.strict));
        }
    }
    true
}

/// Decides whether a system of linear inequalities has a real solution by
/// eliminating one variable at a time.
pub fn fourier_motzkin_feasible(system: &[LinearInequality]) -> bool {
    let mut rows = BTreeMap::new();
    for r in system {
        if !insert_row(&mut rows, r.clone()) {
            return false;
        }
    }
    let n = system.first().map_or(0, |r| r.coeffs.len());
    for v in 0..n {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), BTreeMap::new());
        for (coeffs, (rhs, strict)) in rows {
            let row = LinearInequality {
                coeffs,
                rhs,
                strict,
            };
            let c = row.coeffs[v].clone();
            if c.is_positive() {
                pos.push(row);
            } else if c.is_negative() {
                neg.push(row);
            } else {
                keep.insert(row.coeffs, (row.rhs, row.strict));
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[v].clone(), -q.coeffs[v].clone());
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x * &b + y * &a)
                    .collect();
                let rhs = &p.rhs * &b + &q.rhs * &a;
                let row = LinearInequality {
                    coeffs,
                    rhs,
                    strict: p.strict || q.strict,
                };
                if !insert_row(&mut keep, row) {
                    return false;
                }
            }
        }
        rows = keep;
    }
    true
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the recession cone of the closure of the region, computed
/// geometrically: the homogeneous rows `a · d <= 0` whose strict version
/// is unattainable span the lineality complement.
pub fn recession_cone_dim(region: &Region) -> usize {
    let n = region.n();
    let mut cone = Vec::new();
    for (i, j) in region.spec().pairs() {
        let (lo, hi) = region.bounds(i, j);
        if hi.is_some() {
            cone.push(LinearInequality::difference(n, i, j, false));
        }
        if lo.is_some() {
            cone.push(LinearInequality::difference(n, j, i, false));
        }
    }
    let implicit: Vec<Vec<Rational>> = cone
        .iter()
        .filter(|row| {
            let mut sys = cone.clone();
            sys.push(LinearInequality {
                coeffs: row.coeffs.clone(),
                rhs: Rational::zero(),
                strict: true,
            });
            !fourier_motzkin_feasible(&sys)
        })
        .map(|row| row.coeffs.clone())
        .collect();
    n - rank(&implicit)
}
