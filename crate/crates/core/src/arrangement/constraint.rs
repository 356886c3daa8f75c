use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{EpsRational, Rational};

/// `x_i - x_j <= bound`, where a negative ε part in `bound` makes the
/// inequality strict.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DifferenceConstraint {
    pub i: usize,
    pub j: usize,
    pub bound: EpsRational,
}

impl DifferenceConstraint {
    /// `x_i - x_j <= c`
    pub fn at_most(i: usize, j: usize, c: Rational) -> Self {
        Self {
            i,
            j,
            bound: EpsRational::real(c),
        }
    }

    /// `x_i - x_j < c`
    pub fn less_than(i: usize, j: usize, c: Rational) -> Self {
        Self {
            i,
            j,
            bound: EpsRational::new(c, -1),
        }
    }

    /// `x_i - x_j >= c`
    pub fn at_least(i: usize, j: usize, c: Rational) -> Self {
        Self {
            i: j,
            j: i,
            bound: EpsRational::real(-c),
        }
    }

    /// `x_i - x_j > c`
    pub fn greater_than(i: usize, j: usize, c: Rational) -> Self {
        Self {
            i: j,
            j: i,
            bound: EpsRational::new(-c, -1),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.bound.eps < 0
    }

    /// Whether a real point satisfies the constraint it encodes.
    pub fn holds(&self, x: &[Rational]) -> bool {
        let d = &x[self.i] - &x[self.j];
        if self.is_strict() {
            d < self.bound.real
        } else {
            d <= self.bound.real
        }
    }
}

impl fmt::Display for DifferenceConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.is_strict() { "<" } else { "<=" };
        write!(
            f,
            "x{} - x{} {op} {}",
            self.i + 1,
            self.j + 1,
            self.bound.real
        )
    }
}

/// A negative cycle in the constraint graph, as indices into the input list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("infeasible: cycle through constraints {cycle:?}")]
pub struct Infeasible {
    pub cycle: Vec<usize>,
}

/// Finds a rational point satisfying every constraint, or a certificate
/// that none exists.
///
/// Constraints become edges `j -> i` of weight `bound`; shortest-path
/// potentials from a virtual source give a solution over the ε-extended
/// field, which is then specialised to a concrete ε and re-checked. The
/// returned point has minimum coordinate 0.
pub fn feasible(
    constraints: &[DifferenceConstraint],
    n: usize,
) -> Result<Vec<Rational>, Infeasible> {
    for c in constraints {
        assert!(c.i < n && c.j < n, "constraint index out of range");
    }
    let mut dist = vec![EpsRational::zero(); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last_relaxed = None;
    for _ in 0..=n {
        last_relaxed = None;
        for (idx, c) in constraints.iter().enumerate() {
            let cand = &dist[c.j] + &c.bound;
            if cand < dist[c.i] {
                dist[c.i] = cand;
                pred[c.i] = Some(idx);
                last_relaxed = Some(c.i);
            }
        }
        if last_relaxed.is_none() {
            break;
        }
    }
    if let Some(v) = last_relaxed {
        return Err(Infeasible {
            cycle: extract_cycle(constraints, &pred, v, n),
        });
    }
    Ok(materialize(constraints, &dist))
}

fn extract_cycle(
    constraints: &[DifferenceConstraint],
    pred: &[Option<usize>],
    start: usize,
    n: usize,
) -> Vec<usize> {
    let mut v = start;
    for _ in 0..n {
        v = constraints[pred[v].expect("relaxed vertex has a predecessor")].j;
    }
    let anchor = v;
    let mut cycle = Vec::new();
    loop {
        let idx = pred[v].expect("cycle vertex has a predecessor");
        cycle.push(idx);
        v = constraints[idx].j;
        if v == anchor {
            break;
        }
    }
    cycle.reverse();
    cycle
}

fn materialize(constraints: &[DifferenceConstraint], dist: &[EpsRational]) -> Vec<Rational> {
    // smallest positive real slack and largest ε coefficient that must fit in it
    let mut delta: Option<Rational> = None;
    let mut spread = 0i64;
    for c in constraints {
        let slack = &dist[c.j].real + &c.bound.real - &dist[c.i].real;
        if slack.is_positive() {
            delta = Some(match delta {
                Some(d) if d <= slack => d,
                _ => slack,
            });
            spread = spread.max((dist[c.i].eps - dist[c.j].eps - c.bound.eps).abs());
        }
    }
    let mut eps = match delta {
        Some(d) => d / Rational::from_integer(BigInt::from(2 * (spread + 1))),
        None => Rational::one(),
    };
    loop {
        let x: Vec<Rational> = dist.iter().map(|d| d.at(&eps)).collect();
        if constraints.iter().all(|c| c.holds(&x)) {
            return normalize(x);
        }
        eps /= Rational::from_integer(BigInt::from(2));
    }
}

/// Translates a point along the all-ones direction so its minimum is 0.
pub(crate) fn normalize(mut x: Vec<Rational>) -> Vec<Rational> {
    if let Some(min) = x.iter().min().cloned() {
        if !min.is_zero() {
            for v in &mut x {
                *v -= &min;
            }
        }
    }
    x
}

/// All-pairs shortest paths of a growing constraint graph, used to reject
/// an infeasible partial system as soon as a constraint closes a negative
/// cycle.
#[derive(Debug, Clone)]
pub struct PathClosure {
    n: usize,
    dist: Vec<Option<EpsRational>>,
}

impl PathClosure {
    pub fn new(n: usize) -> Self {
        let mut dist = vec![None; n * n];
        for v in 0..n {
            dist[v * n + v] = Some(EpsRational::zero());
        }
        Self { n, dist }
    }

    /// Shortest path weight `from -> to`, i.e. the tightest derived bound
    /// on `x_to - x_from`.
    pub fn bound(&self, from: usize, to: usize) -> Option<&EpsRational> {
        self.dist[from * self.n + to].as_ref()
    }

    /// Adds a constraint; returns `false` (leaving the closure untouched)
    /// if it makes the system infeasible.
    pub fn add(&mut self, c: &DifferenceConstraint) -> bool {
        let n = self.n;
        let (u, v, w) = (c.j, c.i, &c.bound);
        if let Some(back) = self.bound(v, u) {
            if (back + w).is_negative() {
                return false;
            }
        }
        let via_u: Vec<Option<EpsRational>> =
            (0..n).map(|a| self.dist[a * n + u].clone()).collect();
        let from_v: Vec<Option<EpsRational>> =
            (0..n).map(|b| self.dist[v * n + b].clone()).collect();
        for (a, au) in via_u.iter().enumerate() {
            let Some(au) = au else { continue };
            let head = au + w;
            for (b, vb) in from_v.iter().enumerate() {
                let Some(vb) = vb else { continue };
                let cand = &head + vb;
                let slot = &mut self.dist[a * n + b];
                if slot.as_ref().is_none_or(|cur| cand < *cur) {
                    *slot = Some(cand);
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn chain_counterexample_is_infeasible() {
        let cs = vec![
            DifferenceConstraint::greater_than(1, 2, int(2)),
            DifferenceConstraint::greater_than(0, 1, int(1)),
            DifferenceConstraint::less_than(0, 2, int(3)),
        ];
        let err = feasible(&cs, 3).unwrap_err();
        let mut cyc = err.cycle.clone();
        cyc.sort();
        assert_eq!(cyc, vec![0, 1, 2]);
        let mut closure = PathClosure::new(3);
        assert!(closure.add(&cs[0]));
        assert!(closure.add(&cs[1]));
        assert!(!closure.add(&cs[2]));
    }

    #[test]
    fn empty_system() {
        assert_eq!(feasible(&[], 1).unwrap(), vec![int(0)]);
    }

    #[test]
    fn band_midpoint() {
        let cs = vec![
            DifferenceConstraint::greater_than(0, 1, int(1)),
            DifferenceConstraint::less_than(0, 1, int(2)),
        ];
        let x = feasible(&cs, 2).unwrap();
        let d = &x[0] - &x[1];
        assert!(int(1) < d && d < int(2));
        assert_eq!(x.iter().min(), Some(&int(0)));
    }

    #[test]
    fn strict_zero_cycle_is_infeasible() {
        let cs = vec![
            DifferenceConstraint::less_than(0, 1, int(1)),
            DifferenceConstraint::at_least(0, 1, int(1)),
        ];
        assert!(feasible(&cs, 2).is_err());
        let weak = vec![
            DifferenceConstraint::at_most(0, 1, int(1)),
            DifferenceConstraint::at_least(0, 1, int(1)),
        ];
        let x = feasible(&weak, 2).unwrap();
        assert_eq!(&x[0] - &x[1], int(1));
    }
}
