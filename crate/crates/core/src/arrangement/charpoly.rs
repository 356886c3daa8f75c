use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{ArrangementError, ArrangementKind, ArrangementSpec};
use crate::exactnum::{poly_interpolate, CharPoly, Rational};

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Offsets scaled by the common denominator; scaling every offset by the
/// same positive factor is a linear change of coordinates and preserves
/// the intersection poset.
fn integer_offsets(spec: &ArrangementSpec) -> Vec<u64> {
    let lcm = spec
        .offsets()
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    spec.offsets()
        .iter()
        .map(|a| {
            (a * Rational::from_integer(lcm.clone()))
                .to_integer()
                .to_u64()
                .expect("offset fits in u64")
        })
        .collect()
}

/// Number of points of `F_p^n` on no hyperplane of the arrangement, with
/// offsets scaled to integers.
pub fn count_points_mod_p(spec: &ArrangementSpec, p: u64) -> u64 {
    let n = spec.n();
    if n == 0 {
        return 1;
    }
    let mut forbidden = vec![false; p as usize];
    if spec.kind() == ArrangementKind::Catalan {
        forbidden[0] = true;
    }
    for a in integer_offsets(spec) {
        let a = a % p;
        forbidden[a as usize] = true;
        forbidden[((p - a) % p) as usize] = true;
    }
    // translation invariance: fix x_1 = 0 and multiply by p
    let mut xs = vec![0u64; n];
    p * count_from(1, &mut xs, p, &forbidden)
}

fn count_from(depth: usize, xs: &mut [u64], p: u64, forbidden: &[bool]) -> u64 {
    if depth == xs.len() {
        return 1;
    }
    let mut total = 0;
    for v in 0..p {
        if xs[..depth]
            .iter()
            .all(|&u| !forbidden[((v + p - u) % p) as usize])
        {
            xs[depth] = v;
            total += count_from(depth + 1, xs, p, forbidden);
        }
    }
    total
}

/// Characteristic polynomial from point counts at `n + 1` primes beyond
/// `2 n a_1 + 1`, checked at one further prime.
pub fn char_poly_finite_field(spec: &ArrangementSpec) -> Result<CharPoly, ArrangementError> {
    let n = spec.n() as u64;
    let a1 = integer_offsets(spec).first().copied().unwrap_or(0);
    let floor = (2 * n * a1 + 1).max(n);
    let primes: Vec<u64> = (floor + 1..)
        .filter(|&p| is_prime(p))
        .take(spec.n() + 2)
        .collect();
    let (fit, check) = primes.split_at(spec.n() + 1);
    let points: Vec<(Rational, Rational)> = fit
        .iter()
        .map(|&p| {
            (
                Rational::from_integer(p.into()),
                Rational::from_integer(count_points_mod_p(spec, p).into()),
            )
        })
        .collect();
    let poly = poly_interpolate(&points).expect("primes are distinct");
    let p = check[0];
    let want = Rational::from_integer(count_points_mod_p(spec, p).into());
    if poly.eval(&Rational::from_integer(p.into())) != want {
        return Err(ArrangementError::ValidationMismatch { prime: p });
    }
    CharPoly::from_poly(&poly).map_err(|_| ArrangementError::ValidationMismatch { prime: p })
}
