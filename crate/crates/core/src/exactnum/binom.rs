use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{NumError, Rational};

/// `n!` for `n >= 0`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
///
/// A negative `n` is treated like an out-of-range index and yields zero.
/// Use [`binomial_general`] for the polynomial extension to negative tops.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial_general(n, k.min(n - k))
}

/// `n (n-1) ... (n-k+1) / k!` for any integer `n` and `k >= 0`; zero for `k < 0`.
pub fn binomial_general(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        // the running product of i+1 consecutive integers is divisible by (i+1)!
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

/// Unsigned Stirling numbers of the first kind and Stirling numbers of the
/// second kind, both for `0 <= k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    pub n_max: usize,
    unsigned_first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// Unsigned `c(n, k)`; zero outside the triangle.
    pub fn first(&self, n: usize, k: usize) -> BigInt {
        lookup(&self.unsigned_first, n, k)
    }

    /// Signed `s(n, k) = (-1)^(n-k) c(n, k)`.
    pub fn first_signed(&self, n: usize, k: usize) -> BigInt {
        let c = self.first(n, k);
        if (n + k).is_multiple_of(2) {
            c
        } else {
            -c
        }
    }

    /// `S(n, k)`; zero outside the triangle.
    pub fn second(&self, n: usize, k: usize) -> BigInt {
        lookup(&self.second, n, k)
    }
}

fn lookup(t: &[Vec<BigInt>], n: usize, k: usize) -> BigInt {
    t.get(n)
        .and_then(|row| row.get(k))
        .cloned()
        .unwrap_or_default()
}

pub fn stirling_table(n_max: usize) -> StirlingTable {
    let mut c = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    let mut s = c.clone();
    c[0][0] = BigInt::one();
    s[0][0] = BigInt::one();
    for n in 1..=n_max {
        for k in 1..=n {
            c[n][k] = &c[n - 1][k - 1] + &c[n - 1][k] * BigInt::from(n - 1);
            s[n][k] = &s[n - 1][k - 1] + &s[n - 1][k] * BigInt::from(k);
        }
    }
    StirlingTable {
        n_max,
        unsigned_first: c,
        second: s,
    }
}

/// Raney number `l / (n(m+1) + l) * C(n(m+1) + l, n)`, the coefficient of
/// `t^n` in `B_{m+1}(t)^l`. Any integer `l` is accepted.
pub fn raney(n: u64, m: u64, l: i64) -> Result<Rational, NumError> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let top = (n * (m + 1)) as i64 + l;
    if top == 0 {
        return Err(NumError::ZeroDenominator);
    }
    let b = binomial_general(top, n as i64);
    Ok(Rational::new(BigInt::from(l) * b, BigInt::from(top)))
}

/// Number of level-`l` regions of the m-Catalan arrangement inside one
/// chamber of the braid arrangement.
pub fn mcat_level_closed_form(n: u64, m: u64, l: i64) -> Result<BigInt, NumError> {
    if l < 0 || l > n as i64 {
        return Err(NumError::OutOfRange(format!("level {l} outside 0..={n}")));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    if l == 0 {
        return Ok(BigInt::zero());
    }
    let top = ((m + 1) * n) as i64 - l;
    let num = BigInt::from(m as i64 * l) * binomial(top, (m * n) as i64);
    let (q, r) = num.div_rem(&BigInt::from(top));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `l`-fold convolution of the Catalan numbers: `l / (2n - l) * C(2n - l, n)`.
pub fn catalan_convolution(n: u64, l: i64) -> Result<BigInt, NumError> {
    if l < 1 || l > n as i64 {
        return Err(NumError::OutOfRange(format!(
            "convolution power {l} outside 1..={n}"
        )));
    }
    let top = 2 * n as i64 - l;
    let num = BigInt::from(l) * binomial(top, n as i64);
    Ok(num / BigInt::from(top))
}
