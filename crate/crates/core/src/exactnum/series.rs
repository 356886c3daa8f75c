use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, NumError, Rational};

/// Ordinary power series truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn same_order(&self, other: &Series) -> Result<(), NumError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(NumError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series, NumError> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series, NumError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Result<Series, NumError> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Series, NumError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(NumError::NotInvertible);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0.recip();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -acc / c0;
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power; negative exponents go through [`Series::inverse`].
    pub fn pow(&self, e: i64) -> Result<Series, NumError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series, NumError> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(NumError::NonzeroConstant);
        }
        // Horner from the top coefficient down
        let mut acc = Series::zero(self.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Generalized binomial series `B_s(t)`, the solution of `B = 1 + t B^s`.
    pub fn generalized_binomial(s: i64, order: usize) -> Series {
        let t = Series::t(order);
        let mut b = Series::one(order);
        // each pass fixes one more coefficient
        for _ in 0..=order {
            let bs = b.pow(s).expect("constant term is 1");
            b = Series::one(order)
                .add(&t.mul(&bs).expect("same order"))
                .expect("same order");
        }
        b
    }
}

/// Exponential generating function `Σ c_n t^n / n!`, stored by its
/// coefficients `c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEgf {
    coeffs: Vec<Rational>,
}

impl TruncatedEgf {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_integers(counts: &[BigInt], order: usize) -> Self {
        Self::new(
            counts.iter().cloned().map(Rational::from_integer).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The `n`-th counting coefficient `c_n`.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_series(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / Rational::from_integer(factorial(n as u64)))
            .collect();
        Series { coeffs }
    }

    pub fn from_series(s: &Series) -> Self {
        let coeffs = s
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * Rational::from_integer(factorial(n as u64)))
            .collect();
        Self { coeffs }
    }

    pub fn mul(&self, other: &TruncatedEgf) -> Result<TruncatedEgf, NumError> {
        Ok(Self::from_series(
            &self.to_series().mul(&other.to_series())?,
        ))
    }

    pub fn pow(&self, e: i64) -> Result<TruncatedEgf, NumError> {
        Ok(Self::from_series(&self.to_series().pow(e)?))
    }

    pub fn compose(&self, inner: &TruncatedEgf) -> Result<TruncatedEgf, NumError> {
        Ok(Self::from_series(
            &self.to_series().compose(&inner.to_series())?,
        ))
    }

    /// `1 - e^{-t}`.
    pub fn one_minus_exp_neg(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| match n {
                0 => Rational::zero(),
                n if n % 2 == 1 => Rational::one(),
                _ => -Rational::one(),
            })
            .collect();
        Self { coeffs }
    }

    /// `-ln(1 - t)`, whose counting coefficients are `(n-1)!`.
    pub fn neg_log_one_minus(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| match n {
                0 => Rational::zero(),
                n => Rational::from_integer(factorial(n as u64 - 1)),
            })
            .collect();
        Self { coeffs }
    }

    /// `self(1 - e^{-t})`: takes a Catalan-type census series to the
    /// semiorder-type one.
    pub fn compose_exp(&self) -> Result<TruncatedEgf, NumError> {
        self.compose(&Self::one_minus_exp_neg(self.order()))
    }

    /// `self(-ln(1 - t))`: takes a semiorder-type census series to the
    /// Catalan-type one. Inverse of [`TruncatedEgf::compose_exp`].
    pub fn compose_neg_log(&self) -> Result<TruncatedEgf, NumError> {
        self.compose(&Self::neg_log_one_minus(self.order()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, raney};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn catalan_series() {
        let c = Series::generalized_binomial(2, 7);
        assert_eq!(c.coeffs(), &ints(&[1, 1, 2, 5, 14, 42, 132, 429])[..]);
    }

    #[test]
    fn raney_coefficients_of_powers() {
        for m in 1..=3u64 {
            let b = Series::generalized_binomial(m as i64 + 1, 8);
            for l in -3..=4i64 {
                let p = b.pow(l).unwrap();
                for n in 0..=8u64 {
                    if let Ok(r) = raney(n, m, l) {
                        assert_eq!(p.coeff(n as usize), r, "m={m} l={l} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn pow_zero_is_one() {
        let f = TruncatedEgf::new(ints(&[0, 1, 1, 1]), 3);
        assert_eq!(f.pow(0).unwrap(), TruncatedEgf::new(ints(&[1]), 3));
    }

    #[test]
    fn census_transforms_for_unit_offset() {
        // level-1 counts for A = {1}: semiorder 1, 1, 7 and Catalan 1, 2, 12
        let semi = TruncatedEgf::new(ints(&[0, 1, 1, 7]), 3);
        let cat = TruncatedEgf::new(ints(&[0, 1, 2, 12]), 3);
        assert_eq!(semi.compose_neg_log().unwrap(), cat);
        assert_eq!(cat.compose_exp().unwrap(), semi);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert_eq!(a.mul(&b), Err(NumError::OrderMismatch(3, 4)));
        assert_eq!(a.compose(&Series::one(3)), Err(NumError::NonzeroConstant));
    }

    #[test]
    fn inverse_round_trip() {
        let c = Series::generalized_binomial(2, 6);
        assert_eq!(c.mul(&c.inverse().unwrap()).unwrap(), Series::one(6));
    }
}
