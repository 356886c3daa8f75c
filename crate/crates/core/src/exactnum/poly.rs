use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{NumError, Rational};

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_default();
        Poly::new(
            (0..len)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// `binom(t, k) = t (t-1) ... (t-k+1) / k!` as a polynomial in `t`.
    pub fn binomial(k: usize) -> Poly {
        let mut p = Poly::constant(Rational::one());
        for i in 0..k {
            let factor = Poly::new(vec![
                Rational::from_integer(BigInt::from(-(i as i64))),
                Rational::one(),
            ]);
            p = p
                .mul(&factor)
                .scale(&Rational::new(BigInt::one(), BigInt::from(i + 1)));
        }
        p
    }
}

/// Lagrange interpolation through the given points.
pub fn poly_interpolate(points: &[(Rational, Rational)]) -> Result<Poly, NumError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(NumError::DuplicateNode);
        }
    }
    let mut out = Poly::default();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Poly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = Poly::new(vec![-xj.clone(), Rational::one()]);
            basis = basis.mul(&factor).scale(&(xi - xj).recip());
        }
        out = out.add(&basis);
    }
    Ok(out)
}

/// Integer polynomial, lowest degree first; characteristic polynomials are
/// monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Accepts a polynomial only if it is integral and monic.
    pub fn from_poly(p: &Poly) -> Result<Self, NumError> {
        if p.coeffs().last().is_none_or(|c| !c.is_one())
            || p.coeffs().iter().any(|c| !c.is_integer())
        {
            return Err(NumError::NotCharPoly);
        }
        Ok(Self::new(
            p.coeffs().iter().map(|c| c.to_integer()).collect(),
        ))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
    }
}

/// Writes `Σ c_d t^d` from the top degree down, e.g. `t^2 - 3t`.
fn write_terms<C>(f: &mut fmt::Formatter<'_>, coeffs: &[C]) -> fmt::Result
where
    C: Signed + fmt::Display,
{
    let mut out = String::new();
    for (d, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !(a.is_one() && d > 0) {
            out.push_str(&alloc::format!("{a}"));
        }
        match d {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&alloc::format!("t^{d}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (int(x), int(y))).collect()
    }

    #[test]
    fn interpolates_catalan_two() {
        let p = poly_interpolate(&pts(&[(1, -2), (2, -2), (3, 0), (4, 4)])).unwrap();
        assert_eq!(p, Poly::new(vec![int(0), int(-3), int(1)]));
        let c = CharPoly::from_poly(&p).unwrap();
        assert_eq!(alloc::format!("{c}"), "t^2 - 3t");
    }

    #[test]
    fn interpolates_finite_field_counts() {
        let p = poly_interpolate(&pts(&[(3, 3), (5, 15), (7, 35)])).unwrap();
        assert_eq!(
            CharPoly::from_poly(&p).unwrap().coeffs(),
            &[BigInt::zero(), BigInt::from(-2), BigInt::one()]
        );
    }

    #[test]
    fn constant_data() {
        let p = poly_interpolate(&pts(&[(1, 5), (2, 5), (9, 5)])).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.eval(&int(100)), int(5));
    }

    #[test]
    fn duplicate_nodes() {
        assert_eq!(
            poly_interpolate(&pts(&[(1, 1), (1, 2)])),
            Err(NumError::DuplicateNode)
        );
    }

    #[test]
    fn binomial_polynomial() {
        let b = Poly::binomial(3);
        assert_eq!(b.eval(&int(7)), int(35));
        assert_eq!(b.eval(&int(-1)), int(-1));
    }
}
