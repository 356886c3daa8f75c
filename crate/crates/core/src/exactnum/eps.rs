use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Rational;

/// `real + eps * ε` for a positive infinitesimal `ε`, ordered
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EpsRational {
    pub real: Rational,
    pub eps: i64,
}

impl EpsRational {
    pub fn new(real: Rational, eps: i64) -> Self {
        Self { real, eps }
    }

    pub fn real(real: Rational) -> Self {
        Self { real, eps: 0 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// Substitutes a concrete value for `ε`.
    pub fn at(&self, eps: &Rational) -> Rational {
        &self.real + eps * Rational::from_integer(BigInt::from(self.eps))
    }
}

impl Add for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add for &EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: Self) -> EpsRational {
        EpsRational {
            real: &self.real + &rhs.real,
            eps: self.eps + rhs.eps,
        }
    }
}

impl Sub for EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Sub for &EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: Self) -> EpsRational {
        EpsRational {
            real: &self.real - &rhs.real,
            eps: self.eps - rhs.eps,
        }
    }
}

impl Neg for EpsRational {
    type Output = EpsRational;
    fn neg(self) -> Self {
        EpsRational {
            real: -self.real,
            eps: -self.eps,
        }
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            0 => write!(f, "{}", self.real),
            e if self.real.is_zero() => write!(f, "{e}ε"),
            e if e > 0 => write!(f, "{} + {e}ε", self.real),
            e => write!(f, "{} - {}ε", self.real, -e),
        }
    }
}
