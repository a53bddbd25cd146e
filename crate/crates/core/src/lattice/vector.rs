use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A point or direction of a finite-dimensional rational vector space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints<I: Into<BigInt> + Copy>(coords: &[I]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        RationalVector(coords.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Pairing with an integer vector.
    pub fn dot_int(&self, v: &[BigInt]) -> Rational {
        debug_assert_eq!(self.dim(), v.len());
        self.0
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * Rational::from_integer(b.clone()))
    }

    pub fn scale(&self, c: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()))
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|a| a.is_integer().then(|| a.to_integer())).collect()
    }

    /// Scale by a positive rational so the result is a primitive integer vector.
    pub fn primitive_integer(&self) -> Result<Vec<BigInt>> {
        let l = self.denominator_lcm();
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|a| (a * Rational::from_integer(l.clone())).to_integer())
            .collect();
        primitive(&ints)
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Divide an integer vector by the gcd of its entries; the sign is kept.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroLabel);
    }
    Ok(v.iter().map(|a| a / &g).collect())
}

/// Nonnegative gcd of all entries (zero for the zero vector).
pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a)).abs()
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_all(v).is_one()
}

pub fn bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}
