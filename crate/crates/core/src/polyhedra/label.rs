use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{gcd_all, is_primitive, q, Rational, RationalVector};

/// A half-space `⟨μ, v⟩ ≥ r` with `v` a nonzero integer vector.
///
/// Labels built with [`Label::new`] carry a primitive `v`; [`Label::weighted`]
/// admits integer multiples, which change the orbifold structure but not the
/// half-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub v: Vec<BigInt>,
    pub r: Rational,
}

impl Label {
    pub fn new(v: Vec<BigInt>, r: Rational) -> Result<Self> {
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroLabel);
        }
        if !is_primitive(&v) {
            return Err(Error::Invalid(format!(
                "label vector ({}) is not primitive",
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            )));
        }
        Ok(Label { v, r })
    }

    pub fn weighted(v: Vec<BigInt>, r: Rational) -> Result<Self> {
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroLabel);
        }
        Ok(Label { v, r })
    }

    /// Convenience constructor for small integer data; panics on a zero vector.
    pub fn int(v: &[i64], r: i64) -> Self {
        Label::weighted(v.iter().map(|&a| BigInt::from(a)).collect(), q(r)).expect("nonzero label")
    }

    /// Same vector, new right-hand side.
    pub fn with_r(&self, r: Rational) -> Label {
        Label { v: self.v.clone(), r }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn is_weighted(&self) -> bool {
        !is_primitive(&self.v)
    }

    /// Integer multiplicity of the vector, 1 for primitive labels.
    pub fn weight(&self) -> BigInt {
        gcd_all(&self.v)
    }

    pub fn pairing(&self, x: &RationalVector) -> Rational {
        x.dot_int(&self.v)
    }

    /// `⟨x, v⟩ − r`.
    pub fn slack(&self, x: &RationalVector) -> Rational {
        self.pairing(x) - &self.r
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.pairing(x) >= self.r
    }

    pub fn negated(&self) -> Label {
        Label { v: self.v.iter().map(|a| -a).collect(), r: -self.r.clone() }
    }

    pub fn vector(&self) -> RationalVector {
        RationalVector::from_bigints(&self.v)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.v {
            write!(f, "{a} ")?;
        }
        write!(f, "; {}", self.r)
    }
}
