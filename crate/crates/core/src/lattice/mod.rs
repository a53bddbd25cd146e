//! Exact rational and integer linear algebra.

mod matrix;
mod snf;
mod vector;

pub use matrix::{
    kernel_basis, primitive_direction, rank, rank_of, rank_of_ints, rref, solve, IntegerMatrix,
};
pub use snf::{smith_normal_form, SmithForm};
pub use vector::{bigints, gcd_all, is_primitive, primitive, RationalVector};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The fraction `n / d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
