//! Small named polyhedra used throughout the tests and examples.

use super::{Label, LabelledPolyhedron};
use crate::lattice::{frac, Rational};

pub fn unit_square() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 0], -1), (&[0, -1], -1)])
}

pub fn unit_cube() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(
        3,
        &[
            (&[1, 0, 0], 0),
            (&[0, 1, 0], 0),
            (&[0, 0, 1], 0),
            (&[-1, 0, 0], -1),
            (&[0, -1, 0], -1),
            (&[0, 0, -1], -1),
        ],
    )
}

/// `{x ≥ 0, Σ x_i ≤ 1}` in dimension `d ≥ 1`.
pub fn standard_simplex(d: usize) -> LabelledPolyhedron {
    let mut labels = Vec::new();
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = 1;
        labels.push(Label::int(&v, 0));
    }
    labels.push(Label::int(&vec![-1; d], -1));
    LabelledPolyhedron::new(d, labels).expect("consistent dimensions")
}

/// Triangle with vertices `(0,0)`, `(n,0)`, `(0,n)`.
pub fn triangle(n: i64) -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], -n)])
}

/// Square pyramid with base `[0,2]²` at height 0 and apex `(1,1,1)`.
/// The four slant labels come first, the base label last.
pub fn egyptian_pyramid() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(
        3,
        &[
            (&[1, 0, -1], 0),
            (&[0, 1, -1], 0),
            (&[-1, 0, -1], -2),
            (&[0, -1, -1], -2),
            (&[0, 0, 1], 0),
        ],
    )
}

/// Labels `(1,0;0)`, `(0,1;0)`, `(−1,−2;−2)`: the triangle with vertices
/// `(0,0)`, `(2,0)`, `(0,1)`, which has one orbifold vertex of order 2.
pub fn weighted_triangle() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -2], -2)])
}

/// The interval `[a, b]` in dimension 1.
pub fn interval(a: Rational, b: Rational) -> LabelledPolyhedron {
    LabelledPolyhedron::new(1, vec![Label::int(&[1], 0).with_r(a), Label::int(&[-1], 0).with_r(-b)])
        .expect("dimension 1")
}

/// `[0, 1/2]`.
pub fn half_interval() -> LabelledPolyhedron {
    interval(frac(0, 1), frac(1, 2))
}

/// `[0,1]` with the label `x ≥ 0` listed twice.
pub fn doubled_interval() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(1, &[(&[1], 0), (&[1], 0), (&[-1], -1)])
}

/// Cone over a square with apex at the origin: `|x| ≤ z`, `|y| ≤ z`.
pub fn square_cone() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(
        3,
        &[(&[1, 0, 1], 0), (&[-1, 0, 1], 0), (&[0, 1, 1], 0), (&[0, -1, 1], 0)],
    )
}

/// The quadrant `x, y ≥ 0` with the redundant label `x + y ≥ 0`.
pub fn redundant_quadrant() -> LabelledPolyhedron {
    LabelledPolyhedron::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)])
}
