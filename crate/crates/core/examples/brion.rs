//! Summing vertex cones reproduces the lattice-point generating function.

use delzant::counting::{brion_evaluate, lattice_points, monomial, vertex_cones, Region};
use delzant::lattice::{frac, Rational};
use delzant::polyhedra::catalog;
use num_bigint::BigInt;

fn main() -> delzant::Result<()> {
    let triangle = catalog::triangle(3);
    for cone in vertex_cones(&triangle)? {
        println!("vertex {}  edges {:?}", cone.vertex, cone.edges);
    }
    let z = [frac(2, 3), frac(5, 7)];
    let mut direct = Rational::from_integer(0.into());
    for x in lattice_points(&triangle, 1, Region::Closed)? {
        let e: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
        direct += monomial(&z, &e)?;
    }
    println!("vertex sum {}  direct sum {direct}", brion_evaluate(&triangle, &z)?);
    Ok(())
}
