//! Seeded generators for randomized checks. The same seed always yields the
//! same objects.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::{polytope_dim, vertex_cones};
use crate::error::Result;
use crate::lattice::{frac, is_primitive, q, RationalVector};
use crate::polyhedra::LabelledPolyhedron;
use crate::subdivision::{is_admissible, Subdivision};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Convex hull of a few random points of `{0, …, 3}^dim`, retried until it
/// is full-dimensional.
pub fn lattice_polytope<R: Rng>(rng: &mut R, dim: usize) -> Result<LabelledPolyhedron> {
    loop {
        let n = rng.gen_range(dim + 1..=dim + 4);
        let points: Vec<RationalVector> = (0..n)
            .map(|_| RationalVector::from_ints(&(0..dim).map(|_| rng.gen_range(0..=3i64)).collect::<Vec<_>>()))
            .collect();
        let p = LabelledPolyhedron::convex_hull(&points)?;
        if polytope_dim(&p)? == dim {
            return Ok(p);
        }
    }
}

/// A direction with small entries pairing nonzero with every edge of `p`.
pub fn generic_direction<R: Rng>(rng: &mut R, p: &LabelledPolyhedron) -> Result<Vec<i64>> {
    let edges: Vec<Vec<BigInt>> = vertex_cones(p)?.into_iter().flat_map(|c| c.edges).collect();
    loop {
        let xi: Vec<i64> = (0..p.dim()).map(|_| rng.gen_range(-9..=9)).collect();
        let generic = edges.iter().all(|e| {
            !e.iter().zip(&xi).map(|(a, &b)| a * BigInt::from(b)).sum::<BigInt>().is_zero()
        });
        if generic {
            return Ok(xi);
        }
    }
}

fn primitive_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        if v.iter().any(|&x| x != 0) && is_primitive(&big) {
            return v;
        }
    }
}

/// A subdivision of space by one or two random hyperplanes at half-integer
/// levels, retried until it is admissible for the lattice polytope `delta`.
pub fn admissible_split<R: Rng>(rng: &mut R, delta: &LabelledPolyhedron) -> Result<Subdivision> {
    let dim = delta.dim();
    let vertices: Vec<RationalVector> = vertex_cones(delta)?.into_iter().map(|c| c.vertex).collect();
    loop {
        let count = if dim == 1 { 1 } else { rng.gen_range(1..=2) };
        let mut planes = Vec::new();
        for _ in 0..count {
            let v = primitive_vector(rng, dim);
            let vv = RationalVector::from_ints(&v);
            let values: Vec<_> = vertices.iter().map(|x| x.dot(&vv)).collect();
            let lo = values.iter().min().expect("vertices").floor().to_integer();
            let hi = values.iter().max().expect("vertices").ceil().to_integer();
            let span: i64 = (&hi - &lo).try_into().unwrap_or(1);
            let lo: i64 = lo.try_into().unwrap_or(0);
            let level = lo + rng.gen_range(0..span.max(1));
            planes.push((v, q(level) + frac(1, 2)));
        }
        let s = Subdivision::from_hyperplanes(dim, &planes)?;
        if is_admissible(&s, delta)? {
            return Ok(s);
        }
    }
}
