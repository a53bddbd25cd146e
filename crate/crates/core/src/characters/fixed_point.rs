use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::TCharacter;
use crate::counting::vertex_cones;
use crate::error::{Error, Result};
use crate::lattice::RationalVector;
use crate::polyhedra::{FaceLattice, LabelledPolyhedron};

/// Local data of an isolated fixed component of a line bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    /// Weight of the bundle at the fixed point.
    pub sigma: RationalVector,
    /// Weights of the isotropy action on the normal space.
    pub normal_weights: Vec<RationalVector>,
    /// Index of the fixed component; 1 for an isolated point.
    pub rr: i64,
}

impl FixedPointDatum {
    pub fn new(sigma: RationalVector, normal_weights: Vec<RationalVector>, rr: i64) -> Result<Self> {
        if let Some(w) = normal_weights.iter().find(|w| w.is_zero()) {
            return Err(Error::Invalid(format!("zero normal weight {w}")));
        }
        if let Some(w) = normal_weights.iter().find(|w| w.dim() != sigma.dim()) {
            return Err(Error::DimensionMismatch { expected: sigma.dim(), got: w.dim() });
        }
        Ok(FixedPointDatum { sigma, normal_weights, rr })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bundle {
    /// Trivial weights everywhere.
    Rigid,
    /// Weight at a vertex is the vertex.
    Moment,
    /// Weight at a vertex is minus the vertex.
    DualMoment,
}

/// Fixed-point data of the toric space of a bounded polytope: one datum per
/// vertex, with normal weights the negated primitive edge directions.
pub fn toric_fixed_point_data(p: &LabelledPolyhedron, bundle: Bundle) -> Result<Vec<FixedPointDatum>> {
    vertex_cones(p)?
        .into_iter()
        .map(|c| {
            let sigma = match bundle {
                Bundle::Rigid => RationalVector::zeros(p.dim()),
                Bundle::Moment => c.vertex.clone(),
                Bundle::DualMoment => -&c.vertex,
            };
            let weights = c.edges.iter().map(|e| -&RationalVector::from_bigints(e)).collect();
            FixedPointDatum::new(sigma, weights, 1)
        })
        .collect()
}

/// Convex hull of finitely many weights with its vertex list.
#[derive(Clone, Debug)]
pub struct WeightPolytope {
    /// Sorted.
    pub vertices: Vec<RationalVector>,
    pub polytope: LabelledPolyhedron,
}

impl WeightPolytope {
    pub fn contains(&self, x: &RationalVector) -> bool {
        self.polytope.contains(x)
    }

    pub fn is_vertex(&self, x: &RationalVector) -> bool {
        self.vertices.binary_search(x).is_ok()
    }

    pub fn of_data(data: &[FixedPointDatum]) -> Result<Self> {
        let pts: Vec<RationalVector> = data.iter().map(|d| d.sigma.clone()).collect();
        weight_polytope(&pts)
    }

    pub fn of_character(chi: &TCharacter) -> Result<Self> {
        let pts: Vec<RationalVector> = chi.iter().map(|(e, _)| RationalVector::from_ints(e)).collect();
        weight_polytope(&pts)
    }
}

pub fn weight_polytope(points: &[RationalVector]) -> Result<WeightPolytope> {
    if points.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let polytope = LabelledPolyhedron::convex_hull(points)?;
    let lattice = FaceLattice::new(&polytope)?;
    let vertices: BTreeSet<RationalVector> =
        lattice.vertices().into_iter().map(|v| lattice.faces()[v].sample.clone()).collect();
    Ok(WeightPolytope { vertices: vertices.into_iter().collect(), polytope })
}

/// Multiplicity at a vertex `μ` of the weight polytope: the sum of `rr` over
/// the fixed points with weight `μ` whose normal weights all pair negatively
/// with `ξ`. `ξ` must pair nonzero with every normal weight and make `μ` the
/// unique minimizer of `⟨·, ξ⟩` over the fixed-point weights.
pub fn vertex_multiplicity(data: &[FixedPointDatum], mu: &RationalVector, xi: &[i64]) -> Result<i64> {
    let hull = WeightPolytope::of_data(data)?;
    if mu.dim() != xi.len() {
        return Err(Error::DimensionMismatch { expected: mu.dim(), got: xi.len() });
    }
    if !hull.is_vertex(mu) {
        return Err(Error::Invalid(format!("{mu} is not a vertex of the weight polytope")));
    }
    let xi = RationalVector::from_ints(xi);
    let mut total = 0;
    for d in data {
        if d.normal_weights.iter().any(|w| w.dot(&xi).is_zero()) {
            return Err(Error::NonGenericDirection(format!("ξ is orthogonal to a normal weight at {}", d.sigma)));
        }
        if d.sigma != *mu {
            if !(mu - &d.sigma).dot(&xi).is_negative() {
                return Err(Error::NonGenericDirection(format!(
                    "ξ does not separate {mu} from the weight {}",
                    d.sigma
                )));
            }
        } else if d.normal_weights.iter().all(|w| w.dot(&xi).is_negative()) {
            total += d.rr;
        }
    }
    Ok(total)
}
