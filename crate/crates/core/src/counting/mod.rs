//! Lattice points of dilated polytopes, Ehrhart quasi-polynomials, toric
//! Riemann–Roch characters and vertex localization.

mod brion;
mod ehrhart;
mod enumerate;
mod laurent;

pub use brion::{brion_evaluate, localized_vertex_multiplicity, monomial, vertex_cones, VertexCone};
pub use ehrhart::{
    ehrhart_fit, fit_quasi_polynomial, reciprocity_check, required_samples, QuasiPolynomial,
    ReciprocityReport, ReciprocityRow,
};
pub use enumerate::{
    count_points, lattice_points, polytope_dim, vertex_denominator_lcm, Region, MAX_BOX,
};
pub use laurent::LaurentCharacter;
pub(crate) use enumerate::sign_pow;

use crate::error::Result;
use crate::polyhedra::LabelledPolyhedron;

/// The toric Riemann–Roch character of the `m`-th power of the line bundle:
/// `Σ_{μ ∈ Λ ∩ mP} z^μ` for `m ≥ 0`, and `(−1)^{dim P} Σ_{μ ∈ Λ ∩ int |m|P} z^{−μ}`
/// for `m < 0`.
pub fn toric_rr(p: &LabelledPolyhedron, m: i64) -> Result<LaurentCharacter> {
    if m >= 0 {
        return Ok(lattice_points(p, m, Region::Closed)?.into_iter().map(|x| (x, 1)).collect());
    }
    let points = lattice_points(p, -m, Region::Interior)?;
    if points.is_empty() {
        return Ok(LaurentCharacter::new());
    }
    let sign = sign_pow(polytope_dim(p)?);
    Ok(points
        .into_iter()
        .map(|x| (x.into_iter().map(|c| -c).collect(), sign))
        .collect())
}
