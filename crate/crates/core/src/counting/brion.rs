use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::enumerate::polytope_dim;
use crate::error::{Error, Result};
use crate::lattice::{q, IntegerMatrix, Rational, RationalVector};
use crate::polyhedra::{FaceLattice, LabelledPolyhedron};

/// A vertex together with the primitive directions of the edges leaving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    pub vertex: RationalVector,
    pub edges: Vec<Vec<BigInt>>,
}

/// Vertex cones of a bounded polyhedron, vertices in lexicographic order.
pub fn vertex_cones(p: &LabelledPolyhedron) -> Result<Vec<VertexCone>> {
    let l = FaceLattice::new(p)?;
    if l.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !l.generators().is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut out: Vec<VertexCone> = l
        .vertices()
        .into_iter()
        .map(|v| {
            let vertex = l.faces()[v].sample.clone();
            let edges = l
                .edges_at(v)
                .into_iter()
                .map(|e| {
                    // the edge sample lies strictly inside the edge
                    let d = &l.faces()[e].sample - &vertex;
                    d.primitive_integer()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(VertexCone { vertex, edges })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.vertex.cmp(&b.vertex));
    Ok(out)
}

/// `z^e` for rational `z` and integer `e`.
pub fn monomial(z: &[Rational], e: &[BigInt]) -> Result<Rational> {
    let mut acc = Rational::one();
    for (zi, ei) in z.iter().zip(e) {
        let n = ei.to_i32().ok_or_else(|| Error::TooLarge(format!("exponent {ei}")))?;
        acc *= zi.pow(n);
    }
    Ok(acc)
}

/// Sum over vertices of `z^v / Π_edges (1 − z^e)`.
///
/// Requires a full-dimensional simple polytope with integral vertices and
/// unimodular vertex cones; for such polytopes the value is `Σ_{μ ∈ Λ ∩ P} z^μ`.
pub fn brion_evaluate(p: &LabelledPolyhedron, z: &[Rational]) -> Result<Rational> {
    if z.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: z.len() });
    }
    if z.iter().any(Zero::is_zero) {
        return Err(Error::Invalid("evaluation point has a zero coordinate".into()));
    }
    if polytope_dim(p)? != p.dim() {
        return Err(Error::Invalid("polytope is not full-dimensional".into()));
    }
    let cones = vertex_cones(p)?;
    let mut total = Rational::zero();
    for c in &cones {
        if c.edges.len() != p.dim() {
            return Err(Error::NotSimple);
        }
        let Some(v) = c.vertex.to_integers() else {
            return Err(Error::OrbifoldVertex(c.vertex.to_string()));
        };
        let m = IntegerMatrix::from_rows(&c.edges, p.dim());
        if !m.determinant().abs().is_one() {
            return Err(Error::OrbifoldVertex(c.vertex.to_string()));
        }
        let mut denom = Rational::one();
        for e in &c.edges {
            let ze = monomial(z, e)?;
            if ze.is_one() {
                return Err(Error::NonGenericPoint);
            }
            denom *= q(1) - ze;
        }
        total += monomial(z, &v)? / denom;
    }
    Ok(total)
}

/// The vertex minimizing `⟨·, ξ⟩` on `mP`, and the number of vertices whose
/// isotropy weights (the negated edge directions) all pair negatively with ξ.
pub fn localized_vertex_multiplicity(
    p: &LabelledPolyhedron,
    m: i64,
    xi: &[i64],
) -> Result<(RationalVector, usize)> {
    if m < 1 {
        return Err(Error::Invalid(format!("bundle power {m} must be positive")));
    }
    if xi.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: xi.len() });
    }
    let xi_big: Vec<BigInt> = xi.iter().map(|&x| BigInt::from(x)).collect();
    let cones = vertex_cones(&p.dilate(&q(m)))?;
    for c in &cones {
        for e in &c.edges {
            if e.iter().zip(&xi_big).map(|(a, b)| a * b).sum::<BigInt>().is_zero() {
                return Err(Error::NonGenericDirection(format!(
                    "ξ is orthogonal to the edge direction at {}",
                    c.vertex
                )));
            }
        }
    }
    let xi_vec = RationalVector::from_bigints(&xi_big);
    let argmin = cones
        .iter()
        .min_by(|a, b| a.vertex.dot(&xi_vec).cmp(&b.vertex.dot(&xi_vec)))
        .expect("nonempty polytope has a vertex")
        .vertex
        .clone();
    let contributing: Vec<&VertexCone> = cones
        .iter()
        .filter(|c| {
            c.edges.iter().all(|e| {
                let w: BigInt = e.iter().zip(&xi_big).map(|(a, b)| -(a * b)).sum();
                w.is_negative()
            })
        })
        .collect();
    if let [only] = contributing.as_slice() {
        debug_assert_eq!(only.vertex, argmin);
    }
    Ok((argmin, contributing.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate::{lattice_points, Region};
    use crate::lattice::frac;
    use crate::polyhedra::catalog;

    fn oracle(p: &LabelledPolyhedron, z: &[Rational]) -> Rational {
        lattice_points(p, 1, Region::Closed)
            .unwrap()
            .iter()
            .map(|x| {
                let e: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
                monomial(z, &e).unwrap()
            })
            .sum()
    }

    #[test]
    fn unit_interval() {
        let p = catalog::interval(q(0), q(1));
        assert_eq!(brion_evaluate(&p, &[q(3)]).unwrap(), q(4));
    }

    #[test]
    fn unit_square() {
        assert_eq!(brion_evaluate(&catalog::unit_square(), &[q(2), q(3)]).unwrap(), q(12));
    }

    #[test]
    fn triangle_two() {
        let p = catalog::triangle(2);
        let z = [q(2), q(5)];
        assert_eq!(brion_evaluate(&p, &z).unwrap(), oracle(&p, &z));
        let z = [frac(1, 3), frac(-7, 2)];
        assert_eq!(brion_evaluate(&p, &z).unwrap(), oracle(&p, &z));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(brion_evaluate(&catalog::unit_square(), &[q(1), q(3)]), Err(Error::NonGenericPoint));
        assert_eq!(brion_evaluate(&catalog::egyptian_pyramid(), &[q(2), q(3), q(5)]), Err(Error::NotSimple));
        assert!(matches!(
            brion_evaluate(&catalog::weighted_triangle(), &[q(2), q(3)]),
            Err(Error::OrbifoldVertex(_))
        ));
    }

    #[test]
    fn minimizing_vertex() {
        let (v, n) = localized_vertex_multiplicity(&catalog::unit_square(), 1, &[1, 2]).unwrap();
        assert_eq!((v, n), (RationalVector::from_ints(&[0, 0]), 1));
        let (v, n) = localized_vertex_multiplicity(&catalog::egyptian_pyramid(), 1, &[1, 1, 3]).unwrap();
        assert_eq!((v, n), (RationalVector::from_ints(&[0, 0, 0]), 1));
        let seg = catalog::interval(q(0), q(2));
        let (v, n) = localized_vertex_multiplicity(&seg, 1, &[-1]).unwrap();
        assert_eq!((v, n), (RationalVector::from_ints(&[2]), 1));
    }

    #[test]
    fn orthogonal_direction_rejected() {
        assert!(matches!(
            localized_vertex_multiplicity(&catalog::unit_square(), 1, &[1, 0]),
            Err(Error::NonGenericDirection(_))
        ));
    }
}
