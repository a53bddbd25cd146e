use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Label;
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, primitive, rank, solve, Rational, RationalVector};

/// Largest ambient dimension accepted by the enumeration routines.
pub const MAX_DIM: usize = 6;
/// Largest number of labels accepted by the enumeration routines.
pub const MAX_LABELS: usize = 64;

/// An ordered list of labels together with the polyhedron
/// `{μ : ⟨μ, v_i⟩ ≥ r_i for all i}` they cut out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelledPolyhedron {
    dim: usize,
    labels: Vec<Label>,
}

impl LabelledPolyhedron {
    pub fn new(dim: usize, labels: Vec<Label>) -> Result<Self> {
        for l in &labels {
            if l.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: l.dim() });
            }
        }
        Ok(LabelledPolyhedron { dim, labels })
    }

    /// Build from `(vector, r)` pairs with integer data. Panics on malformed input;
    /// meant for fixtures and examples.
    pub fn from_ints(dim: usize, labels: &[(&[i64], i64)]) -> Self {
        let labels = labels.iter().map(|(v, r)| Label::int(v, *r)).collect();
        Self::new(dim, labels).expect("consistent label dimensions")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty_list(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.labels.iter().all(|l| l.contains(x))
    }

    /// Append a label, returning the enlarged polyhedron.
    pub fn with_label(&self, label: Label) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.push(label);
        Self::new(self.dim, labels)
    }

    /// Labels `(v_i, t r_i)`; the polyhedron is `tP` for `t > 0`.
    pub fn dilate(&self, t: &Rational) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|l| Label { v: l.v.clone(), r: &l.r * t })
            .collect();
        LabelledPolyhedron { dim: self.dim, labels }
    }

    /// Labels `(v_i, r_i + η_i)`.
    pub fn shifted(&self, eta: &[Rational]) -> Result<Self> {
        if eta.len() != self.labels.len() {
            return Err(Error::DimensionMismatch { expected: self.labels.len(), got: eta.len() });
        }
        let labels = self
            .labels
            .iter()
            .zip(eta)
            .map(|(l, e)| Label { v: l.v.clone(), r: &l.r + e })
            .collect();
        Ok(LabelledPolyhedron { dim: self.dim, labels })
    }

    /// Intersection, with the labels of `self` first.
    pub fn intersect(&self, other: &LabelledPolyhedron) -> Result<Self> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Self::new(self.dim, labels)
    }

    pub(crate) fn check_enumerable(&self) -> Result<()> {
        if self.dim > MAX_DIM {
            return Err(Error::TooLarge(format!("dimension {} exceeds {MAX_DIM}", self.dim)));
        }
        if self.labels.len() > MAX_LABELS {
            return Err(Error::TooLarge(format!(
                "{} labels exceed {MAX_LABELS}",
                self.labels.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn label_rows(&self) -> Vec<Vec<Rational>> {
        self.labels.iter().map(|l| l.vector().0).collect()
    }

    /// Minkowski–Weyl generators: `P = conv(points) + cone(rays) + span(lineality)`.
    pub fn generators(&self) -> Result<Generators> {
        self.check_enumerable()?;
        let k = self.dim;
        let rows = self.label_rows();
        let r = rank(&rows, k);
        let lineality = kernel_basis(&rows, k);
        let lin_rows: Vec<Vec<Rational>> = lineality.iter().map(|v| v.0.clone()).collect();

        let mut points = BTreeSet::new();
        for subset in (0..self.labels.len()).combinations(r) {
            let mut a: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
            if rank(&a, k) != r {
                continue;
            }
            let mut b: Vec<Rational> = subset.iter().map(|&i| self.labels[i].r.clone()).collect();
            a.extend(lin_rows.iter().cloned());
            b.extend(std::iter::repeat_n(Rational::zero(), lin_rows.len()));
            let Some(x) = solve(&a, &b) else { continue };
            if self.contains(&x) {
                points.insert(x);
            }
        }

        let mut rays = BTreeSet::new();
        if r >= 1 {
            for subset in (0..self.labels.len()).combinations(r - 1) {
                let mut a: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
                if rank(&a, k) != r - 1 {
                    continue;
                }
                a.extend(lin_rows.iter().cloned());
                let kern = kernel_basis(&a, k);
                if kern.len() != 1 {
                    continue;
                }
                let d = &kern[0];
                for cand in [d.clone(), -d] {
                    if self.labels.iter().all(|l| !l.pairing(&cand).is_negative()) {
                        let ints = cand.primitive_integer()?;
                        rays.insert(RationalVector::from_bigints(&ints));
                    }
                }
            }
        }

        Ok(Generators {
            dim: k,
            points: points.into_iter().collect(),
            rays: rays.into_iter().collect(),
            lineality,
        })
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.generators()?.points.is_empty())
    }

    pub fn is_bounded(&self) -> Result<bool> {
        Ok(self.generators()?.is_bounded())
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &LabelledPolyhedron) -> Result<bool> {
        Ok(self.generators()?.inside(other))
    }

    /// Equality of the underlying point sets (labels may differ).
    pub fn same_set(&self, other: &LabelledPolyhedron) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// H-representation of the convex hull of finitely many points: primitive
    /// facet labels inside the affine hull plus a pair of opposite labels per
    /// affine equation.
    pub fn convex_hull(points: &[RationalVector]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Invalid("convex hull of no points".into()));
        };
        let k = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != k) {
            return Err(Error::DimensionMismatch { expected: k, got: p.dim() });
        }
        let pts: Vec<RationalVector> =
            points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let p0 = &pts[0];
        let diffs: Vec<Vec<Rational>> = pts.iter().skip(1).map(|p| (p - p0).0).collect();
        let d = rank(&diffs, k);
        let normals = kernel_basis(&diffs, k);
        let normal_rows: Vec<Vec<Rational>> = normals.iter().map(|n| n.0.clone()).collect();

        let mut labels: Vec<Label> = Vec::new();
        for n in &normals {
            let v = n.primitive_integer()?;
            let r = p0.dot_int(&v);
            labels.push(Label::new(v.clone(), r.clone())?);
            labels.push(Label::new(v.iter().map(|a| -a).collect(), -r)?);
        }
        if d > 0 {
            let mut facets: BTreeSet<Label> = BTreeSet::new();
            for subset in (0..pts.len()).combinations(d) {
                let base = &pts[subset[0]];
                let mut a: Vec<Vec<Rational>> =
                    subset[1..].iter().map(|&i| (&pts[i] - base).0).collect();
                if rank(&a, k) != d - 1 {
                    continue;
                }
                a.extend(normal_rows.iter().cloned());
                let kern = kernel_basis(&a, k);
                if kern.len() != 1 {
                    continue;
                }
                let v = primitive(&kern[0].to_integers().expect("kernel vectors are integral"))?;
                let r = base.dot_int(&v);
                let sides: Vec<Rational> = pts.iter().map(|p| p.dot_int(&v) - &r).collect();
                if sides.iter().all(|s| !s.is_negative()) {
                    facets.insert(Label::new(v, r)?);
                } else if sides.iter().all(|s| !s.is_positive()) {
                    facets.insert(Label::new(v.iter().map(|a| -a).collect(), -r)?);
                }
            }
            labels.extend(facets);
        }
        Self::new(k, labels)
    }
}

/// Minkowski–Weyl data of a polyhedron. `points` holds one point of each
/// minimal face, chosen orthogonal to the lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub dim: usize,
    pub points: Vec<RationalVector>,
    pub rays: Vec<RationalVector>,
    pub lineality: Vec<RationalVector>,
}

impl Generators {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn inside(&self, other: &LabelledPolyhedron) -> bool {
        self.points.iter().all(|p| other.contains(p))
            && self
                .rays
                .iter()
                .all(|d| other.labels().iter().all(|l| !l.pairing(d).is_negative()))
            && self
                .lineality
                .iter()
                .all(|d| other.labels().iter().all(|l| l.pairing(d).is_zero()))
    }

    /// Coordinatewise bounds of a bounded polyhedron.
    pub fn bounding_box(&self) -> Option<(Vec<Rational>, Vec<Rational>)> {
        if !self.is_bounded() || self.points.is_empty() {
            return None;
        }
        let mut lo = self.points[0].0.clone();
        let mut hi = self.points[0].0.clone();
        for p in &self.points[1..] {
            for (i, a) in p.0.iter().enumerate() {
                if *a < lo[i] {
                    lo[i] = a.clone();
                }
                if *a > hi[i] {
                    hi[i] = a.clone();
                }
            }
        }
        Some((lo, hi))
    }

    /// Least common multiple of all vertex-coordinate denominators.
    pub fn vertex_denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.points
            .iter()
            .fold(BigInt::from(1), |acc, p| acc.lcm(&p.denominator_lcm()))
    }
}
