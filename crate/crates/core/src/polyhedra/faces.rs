use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;

use super::{Generators, Label, LabelledPolyhedron};
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, q, rank, Rational, RationalVector};

/// A nonempty open face, identified by the set of labels tight on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Sorted indices of the tight labels (`S_F`).
    pub tight: Vec<usize>,
    pub dim: usize,
    /// Basis of the direction space of the affine hull.
    pub affine_basis: Vec<RationalVector>,
    /// A point of the relative interior.
    pub sample: RationalVector,
    pub is_bounded: bool,
}

impl Face {
    pub fn codim(&self, ambient: usize) -> usize {
        ambient - self.dim
    }

    /// `self ⪯ other`: `self` lies in the closure of `other`.
    pub fn is_face_of(&self, other: &Face) -> bool {
        other.tight.iter().all(|i| self.tight.binary_search(i).is_ok())
    }
}

type Mask = u64;

fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

fn indices_of(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize).filter(|&i| mask & (1 << i) != 0).collect()
}

/// All nonempty open faces of a labelled polyhedron, with the data needed
/// to navigate the face poset.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    polyhedron: LabelledPolyhedron,
    generators: Generators,
    faces: Vec<Face>,
}

impl FaceLattice {
    pub fn new(p: &LabelledPolyhedron) -> Result<Self> {
        let generators = p.generators()?;
        let k = p.dim();
        let n = p.len();
        let all: Mask = if n == 64 { Mask::MAX } else { (1 << n) - 1 };

        let point_masks: Vec<Mask> = generators
            .points
            .iter()
            .map(|x| {
                let tight: Vec<usize> =
                    (0..n).filter(|&i| p.labels()[i].slack(x).is_zero()).collect();
                mask_of(&tight)
            })
            .collect();
        let ray_masks: Vec<Mask> = generators
            .rays
            .iter()
            .map(|d| {
                let tight: Vec<usize> =
                    (0..n).filter(|&i| p.labels()[i].pairing(d).is_zero()).collect();
                mask_of(&tight)
            })
            .collect();

        // closure of a candidate tight set: labels tight on every generator of the face
        let closure = |t: Mask| -> Option<(Mask, Vec<usize>, Vec<usize>)> {
            let pts: Vec<usize> =
                (0..point_masks.len()).filter(|&i| point_masks[i] & t == t).collect();
            if pts.is_empty() {
                return None;
            }
            let rays: Vec<usize> = (0..ray_masks.len()).filter(|&i| ray_masks[i] & t == t).collect();
            let mut c = all;
            for &i in &pts {
                c &= point_masks[i];
            }
            for &i in &rays {
                c &= ray_masks[i];
            }
            Some((c, pts, rays))
        };

        let mut found: BTreeMap<Mask, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        let mut queue = VecDeque::new();
        if let Some((c, pts, rays)) = closure(0) {
            found.insert(c, (pts, rays));
            queue.push_back(c);
        }
        while let Some(t) = queue.pop_front() {
            for i in 0..n {
                if t & (1 << i) != 0 {
                    continue;
                }
                if let Some((c, pts, rays)) = closure(t | (1 << i)) {
                    if let std::collections::btree_map::Entry::Vacant(e) = found.entry(c) {
                        e.insert((pts, rays));
                        queue.push_back(c);
                    }
                }
            }
        }

        let rows = p.label_rows();
        let mut faces: Vec<Face> = found
            .into_iter()
            .map(|(mask, (pts, rays))| {
                let tight = indices_of(mask);
                let trows: Vec<Vec<Rational>> = tight.iter().map(|&i| rows[i].clone()).collect();
                let dim = k - rank(&trows, k);
                let affine_basis = kernel_basis(&trows, k);
                let mut sample = RationalVector::zeros(k);
                for &i in &pts {
                    sample = &sample + &generators.points[i];
                }
                sample = sample.scale(&(q(1) / q(pts.len() as i64)));
                for &i in &rays {
                    sample = &sample + &generators.rays[i];
                }
                let is_bounded = rays.is_empty() && generators.lineality.is_empty();
                Face { tight, dim, affine_basis, sample, is_bounded }
            })
            .collect();
        faces.sort_by(|a, b| a.tight.cmp(&b.tight).then_with(|| a.sample.cmp(&b.sample)));

        Ok(FaceLattice { polyhedron: p.clone(), generators, faces })
    }

    pub fn polyhedron(&self) -> &LabelledPolyhedron {
        &self.polyhedron
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.polyhedron.dim()
    }

    /// The face of largest dimension (the relative interior of `P`).
    pub fn top(&self) -> Option<usize> {
        (0..self.faces.len()).min_by_key(|&i| self.faces[i].tight.len())
    }

    pub fn index_of_tight(&self, tight: &[usize]) -> Option<usize> {
        self.faces.binary_search_by(|f| f.tight.as_slice().cmp(tight)).ok()
    }

    /// Index of the face whose relative interior contains `x`, if `x ∈ P`.
    pub fn face_containing(&self, x: &RationalVector) -> Option<usize> {
        if !self.polyhedron.contains(x) {
            return None;
        }
        let tight: Vec<usize> = (0..self.polyhedron.len())
            .filter(|&i| self.polyhedron.labels()[i].slack(x).is_zero())
            .collect();
        self.index_of_tight(&tight)
    }

    /// `faces[a] ⪯ faces[b]`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.faces[a].is_face_of(&self.faces[b])
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| self.faces[i].dim == 0).collect()
    }

    pub fn edges_at(&self, vertex: usize) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].dim == 1 && self.le(vertex, i))
            .collect()
    }

    pub fn facets(&self) -> Vec<usize> {
        let Some(top) = self.top() else { return Vec::new() };
        let d = self.faces[top].dim;
        (0..self.faces.len()).filter(|&i| self.faces[i].dim + 1 == d).collect()
    }

    /// Excess `|S_F| − codim F`, codimension taken in the ambient space.
    pub fn excess(&self, face: usize) -> usize {
        let f = &self.faces[face];
        f.tight.len() - f.codim(self.ambient_dim())
    }

    /// Smallest face having both in its closure.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let common: Vec<usize> = self.faces[a]
            .tight
            .iter()
            .copied()
            .filter(|i| self.faces[b].tight.binary_search(i).is_ok())
            .collect();
        (0..self.faces.len())
            .filter(|&i| self.le(a, i) && self.le(b, i))
            .filter(|&i| self.faces[i].tight.iter().all(|t| common.contains(t)))
            .max_by_key(|&i| self.faces[i].tight.len())
            .expect("the top face lies above every face")
    }

    /// Open face whose closure is `closure(a) ∩ closure(b)`, if nonempty.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.faces.len())
            .filter(|&i| self.le(i, a) && self.le(i, b))
            .min_by_key(|&i| self.faces[i].tight.len())
    }

    /// The label sets `S_F` and `S|_F`.
    pub fn face_labels(&self, face: usize) -> Result<(Vec<Label>, Vec<Label>)> {
        let f = self.faces.get(face).ok_or(Error::NotAFace)?;
        let labels = self.polyhedron.labels();
        let tight: Vec<Label> = f.tight.iter().map(|&i| labels[i].clone()).collect();
        let mut restricted = labels.to_vec();
        restricted.extend(tight.iter().map(Label::negated));
        Ok((tight, restricted))
    }

    /// The closed face `F̄` as a labelled polyhedron with labels `S|_F`.
    pub fn closed_face(&self, face: usize) -> Result<LabelledPolyhedron> {
        let (_, restricted) = self.face_labels(face)?;
        LabelledPolyhedron::new(self.ambient_dim(), restricted)
    }

    /// Combinatorial type: sorted `(tight set, dim)` pairs.
    pub fn combinatorial_type(&self) -> Vec<(Vec<usize>, usize)> {
        self.faces.iter().map(|f| (f.tight.clone(), f.dim)).collect()
    }
}

/// All nonempty open faces, sorted by tight set.
pub fn face_lattice(p: &LabelledPolyhedron) -> Result<Vec<Face>> {
    Ok(FaceLattice::new(p)?.faces)
}
