use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FaceLattice, LabelledPolyhedron};
use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntegerMatrix};

/// A connected component of a level set of the excess function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub excess: usize,
    /// Indices into the face lattice, ascending.
    pub faces: Vec<usize>,
    /// The face whose closure equals the closure of the piece, when there is one.
    pub closure_face: Option<usize>,
}

impl Piece {
    pub fn closure_is_face(&self) -> bool {
        self.closure_face.is_some()
    }
}

/// The excess decomposition together with the closure order on its pieces.
#[derive(Clone, Debug)]
pub struct ExcessDecomposition {
    pub pieces: Vec<Piece>,
    /// `below[a][b]`: piece `a` lies in the closure of piece `b`, `a ≠ b`.
    below: Vec<Vec<bool>>,
}

impl ExcessDecomposition {
    pub fn new(lattice: &FaceLattice) -> Self {
        let n = lattice.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let excess: Vec<usize> = (0..n).map(|i| lattice.excess(i)).collect();
        for a in 0..n {
            for b in 0..n {
                if a != b && excess[a] == excess[b] && lattice.le(a, b) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            match roots.iter().position(|&x| x == r) {
                Some(p) => members[p].push(i),
                None => {
                    roots.push(r);
                    members.push(vec![i]);
                }
            }
        }
        let pieces: Vec<Piece> = members
            .into_iter()
            .map(|faces| {
                let closure_face = faces
                    .iter()
                    .copied()
                    .find(|&top| faces.iter().all(|&f| lattice.le(f, top)));
                Piece { excess: excess[faces[0]], faces, closure_face }
            })
            .collect();
        let m = pieces.len();
        let mut below = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    below[a][b] = pieces[a]
                        .faces
                        .iter()
                        .any(|&f| pieces[b].faces.iter().any(|&g| lattice.le(f, g)));
                }
            }
        }
        ExcessDecomposition { pieces, below }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Piece `a` lies in the closure of piece `b` and differs from it.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    /// Longest strictly ascending chain starting at piece `a`, counted in steps.
    pub fn piece_depth(&self, a: usize) -> usize {
        let mut memo = vec![None; self.len()];
        self.depth_rec(a, &mut memo)
    }

    fn depth_rec(&self, a: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[a] {
            return d;
        }
        let d = (0..self.len())
            .filter(|&b| self.below[a][b])
            .map(|b| 1 + self.depth_rec(b, memo))
            .max()
            .unwrap_or(0);
        memo[a] = Some(d);
        d
    }

    pub fn depth(&self) -> usize {
        let mut memo = vec![None; self.len()];
        (0..self.len()).map(|a| self.depth_rec(a, &mut memo)).max().unwrap_or(0)
    }

    /// A piece is closed when nothing else lies in its closure.
    pub fn is_closed(&self, a: usize) -> bool {
        (0..self.len()).all(|b| !self.below[b][a])
    }

    pub fn is_constant(&self) -> bool {
        self.pieces.len() <= 1
    }
}

/// Excess vanishes on every face.
pub fn is_simple(p: &LabelledPolyhedron) -> Result<bool> {
    let l = FaceLattice::new(p)?;
    Ok((0..l.len()).all(|i| l.excess(i) == 0))
}

fn tight_matrix(lattice: &FaceLattice, face: usize) -> IntegerMatrix {
    let labels = lattice.polyhedron().labels();
    let rows: Vec<Vec<BigInt>> =
        lattice.faces()[face].tight.iter().map(|&i| labels[i].v.clone()).collect();
    IntegerMatrix::from_rows(&rows, lattice.ambient_dim())
}

/// Every tight set is a basis of the saturated lattice it spans.
pub fn is_simply_laced(p: &LabelledPolyhedron) -> Result<bool> {
    let l = FaceLattice::new(p)?;
    for i in 0..l.len() {
        let tight = l.faces()[i].tight.len();
        if tight == 0 {
            continue;
        }
        let s = smith_normal_form(&tight_matrix(&l, i));
        let divisors = s.elementary_divisors();
        if divisors.len() != tight || divisors.iter().any(|d| !d.is_one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order of the finite structure group at a face with independent tight labels.
pub fn structure_group_order(lattice: &FaceLattice, face: usize) -> Result<BigInt> {
    let f = lattice.faces().get(face).ok_or(Error::NotAFace)?;
    if f.tight.is_empty() {
        return Ok(BigInt::one());
    }
    let s = smith_normal_form(&tight_matrix(lattice, face));
    let divisors = s.elementary_divisors();
    if divisors.len() != f.tight.len() {
        return Err(Error::PositiveDimensionalKernel);
    }
    Ok(divisors.iter().product())
}

/// Drop every label whose hyperplane misses the polyhedron.
pub fn minimalize(p: &LabelledPolyhedron) -> Result<LabelledPolyhedron> {
    let g = p.generators()?;
    if g.points.is_empty() {
        return Ok(p.clone());
    }
    let kept = p
        .labels()
        .iter()
        .filter(|l| g.points.iter().any(|x| l.slack(x).is_zero()))
        .cloned()
        .collect();
    LabelledPolyhedron::new(p.dim(), kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{catalog, Label};

    #[test]
    fn pyramid_faces_and_apex() {
        let l = FaceLattice::new(&catalog::egyptian_pyramid()).unwrap();
        assert_eq!(l.len(), 19);
        let counts: Vec<usize> = (0..=3).map(|d| l.faces().iter().filter(|f| f.dim == d).count()).collect();
        assert_eq!(counts, vec![5, 8, 5, 1]);
        let apex = l.index_of_tight(&[0, 1, 2, 3]).unwrap();
        assert_eq!(l.faces()[apex].dim, 0);
        assert_eq!(l.excess(apex), 1);
        let (tight, _) = l.face_labels(apex).unwrap();
        assert_eq!(tight.len(), 4);
    }

    #[test]
    fn cube_is_one_piece() {
        let l = FaceLattice::new(&catalog::unit_cube()).unwrap();
        let d = ExcessDecomposition::new(&l);
        assert_eq!(d.len(), 1);
        assert_eq!(d.pieces[0].excess, 0);
        assert_eq!(d.depth(), 0);
        assert!(d.pieces[0].closure_is_face());
        for v in l.vertices() {
            assert_eq!(l.excess(v), 0);
        }
        assert_eq!(l.excess(l.top().unwrap()), 0);
    }

    #[test]
    fn pyramid_two_pieces() {
        let l = FaceLattice::new(&catalog::egyptian_pyramid()).unwrap();
        let d = ExcessDecomposition::new(&l);
        assert_eq!(d.len(), 2);
        let apex = d.pieces.iter().position(|p| p.excess == 1).unwrap();
        let rest = 1 - apex;
        assert_eq!(d.pieces[apex].faces.len(), 1);
        assert_eq!(d.pieces[rest].faces.len(), 18);
        assert!(d.precedes(apex, rest));
        assert!(!d.precedes(rest, apex));
        assert!(d.is_closed(apex));
        assert_eq!(d.depth(), 1);
        assert!(d.pieces.iter().all(Piece::closure_is_face));
    }

    #[test]
    fn doubled_interval_pieces() {
        let l = FaceLattice::new(&catalog::doubled_interval()).unwrap();
        let zero = l.index_of_tight(&[0, 1]).unwrap();
        assert_eq!(l.excess(zero), 1);
        assert_eq!(ExcessDecomposition::new(&l).len(), 2);
    }

    #[test]
    fn simplex_is_simple_and_simply_laced() {
        let p = catalog::standard_simplex(2);
        assert!(is_simple(&p).unwrap());
        assert!(is_simply_laced(&p).unwrap());
    }

    #[test]
    fn weighted_triangle_orders() {
        let p = catalog::weighted_triangle();
        assert!(is_simple(&p).unwrap());
        assert!(!is_simply_laced(&p).unwrap());
        let l = FaceLattice::new(&p).unwrap();
        let orders: Vec<(Vec<usize>, BigInt)> = l
            .vertices()
            .into_iter()
            .map(|v| (l.faces()[v].tight.clone(), structure_group_order(&l, v).unwrap()))
            .collect();
        // (0,1) is cut out by (1,0) and (−1,−2); the other two vertices are smooth
        assert!(orders.contains(&(vec![0, 2], BigInt::from(2))));
        assert!(orders.contains(&(vec![1, 2], BigInt::from(1))));
        assert!(orders.contains(&(vec![0, 1], BigInt::from(1))));
    }

    #[test]
    fn weighted_label_order() {
        let p = LabelledPolyhedron::new(1, vec![Label::int(&[3], 0), Label::int(&[-1], -1)]).unwrap();
        let l = FaceLattice::new(&p).unwrap();
        let v = l.index_of_tight(&[0]).unwrap();
        assert_eq!(structure_group_order(&l, v).unwrap(), BigInt::from(3));
    }

    #[test]
    fn apex_kernel_is_positive_dimensional() {
        let l = FaceLattice::new(&catalog::egyptian_pyramid()).unwrap();
        let apex = l.index_of_tight(&[0, 1, 2, 3]).unwrap();
        assert_eq!(structure_group_order(&l, apex), Err(Error::PositiveDimensionalKernel));
    }

    #[test]
    fn minimalize_drops_far_label() {
        let p = catalog::unit_square().with_label(Label::int(&[1, 0], -5)).unwrap();
        let m = minimalize(&p).unwrap();
        assert_eq!(m, catalog::unit_square());
    }
}
