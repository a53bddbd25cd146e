//! Polyhedral subdivisions of weight space: validity, transversality to a
//! polytope, the pointwise Euler identity and the lattice-count form of the
//! gluing formula.

mod dual;

pub use dual::{cone_cell, dual_subdivision, wall_sums, DualCell, DualSubdivision};

use std::collections::BTreeSet;

use rand::Rng;

use crate::counting::{lattice_points, sign_pow, LaurentCharacter, Region};
use crate::error::{Error, Result};
use crate::lattice::{frac, q, rank_of, Rational, RationalVector};
use crate::polyhedra::{FaceLattice, Label, LabelledPolyhedron};
use crate::random;

/// Point set identity of a polyhedron: vertices, extreme rays and lineality.
type Key = (Vec<RationalVector>, Vec<RationalVector>, Vec<RationalVector>);

fn key(p: &LabelledPolyhedron) -> Result<Key> {
    let g = p.generators()?;
    Ok((g.points, g.rays, g.lineality))
}

/// A finite list of closed polyhedra in a space of dimension `dim`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    dim: usize,
    cells: Vec<LabelledPolyhedron>,
    lattices: Vec<FaceLattice>,
}

impl Subdivision {
    /// Empty cells are rejected.
    pub fn new(dim: usize, cells: Vec<LabelledPolyhedron>) -> Result<Self> {
        let mut lattices = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: c.dim() });
            }
            let l = FaceLattice::new(c)?;
            if l.is_empty() {
                return Err(Error::EmptyPolyhedron);
            }
            lattices.push(l);
        }
        Ok(Subdivision { dim, cells, lattices })
    }

    /// All nonempty cells `{s_i (⟨x, v_i⟩ − c_i) ≥ 0}` over sign vectors
    /// `s ∈ {−1, 0, 1}^n`, with duplicates removed.
    pub fn from_hyperplanes(dim: usize, planes: &[(Vec<i64>, Rational)]) -> Result<Self> {
        let mut cells = Vec::new();
        let mut seen = BTreeSet::new();
        let n = planes.len();
        for code in 0..3usize.pow(n as u32) {
            let mut labels = Vec::new();
            let mut c = code;
            for (v, level) in planes {
                let s = c % 3;
                c /= 3;
                let up = Label::weighted(v.iter().map(|&x| x.into()).collect(), level.clone())?;
                if s != 1 {
                    labels.push(up.clone());
                }
                if s != 2 {
                    labels.push(up.negated());
                }
            }
            let cell = LabelledPolyhedron::new(dim, labels)?;
            if cell.is_empty()? {
                continue;
            }
            if seen.insert(key(&cell)?) {
                cells.push(cell);
            }
        }
        Self::new(dim, cells)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[LabelledPolyhedron] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_dim(&self, i: usize) -> usize {
        let l = &self.lattices[i];
        l.faces()[l.top().expect("cells are nonempty")].dim
    }

    pub fn codim(&self, i: usize) -> usize {
        self.dim - self.cell_dim(i)
    }

    /// `Σ (−1)^{codim P}` over the cells containing `x`.
    pub fn euler_sum(&self, x: &RationalVector) -> i64 {
        (0..self.cells.len())
            .filter(|&i| self.cells[i].contains(x))
            .map(|i| sign_pow(self.codim(i)))
            .sum()
    }

    /// Relative-interior points of every face of every cell.
    pub fn face_samples(&self) -> Vec<RationalVector> {
        let set: BTreeSet<RationalVector> =
            self.lattices.iter().flat_map(|l| l.faces().iter().map(|f| f.sample.clone())).collect();
        set.into_iter().collect()
    }

    /// Bounding box of all cell vertices, widened by one on each side.
    fn box_of_interest(&self) -> (Vec<Rational>, Vec<Rational>) {
        let mut lo = vec![q(-1); self.dim];
        let mut hi = vec![q(1); self.dim];
        for l in &self.lattices {
            for p in &l.generators().points {
                for (i, x) in p.0.iter().enumerate() {
                    lo[i] = lo[i].clone().min(x - q(1));
                    hi[i] = hi[i].clone().max(x + q(1));
                }
            }
        }
        (lo, hi)
    }
}

/// The part of space a subdivision is expected to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    AllSpace,
    /// Points with nonnegative coordinates (the closed dominant chamber in
    /// fundamental-weight coordinates).
    DominantChamber,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(cell, tight labels of the face)` for closed faces missing from the list.
    pub missing_faces: Vec<(usize, Vec<usize>)>,
    /// Pairs of cells meeting in something other than a common face.
    pub bad_intersections: Vec<(usize, usize)>,
    pub uncovered: Vec<RationalVector>,
    pub points_tested: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.missing_faces.is_empty() && self.bad_intersections.is_empty() && self.uncovered.is_empty()
    }
}

/// Grid points of pitch one seventh of the box.
fn grid(lo: &[Rational], hi: &[Rational]) -> Vec<RationalVector> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        let step = (b - a) * frac(1, 7);
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                (0..=7).map({
                    let step = step.clone();
                    move |i| {
                        let mut p = p.clone();
                        p.push(a + &step * q(i));
                        p
                    }
                })
            })
            .collect();
    }
    out.into_iter().map(RationalVector).collect()
}

pub fn validate(s: &Subdivision, region: Coverage) -> Result<ValidationReport> {
    let mut report = ValidationReport::default();
    let cell_keys: Vec<Key> = s.cells.iter().map(key).collect::<Result<_>>()?;
    let known: BTreeSet<&Key> = cell_keys.iter().collect();
    let mut face_keys: Vec<BTreeSet<Key>> = Vec::with_capacity(s.len());
    for (i, l) in s.lattices.iter().enumerate() {
        let mut keys = BTreeSet::new();
        for (f, face) in l.faces().iter().enumerate() {
            let k = key(&l.closed_face(f)?)?;
            if !known.contains(&k) {
                report.missing_faces.push((i, face.tight.clone()));
            }
            keys.insert(k);
        }
        face_keys.push(keys);
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let meet = s.cells[i].intersect(&s.cells[j])?;
            if meet.is_empty()? {
                continue;
            }
            let k = key(&meet)?;
            if !face_keys[i].contains(&k) || !face_keys[j].contains(&k) {
                report.bad_intersections.push((i, j));
            }
        }
    }
    let (mut lo, hi) = s.box_of_interest();
    if region == Coverage::DominantChamber {
        lo = vec![q(0); s.dim];
    }
    let mut points = grid(&lo, &hi);
    points.extend(s.face_samples());
    for p in points {
        if region == Coverage::DominantChamber && p.0.iter().any(|x| *x < q(0)) {
            continue;
        }
        report.points_tested += 1;
        if !s.cells.iter().any(|c| c.contains(&p)) {
            report.uncovered.push(p);
        }
    }
    Ok(report)
}

/// Every open face of every cell meets every open face of `delta`
/// transversely: where they meet, their tangent spaces span the space.
///
/// The open faces of `C ∩ Δ` partition it, and each lies in exactly one open
/// face of `C` and one of `Δ`, read off from its tight labels.
pub fn is_admissible(s: &Subdivision, delta: &LabelledPolyhedron) -> Result<bool> {
    if delta.dim() != s.dim {
        return Err(Error::DimensionMismatch { expected: s.dim, got: delta.dim() });
    }
    let dl = FaceLattice::new(delta)?;
    if !dl.generators().is_bounded() {
        return Err(Error::Unbounded);
    }
    for (cell, cl) in s.cells.iter().zip(&s.lattices) {
        let n = cell.len();
        let mut labels = cell.labels().to_vec();
        labels.extend(delta.labels().iter().cloned());
        let meet = FaceLattice::new(&LabelledPolyhedron::new(s.dim, labels)?)?;
        for face in meet.faces() {
            let (tc, td): (Vec<usize>, Vec<usize>) = face.tight.iter().partition(|&&i| i < n);
            let td: Vec<usize> = td.into_iter().map(|i| i - n).collect();
            let f = cl.index_of_tight(&tc).ok_or(Error::NotAFace)?;
            let g = dl.index_of_tight(&td).ok_or(Error::NotAFace)?;
            let mut span = cl.faces()[f].affine_basis.clone();
            span.extend(dl.faces()[g].affine_basis.iter().cloned());
            if rank_of(&span, s.dim) < s.dim {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EulerReport {
    pub points: usize,
    /// Points where the alternating sum differs from one, with the sum.
    pub failures: Vec<(RationalVector, i64)>,
}

impl EulerReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate the alternating sum over cells at `samples` seeded rational
/// points, after every face sample of every cell (so cell boundaries are
/// always exercised).
pub fn euler_check(s: &Subdivision, samples: usize, seed: u64) -> EulerReport {
    let mut points = s.face_samples();
    let (lo, hi) = s.box_of_interest();
    let mut rng = random::rng(seed);
    for _ in 0..samples {
        let p = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| {
                // a denominator of 7 lands on boundaries from time to time
                let t = frac(rng.gen_range(0..=7 * 8), 7 * 8);
                a + (b - a) * t
            })
            .collect();
        points.push(RationalVector(p));
    }
    let mut report = EulerReport { points: points.len(), failures: Vec::new() };
    for p in points {
        let sum = s.euler_sum(&p);
        if sum != 1 {
            report.failures.push((p, sum));
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueReport {
    pub total: i64,
    /// `Σ (−1)^{codim P} #(Λ ∩ Δ ∩ P)`.
    pub alternating: i64,
    /// One entry per cell: `(codim, #(Λ ∩ Δ ∩ P))`.
    pub per_cell: Vec<(usize, i64)>,
    pub characters_agree: bool,
}

impl GlueReport {
    pub fn holds(&self) -> bool {
        self.total == self.alternating && self.characters_agree
    }
}

/// Lattice points of `delta` against the alternating sum of lattice points
/// of `delta ∩ P`, as counts and as Laurent sums.
pub fn glue_count_check(delta: &LabelledPolyhedron, s: &Subdivision) -> Result<GlueReport> {
    if delta.dim() != s.dim {
        return Err(Error::DimensionMismatch { expected: s.dim, got: delta.dim() });
    }
    let whole: LaurentCharacter =
        lattice_points(delta, 1, Region::Closed)?.into_iter().map(|x| (x, 1)).collect();
    let mut glued = LaurentCharacter::new();
    let mut per_cell = Vec::with_capacity(s.len());
    for (i, cell) in s.cells.iter().enumerate() {
        let sign = sign_pow(s.codim(i));
        let pts = lattice_points(&delta.intersect(cell)?, 1, Region::Closed)?;
        per_cell.push((s.codim(i), pts.len() as i64));
        for x in pts {
            glued.add_term(x, sign);
        }
    }
    let alternating = per_cell.iter().map(|&(c, n)| sign_pow(c) * n).sum();
    Ok(GlueReport { total: whole.total(), alternating, per_cell, characters_agree: whole == glued })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::catalog;

    fn line_split(at: Rational) -> Subdivision {
        Subdivision::from_hyperplanes(1, &[(vec![1], at)]).unwrap()
    }

    #[test]
    fn line_three_cells() {
        let s = line_split(q(0));
        assert_eq!(s.len(), 3);
        assert!(validate(&s, Coverage::AllSpace).unwrap().is_valid());
        assert_eq!(s.euler_sum(&RationalVector::from_ints(&[0])), 1);
        assert_eq!(s.euler_sum(&RationalVector::from_ints(&[5])), 1);
        assert!(euler_check(&s, 50, 0).holds());
    }

    #[test]
    fn gap_is_uncovered() {
        let cells = vec![
            LabelledPolyhedron::from_ints(1, &[(&[-1], 0)]),
            LabelledPolyhedron::from_ints(1, &[(&[1], 1)]),
        ];
        let s = Subdivision::new(1, cells).unwrap();
        let r = validate(&s, Coverage::AllSpace).unwrap();
        assert!(!r.uncovered.is_empty());
        assert!(!r.missing_faces.is_empty());
    }

    #[test]
    fn overlapping_cells_rejected() {
        let cells = vec![
            LabelledPolyhedron::from_ints(1, &[(&[-1], -2)]),
            LabelledPolyhedron::from_ints(1, &[(&[1], 0)]),
        ];
        let s = Subdivision::new(1, cells).unwrap();
        assert_eq!(validate(&s, Coverage::AllSpace).unwrap().bad_intersections, vec![(0, 1)]);
    }

    #[test]
    fn admissibility_on_segment() {
        let seg = catalog::interval(q(0), q(2));
        assert!(is_admissible(&line_split(q(1)), &seg).unwrap());
        assert!(!is_admissible(&line_split(q(2)), &seg).unwrap());
        let s = Subdivision::from_hyperplanes(2, &[(vec![1, 0], frac(1, 3))]).unwrap();
        assert!(is_admissible(&s, &catalog::unit_square()).unwrap());
        let s = Subdivision::from_hyperplanes(2, &[(vec![1, 1], q(1))]).unwrap();
        assert!(!is_admissible(&s, &catalog::unit_square()).unwrap());
    }

    #[test]
    fn glue_examples() {
        let r = glue_count_check(&catalog::interval(q(0), q(3)), &line_split(q(1))).unwrap();
        assert!(r.holds());
        assert_eq!(r.total, 4);
        let mut counts: Vec<i64> = r.per_cell.iter().map(|c| c.1).collect();
        counts.sort();
        assert_eq!(counts, vec![1, 2, 3]);
        let s = Subdivision::from_hyperplanes(2, &[(vec![1, 0], frac(1, 2))]).unwrap();
        assert!(glue_count_check(&catalog::unit_square(), &s).unwrap().holds());
    }

    #[test]
    fn two_planes_in_the_plane() {
        let s = Subdivision::from_hyperplanes(2, &[(vec![1, 0], q(0)), (vec![0, 1], q(0))]).unwrap();
        assert_eq!(s.len(), 9);
        assert!(validate(&s, Coverage::AllSpace).unwrap().is_valid());
        assert!(euler_check(&s, 100, 3).holds());
    }
}
