use num_traits::Signed;

use super::Subdivision;
use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, q, rank_of, RationalVector};
use crate::polyhedra::{Label, LabelledPolyhedron};
use crate::roots::{RootSystem, Wall};

/// `apex + cone(gens)` for linearly independent generators.
pub fn cone_cell(apex: &RationalVector, gens: &[RationalVector]) -> Result<LabelledPolyhedron> {
    let k = apex.dim();
    if rank_of(gens, k) != gens.len() {
        return Err(Error::Invalid("cone generators are linearly dependent".into()));
    }
    let rows: Vec<_> = gens.iter().map(|g| g.0.clone()).collect();
    let normals = kernel_basis(&rows, k);
    let mut labels = Vec::new();
    for n in &normals {
        let v = n.primitive_integer()?;
        let r = apex.dot_int(&v);
        labels.push(Label::new(v.iter().map(|a| -a).collect(), -r.clone())?);
        labels.push(Label::new(v, r)?);
    }
    for i in 0..gens.len() {
        let mut a: Vec<_> = (0..gens.len()).filter(|&j| j != i).map(|j| gens[j].0.clone()).collect();
        a.extend(normals.iter().map(|n| n.0.clone()));
        let kern = kernel_basis(&a, k);
        let mut v = kern[0].primitive_integer()?;
        if gens[i].dot_int(&v).is_negative() {
            v = v.iter().map(|x| -x).collect();
        }
        let r = apex.dot_int(&v);
        labels.push(Label::new(v, r)?);
    }
    LabelledPolyhedron::new(k, labels)
}

#[derive(Clone, Debug)]
pub struct DualCell {
    pub sigma: Wall,
    pub tau: Wall,
    pub cell: LabelledPolyhedron,
}

/// The cells `λ + cone({−α_j : j ∉ τ} ∪ {λ_i : i ∈ σ})` for walls `σ ⪯ τ`.
#[derive(Clone, Debug)]
pub struct DualSubdivision {
    pub lambda: RationalVector,
    pub cells: Vec<DualCell>,
}

fn dual_cell(r: &RootSystem, lambda: &RationalVector, sigma: &Wall, tau: &Wall) -> Result<LabelledPolyhedron> {
    let mut gens: Vec<RationalVector> = (0..r.rank)
        .filter(|&j| !tau.contains(j))
        .map(|j| -&RationalVector::from_ints(&r.simple_root(j)))
        .collect();
    gens.extend(sigma.support().map(|i| RationalVector::from_ints(&r.fundamental_weight(i))));
    cone_cell(lambda, &gens)
}

fn check_lambda(r: &RootSystem, lambda: &RationalVector) -> Result<()> {
    if lambda.dim() != r.rank {
        return Err(Error::DimensionMismatch { expected: r.rank, got: lambda.dim() });
    }
    Ok(())
}

/// Requires `λ` strictly dominant.
pub fn dual_subdivision(r: &RootSystem, lambda: &RationalVector) -> Result<DualSubdivision> {
    check_lambda(r, lambda)?;
    if lambda.0.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotDominant(format!("{lambda} is not strictly dominant")));
    }
    let walls = Wall::all(r.rank);
    let mut cells = Vec::new();
    for tau in &walls {
        for sigma in walls.iter().filter(|s| s.is_face_of(tau)) {
            let cell = dual_cell(r, lambda, sigma, tau)?;
            cells.push(DualCell { sigma: sigma.clone(), tau: tau.clone(), cell });
        }
    }
    Ok(DualSubdivision { lambda: lambda.clone(), cells })
}

impl DualSubdivision {
    pub fn subdivision(&self) -> Result<Subdivision> {
        let dim = self.lambda.dim();
        Subdivision::new(dim, self.cells.iter().map(|c| c.cell.clone()).collect())
    }

    pub fn find(&self, sigma: &Wall, tau: &Wall) -> Option<&DualCell> {
        self.cells.iter().find(|c| c.sigma == *sigma && c.tau == *tau)
    }

    /// Cells whose codimension differs from `dim τ − dim σ`.
    pub fn codimension_violations(&self) -> Result<Vec<(Wall, Wall)>> {
        let s = self.subdivision()?;
        Ok(self
            .cells
            .iter()
            .enumerate()
            .filter(|(i, c)| s.codim(*i) != c.tau.dim() - c.sigma.dim())
            .map(|(_, c)| (c.sigma.clone(), c.tau.clone()))
            .collect())
    }

    /// Pairs of cells whose intersection is not `P_{σ∧ρ, τ∨υ}`.
    pub fn intersection_violations(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (i, a) in self.cells.iter().enumerate() {
            for (j, b) in self.cells.iter().enumerate().skip(i + 1) {
                let meet_sigma = Wall::new(a.sigma.support().filter(|&x| b.sigma.contains(x)));
                let join_tau = Wall::new(a.tau.support().chain(b.tau.support()));
                let expected = self.find(&meet_sigma, &join_tau).ok_or(Error::NotAFace)?;
                if !a.cell.intersect(&b.cell)?.same_set(&expected.cell)? {
                    out.push((i, j));
                }
            }
        }
        Ok(out)
    }
}

/// For each wall `τ`: `Σ (−1)^{dim τ − dim σ}` over `σ ⪯ τ` with
/// `P_{στ} ∩ Δ ≠ ∅`. Here `λ` need only be dominant, so it may sit on a wall.
pub fn wall_sums(r: &RootSystem, lambda: &RationalVector, delta: &LabelledPolyhedron) -> Result<Vec<(Wall, i64)>> {
    check_lambda(r, lambda)?;
    if lambda.0.iter().any(|x| *x < q(0)) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let walls = Wall::all(r.rank);
    let mut out = Vec::new();
    for tau in &walls {
        let mut sum = 0;
        for sigma in walls.iter().filter(|s| s.is_face_of(tau)) {
            let cell = dual_cell(r, lambda, sigma, tau)?;
            if !cell.intersect(delta)?.is_empty()? {
                sum += if (tau.dim() - sigma.dim()) % 2 == 0 { 1 } else { -1 };
            }
        }
        out.push((tau.clone(), sum));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::frac;
    use crate::polyhedra::catalog;
    use crate::roots::{principal_wall, RootType};
    use crate::subdivision::{euler_check, validate, Coverage};

    #[test]
    fn a1_three_cells() {
        let a1 = RootSystem::new(RootType::A1);
        let d = dual_subdivision(&a1, &RationalVector::from_ints(&[1])).unwrap();
        assert_eq!(d.cells.len(), 3);
        let s = d.subdivision().unwrap();
        assert!(validate(&s, Coverage::AllSpace).unwrap().is_valid());
        let left = d.find(&Wall::new([]), &Wall::new([])).unwrap();
        assert!(left.cell.same_set(&LabelledPolyhedron::from_ints(1, &[(&[-1], -1)])).unwrap());
        let point = d.find(&Wall::new([]), &Wall::new([0])).unwrap();
        assert!(point.cell.same_set(&catalog::interval(q(1), q(1))).unwrap());
    }

    #[test]
    fn a2_nine_cells() {
        let a2 = RootSystem::new(RootType::A2);
        let d = dual_subdivision(&a2, &RationalVector(vec![frac(1, 3), frac(2, 5)])).unwrap();
        assert_eq!(d.cells.len(), 9);
        let s = d.subdivision().unwrap();
        let dims: Vec<usize> = (0..s.len()).map(|i| s.cell_dim(i)).collect();
        assert_eq!(dims.iter().filter(|&&x| x == 2).count(), 4);
        assert_eq!(dims.iter().filter(|&&x| x == 1).count(), 4);
        assert!(validate(&s, Coverage::AllSpace).unwrap().is_valid());
        assert!(d.codimension_violations().unwrap().is_empty());
        assert!(d.intersection_violations().unwrap().is_empty());
        assert!(euler_check(&s, 100, 0).holds());
    }

    #[test]
    fn a3_twenty_seven_cells() {
        let a3 = RootSystem::new(RootType::A3);
        let d = dual_subdivision(&a3, &RationalVector(vec![frac(1, 2), frac(1, 3), frac(2, 7)])).unwrap();
        assert_eq!(d.cells.len(), 27);
        assert!(euler_check(&d.subdivision().unwrap(), 100, 0).holds());
    }

    #[test]
    fn boundary_lambda_rejected() {
        let a2 = RootSystem::new(RootType::A2);
        assert!(dual_subdivision(&a2, &RationalVector::from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn wall_sums_pick_the_principal_wall() {
        // each polytope lies in its open principal wall and λ is small
        // compared with its distance to the other walls
        let a2 = RootSystem::new(RootType::A2);
        let cases = [
            (vec![vec![2, 2], vec![4, 2], vec![2, 4]], vec![frac(1, 10), frac(1, 7)]),
            (vec![vec![2, 0], vec![3, 0]], vec![frac(1, 10), q(0)]),
            (vec![vec![0, 3], vec![0, 5]], vec![q(0), frac(1, 9)]),
            (vec![vec![0, 0]], vec![q(0), q(0)]),
            (vec![vec![1, 1], vec![5, 1], vec![1, 5], vec![4, 4]], vec![frac(1, 10), frac(1, 7)]),
        ];
        for (pts, lambda) in cases {
            let pts: Vec<RationalVector> = pts.iter().map(|p| RationalVector::from_ints(p)).collect();
            let delta = LabelledPolyhedron::convex_hull(&pts).unwrap();
            let upsilon = principal_wall(&pts).unwrap();
            for (tau, sum) in wall_sums(&a2, &RationalVector(lambda.clone()), &delta).unwrap() {
                if tau.is_face_of(&upsilon) {
                    assert_eq!(sum, i64::from(tau == upsilon), "{tau} against {upsilon}");
                }
            }
        }
    }
}
