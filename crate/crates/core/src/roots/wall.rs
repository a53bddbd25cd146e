use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::RootSystem;
use crate::error::{Error, Result};
use crate::lattice::{q, RationalVector};
use crate::polyhedra::{FaceLattice, LabelledPolyhedron};

/// An open wall of the dominant chamber: the dominant points whose positive
/// coordinates are exactly `support` (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Wall {
    support: BTreeSet<usize>,
}

impl Wall {
    pub fn new<I: IntoIterator<Item = usize>>(support: I) -> Self {
        Wall { support: support.into_iter().collect() }
    }

    pub fn of_weight(mu: &[i64]) -> Self {
        Wall::new((0..mu.len()).filter(|&i| mu[i] > 0))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.contains(&i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.iter().copied()
    }

    pub fn dim(&self) -> usize {
        self.support.len()
    }

    /// `self ⪯ other`: this wall lies in the closure of the other.
    pub fn is_face_of(&self, other: &Wall) -> bool {
        self.support.is_subset(&other.support)
    }

    /// Every wall of a rank-`k` chamber, ordered by support.
    pub fn all(k: usize) -> Vec<Wall> {
        let mut out: Vec<Wall> = (0u32..1 << k)
            .map(|mask| Wall::new((0..k).filter(|&i| mask & (1 << i) != 0)))
            .collect();
        out.sort();
        out
    }
}

/// Prints 1-based indices, e.g. `{1,2}`; the origin is `{}`.
impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The smallest wall whose closure contains every point.
pub fn principal_wall(points: &[RationalVector]) -> Result<Wall> {
    if points.is_empty() {
        return Err(Error::Invalid("principal wall of an empty set".into()));
    }
    let mut support = BTreeSet::new();
    for p in points {
        if p.0.iter().any(|x| *x < q(0)) {
            return Err(Error::NotDominant(p.to_string()));
        }
        support.extend((0..p.dim()).filter(|&i| p.0[i] > q(0)));
    }
    Ok(Wall { support })
}

/// Whether `ν ∈ *(int Δ − 2(ρ − ρ_σ))` with `σ` the principal wall of `Δ`.
pub fn dual_support_bound(r: &RootSystem, delta: &LabelledPolyhedron, nu: &[i64]) -> Result<bool> {
    r.check_weight(nu)?;
    if delta.dim() != r.rank {
        return Err(Error::DimensionMismatch { expected: r.rank, got: delta.dim() });
    }
    if !RootSystem::is_dominant(nu) {
        return Err(Error::NotDominant(super::format_weight(nu)));
    }
    let lattice = FaceLattice::new(delta)?;
    let top = lattice.top().ok_or(Error::EmptyPolyhedron)?;
    if !lattice.generators().is_bounded() {
        return Err(Error::Unbounded);
    }
    let wall = principal_wall(&lattice.generators().points)?;
    let rho = RationalVector::from_ints(&r.rho());
    let shift = (&rho - &r.rho_sigma(&wall)).scale(&q(2));
    let candidate = &RationalVector::from_ints(&r.star(nu)) + &shift;
    let implicit = &lattice.faces()[top].tight;
    Ok(delta.labels().iter().enumerate().all(|(i, l)| {
        let s = l.slack(&candidate);
        if implicit.contains(&i) {
            s.is_zero()
        } else {
            s > q(0)
        }
    }))
}
