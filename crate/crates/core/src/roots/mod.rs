//! Root systems of rank ≤ 3, their Weyl groups and the ρ-shifted action.
//!
//! Weights are integer vectors in the basis of fundamental weights, so the
//! pairing of a weight with a simple coroot is a coordinate.

mod wall;

pub use wall::{dual_support_bound, principal_wall, Wall};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{frac, q, Rational, RationalVector};

/// A weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A1,
    A2,
    A3,
    B2,
    G2,
}

impl RootType {
    pub const ALL: [RootType; 5] = [RootType::A1, RootType::A2, RootType::A3, RootType::B2, RootType::G2];

    /// Cartan matrix with `A[i][j] = ⟨α_j, α̌_i⟩`.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            RootType::A1 => vec![vec![2]],
            RootType::A2 => vec![vec![2, -1], vec![-1, 2]],
            RootType::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            RootType::B2 => vec![vec![2, -1], vec![-2, 2]],
            RootType::G2 => vec![vec![2, -3], vec![-1, 2]],
        }
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(RootType::A1),
            "A2" => Ok(RootType::A2),
            "A3" => Ok(RootType::A3),
            "B2" => Ok(RootType::B2),
            "G2" => Ok(RootType::G2),
            _ => Err(Error::UnsupportedType(s.to_string())),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A Weyl group element as an integer matrix on weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub length: usize,
    /// A reduced word in the simple reflections (0-based indices).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply(&self, mu: &[i64]) -> Weight {
        self.matrix.iter().map(|row| row.iter().zip(mu).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn apply_rational(&self, mu: &RationalVector) -> RationalVector {
        RationalVector(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&mu.0).map(|(a, b)| q(*a) * b).sum())
                .collect(),
        )
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// A positive root with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coordinates in the basis of simple roots.
    pub simple: Vec<i64>,
    /// Coordinates of the coroot in the basis of simple coroots.
    pub coroot: Vec<i64>,
    /// The root as a weight.
    pub weight: Weight,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<PositiveRoot>,
    /// Sorted by length, then by matrix.
    pub elements: Vec<WeylElement>,
    pub w0: usize,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

impl RootSystem {
    pub fn new(root_type: RootType) -> Self {
        let cartan = root_type.cartan();
        let k = cartan.len();

        // positive roots and coroots, by reflecting simple ones
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = 1;
            queue.push_back((e.clone(), e));
        }
        while let Some((a, c)) = queue.pop_front() {
            if pairs.iter().any(|(x, _)| *x == a) {
                continue;
            }
            for i in 0..k {
                let pair_ai: i64 = (0..k).map(|j| a[j] * cartan[i][j]).sum();
                let pair_ci: i64 = (0..k).map(|j| c[j] * cartan[j][i]).sum();
                let mut a2 = a.clone();
                a2[i] -= pair_ai;
                let mut c2 = c.clone();
                c2[i] -= pair_ci;
                if a2.iter().all(|&x| x >= 0) && a2.iter().any(|&x| x > 0) {
                    queue.push_back((a2, c2));
                }
            }
            pairs.push((a, c));
        }
        pairs.sort();
        let positive_roots = pairs
            .into_iter()
            .map(|(simple, coroot)| {
                let weight = (0..k).map(|i| (0..k).map(|j| cartan[i][j] * simple[j]).sum()).collect();
                PositiveRoot { simple, coroot, weight }
            })
            .collect();

        let reflections: Vec<Vec<Vec<i64>>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|c| i64::from(r == c) - if c == i { cartan[r][i] } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identity: Vec<Vec<i64>> =
            (0..k).map(|r| (0..k).map(|c| i64::from(r == c)).collect()).collect();
        let mut seen: BTreeMap<Vec<Vec<i64>>, Vec<usize>> = BTreeMap::new();
        let mut queue = VecDeque::from([(identity.clone(), Vec::new())]);
        seen.insert(identity, Vec::new());
        while let Some((m, word)) = queue.pop_front() {
            for (i, s) in reflections.iter().enumerate() {
                let next = mat_mul(s, &m);
                if !seen.contains_key(&next) {
                    let mut w = vec![i];
                    w.extend(&word);
                    seen.insert(next.clone(), w.clone());
                    queue.push_back((next, w));
                }
            }
        }
        let mut elements: Vec<WeylElement> = seen
            .into_iter()
            .map(|(matrix, word)| WeylElement { length: word.len(), matrix, word })
            .collect();
        elements.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.matrix.cmp(&b.matrix)));
        let w0 = elements.len() - 1;
        RootSystem { root_type, rank: k, cartan, positive_roots, elements, w0 }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.w0]
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        (0..self.rank).map(|r| self.cartan[r][i]).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        (0..self.rank).map(|r| i64::from(r == i)).collect()
    }

    pub fn check_weight(&self, mu: &[i64]) -> Result<()> {
        if mu.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: mu.len() });
        }
        Ok(())
    }

    pub fn is_dominant(mu: &[i64]) -> bool {
        mu.iter().all(|&x| x >= 0)
    }

    pub fn pairing(mu: &[i64], coroot: &[i64]) -> i64 {
        mu.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// No coroot is orthogonal to `mu`.
    pub fn is_regular(&self, mu: &[i64]) -> bool {
        self.positive_roots.iter().all(|r| Self::pairing(mu, &r.coroot) != 0)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| !self.positive_roots.iter().any(|s| s.weight == w.apply(&r.weight)))
            .count()
    }

    /// `w ⊙ μ = w(μ + ρ) − ρ`.
    pub fn affine_action(&self, w: &WeylElement, mu: &[i64]) -> Weight {
        let shifted: Weight = mu.iter().map(|x| x + 1).collect();
        w.apply(&shifted).into_iter().map(|x| x - 1).collect()
    }

    /// The element with the given matrix.
    pub fn find(&self, matrix: &[Vec<i64>]) -> Option<usize> {
        self.elements.iter().position(|e| e.matrix == matrix)
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let m = mat_mul(&self.elements[a].matrix, &self.elements[b].matrix);
        self.find(&m).expect("the group is closed under products")
    }

    /// `Ind(ζ_μ)`: zero when `μ + ρ` is singular, otherwise the sign of the
    /// unique `w` with `w ⊙ μ` dominant together with `w ⊙ μ`.
    pub fn induce(&self, mu: &[i64]) -> Option<(i64, Weight)> {
        let mut nu: Weight = mu.iter().map(|x| x + 1).collect();
        let mut sign = 1;
        loop {
            if nu.contains(&0) {
                return None;
            }
            let Some(i) = nu.iter().position(|&x| x < 0) else { break };
            let c = nu[i];
            for (r, x) in nu.iter_mut().enumerate() {
                *x -= c * self.cartan[r][i];
            }
            sign = -sign;
        }
        Some((sign, nu.into_iter().map(|x| x - 1).collect()))
    }

    /// `μ* = −w₀ μ`.
    pub fn star(&self, mu: &[i64]) -> Weight {
        self.longest().apply(mu).into_iter().map(|x| -x).collect()
    }

    pub fn star_rational(&self, mu: &RationalVector) -> RationalVector {
        -&self.longest().apply_rational(mu)
    }

    /// `ρ_σ`: half the sum of the positive roots orthogonal to the wall.
    pub fn rho_sigma(&self, wall: &Wall) -> RationalVector {
        let mut acc = vec![Rational::from_integer(0.into()); self.rank];
        for r in &self.positive_roots {
            if r.simple.iter().enumerate().all(|(i, &c)| c == 0 || !wall.contains(i)) {
                for (a, w) in acc.iter_mut().zip(&r.weight) {
                    *a += frac(*w, 2);
                }
            }
        }
        RationalVector(acc)
    }

    /// Longest element of the subgroup generated by reflections in the
    /// simple roots orthogonal to the wall.
    pub fn w_sigma(&self, wall: &Wall) -> usize {
        (0..self.order())
            .filter(|&i| self.elements[i].word.iter().all(|j| !wall.contains(*j)))
            .max_by_key(|&i| self.elements[i].length)
            .expect("the identity qualifies")
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, mu: &[i64]) -> Rational {
        let rho = self.rho();
        let shifted: Weight = mu.iter().map(|x| x + 1).collect();
        self.positive_roots
            .iter()
            .map(|r| q(Self::pairing(&shifted, &r.coroot)) / q(Self::pairing(&rho, &r.coroot)))
            .product()
    }

    /// For dominant `λ`: `None` when `λ − ρ` is singular, otherwise
    /// `w = w₀ w_σ` and `w ⊙ (−λ) = λ* − 2(ρ − ρ_σ*)`.
    pub fn reflect(&self, lambda: &[i64]) -> Result<Option<(usize, Weight)>> {
        self.check_weight(lambda)?;
        if !Self::is_dominant(lambda) {
            return Err(Error::NotDominant(format_weight(lambda)));
        }
        let lr: Weight = lambda.iter().map(|x| x - 1).collect();
        if !self.is_regular(&lr) {
            return Ok(None);
        }
        let wall = Wall::of_weight(lambda);
        let w = self.compose(self.w0, self.w_sigma(&wall));
        let neg: Weight = lambda.iter().map(|x| -x).collect();
        let result = self.affine_action(&self.elements[w], &neg);

        let rho = RationalVector::from_ints(&self.rho());
        let rho_sigma_star = self.star_rational(&self.rho_sigma(&wall));
        let expected = &RationalVector::from_ints(&self.star(lambda))
            - &(&rho - &rho_sigma_star).scale(&q(2));
        assert_eq!(RationalVector::from_ints(&result), expected, "reflection identity");
        Ok(Some((w, result)))
    }

    /// Four conditions on a dominant `λ`, which should agree:
    /// some `w ⊙ (−λ)` is dominant; `λ − ρ` is regular; `w_σ(λ − ρ)` is
    /// dominant regular; `λ − 2(ρ − ρ_σ)` is dominant.
    pub fn reflect_conditions(&self, lambda: &[i64]) -> Result<[bool; 4]> {
        self.check_weight(lambda)?;
        if !Self::is_dominant(lambda) {
            return Err(Error::NotDominant(format_weight(lambda)));
        }
        let neg: Weight = lambda.iter().map(|x| -x).collect();
        let c1 = self
            .elements
            .iter()
            .any(|w| Self::is_dominant(&self.affine_action(w, &neg)));
        let lr: Weight = lambda.iter().map(|x| x - 1).collect();
        let c2 = self.is_regular(&lr);
        let wall = Wall::of_weight(lambda);
        let c3 = self.elements[self.w_sigma(&wall)].apply(&lr).iter().all(|&x| x > 0);
        let rho = RationalVector::from_ints(&self.rho());
        let shifted = &RationalVector::from_ints(lambda) - &(&rho - &self.rho_sigma(&wall)).scale(&q(2));
        let c4 = shifted.0.iter().all(|x| *x >= q(0));
        Ok([c1, c2, c3, c4])
    }
}

pub fn format_weight(mu: &[i64]) -> String {
    mu.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
