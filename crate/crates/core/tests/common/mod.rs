//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's counting or Weyl group code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use delzant::lattice::{q, Rational};
use delzant::polyhedra::{catalog, LabelledPolyhedron};
use delzant::random;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Integer points `x` with `⟨x, v⟩ ≥ m r` for every label (strict when
/// `interior`), found by scanning the box `[0, m B]^k`. Every polytope used
/// in the tests lies in the nonnegative orthant.
pub fn brute_points(p: &LabelledPolyhedron, m: i64, bound: i64, interior: bool) -> Vec<Vec<i64>> {
    let k = p.dim();
    let lo = 0;
    let hi = m * bound;
    let mut out = Vec::new();
    let mut x = vec![lo; k];
    loop {
        let inside = p.labels().iter().all(|l| {
            let lhs: BigInt = l.v.iter().zip(&x).map(|(a, &b)| a * BigInt::from(b)).sum();
            let lhs = Rational::from_integer(lhs);
            let rhs = &l.r * q(m);
            if interior {
                lhs > rhs
            } else {
                lhs >= rhs
            }
        });
        if inside {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            x[i] += 1;
            if x[i] <= hi {
                break;
            }
            x[i] = lo;
            i += 1;
        }
    }
}

/// `Σ z^x` over the given points.
pub fn power_sum(points: &[Vec<i64>], z: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for x in points {
        let mut t = q(1);
        for (zi, &e) in z.iter().zip(x) {
            t *= zi.pow(e as i32);
        }
        total += t;
    }
    total
}

/// The polynomial of degree `≤ d` through `(t, values[t])`, evaluated at `x`.
pub fn lagrange(values: &[i64], x: i64) -> Rational {
    let n = values.len() as i64;
    let mut total = Rational::zero();
    for i in 0..n {
        let mut term = q(values[i as usize]);
        for j in 0..n {
            if i != j {
                term *= q(x - j) / q(i - j);
            }
        }
        total += term;
    }
    total
}

pub struct Named {
    pub name: String,
    pub polytope: LabelledPolyhedron,
    /// The polytope lies in `[0, bound]^k`.
    pub bound: i64,
}

/// The fixed polytopes plus twenty seeded random ones of dimension 1 to 3.
pub fn test_polytopes() -> Vec<Named> {
    let mut out = vec![
        Named { name: "cube".into(), polytope: catalog::unit_cube(), bound: 1 },
        Named { name: "simplex1".into(), polytope: catalog::standard_simplex(1), bound: 1 },
        Named { name: "simplex2".into(), polytope: catalog::standard_simplex(2), bound: 1 },
        Named { name: "simplex3".into(), polytope: catalog::standard_simplex(3), bound: 1 },
        Named { name: "pyramid".into(), polytope: catalog::egyptian_pyramid(), bound: 2 },
        Named { name: "weighted triangle".into(), polytope: catalog::weighted_triangle(), bound: 2 },
    ];
    let mut rng = random::rng(2024);
    for i in 0..20 {
        let dim = 1 + i % 3;
        let p = random::lattice_polytope(&mut rng, dim).expect("random polytope");
        out.push(Named { name: format!("random{i} (dim {dim})"), polytope: p, bound: 3 });
    }
    out
}

pub type Cartan = Vec<Vec<i64>>;

pub fn cartan(name: &str) -> Cartan {
    match name {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        "G2" => vec![vec![2, -3], vec![-1, 2]],
        _ => panic!("unknown type {name}"),
    }
}

type Matrix = Vec<Vec<i64>>;

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn apply(m: &Matrix, x: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

/// `s_i` on fundamental-weight coordinates: `μ ↦ μ − μ_i α_i`.
fn simple_reflection(c: &Cartan, i: usize) -> Matrix {
    let n = c.len();
    (0..n)
        .map(|r| (0..n).map(|col| i64::from(r == col) - if col == i { c[r][i] } else { 0 }).collect())
        .collect()
}

/// All Weyl group elements with their signs, by closure under simple
/// reflections.
pub fn weyl_group(c: &Cartan) -> Vec<(Matrix, i64)> {
    let n = c.len();
    let id: Matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let gens: Vec<Matrix> = (0..n).map(|i| simple_reflection(c, i)).collect();
    let mut seen: BTreeMap<Matrix, i64> = BTreeMap::from([(id.clone(), 1)]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        let sign = seen[&m];
        for g in &gens {
            let next = mul(g, &m);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), -sign);
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Induction through the full alternant of `μ + ρ`: zero if it cancels,
/// otherwise the sign and exponent of its unique strictly dominant term,
/// shifted back by `ρ`.
pub fn induce_oracle(group: &[(Matrix, i64)], mu: &[i64]) -> Option<(i64, Vec<i64>)> {
    let shifted: Vec<i64> = mu.iter().map(|x| x + 1).collect();
    let mut alternant: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (w, s) in group {
        *alternant.entry(apply(w, &shifted)).or_insert(0) += s;
    }
    alternant.retain(|_, c| *c != 0);
    if alternant.is_empty() {
        return None;
    }
    let dominant: Vec<_> = alternant.iter().filter(|(e, _)| e.iter().all(|&x| x > 0)).collect();
    assert_eq!(dominant.len(), 1, "a nonzero alternant has one strictly dominant term");
    let (e, c) = dominant[0];
    Some((*c, e.iter().map(|x| x - 1).collect()))
}

/// Positive roots as simple-root coordinates.
pub fn positive_roots(c: &Cartan) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    while let Some(beta) = frontier.pop() {
        if !roots.insert(beta.clone()) {
            continue;
        }
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * c[i][j]).sum();
            let mut next = beta.clone();
            next[i] -= pairing;
            if !roots.contains(&next) {
                frontier.push(next);
            }
        }
    }
    roots.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect()
}

/// Simple-root coordinates to fundamental-weight coordinates.
pub fn root_weight(c: &Cartan, beta: &[i64]) -> Vec<i64> {
    let n = c.len();
    (0..n).map(|r| (0..n).map(|j| c[r][j] * beta[j]).sum()).collect()
}

/// The value of an integral rational.
pub fn as_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}
