use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{q, Rational};
use crate::polyhedra::{FaceLattice, LabelledPolyhedron};

/// Largest bounding box scanned by the enumerator.
pub const MAX_BOX: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Closed,
    /// Relative interior.
    Interior,
}

/// A label `⟨x, v⟩ ≥ r` cleared of denominators: `⟨x, a⟩ ≥ b` (or `>`).
struct ScaledLabel {
    a: Vec<i128>,
    b: i128,
    strict: bool,
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::TooLarge(format!("coefficient {x} exceeds 128 bits")))
}

/// Lattice points of `mP` (closed) or of its relative interior, in
/// lexicographic order. `m ≥ 0`.
pub fn lattice_points(p: &LabelledPolyhedron, m: i64, region: Region) -> Result<Vec<Vec<i64>>> {
    if m < 0 {
        return Err(Error::Invalid(format!("dilation factor {m} is negative")));
    }
    let lattice = FaceLattice::new(p)?;
    if lattice.is_empty() {
        return Ok(Vec::new());
    }
    if !lattice.generators().is_bounded() {
        return Err(Error::Unbounded);
    }
    if m == 0 {
        // 0·P is the origin, which is its own relative interior
        return Ok(vec![vec![0; p.dim()]]);
    }
    // labels tight on all of P stay equalities in the relative interior
    let implicit = &lattice.faces()[lattice.top().expect("nonempty")].tight;
    let mq = q(m);
    let (lo, hi) = lattice.generators().bounding_box().expect("bounded and nonempty");
    let lo: Vec<i64> = lo
        .iter()
        .map(|x| (x * &mq).ceil().to_integer().to_i64().ok_or_else(|| Error::TooLarge("box".into())))
        .collect::<Result<_>>()?;
    let hi: Vec<i64> = hi
        .iter()
        .map(|x| (x * &mq).floor().to_integer().to_i64().ok_or_else(|| Error::TooLarge("box".into())))
        .collect::<Result<_>>()?;
    let mut size: u64 = 1;
    for (a, b) in lo.iter().zip(&hi) {
        if b < a {
            return Ok(Vec::new());
        }
        size = size.saturating_mul((b - a + 1) as u64);
    }
    if size > MAX_BOX {
        return Err(Error::TooLarge(format!("bounding box of {size} points exceeds {MAX_BOX}")));
    }

    let scaled: Vec<ScaledLabel> = p
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let r: Rational = &l.r * &mq;
            let den = r.denom().clone();
            let a = l.v.iter().map(|x| to_i128(&(x * &den))).collect::<Result<Vec<_>>>()?;
            let b = to_i128(r.numer())?;
            let strict = region == Region::Interior && !implicit.contains(&i);
            Ok(ScaledLabel { a, b, strict })
        })
        .collect::<Result<_>>()?;

    let k = p.dim();
    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        let inside = scaled.iter().all(|s| {
            let lhs: i128 = s.a.iter().zip(&x).map(|(a, &c)| a * c as i128).sum();
            if s.strict {
                lhs > s.b
            } else {
                lhs >= s.b
            }
        });
        if inside {
            out.push(x.clone());
        }
        // odometer, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if x[i] < hi[i] {
                x[i] += 1;
                x[i + 1..k].copy_from_slice(&lo[i + 1..k]);
                break;
            }
        }
    }
}

pub fn count_points(p: &LabelledPolyhedron, m: i64, region: Region) -> Result<u64> {
    Ok(lattice_points(p, m, region)?.len() as u64)
}

/// Dimension of `P` itself (of its affine hull).
pub fn polytope_dim(p: &LabelledPolyhedron) -> Result<usize> {
    let l = FaceLattice::new(p)?;
    let top = l.top().ok_or(Error::EmptyPolyhedron)?;
    Ok(l.faces()[top].dim)
}

/// Least common multiple of the vertex-coordinate denominators of a bounded `P`.
pub fn vertex_denominator_lcm(p: &LabelledPolyhedron) -> Result<i64> {
    let g = p.generators()?;
    if !g.is_bounded() {
        return Err(Error::Unbounded);
    }
    g.vertex_denominator_lcm()
        .to_i64()
        .ok_or_else(|| Error::TooLarge("vertex denominators".into()))
}

pub(crate) fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n.is_multiple_of(d)).collect()
}

pub(crate) fn sign_pow(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
