//! Canonical (label-adding) and shift desingularization of labelled polyhedra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{q, Rational};
use crate::polyhedra::{ExcessDecomposition, FaceLattice, Label, LabelledPolyhedron};

const MAX_HALVINGS: usize = 60;
const MAX_STEPS: usize = 64;

/// One blowup: the label appended and the face it was centred on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupStep {
    pub added: Label,
    pub epsilon: Rational,
    /// Tight set of the face whose closure is the blown-up piece.
    pub target: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesingularizationTrace {
    pub steps: Vec<BlowupStep>,
    pub result: LabelledPolyhedron,
}

/// Longest chain of excess pieces under closure, counted in steps.
pub fn depth(p: &LabelledPolyhedron) -> Result<usize> {
    let l = FaceLattice::new(p)?;
    if l.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    Ok(ExcessDecomposition::new(&l).depth())
}

/// Closed pieces of maximal depth whose closure is a single face, as
/// `(piece index, face index)`, ordered by the tight set of the face.
pub fn blowup_candidates(lattice: &FaceLattice, dec: &ExcessDecomposition) -> Vec<(usize, usize)> {
    let top = dec.depth();
    let mut out: Vec<(usize, usize)> = (0..dec.len())
        .filter(|&a| dec.is_closed(a) && dec.piece_depth(a) == top)
        .filter_map(|a| dec.pieces[a].closure_face.map(|f| (a, f)))
        .collect();
    out.sort_by(|x, y| lattice.faces()[x.1].tight.cmp(&lattice.faces()[y.1].tight));
    out
}

/// Append the summed tight label of the face closing `piece`, shifted by a
/// small `ε > 0` chosen by halving from 1.
///
/// `ε` is accepted once every generator point outside the closed face keeps
/// slack larger than `ε` and the face lattice is unchanged at `ε / 2`.
pub fn canonical_blowup_step(
    p: &LabelledPolyhedron,
    piece: usize,
) -> Result<(LabelledPolyhedron, BlowupStep)> {
    let lattice = FaceLattice::new(p)?;
    if lattice.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let dec = ExcessDecomposition::new(&lattice);
    if dec.is_constant() {
        return Err(Error::AlreadyConstantExcess);
    }
    let face = blowup_candidates(&lattice, &dec)
        .into_iter()
        .find(|&(a, _)| a == piece)
        .map(|(_, f)| f)
        .ok_or(Error::NotMaximalDepth)?;
    let tight = lattice.faces()[face].tight.clone();
    let labels = p.labels();
    let mut v = vec![BigInt::zero(); p.dim()];
    let mut r = Rational::zero();
    for &i in &tight {
        for (a, b) in v.iter_mut().zip(&labels[i].v) {
            *a += b;
        }
        r += &labels[i].r;
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroSummedVector);
    }
    let base = Label::weighted(v, r.clone())?;

    // generator points off the closed face bound ε from above
    let outside_slack: Vec<Rational> = lattice
        .generators()
        .points
        .iter()
        .map(|x| base.slack(x))
        .filter(|s| !s.is_zero())
        .collect();

    let blown = |eps: &Rational| p.with_label(base.with_r(&r + eps));
    let mut eps = q(1);
    for _ in 0..MAX_HALVINGS {
        let half = &eps / q(2);
        if outside_slack.iter().all(|s| *s > eps) {
            let here = blown(&eps)?;
            let there = blown(&half)?;
            if FaceLattice::new(&here)?.combinatorial_type()
                == FaceLattice::new(&there)?.combinatorial_type()
            {
                let added = here.labels().last().expect("label just added").clone();
                return Ok((here, BlowupStep { added, epsilon: eps, target: tight }));
            }
        }
        eps = half;
    }
    Err(Error::Invalid("no stable blowup parameter found".into()))
}

/// Blow up maximal-depth pieces until the excess function is constant.
pub fn canonical_desingularization(p: &LabelledPolyhedron) -> Result<DesingularizationTrace> {
    let mut current = p.clone();
    let mut steps = Vec::new();
    for _ in 0..MAX_STEPS {
        let lattice = FaceLattice::new(&current)?;
        if lattice.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let dec = ExcessDecomposition::new(&lattice);
        if dec.is_constant() {
            return Ok(DesingularizationTrace { steps, result: current });
        }
        let (piece, _) = *blowup_candidates(&lattice, &dec).first().ok_or(Error::NotMaximalDepth)?;
        let (next, step) = canonical_blowup_step(&current, piece)?;
        current = next;
        steps.push(step);
    }
    Err(Error::Invalid(format!("no constant excess after {MAX_STEPS} blowups")))
}

/// How to perturb the right-hand sides.
#[derive(Clone, Debug)]
pub enum Shift {
    Explicit(Vec<Rational>),
    /// `η_i = δ p_i / p_n` with `p_i` the i-th prime; `δ` halves from 1
    /// until the result is nonempty, has constant excess and keeps its face
    /// lattice at `δ / 2`. If no `δ` works the direction is degenerate for
    /// this input, and the directions `η_i = δ t^i / t^n` for `t = 2, 3, …`
    /// are tried in turn.
    Auto,
}

fn primes(n: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(n);
    let mut c = 2i64;
    while out.len() < n {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

pub fn auto_shift_vector(n: usize, delta: &Rational) -> Vec<Rational> {
    let ps = primes(n);
    let top = q(*ps.last().unwrap_or(&1));
    ps.iter().map(|&p| delta * q(p) / &top).collect()
}

/// The fallback directions: points `(t, t², …, tⁿ) / tⁿ` on the moment curve.
/// A degenerate direction satisfies a linear relation, and each relation
/// holds at no more than `n` values of `t`.
fn moment_curve_vector(n: usize, t: i64, delta: &Rational) -> Vec<Rational> {
    let t = q(t);
    let top = t.pow(n as i32);
    (1..=n).map(|i| delta * t.pow(i as i32) / &top).collect()
}

const MAX_DIRECTIONS: i64 = 64;

fn has_constant_excess(p: &LabelledPolyhedron) -> Result<Option<FaceLattice>> {
    let l = FaceLattice::new(p)?;
    if l.is_empty() {
        return Ok(None);
    }
    Ok(ExcessDecomposition::new(&l).is_constant().then_some(l))
}

pub fn shift_desingularization(p: &LabelledPolyhedron, shift: &Shift) -> Result<LabelledPolyhedron> {
    if p.is_empty()? {
        return Err(Error::EmptyPolyhedron);
    }
    match shift {
        Shift::Explicit(eta) => {
            let s = p.shifted(eta)?;
            if s.is_empty()? {
                return Err(Error::EmptyShift);
            }
            Ok(s)
        }
        Shift::Auto => {
            let n = p.len();
            let directions = std::iter::once(None).chain((2..MAX_DIRECTIONS).map(Some));
            for t in directions {
                let eta = |d: &Rational| match t {
                    None => auto_shift_vector(n, d),
                    Some(t) => moment_curve_vector(n, t, d),
                };
                let mut delta = Rational::one();
                for _ in 0..MAX_HALVINGS {
                    let half = &delta / q(2);
                    let s = p.shifted(&eta(&delta))?;
                    if let Some(l) = has_constant_excess(&s)? {
                        let t = p.shifted(&eta(&half))?;
                        if FaceLattice::new(&t)?.combinatorial_type() == l.combinatorial_type() {
                            return Ok(s);
                        }
                    }
                    delta = half;
                }
            }
            Err(Error::EmptyShift)
        }
    }
}

/// Primitive normals of the facets of `p`.
pub fn facet_normals(p: &LabelledPolyhedron) -> Result<Vec<Vec<BigInt>>> {
    let l = FaceLattice::new(p)?;
    let mut out = Vec::new();
    for f in l.facets() {
        for &i in &l.faces()[f].tight {
            let v = crate::lattice::primitive(&p.labels()[i].v)?;
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::bigints;
    use crate::polyhedra::catalog;

    #[test]
    fn depths() {
        assert_eq!(depth(&catalog::unit_cube()).unwrap(), 0);
        assert_eq!(depth(&catalog::egyptian_pyramid()).unwrap(), 1);
        assert_eq!(depth(&catalog::square_cone()).unwrap(), 1);
        let empty = LabelledPolyhedron::from_ints(1, &[(&[1], 1), (&[-1], 0)]);
        assert_eq!(depth(&empty), Err(Error::EmptyPolyhedron));
    }

    #[test]
    fn pyramid_truncates() {
        let t = canonical_desingularization(&catalog::egyptian_pyramid()).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].added.v, bigints(&[0, 0, -4]));
        assert_eq!(t.steps[0].target, vec![0, 1, 2, 3]);
        let l = FaceLattice::new(&t.result).unwrap();
        assert_eq!(l.facets().len(), 6);
        assert_eq!(l.vertices().len(), 8);
        assert!(ExcessDecomposition::new(&l).is_constant());
    }

    #[test]
    fn doubled_interval_chops_vertex() {
        let p = catalog::doubled_interval();
        let l = FaceLattice::new(&p).unwrap();
        let dec = ExcessDecomposition::new(&l);
        let (piece, _) = blowup_candidates(&l, &dec)[0];
        let (next, step) = canonical_blowup_step(&p, piece).unwrap();
        assert_eq!(step.added.v, bigints(&[2]));
        assert_eq!(step.added.r, step.epsilon);
        assert!(ExcessDecomposition::new(&FaceLattice::new(&next).unwrap()).is_constant());
    }

    #[test]
    fn simple_input_rejected() {
        assert_eq!(
            canonical_blowup_step(&catalog::unit_cube(), 0).unwrap_err(),
            Error::AlreadyConstantExcess
        );
        let t = canonical_desingularization(&catalog::unit_cube()).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.result, catalog::unit_cube());
    }

    #[test]
    fn wrong_piece_rejected() {
        let p = catalog::egyptian_pyramid();
        let l = FaceLattice::new(&p).unwrap();
        let dec = ExcessDecomposition::new(&l);
        let rest = dec.pieces.iter().position(|x| x.excess == 0).unwrap();
        assert_eq!(canonical_blowup_step(&p, rest).unwrap_err(), Error::NotMaximalDepth);
    }

    #[test]
    fn redundant_quadrant_one_step() {
        let t = canonical_desingularization(&catalog::redundant_quadrant()).unwrap();
        assert_eq!(t.steps.len(), 1);
    }

    #[test]
    fn auto_shift_pyramid() {
        let p = catalog::egyptian_pyramid();
        let s = shift_desingularization(&p, &Shift::Auto).unwrap();
        let l = FaceLattice::new(&s).unwrap();
        assert!(ExcessDecomposition::new(&l).is_constant());
        // the apex opens up into an edge
        assert_eq!(l.vertices().len(), 6);
        let original: Vec<Vec<BigInt>> = p.labels().iter().map(|x| x.v.clone()).collect();
        for n in facet_normals(&s).unwrap() {
            assert!(original.contains(&n));
        }
    }

    #[test]
    fn zero_shift_is_identity() {
        let p = catalog::unit_square();
        let s = shift_desingularization(&p, &Shift::Explicit(vec![Rational::zero(); 4])).unwrap();
        assert_eq!(s, p);
    }

    #[test]
    fn empty_shift_is_error() {
        let p = catalog::unit_square();
        let eta = vec![q(1), q(0), q(1), q(0)];
        assert_eq!(shift_desingularization(&p, &Shift::Explicit(eta)), Err(Error::EmptyShift));
    }

    #[test]
    fn auto_shift_doubled_interval() {
        let s = shift_desingularization(&catalog::doubled_interval(), &Shift::Auto).unwrap();
        assert_ne!(s.labels()[0].r, s.labels()[1].r);
        assert!(has_constant_excess(&s).unwrap().is_some());
    }

    #[test]
    fn auto_shift_leaves_degenerate_prime_direction() {
        // the prime direction keeps the four labels at (1,0,1) concurrent
        let p = LabelledPolyhedron::from_ints(
            3,
            &[(&[-4, 2, -5], -9), (&[-2, 1, -2], -4), (&[-1, 0, -1], -3), (&[3, -1, 3], 6), (&[3, -1, 4], 7)],
        );
        let s = shift_desingularization(&p, &Shift::Auto).unwrap();
        assert!(has_constant_excess(&s).unwrap().is_some());
    }
}
