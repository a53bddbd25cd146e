use std::fmt;

use num_traits::Zero;

use super::enumerate::{count_points, divisors, polytope_dim, sign_pow, vertex_denominator_lcm, Region};
use crate::error::{Error, Result};
use crate::lattice::{q, solve, Rational};
use crate::polyhedra::LabelledPolyhedron;

/// A function `m ↦ Σ_j c_{m mod period, j} m^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub degree: usize,
    pub period: usize,
    /// One coefficient list per residue class, constant term first.
    pub coeffs: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn eval(&self, m: i64) -> Rational {
        let r = m.rem_euclid(self.period as i64) as usize;
        let x = q(m);
        self.coeffs[r].iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    pub fn is_polynomial(&self) -> bool {
        self.period == 1
    }
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "period: {}", self.period)?;
        for (r, cs) in self.coeffs.iter().enumerate() {
            let cs: Vec<String> = cs.iter().map(ToString::to_string).collect();
            writeln!(f, "residue {r}: {}", cs.join(" "))?;
        }
        Ok(())
    }
}

/// Coefficients of the degree-`d` polynomial through `(x_i, y_i)`.
fn interpolate(xs: &[i64], ys: &[Rational], d: usize) -> Option<Vec<Rational>> {
    let a: Vec<Vec<Rational>> = xs[..=d]
        .iter()
        .map(|&x| (0..=d).map(|j| q(x.pow(j as u32))).collect())
        .collect();
    solve(&a, &ys[..=d]).map(|v| v.0)
}

/// Try to describe `values[m]` (for `m = 0..values.len()`) by a
/// quasi-polynomial of degree at most `d` whose period divides `l`.
pub fn fit_quasi_polynomial(values: &[i64], d: usize, l: i64) -> Result<QuasiPolynomial> {
    for t in divisors(l) {
        let t = t as usize;
        let mut coeffs = Vec::with_capacity(t);
        for r in 0..t {
            let xs: Vec<i64> = (r..values.len()).step_by(t).map(|m| m as i64).collect();
            if xs.len() <= d {
                return Err(Error::Invalid(format!(
                    "need at least {} samples per residue class modulo {t}",
                    d + 1
                )));
            }
            let ys: Vec<Rational> = xs.iter().map(|&m| q(values[m as usize])).collect();
            let Some(c) = interpolate(&xs, &ys, d) else { break };
            let poly = QuasiPolynomial { degree: d, period: 1, coeffs: vec![c.clone()] };
            if xs.iter().zip(&ys).all(|(&x, y)| poly.eval(x) == *y) {
                coeffs.push(c);
            } else {
                break;
            }
        }
        if coeffs.len() == t {
            let degree = coeffs
                .iter()
                .filter_map(|c| c.iter().rposition(|x| !x.is_zero()))
                .max()
                .unwrap_or(0);
            for c in coeffs.iter_mut() {
                c.truncate(degree + 1);
            }
            return Ok(QuasiPolynomial { degree, period: t, coeffs });
        }
    }
    Err(Error::FitFailure)
}

/// Samples needed so every residue class modulo `l` holds `dim + 2` points
/// (one more than interpolation needs, so every fit is checked).
pub fn required_samples(dim: usize, l: i64) -> i64 {
    (dim as i64 + 2) * l - 1
}

/// Exact Ehrhart quasi-polynomial of a bounded polyhedron from the counts
/// `p(0), …, p(m_max)`.
pub fn ehrhart_fit(p: &LabelledPolyhedron, m_max: i64) -> Result<QuasiPolynomial> {
    let d = polytope_dim(p)?;
    let l = vertex_denominator_lcm(p)?;
    if m_max < (d as i64 + 1) * l {
        return Err(Error::Invalid(format!(
            "m_max = {m_max} is below (dim + 1)·l = {}",
            (d as i64 + 1) * l
        )));
    }
    let values: Vec<i64> = (0..=m_max)
        .map(|m| count_points(p, m, Region::Closed).map(|c| c as i64))
        .collect::<Result<_>>()?;
    fit_quasi_polynomial(&values, d, l)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityRow {
    pub m: i64,
    /// The fitted quasi-polynomial at `−m`.
    pub fitted: Rational,
    /// `(−1)^dim P · #(Λ ∩ int mP)`.
    pub counted: i64,
}

impl ReciprocityRow {
    pub fn holds(&self) -> bool {
        self.fitted == q(self.counted)
    }
}

#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    pub quasi_polynomial: QuasiPolynomial,
    pub rows: Vec<ReciprocityRow>,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(ReciprocityRow::holds)
    }
}

/// Compare the fitted counting function at `−m` against signed interior
/// counts for `1 ≤ m ≤ m_max`.
pub fn reciprocity_check(p: &LabelledPolyhedron, m_max: i64) -> Result<ReciprocityReport> {
    let d = polytope_dim(p)?;
    let l = vertex_denominator_lcm(p)?;
    let qp = ehrhart_fit(p, required_samples(d, l).max(m_max))?;
    let rows = (1..=m_max)
        .map(|m| {
            let interior = count_points(p, m, Region::Interior)? as i64;
            Ok(ReciprocityRow { m, fitted: qp.eval(-m), counted: sign_pow(d) * interior })
        })
        .collect::<Result<_>>()?;
    Ok(ReciprocityReport { quasi_polynomial: qp, rows })
}
