//! Smith normal form by elementary row and column operations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries in order.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).filter(|a| !a.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
    }

    // row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(src) {
                *x += q * s;
            }
        }
    }

    // col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let s = row[j].clone();
                row[i] += q * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let to_rows = |mat: &IntegerMatrix| -> Vec<Vec<BigInt>> {
        (0..mat.rows()).map(|i| mat.row(i).to_vec()).collect()
    };
    let mut w = Work {
        a: to_rows(m),
        u: to_rows(&IntegerMatrix::identity(rows)),
        v: to_rows(&IntegerMatrix::identity(cols)),
    };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero pivot in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &w.a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w, rows, cols);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let p = w.a[t][t].clone();
            for i in t + 1..rows {
                let q = w.a[i][t].div_floor(&p);
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
            }
            for j in t + 1..cols {
                let q = w.a[t][j].div_floor(&p);
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
            }
            let dirty = (t + 1..rows).any(|i| !w.a[i][t].is_zero())
                || (t + 1..cols).any(|j| !w.a[t][j].is_zero());
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w, rows, cols)
}

fn finish(w: Work, rows: usize, cols: usize) -> SmithForm {
    SmithForm {
        u: IntegerMatrix::from_rows(&w.u, rows),
        d: IntegerMatrix::from_rows(&w.a, cols),
        v: IntegerMatrix::from_rows(&w.v, cols),
    }
}
