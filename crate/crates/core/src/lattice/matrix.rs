use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{primitive, Rational, RationalVector};

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r.iter().cloned());
        }
        IntegerMatrix { rows: rows.len(), cols, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
        Self::from_rows(&rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant of a square matrix (Bareiss fraction-free elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn rational_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().cloned().map(Rational::from_integer).collect())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank(&self.rational_rows(), self.cols)
    }

    /// Basis of the rational null space, each vector cleared to primitive integer form.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        kernel_basis(&self.rational_rows(), self.cols)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<RationalVector> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            let v = RationalVector(x);
            match v.primitive_integer() {
                Ok(ints) => RationalVector::from_bigints(&ints),
                Err(_) => v,
            }
        })
        .collect()
}

/// Unique solution of a square nonsingular system, `None` if singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<RationalVector> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(RationalVector(r.iter().map(|row| row[n].clone()).collect()))
}

/// Rank of a list of rational vectors.
pub fn rank_of(vectors: &[RationalVector], dim: usize) -> usize {
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
    rank(&rows, dim)
}

/// Rank of a list of integer vectors.
pub fn rank_of_ints(vectors: &[&[BigInt]], dim: usize) -> usize {
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| v.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    rank(&rows, dim)
}

/// Primitive integer form of a nonzero rational vector, keeping direction.
pub fn primitive_direction(v: &RationalVector) -> Option<Vec<BigInt>> {
    if v.is_zero() {
        return None;
    }
    let l = v.denominator_lcm();
    let ints: Vec<BigInt> =
        v.0.iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect();
    primitive(&ints).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_examples() {
        let id = IntegerMatrix::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());

        let m = IntegerMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // (−1, 1) and (1, −1) span the same line
        let v = k[0].to_integers().unwrap();
        assert_eq!(v[0].clone() + &v[1], BigInt::zero());
        assert!(v[0].abs().is_one());

        let z = IntegerMatrix::zeros(2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);
    }

    #[test]
    fn determinant_small() {
        let m = IntegerMatrix::from_i64(&[&[0, 1], &[-1, -2]]);
        assert_eq!(m.determinant(), BigInt::from(1));
        let m = IntegerMatrix::from_i64(&[&[1, 0], &[-1, -2]]);
        assert_eq!(m.determinant(), BigInt::from(-2));
        let m = IntegerMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant(), BigInt::from(18));
    }

    #[test]
    fn solve_square() {
        let q = |a: i64| Rational::from_integer(a.into());
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, RationalVector::from_ints(&[2, 1]));
        let singular = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&singular, &[q(1), q(2)]).is_none());
    }
}
