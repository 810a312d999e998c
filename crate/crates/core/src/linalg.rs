//! Dense exact matrices over the rationals, plus a fraction-free Bareiss
//! determinant generic over integral domains with exact division.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{denom_lcm, Q};

/// Integral domain with exact division, enough for Bareiss elimination.
pub trait ExactDomain: Clone + PartialEq {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// `self / other`, where the quotient is known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)), "inexact Bareiss division");
        self / other
    }
}

/// Determinant of a square matrix (row-major rows) by fraction-free
/// Bareiss elimination with row swaps on zero pivots.
pub fn bareiss_det<R: ExactDomain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one_elem();
    }
    let mut sign_flip = false;
    let mut prev = R::one_elem();
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero_elem()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return R::zero_elem(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .mul_elem(&m[k][k])
                    .sub_elem(&m[i][k].mul_elem(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg_elem()
    } else {
        d
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(crate::rational::format).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// Builds from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut s = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                s[(i, j)] = self[(r, c)].clone();
            }
        }
        s
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact determinant: clears row denominators, then runs Bareiss over Z.
    pub fn det(&self) -> Q {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut scale = BigInt::one();
        let int_rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = denom_lcm(row);
                scale *= &l;
                let lq = Q::from_integer(l);
                row.iter().map(|x| (x * &lq).to_integer()).collect()
            })
            .collect();
        Q::new(bareiss_det(int_rows), scale)
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.echelon_pivots().len()
    }

    fn echelon_pivots(&self) -> Vec<usize> {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][c].recip();
            for j in c..self.cols {
                m[row][j] = &m[row][j] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for j in c..self.cols {
                        let d = &f * &m[row][j];
                        m[r][j] -= d;
                    }
                }
            }
            pivots.push(c);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Lexicographically first maximal set of linearly independent rows of
    /// the column restriction `self[.., cols]`.
    pub fn independent_rows(&self, cols: &[usize]) -> Vec<usize> {
        let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
        let mut chosen = Vec::new();
        for r in 0..self.rows {
            let mut v: Vec<Q> = cols.iter().map(|&c| self[(r, c)].clone()).collect();
            for (pc, b) in &basis {
                if !v[*pc].is_zero() {
                    let f = v[*pc].clone();
                    for (x, y) in v.iter_mut().zip(b) {
                        *x -= &f * y;
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[pc].recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                for (_, b) in basis.iter_mut() {
                    if !b[pc].is_zero() {
                        let f = b[pc].clone();
                        for (x, y) in b.iter_mut().zip(&v) {
                            *x -= &f * y;
                        }
                    }
                }
                basis.push((pc, v));
                chosen.push(r);
            }
            if chosen.len() == cols.len() {
                break;
            }
        }
        chosen
    }

    /// Solves `self · x = b` for square invertible `self`; `None` when singular.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert!(self.is_square());
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut m: Vec<Vec<Q>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for j in c..=n {
                        let d = &f * &m[c][j];
                        m[r][j] -= d;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[n].clone()).collect())
    }

    /// Basis of the right kernel, one vector per free column of the reduced
    /// row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.to_rows();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][c].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..self.rows {
                if r != row && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for j in 0..self.cols {
                        let d = &f * &m[row][j];
                        m[r][j] -= d;
                    }
                }
            }
            pivots.push(c);
            row += 1;
        }
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Q::zero(); self.cols];
                v[free] = Q::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[r][free].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![Q::zero(); n];
            e[i] = Q::one();
            cols.push(self.solve(&e)?);
        }
        Some(Matrix::from_rows(cols).transpose())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn laplace(m: &Matrix) -> Q {
        let n = m.rows();
        if n == 0 {
            return Q::one();
        }
        let mut acc = Q::zero();
        for c in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
            let minor = laplace(&m.submatrix(&rows, &cols));
            let term = &m[(0, c)] * minor;
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), int(3), int(0), int(1)],
            vec![int(0), int(0), ratio(-2, 3), int(4)],
            vec![int(5), int(1), int(1), int(0)],
            vec![int(2), ratio(7, 5), int(0), int(-1)],
        ]);
        assert_eq!(m.det(), laplace(&m));
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), int(-1));
        let s = Matrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.det(), int(0));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn independent_rows_greedy() {
        let m = Matrix::from_i64(&[vec![1, 0], vec![2, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(m.independent_rows(&[0, 1]), vec![0, 2]);
        assert_eq!(m.independent_rows(&[1]), vec![2]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = Matrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[vec![2, 1], vec![7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
    }
}
