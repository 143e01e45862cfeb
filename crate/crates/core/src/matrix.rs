//! Dense matrices over the integers with exact elimination routines.
//!
//! Everything here works on [`BigInt`] entries. The routines are the
//! building blocks for the lattice layer: fraction-free determinants and
//! ranks (Bareiss), integer kernels via unimodular column reduction, and a
//! canonical row Hermite normal form used to compare spans.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. Returns `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// Panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged literal matrix")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>]) -> Option<Self> {
        let n = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|c| c.len() != n) {
            return None;
        }
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Some(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First index pair `(i, j)` with `i < j` where the matrix is not symmetric.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, a: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * a).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Block-diagonal sum of two matrices.
    pub fn block_diag(&self, other: &IntMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant of a square matrix by fraction-free Bareiss elimination.
    ///
    /// Panics if the matrix is not square.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigInt::one();
        }
        let (rank, det) = bareiss(self.to_rows());
        if rank < self.rows {
            BigInt::zero()
        } else {
            det
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss(self.to_rows()).0
    }

    /// Basis of `{ x in Z^cols : self * x = 0 }`.
    ///
    /// The result is the row Hermite normal form of the kernel, so it is
    /// canonical and spans a saturated sublattice of `Z^cols`.
    pub fn integer_kernel(&self) -> Vec<Vec<BigInt>> {
        let n = self.cols;
        let mut a = self.clone();
        let mut t = IntMatrix::identity(n);
        let mut pivot = 0;
        for i in 0..self.rows {
            if pivot == n {
                break;
            }
            for j in pivot + 1..n {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if a[(i, pivot)].is_zero() {
                    a.swap_cols(pivot, j);
                    t.swap_cols(pivot, j);
                    continue;
                }
                let x = a[(i, pivot)].clone();
                let y = a[(i, j)].clone();
                let eg = x.extended_gcd(&y);
                let (s, u) = (eg.x, eg.y);
                let (xg, yg) = (&x / &eg.gcd, &y / &eg.gcd);
                // [col_p, col_j] <- [s col_p + u col_j, -y/g col_p + x/g col_j]
                a.combine_cols(pivot, j, &s, &u, &(-&yg), &xg);
                t.combine_cols(pivot, j, &s, &u, &(-&yg), &xg);
            }
            if !a[(i, pivot)].is_zero() {
                pivot += 1;
            }
        }
        let kernel: Vec<Vec<BigInt>> = (pivot..n).map(|j| t.column(j)).collect();
        hermite_rows(&kernel)
    }

    fn swap_cols(&mut self, p: usize, q: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + p, i * self.cols + q);
        }
    }

    /// Replaces columns `(p, q)` by `(a p + b q, c p + d q)`.
    fn combine_cols(&mut self, p: usize, q: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        for i in 0..self.rows {
            let vp = self[(i, p)].clone();
            let vq = self[(i, q)].clone();
            self[(i, p)] = a * &vp + b * &vq;
            self[(i, q)] = c * &vp + d * &vq;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut m = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    m[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

/// Fraction-free elimination. Returns the rank and, for a square full-rank
/// input, the determinant (including the sign of row swaps).
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    (r, sign * prev)
}

/// Row Hermite normal form of the Z-span of `rows`.
///
/// Zero rows are dropped; pivots are positive and entries above each pivot
/// are reduced into `[0, pivot)`. Two families of vectors span the same
/// lattice iff their normal forms agree.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let k = m.len();
    let n = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == k {
            break;
        }
        for i in r + 1..k {
            if m[i][c].is_zero() {
                continue;
            }
            if m[r][c].is_zero() {
                m.swap(r, i);
                continue;
            }
            let x = m[r][c].clone();
            let y = m[i][c].clone();
            let eg = x.extended_gcd(&y);
            let (xg, yg) = (&x / &eg.gcd, &y / &eg.gcd);
            let (top, bottom) = (m[r].clone(), m[i].clone());
            m[r] = combine(&eg.x, &top, &eg.y, &bottom);
            m[i] = combine(&(-yg), &top, &xg, &bottom);
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            m[r] = m[r].iter().map(|v| -v).collect();
        }
        let pivot = m[r][c].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&pivot);
            if !q.is_zero() {
                let pr = m[r].clone();
                m[i] = combine(&BigInt::one(), &m[i], &(-q), &pr);
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

fn combine(a: &BigInt, x: &[BigInt], b: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(u, v)| a * u + b * v).collect()
}

/// Greatest common divisor of a slice (zero for an all-zero slice).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn brute_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * brute_det(&minor)
            })
            .sum()
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(IntMatrix::from_i64(&[[10, 11], [11, 10]]).determinant(), bi(-21));
        assert_eq!(IntMatrix::from_i64(&[[0, 1], [1, 0]]).determinant(), bi(-1));
        assert_eq!(IntMatrix::identity(0).determinant(), bi(1));
        assert_eq!(IntMatrix::from_i64(&[[1, 2], [2, 4]]).determinant(), bi(0));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let rows = vec![
            vec![0, 3, -1, 2],
            vec![4, 0, 5, 1],
            vec![-2, 7, 0, 0],
            vec![1, 1, 1, -3],
        ];
        let m = IntMatrix::from_i64(&rows);
        assert_eq!(m.determinant(), bi(brute_det(&rows)));
    }

    #[test]
    fn rank_of_rectangular() {
        let m = IntMatrix::from_i64(&[[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(IntMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x - 4y = 0 has kernel Z(2, 1), not Z(4, 2).
        let m = IntMatrix::from_i64(&[[2, -4]]);
        assert_eq!(m.integer_kernel(), vec![vec![bi(2), bi(1)]]);
        let m = IntMatrix::from_i64(&[[0, 1]]);
        assert_eq!(m.integer_kernel(), vec![vec![bi(1), bi(0)]]);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = IntMatrix::zeros(1, 3);
        assert_eq!(m.integer_kernel(), IntMatrix::identity(3).to_rows());
    }

    #[test]
    fn hermite_detects_equal_spans() {
        let a = vec![vec![bi(1), bi(2)], vec![bi(3), bi(4)]];
        let b = vec![vec![bi(4), bi(6)], vec![bi(1), bi(2)]];
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
        assert_eq!(hermite_rows(&a), vec![vec![bi(1), bi(0)], vec![bi(0), bi(2)]]);
    }
}
