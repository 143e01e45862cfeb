//! Integral lattices given by Gram matrices.
//!
//! A [`Lattice`] is `Z^rank` with a symmetric integer bilinear form. Vectors
//! are coordinate columns in the distinguished basis, and an [`Isometry`]
//! acts on them by left multiplication (its columns are the images of the
//! basis vectors).

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LatticeError;
use crate::matrix::{content, hermite_rows, IntMatrix};

type Result<T> = std::result::Result<T, LatticeError>;

/// Integer coordinates of a lattice element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector::new(vec![BigInt::zero(); rank])
    }

    /// The `i`-th standard basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.coords[i] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, a: &BigInt) -> Self {
        LatticeVector::new(self.coords.iter().map(|c| c * a).collect())
    }

    pub fn neg(&self) -> Self {
        self.scaled(&BigInt::from(-1))
    }

    /// gcd of the coordinates.
    pub fn content(&self) -> BigInt {
        content(&self.coords)
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        LatticeVector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Inertia indices of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature { positive, negative, zero }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

impl Add for Signature {
    type Output = Signature;

    fn add(self, rhs: Signature) -> Signature {
        Signature::new(
            self.positive + rhs.positive,
            self.negative + rhs.negative,
            self.zero + rhs.zero,
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// A free abelian group with a symmetric integer bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: IntMatrix,
}

impl Lattice {
    /// Wraps a Gram matrix, rejecting non-square or non-symmetric input.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(LatticeError::Ragged {
                row: 0,
                len: gram.ncols(),
                expected: gram.nrows(),
            });
        }
        if let Some((i, j)) = gram.first_asymmetry() {
            return Err(LatticeError::NotSymmetric { i, j });
        }
        Ok(Lattice { gram })
    }

    /// Builds a lattice from nested rows, reporting ragged input precisely.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(LatticeError::Ragged { row, len: r.len(), expected: n });
            }
        }
        // square by the check above
        Lattice::new(IntMatrix::from_rows(rows).unwrap_or_else(|| IntMatrix::zeros(0, 0)))
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Lattice::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// The rank-0 lattice.
    pub fn empty() -> Self {
        Lattice { gram: IntMatrix::zeros(0, 0) }
    }

    /// The rank-1 lattice `<a>`.
    pub fn rank_one(a: i64) -> Self {
        Lattice { gram: IntMatrix::from_i64(&[[a]]) }
    }

    /// Diagonal lattice `<a_1> + ... + <a_k>`.
    pub fn diagonal(entries: &[i64]) -> Self {
        entries
            .iter()
            .fold(Lattice::empty(), |acc, &a| acc.direct_sum(&Lattice::rank_one(a)))
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    fn check(&self, v: &LatticeVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                actual: v.len(),
            });
        }
        Ok(())
    }

    /// `G v`, the coefficients of the functional `x -> (x, v)`.
    fn pairing_row(&self, v: &LatticeVector) -> Vec<BigInt> {
        self.gram.apply(v.coords())
    }

    /// The bilinear form `x^T G y`.
    pub fn product(&self, x: &LatticeVector, y: &LatticeVector) -> Result<BigInt> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.coords().iter().zip(self.pairing_row(y)).map(|(a, b)| a * b).sum())
    }

    pub fn square(&self, x: &LatticeVector) -> Result<BigInt> {
        self.product(x, x)
    }

    /// Determinant of the Gram matrix (1 for the rank-0 lattice).
    pub fn discriminant(&self) -> BigInt {
        self.gram.determinant()
    }

    /// Inertia indices by exact rational congruence diagonalization.
    pub fn signature(&self) -> Signature {
        let n = self.rank();
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.gram[(i, j)].clone()))
                    .collect()
            })
            .collect();
        let mut sig = Signature::default();
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(p) = (k + 1..n).find(|&p| !a[p][p].is_zero()) {
                    swap_sym(&mut a, k, p);
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                {
                    // All remaining diagonal entries vanish: row_i += row_j
                    // (and the same on columns) makes a[i][i] = 2 a[i][j] != 0.
                    add_sym(&mut a, i, j);
                    swap_sym(&mut a, k, i);
                } else {
                    sig.zero += n - k;
                    break;
                }
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let factor = &a[r][k] / &pivot;
                let (top, bottom) = a.split_at_mut(r);
                for (dst, src) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                    *dst -= &factor * src;
                }
                for row in &mut a[k..n] {
                    let v = &factor * &row[k];
                    row[r] -= v;
                }
            }
        }
        sig
    }

    /// True iff every diagonal entry of the Gram matrix is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    /// The reflection `x -> x - (2(x,e)/(e,e)) e` in a vector with `(e,e) = +-2`.
    ///
    /// For `(e,e) = -2` this is `x -> x + (x,e) e`.
    pub fn reflection(&self, e: &LatticeVector) -> Result<Isometry> {
        self.check(e)?;
        let square = self.square(e)?;
        let two = BigInt::from(2);
        if square != two && square != -&two {
            return Err(LatticeError::BadReflectionSquare(square));
        }
        let row = self.pairing_row(e);
        let n = self.rank();
        let mut m = IntMatrix::identity(n);
        for (j, pair) in row.iter().enumerate() {
            // 2(x,e)/(e,e) = +-(x,e), always integral
            let coef = (pair * &two) / &square;
            for i in 0..n {
                m[(i, j)] -= &coef * &e.coords()[i];
            }
        }
        Ok(Isometry { matrix: m, lattice: self.clone() })
    }

    /// The involution `z -> -z + (z,r) r` for `(r,r) = 2`.
    pub fn negated_reflection(&self, r: &LatticeVector) -> Result<Isometry> {
        self.check(r)?;
        let square = self.square(r)?;
        if square != BigInt::from(2) {
            return Err(LatticeError::BadReflectionSquare(square));
        }
        let refl = self.reflection(r)?;
        Ok(Isometry { matrix: refl.matrix.neg(), lattice: self.clone() })
    }

    /// Canonical basis of `{ x : (x, v) = 0 }`, always saturated.
    pub fn orthogonal_complement(&self, v: &LatticeVector) -> Result<Vec<LatticeVector>> {
        self.check(v)?;
        if v.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        let functional = IntMatrix::from_rows(vec![self.pairing_row(v)])
            .expect("single row");
        Ok(functional
            .integer_kernel()
            .into_iter()
            .map(LatticeVector::new)
            .collect())
    }

    fn check_basis(&self, basis: &[LatticeVector]) -> Result<IntMatrix> {
        for b in basis {
            self.check(b)?;
        }
        let rows = IntMatrix::from_rows(basis.iter().map(|b| b.coords().to_vec()).collect())
            .unwrap_or_else(|| IntMatrix::zeros(0, self.rank()));
        if rows.rank() != basis.len() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(rows)
    }

    /// The sublattice spanned by `basis`, as an abstract lattice with Gram `B^T G B`.
    pub fn induced_gram(&self, basis: &[LatticeVector]) -> Result<Lattice> {
        let rows = self.check_basis(basis)?;
        let b = rows.transpose();
        let g = &(&rows * &self.gram) * &b;
        Ok(Lattice { gram: g })
    }

    /// Basis of `(Q-span of basis) ∩ Z^rank`, in Hermite normal form.
    pub fn saturation(&self, basis: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
        let rows = self.check_basis(basis)?;
        let n = self.rank();
        let annihilator = rows.integer_kernel();
        let ann = if annihilator.is_empty() {
            IntMatrix::zeros(0, n)
        } else {
            IntMatrix::from_rows(annihilator).expect("kernel rows have equal length")
        };
        Ok(ann.integer_kernel().into_iter().map(LatticeVector::new).collect())
    }

    /// True iff the coordinates of `v` are coprime.
    pub fn is_primitive(&self, v: &LatticeVector) -> Result<bool> {
        self.check(v)?;
        if v.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        Ok(v.content().is_one())
    }

    /// Orthogonal direct sum (block-diagonal Gram).
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        Lattice { gram: self.gram.block_diag(&other.gram) }
    }

    /// `n` orthogonal copies of `self`.
    pub fn power(&self, n: usize) -> Lattice {
        (0..n).fold(Lattice::empty(), |acc, _| acc.direct_sum(self))
    }

    /// The twist `L(a)`: every product multiplied by `a`.
    pub fn rescale(&self, a: i64) -> Result<Lattice> {
        if a == 0 {
            return Err(LatticeError::ZeroScale);
        }
        Ok(Lattice { gram: self.gram.scale(&BigInt::from(a)) })
    }

    /// True iff `M^T G M = G`.
    pub fn is_isometry(&self, m: &IntMatrix) -> Result<bool> {
        if m.nrows() != self.rank() || m.ncols() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                actual: if m.nrows() != self.rank() { m.nrows() } else { m.ncols() },
            });
        }
        Ok(&(&m.transpose() * &self.gram) * m == self.gram)
    }

    /// Wraps a matrix as an isometry of this lattice after checking it.
    pub fn isometry(&self, m: IntMatrix) -> Result<Isometry> {
        if !self.is_isometry(&m)? {
            return Err(LatticeError::NotAnIsometry);
        }
        Ok(Isometry { matrix: m, lattice: self.clone() })
    }
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn add_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    let row_j = a[j].clone();
    for (x, v) in a[i].iter_mut().zip(row_j) {
        *x += v;
    }
    for row in a.iter_mut() {
        let v = row[j].clone();
        row[i] += v;
    }
}

/// Necessary condition for a lattice of discriminant `d_sub` to sit with
/// finite index inside one of discriminant `d_sup`: `d_sub = index^2 * d_sup`.
pub fn sublattice_discriminant_test(d_sub: &BigInt, d_sup: &BigInt) -> Result<bool> {
    if d_sup.is_zero() {
        return Err(LatticeError::ZeroDiscriminant);
    }
    let (q, r) = d_sub.div_rem(d_sup);
    if !r.is_zero() || q.is_negative() {
        return Ok(false);
    }
    let s = q.sqrt();
    Ok(&s * &s == q)
}

/// True iff the two families span the same sublattice of `Z^n`.
pub fn same_span(a: &[LatticeVector], b: &[LatticeVector]) -> bool {
    let rows = |v: &[LatticeVector]| -> Vec<Vec<BigInt>> { v.iter().map(|x| x.coords().to_vec()).collect() };
    hermite_rows(&rows(a)) == hermite_rows(&rows(b))
}

/// An integer matrix preserving the form of its lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    matrix: IntMatrix,
    lattice: Lattice,
}

impl Isometry {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        self.lattice.check(v)?;
        Ok(LatticeVector::new(self.matrix.apply(v.coords())))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            matrix: &self.matrix * &other.matrix,
            lattice: self.lattice.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMatrix::identity(self.lattice.rank())
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ns(d: i64) -> Lattice {
        Lattice::from_i64(&[[d, 0], [0, -2]]).unwrap()
    }

    fn hyperbolic() -> Lattice {
        Lattice::from_i64(&[[0, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn product_examples() {
        let l = ns(10);
        assert_eq!(l.product(&v(&[1, 0]), &v(&[1, 0])).unwrap(), bi(10));
        assert_eq!(l.product(&v(&[1, 0]), &v(&[0, 1])).unwrap(), bi(0));
        assert_eq!(l.product(&v(&[0, 0]), &v(&[3, -7])).unwrap(), bi(0));
    }

    #[test]
    fn product_dimension_mismatch() {
        let err = ns(10).product(&v(&[1, 0, 0]), &v(&[1, 0])).unwrap_err();
        assert_eq!(err, LatticeError::DimensionMismatch { expected: 2, actual: 3 });
    }

    #[test]
    fn rejects_asymmetric_and_ragged() {
        assert_eq!(
            Lattice::from_i64(&[[1, 2], [3, 4]]).unwrap_err(),
            LatticeError::NotSymmetric { i: 0, j: 1 }
        );
        let ragged = vec![vec![bi(1), bi(2)], vec![bi(2)]];
        assert!(matches!(Lattice::from_rows(ragged), Err(LatticeError::Ragged { row: 1, .. })));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(Lattice::from_i64(&[[10, 11], [11, 10]]).unwrap().discriminant(), bi(-21));
        assert_eq!(hyperbolic().discriminant(), bi(-1));
        assert_eq!(Lattice::from_i64(&[[2, 8], [8, -2]]).unwrap().discriminant(), bi(-68));
        assert_eq!(Lattice::empty().discriminant(), bi(1));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(hyperbolic().signature(), Signature::new(1, 1, 0));
        let r1 = Lattice::from_i64(&[[10, 11], [11, 10]]).unwrap();
        assert_eq!(r1.signature(), Signature::new(1, 1, 0));
        assert_eq!(Lattice::from_i64(&[[0, 0], [0, 0]]).unwrap().signature(), Signature::new(0, 0, 2));
        assert_eq!(Lattice::from_i64(&[[1, 1], [1, 1]]).unwrap().signature(), Signature::new(1, 0, 1));
        // zero diagonal forcing the row-addition step mid-way
        let l = Lattice::from_i64(&[[1, 0, 0], [0, 0, 3], [0, 3, 0]]).unwrap();
        assert_eq!(l.signature(), Signature::new(2, 1, 0));
    }

    #[test]
    fn evenness() {
        assert!(ns(10).is_even());
        assert!(!Lattice::diagonal(&[1, -1]).is_even());
    }

    #[test]
    fn reflection_fixes_orthogonal_vectors() {
        let l = ns(10);
        let e = v(&[0, 1]);
        let refl = l.reflection(&e).unwrap();
        assert_eq!(refl.apply(&v(&[1, 0])).unwrap(), v(&[1, 0]));
        assert_eq!(refl.apply(&e).unwrap(), v(&[0, -1]));
        assert!(refl.compose(&refl).is_identity());
    }

    #[test]
    fn reflection_in_square_two_class() {
        let l = ns(10);
        let r = v(&[1, -2]);
        let minus = l.reflection(&r).unwrap();
        assert_eq!(minus.apply(&v(&[1, 0])).unwrap().neg(), v(&[9, -20]));
    }

    #[test]
    fn reflection_rejects_bad_vectors() {
        let l = ns(10);
        assert!(matches!(l.reflection(&v(&[1, 0])), Err(LatticeError::BadReflectionSquare(_))));
        // odd pairings are fine: the coefficient is +-(x,e)
        let odd = Lattice::from_i64(&[[-2, 1], [1, 3]]).unwrap();
        let refl = odd.reflection(&v(&[1, 0])).unwrap();
        assert_eq!(refl.apply(&v(&[0, 1])).unwrap(), v(&[1, 1]));
        assert!(odd.is_isometry(refl.matrix()).unwrap());
    }

    #[test]
    fn negated_reflection_examples() {
        let l = ns(10);
        let r = v(&[1, -2]);
        let j = l.negated_reflection(&r).unwrap();
        assert_eq!(j.apply(&v(&[0, 1])).unwrap(), v(&[4, -9]));
        assert_eq!(j.apply(&r).unwrap(), r);
        assert!(j.compose(&j).is_identity());
        assert!(matches!(l.negated_reflection(&v(&[0, 1])), Err(LatticeError::BadReflectionSquare(_))));
    }

    #[test]
    fn orthogonal_complement_examples() {
        assert_eq!(ns(10).orthogonal_complement(&v(&[0, 1])).unwrap(), vec![v(&[1, 0])]);
        assert_eq!(hyperbolic().orthogonal_complement(&v(&[1, 0])).unwrap(), vec![v(&[1, 0])]);
        assert_eq!(ns(10).orthogonal_complement(&v(&[0, 0])).unwrap_err(), LatticeError::ZeroVector);
        // Pi(1): complement of delta_2 is gamma + 4 delta_2
        let pi = Lattice::from_i64(&[[2, 8], [8, -2]]).unwrap();
        assert_eq!(pi.orthogonal_complement(&v(&[0, 1])).unwrap(), vec![v(&[1, 4])]);
    }

    #[test]
    fn induced_gram_examples() {
        let l = ns(10);
        assert_eq!(l.induced_gram(&[v(&[0, 2])]).unwrap(), Lattice::from_i64(&[[-8]]).unwrap());
        assert_eq!(l.induced_gram(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), l);
        assert_eq!(
            l.induced_gram(&[v(&[1, 1]), v(&[2, 2])]).unwrap_err(),
            LatticeError::DependentBasis
        );
    }

    #[test]
    fn saturation_examples() {
        let l = ns(10);
        assert_eq!(l.saturation(&[v(&[0, 2])]).unwrap(), vec![v(&[0, 1])]);
        assert_eq!(
            l.saturation(&[v(&[1, 0]), v(&[0, 1])]).unwrap(),
            vec![v(&[1, 0]), v(&[0, 1])]
        );
        assert_eq!(l.saturation(&[v(&[2, 4]), v(&[1, 2])]).unwrap_err(), LatticeError::DependentBasis);
    }

    #[test]
    fn primitivity() {
        let l = ns(10);
        assert!(l.is_primitive(&v(&[1, -2])).unwrap());
        assert!(!l.is_primitive(&v(&[0, 2])).unwrap());
        assert!(l.is_primitive(&v(&[0, 1])).unwrap());
        assert_eq!(l.is_primitive(&v(&[0, 0])).unwrap_err(), LatticeError::ZeroVector);
    }

    #[test]
    fn discriminant_test_examples() {
        assert!(!sublattice_discriminant_test(&bi(-20), &bi(-21)).unwrap());
        assert!(sublattice_discriminant_test(&bi(-80), &bi(-20)).unwrap());
        assert!(sublattice_discriminant_test(&bi(-7), &bi(-7)).unwrap());
        assert!(!sublattice_discriminant_test(&bi(-40), &bi(-20)).unwrap());
        assert!(!sublattice_discriminant_test(&bi(20), &bi(-20)).unwrap());
        assert_eq!(
            sublattice_discriminant_test(&bi(5), &bi(0)).unwrap_err(),
            LatticeError::ZeroDiscriminant
        );
    }

    #[test]
    fn direct_sum_and_rescale() {
        let uu = hyperbolic().direct_sum(&hyperbolic());
        assert_eq!(uu.rank(), 4);
        assert_eq!(uu.discriminant(), bi(1));
        assert_eq!(ns(10).direct_sum(&Lattice::empty()), ns(10));
        assert_eq!(ns(10).rescale(1).unwrap(), ns(10));
        let two = Lattice::rank_one(1).rescale(2).unwrap();
        assert_eq!(two, Lattice::rank_one(2));
        assert_eq!(two.discriminant(), bi(2));
        assert_eq!(ns(10).rescale(0).unwrap_err(), LatticeError::ZeroScale);
    }

    #[test]
    fn isometry_checks() {
        let l = ns(10);
        let j = IntMatrix::from_i64(&[[9, 4], [-20, -9]]);
        assert!(l.is_isometry(&j).unwrap());
        assert!(l.is_isometry(&IntMatrix::identity(2)).unwrap());
        assert!(!l.is_isometry(&IntMatrix::from_i64(&[[2, 0], [0, 1]])).unwrap());
        assert!(l.is_isometry(&IntMatrix::identity(3)).is_err());
        assert_eq!(
            l.isometry(IntMatrix::from_i64(&[[2, 0], [0, 1]])).unwrap_err(),
            LatticeError::NotAnIsometry
        );
        let iso = l.isometry(j).unwrap();
        assert_eq!(iso.determinant().abs(), bi(1));
    }
}
