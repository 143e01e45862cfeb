//! Random instances for property checks.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::IntMatrix;

/// A random unimodular matrix and its inverse, as a product of `steps`
/// elementary transvections.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(c);
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = BigInt::from(-c);
        u = &u * &e;
        inv = &e_inv * &inv;
    }
    (u, inv)
}

/// Random symmetric Gram matrix with entries in `[-bound, bound]`.
pub fn symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Lattice {
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.gen_range(-bound..=bound));
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
    }
    Lattice::new(g).expect("symmetric by construction")
}

/// A lattice together with a vector of square `+2` or `-2`.
///
/// Built as a random Gram with first diagonal entry `+-2`, then moved to a
/// random basis so the root is not a coordinate vector.
pub fn reflection_case<R: Rng>(rng: &mut R) -> (Lattice, LatticeVector) {
    let n = rng.gen_range(1..=5);
    let base = symmetric(rng, n, 6);
    let mut g = base.gram().clone();
    g[(0, 0)] = BigInt::from(if rng.gen_bool(0.5) { 2 } else { -2 });
    let (u, inv) = unimodular(rng, n, 3 * n);
    let moved = &(&u.transpose() * &g) * &u;
    let root = LatticeVector::new(inv.column(0));
    (Lattice::new(moved).expect("congruent to a symmetric matrix"), root)
}

/// A random integer vector, resampled until nonzero.
pub fn nonzero_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> LatticeVector {
    loop {
        let v: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return LatticeVector::new(v);
        }
    }
}

/// `k` random vectors in `Z^n`, resampled until independent.
pub fn independent_vectors<R: Rng>(rng: &mut R, n: usize, k: usize, bound: i64) -> Vec<LatticeVector> {
    loop {
        let vs: Vec<LatticeVector> = (0..k).map(|_| nonzero_vector(rng, n, bound)).collect();
        let rows = IntMatrix::from_rows(vs.iter().map(|v| v.coords().to_vec()).collect())
            .expect("equal lengths");
        if rows.rank() == k {
            return vs;
        }
    }
}
