use epw_lattice::lattice::{same_span, Lattice, LatticeVector};
use epw_lattice::matrix::IntMatrix;
use epw_lattice::pell::{enumerate_negative, fundamental_negative, is_square};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

fn gram(n: usize) -> impl Strategy<Value = Lattice> {
    prop::collection::vec(-20i64..=20, n * n).prop_map(move |v| {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = BigInt::from(v[i * n + j]);
                m[(j, i)] = BigInt::from(v[i * n + j]);
            }
        }
        Lattice::new(m).unwrap()
    })
}

fn vector(n: usize) -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(-30i64..=30, n).prop_map(|v| LatticeVector::from_i64(&v))
}

fn lattice_and_vectors() -> impl Strategy<Value = (Lattice, LatticeVector, LatticeVector, LatticeVector)> {
    (1usize..=5).prop_flat_map(|n| (gram(n), vector(n), vector(n), vector(n)))
}

proptest! {
    #[test]
    fn product_is_symmetric((l, x, y, _) in lattice_and_vectors()) {
        prop_assert_eq!(l.product(&x, &y).unwrap(), l.product(&y, &x).unwrap());
    }

    #[test]
    fn product_is_bilinear((l, x, y, z) in lattice_and_vectors(), a in -9i64..=9, b in -9i64..=9) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let combo = &x.scaled(&a) + &y.scaled(&b);
        prop_assert_eq!(
            l.product(&combo, &z).unwrap(),
            a * l.product(&x, &z).unwrap() + b * l.product(&y, &z).unwrap()
        );
    }

    #[test]
    fn signature_is_basis_independent((l, _, _, _) in lattice_and_vectors(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (u, _) = epw_lattice::sample::unimodular(&mut rng, l.rank(), 8);
        let moved = Lattice::new(&(&u.transpose() * l.gram()) * &u).unwrap();
        prop_assert_eq!(moved.signature(), l.signature());
        prop_assert_eq!(moved.discriminant(), l.discriminant());
    }

    #[test]
    fn direct_sum_adds_signatures(a in (1usize..=4).prop_flat_map(gram), b in (0usize..=4).prop_flat_map(gram)) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.signature(), a.signature() + b.signature());
        prop_assert_eq!(s.discriminant(), a.discriminant() * b.discriminant());
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
    }

    #[test]
    fn complement_is_orthogonal_and_saturated((l, v, _, _) in lattice_and_vectors()) {
        prop_assume!(!v.is_zero());
        let perp = l.orthogonal_complement(&v).unwrap();
        for w in &perp {
            prop_assert_eq!(l.product(w, &v).unwrap(), BigInt::from(0));
        }
        if !perp.is_empty() {
            prop_assert!(same_span(&l.saturation(&perp).unwrap(), &perp));
        }
    }

    #[test]
    fn saturation_contains_input((l, x, y, _) in lattice_and_vectors()) {
        prop_assume!(l.rank() >= 2);
        let basis = vec![x, y];
        let rows = IntMatrix::from_rows(basis.iter().map(|b| b.coords().to_vec()).collect()).unwrap();
        prop_assume!(rows.rank() == 2);
        let sat = l.saturation(&basis).unwrap();
        prop_assert_eq!(sat.len(), 2);
        let mut joined = sat.clone();
        joined.extend(basis.iter().cloned());
        prop_assert!(same_span(&joined, &sat));
        // index^2 law for the finite-index inclusion
        let d_sub = l.induced_gram(&basis).unwrap().discriminant();
        let d_sat = l.induced_gram(&sat).unwrap().discriminant();
        if d_sat != BigInt::from(0) {
            prop_assert!(epw_lattice::lattice::sublattice_discriminant_test(&d_sub, &d_sat).unwrap());
        }
    }

    #[test]
    fn pell_enumeration_is_exact_and_increasing(d in 2u64..3000, k in 1usize..6) {
        prop_assume!(!is_square(d));
        if fundamental_negative(d).unwrap().is_some() {
            let sols = enumerate_negative(d, k).unwrap();
            for s in &sols {
                prop_assert_eq!(s.y() * s.y() + BigUint::one(), BigUint::from(d) * s.x() * s.x());
                let (u, w) = s.to_positive_unit();
                prop_assert_eq!(&u * &u, BigUint::from(d) * &w * &w + BigUint::one());
            }
            for pair in sols.windows(2) {
                prop_assert!(pair[0].x() < pair[1].x() && pair[0].y() < pair[1].y());
            }
        }
    }
}
