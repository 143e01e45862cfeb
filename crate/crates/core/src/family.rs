//! Neron-Severi computations for Hilbert squares of K3 surfaces and double
//! EPW sextics.
//!
//! The Hilbert square `S^[2]` of a K3 surface of degree `d` has
//! `NS = Zh + Z delta` with `(h,h) = d`, `(h,delta) = 0`, `(delta,delta) = -2`.
//! A double EPW sextic carries a polarization `gamma` with `gamma^4 = 12`,
//! hence Beauville square 2 under the Fujiki relation `q^4 = 3 (q,q)^2`.
//!
//! The degree family is indexed by `n >= 1`:
//! `d(n) = 8n^2 + 16n + 10`, `g(n) = d(n)/2 + 1 = (2n+2)^2 + 2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::catalog::{ns3, ns3_delta2, ns3_gamma, r_lattice};
use crate::error::FamilyError;
use crate::lattice::{sublattice_discriminant_test, Isometry, Lattice, LatticeVector, Signature};
use crate::matrix::IntMatrix;
use crate::pell::{fundamental_negative, is_square, PellSolution};

type Result<T> = std::result::Result<T, FamilyError>;

/// Fujiki constant of deformations of Hilbert squares of K3 surfaces.
pub const FUJIKI_CONSTANT: i64 = 3;
/// Degree of an EPW sextic in P^5.
pub const EPW_SEXTIC_DEGREE: i64 = 6;
/// Degree of the double cover onto the sextic.
pub const COVERING_DEGREE: i64 = 2;

/// Largest family index whose degree fits comfortably in an `i64`.
pub const MAX_FAMILY_INDEX: i64 = 1_000_000_000;

/// `gamma^4` for the EPW polarization: covering degree times sextic degree.
pub fn epw_top_intersection() -> i64 {
    COVERING_DEGREE * EPW_SEXTIC_DEGREE
}

/// Solves `c * s^2 = q4` for `s >= 0`.
pub fn fujiki_degree_to_bb(q4: i64, c: i64) -> Result<i64> {
    let inconsistent = FamilyError::InconsistentFujiki { q4, c };
    if q4 < 0 || c < 1 || q4 % c != 0 {
        return Err(inconsistent);
    }
    let sq = (q4 / c) as u64;
    if !is_square(sq) {
        return Err(inconsistent);
    }
    Ok(crate::pell::isqrt(sq) as i64)
}

/// Outcome of the negative Pell test for a degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryCondition {
    pub d: i64,
    pub g: i64,
    pub solvable: bool,
    pub witness: Option<PellSolution>,
}

/// For `S^[2]` (Picard rank one, degree `d = 2g - 2 >= 10`) to be birational
/// to a double EPW sextic, `y^2 - (g-1) x^2 = -1` must be solvable: writing
/// `gamma = xh - y delta` gives `2 = d x^2 - 2 y^2`.
pub fn necessary_condition(d: i64) -> Result<NecessaryCondition> {
    if d < 10 || d % 2 != 0 {
        return Err(FamilyError::BadDegree(d));
    }
    let g = d / 2 + 1;
    let pell_d = (g - 1) as u64;
    let witness = if is_square(pell_d) {
        None
    } else {
        fundamental_negative(pell_d)?
    };
    Ok(NecessaryCondition { d, g, solvable: witness.is_some(), witness })
}

/// The involution `z -> -z + (z, gamma) gamma` on `Zh + Z delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub d: i64,
    pub m: i64,
    pub lattice: Lattice,
    /// `h - m delta`.
    pub gamma: LatticeVector,
    pub matrix: Isometry,
    pub image_of_h: LatticeVector,
    pub image_of_delta: LatticeVector,
}

/// Builds the involution fixing `gamma = h - m delta` on the degree-`d`
/// Neron-Severi lattice; requires `(gamma, gamma) = d - 2m^2 = 2`.
pub fn epw_involution(d: i64, m: i64) -> Result<InvolutionReport> {
    let lattice = Lattice::from_i64(&[[d, 0], [0, -2]])?;
    let gamma = LatticeVector::from_i64(&[1, -m]);
    let square = lattice.square(&gamma)?;
    if m < 1 || square != BigInt::from(2) {
        return Err(FamilyError::NotSquareTwo { d, m, square });
    }
    let matrix = lattice.negated_reflection(&gamma)?;
    let image_of_h = matrix.apply(&LatticeVector::basis(2, 0))?;
    let image_of_delta = matrix.apply(&LatticeVector::basis(2, 1))?;
    Ok(InvolutionReport { d, m, lattice, gamma, matrix, image_of_h, image_of_delta })
}

/// `8n^2 + 16n + 10`.
pub fn family_degree(n: i64) -> i64 {
    8 * n * n + 16 * n + 10
}

/// `(2n+2)^2 + 2`.
pub fn family_genus(n: i64) -> i64 {
    (2 * n + 2) * (2 * n + 2) + 2
}

fn check_index(n: i64) -> Result<()> {
    if !(1..=MAX_FAMILY_INDEX).contains(&n) {
        return Err(FamilyError::BadIndex(n));
    }
    Ok(())
}

/// Everything derived at index `n` of the degree family.
///
/// `gamma` and `delta2` are coordinates in `NS3(n)` (basis `f, h, delta`);
/// `h2` is in the basis `(gamma, delta2)` of `Pi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRecord {
    pub n: i64,
    /// `(h2, h2)`, read off the lattice.
    pub d: i64,
    pub g: i64,
    /// O'Grady's parameter, `2n + 2`.
    pub ogrady_r: i64,
    pub gram_pi: IntMatrix,
    pub gamma: LatticeVector,
    pub delta2: LatticeVector,
    pub gamma_delta2: BigInt,
    pub h2: LatticeVector,
    pub h2_square: BigInt,
    pub disc_pi: BigInt,
    pub pell: PellSolution,
}

impl FamilyRecord {
    pub fn pi(&self) -> Lattice {
        Lattice::new(self.gram_pi.clone()).expect("gram of Pi is symmetric")
    }

    /// Gram of `Pi` in the basis `(h2, delta2)`.
    pub fn gram_h2_delta2(&self) -> Lattice {
        self.pi()
            .induced_gram(&[self.h2.clone(), LatticeVector::basis(2, 1)])
            .expect("h2 and delta2 are independent")
    }
}

/// Computes the family record at `n` through lattice linear algebra.
pub fn family(n: i64) -> Result<FamilyRecord> {
    check_index(n)?;
    let ambient = ns3(n);
    let gamma = ns3_gamma();
    let delta2 = ns3_delta2();
    let pi = ambient.induced_gram(&[gamma.clone(), delta2.clone()])?;
    let gamma_delta2 = pi.gram()[(0, 1)].clone();
    let disc_pi = pi.discriminant();

    let delta2_in_pi = LatticeVector::basis(2, 1);
    let gamma_in_pi = LatticeVector::basis(2, 0);
    let mut complement = pi.orthogonal_complement(&delta2_in_pi)?;
    debug_assert_eq!(complement.len(), 1);
    let mut h2 = complement.remove(0);
    if pi.product(&h2, &gamma_in_pi)?.is_negative() {
        h2 = h2.neg();
    }
    let h2_square = pi.square(&h2)?;
    let d = h2_square.to_i64().ok_or(FamilyError::BadIndex(n))?;
    let g = d / 2 + 1;
    let pell = fundamental_negative((g - 1) as u64)?
        .ok_or(crate::error::PellError::Unsolvable((g - 1) as u64))?;

    Ok(FamilyRecord {
        n,
        d,
        g,
        ogrady_r: 2 * n + 2,
        gram_pi: pi.gram().clone(),
        gamma,
        delta2,
        gamma_delta2,
        h2,
        h2_square,
        disc_pi,
        pell,
    })
}

/// Discriminant of `R(n)` and whether a sublattice `Zh + ZE` of
/// discriminant `-20` (from a (-2)-curve `E` with `h.E = 0`) is ruled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R0Obstruction {
    pub disc_r: BigInt,
    pub contradiction_r0: bool,
}

/// The `R0` step for two degree-10 polarizations: `d(R) = -n(n+20)` cannot
/// divide `-20` with square quotient.
pub fn r0_discriminant_obstruction(n: i64) -> Result<R0Obstruction> {
    check_index(n)?;
    let disc_r = r_lattice(n).discriminant();
    let ok = sublattice_discriminant_test(&BigInt::from(-20), &disc_r)?;
    Ok(R0Obstruction { disc_r, contradiction_r0: !ok })
}

/// Discriminant of `R' = Zf + Z h_bar` after reflecting `h` in a (-2)-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectedInequality {
    pub disc_r_prime: BigInt,
    pub strict: bool,
}

/// Compares `d(R') = 100 - (f, h_bar)^2` with `d(R) = -n(n+20)`.
///
/// Only the regime `0 < (f, h_bar) < n + 10` is accepted: there
/// `(f, h_bar)^2 < (f, h)^2`, which is what the strict inequality needs.
/// Negative pairings are not covered by this argument.
pub fn reflected_discriminant_inequality(n: i64, fh_bar: i64) -> Result<ReflectedInequality> {
    check_index(n)?;
    let bound = n + 10;
    if fh_bar <= 0 || fh_bar >= bound {
        return Err(FamilyError::OutsideRegime { fh_bar, bound });
    }
    let r_prime = Lattice::from_i64(&[[10, fh_bar], [fh_bar, 10]])?;
    let disc_r_prime = r_prime.discriminant();
    let disc_r = r_lattice(n).discriminant();
    Ok(ReflectedInequality { strict: disc_r_prime > disc_r, disc_r_prime })
}

/// Sufficient condition for a primitive embedding into the K3 lattice:
/// even, nondegenerate, signature `(1, rank - 1)`, rank at most 10.
///
/// `false` means the criterion is inconclusive, not that no embedding exists.
pub fn k3_embedding_sufficient(lattice: &Lattice) -> bool {
    let rank = lattice.rank();
    (1..=10).contains(&rank)
        && lattice.is_even()
        && lattice.signature() == Signature::new(1, rank - 1, 0)
}

/// Where a genus `r^2 + 2` sits with respect to O'Grady's involution question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OgradyStatus {
    /// `r = 0`.
    KnownR0,
    /// `r = 2`, genus 6, degree 10.
    OgradyR2,
    /// Even `r >= 4`, covered by the family at `n = r/2 - 1`.
    EvenFamily { n: i64, record: Box<FamilyRecord> },
    /// Odd `r`.
    OddOpen { r: i64 },
}

impl fmt::Display for OgradyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OgradyStatus::KnownR0 => write!(f, "known case"),
            OgradyStatus::OgradyR2 => write!(f, "O'Grady, degree 10"),
            OgradyStatus::EvenFamily { n, record } => {
                write!(f, "even family: n={n}, d={}", record.d)
            }
            OgradyStatus::OddOpen { r: 1 } => write!(f, "odd: open (r=1 studied separately)"),
            OgradyStatus::OddOpen { .. } => write!(f, "odd: open"),
        }
    }
}

pub fn ogrady_status(r: i64) -> Result<OgradyStatus> {
    match r {
        _ if r < 0 => Err(FamilyError::NegativeR(r)),
        0 => Ok(OgradyStatus::KnownR0),
        2 => Ok(OgradyStatus::OgradyR2),
        _ if r % 2 == 1 => Ok(OgradyStatus::OddOpen { r }),
        _ => {
            let n = r / 2 - 1;
            Ok(OgradyStatus::EvenFamily { n, record: Box::new(family(n)?) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogId};

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn fujiki_examples() {
        assert_eq!(fujiki_degree_to_bb(12, 3).unwrap(), 2);
        assert_eq!(fujiki_degree_to_bb(0, 3).unwrap(), 0);
        assert_eq!(fujiki_degree_to_bb(48, 3).unwrap(), 4);
        assert!(fujiki_degree_to_bb(13, 3).is_err());
        assert!(fujiki_degree_to_bb(6, 3).is_err());
        assert!(fujiki_degree_to_bb(-3, 3).is_err());
        assert!(fujiki_degree_to_bb(12, 0).is_err());
    }

    #[test]
    fn top_intersection() {
        assert_eq!(epw_top_intersection(), 12);
        assert_eq!(fujiki_degree_to_bb(epw_top_intersection(), FUJIKI_CONSTANT).unwrap(), 2);
        assert_eq!(epw_top_intersection() % 2, 0);
    }

    #[test]
    fn necessary_condition_examples() {
        let c = necessary_condition(10).unwrap();
        assert!(c.solvable);
        assert_eq!(c.g, 6);
        assert_eq!(c.witness.unwrap().to_string(), "(2, 1)");
        let c = necessary_condition(34).unwrap();
        assert_eq!(c.witness.unwrap().to_string(), "(4, 1)");
        let c = necessary_condition(12).unwrap();
        assert!(!c.solvable && c.witness.is_none());
        // D = 16 is a perfect square
        assert!(!necessary_condition(32).unwrap().solvable);
        assert_eq!(necessary_condition(11).unwrap_err(), FamilyError::BadDegree(11));
        assert_eq!(necessary_condition(8).unwrap_err(), FamilyError::BadDegree(8));
    }

    #[test]
    fn involution_degree_ten() {
        let rep = epw_involution(10, 2).unwrap();
        assert_eq!(rep.image_of_h, v(&[9, -20]));
        assert_eq!(rep.image_of_delta, v(&[4, -9]));
        assert_eq!(rep.matrix.apply(&rep.gamma).unwrap(), rep.gamma);
    }

    #[test]
    fn involution_degree_34() {
        let rep = epw_involution(34, 4).unwrap();
        assert_eq!(rep.image_of_h, v(&[33, -136]));
        assert_eq!(rep.image_of_delta, v(&[8, -33]));
        assert!(rep.matrix.compose(&rep.matrix).is_identity());
        assert!(rep.lattice.is_isometry(rep.matrix.matrix()).unwrap());
    }

    #[test]
    fn involution_rejects_wrong_square() {
        assert!(matches!(epw_involution(12, 2), Err(FamilyError::NotSquareTwo { .. })));
        assert!(matches!(epw_involution(10, 0), Err(FamilyError::NotSquareTwo { .. })));
    }

    #[test]
    fn family_n1() {
        let rec = family(1).unwrap();
        assert_eq!((rec.d, rec.g, rec.ogrady_r), (34, 18, 4));
        assert_eq!(rec.gamma_delta2, bi(8));
        assert_eq!(rec.disc_pi, bi(-68));
        assert_eq!(rec.h2, v(&[1, 4]));
        assert_eq!(rec.h2_square, bi(34));
        assert_eq!(rec.pell.to_string(), "(4, 1)");
        assert_eq!(rec.gram_pi, IntMatrix::from_i64(&[[2, 8], [8, -2]]));
    }

    #[test]
    fn family_n2() {
        let rec = family(2).unwrap();
        assert_eq!((rec.d, rec.g, rec.ogrady_r), (74, 38, 6));
        assert_eq!(rec.gamma_delta2, bi(12));
        assert_eq!(rec.disc_pi, bi(-148));
        assert_eq!(rec.pell.to_string(), "(6, 1)");
    }

    #[test]
    fn family_h2_is_primitive_and_orthogonal() {
        for n in 1..=30 {
            let rec = family(n).unwrap();
            let pi = rec.pi();
            assert_eq!(pi.product(&rec.h2, &LatticeVector::basis(2, 1)).unwrap(), bi(0));
            assert!(pi.is_primitive(&rec.h2).unwrap());
            assert_eq!(rec.gram_h2_delta2(), Lattice::from_i64(&[[rec.d, 0], [0, -2]]).unwrap());
        }
        assert_eq!(family(0).unwrap_err(), FamilyError::BadIndex(0));
    }

    #[test]
    fn family_pi_is_saturated_in_ns3() {
        for n in 1..=20 {
            let amb = ns3(n);
            let basis = [ns3_gamma(), ns3_delta2()];
            let sat = amb.saturation(&basis).unwrap();
            assert!(crate::lattice::same_span(&sat, &basis));
        }
    }

    #[test]
    fn obstruction_examples() {
        let o = r0_discriminant_obstruction(1).unwrap();
        assert_eq!((o.disc_r, o.contradiction_r0), (bi(-21), true));
        let o = r0_discriminant_obstruction(10).unwrap();
        assert_eq!((o.disc_r, o.contradiction_r0), (bi(-300), true));
    }

    #[test]
    fn reflected_inequality_examples() {
        let r = reflected_discriminant_inequality(1, 10).unwrap();
        assert_eq!((r.disc_r_prime, r.strict), (bi(0), true));
        let r = reflected_discriminant_inequality(1, 1).unwrap();
        assert_eq!((r.disc_r_prime, r.strict), (bi(99), true));
        let r = reflected_discriminant_inequality(5, 14).unwrap();
        assert_eq!((r.disc_r_prime, r.strict), (bi(-96), true));
        assert!(reflected_discriminant_inequality(1, 11).is_err());
        assert!(reflected_discriminant_inequality(1, 0).is_err());
        assert!(reflected_discriminant_inequality(1, -3).is_err());
    }

    #[test]
    fn embedding_criterion() {
        assert!(k3_embedding_sufficient(&build(CatalogId::R(1)).unwrap()));
        assert!(!k3_embedding_sufficient(&build(CatalogId::I22_2).unwrap()));
        assert!(k3_embedding_sufficient(&build(CatalogId::NsHilb(10)).unwrap()));
        assert!(!k3_embedding_sufficient(&Lattice::empty()));
        assert!(!k3_embedding_sufficient(&build(CatalogId::E8).unwrap()));
    }

    #[test]
    fn ogrady_examples() {
        match ogrady_status(4).unwrap() {
            OgradyStatus::EvenFamily { n, record } => assert_eq!((n, record.d), (1, 34)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(ogrady_status(0).unwrap(), OgradyStatus::KnownR0);
        assert_eq!(ogrady_status(2).unwrap(), OgradyStatus::OgradyR2);
        assert_eq!(ogrady_status(3).unwrap(), OgradyStatus::OddOpen { r: 3 });
        assert_eq!(ogrady_status(4).unwrap().to_string(), "even family: n=1, d=34");
        assert_eq!(ogrady_status(5).unwrap().to_string(), "odd: open");
        assert_eq!(ogrady_status(-1).unwrap_err(), FamilyError::NegativeR(-1));
    }
}
