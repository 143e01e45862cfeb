//! Named lattices.
//!
//! Sign conventions: `E8` is positive definite, `U` is `[[0,1],[1,0]]` and
//! `<a>` has Gram `[[a]]`. With these choices `2E8 + 2U + 2<2>` has
//! signature (20,2), and the K3 lattice `3U + 2E8(-1)` is built with an
//! explicit twist.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::LatticeError;
use crate::lattice::{Lattice, LatticeVector, Signature};

/// Identifier of a catalog lattice, parsed from names like `NS_HILB(10)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    /// Hyperbolic plane.
    U,
    /// The E8 root lattice, positive definite.
    E8,
    /// The rank-one lattice `<a>`.
    A1(i64),
    /// `22<1> + 2<-1>`.
    I22_2,
    /// `Zu + Zv` with `u^2 = v^2 = 2, uv = 0`.
    Lambda2,
    /// `2E8 + 2U + 2<2>`.
    Lambda0,
    /// `3U + 2E8(-1)`.
    K3,
    /// Neron-Severi of the Hilbert square, basis `(h, delta)`.
    NsHilb(i64),
    /// Two degree-10 classes `f, h` with `(f,h) = n + 10`.
    R(i64),
    /// `R(n) + <-2>`, basis `(f, h, delta)`.
    Ns3(i64),
    /// The span of `gamma = h - 2 delta`, `delta_2 = 4f - 9 delta` in `NS3(n)`.
    Pi(i64),
}

impl CatalogId {
    /// Checks the parameter ranges.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let bad = |msg: String| Err(LatticeError::InvalidParameter(msg));
        match *self {
            CatalogId::A1(0) => bad("A1 needs a nonzero entry".into()),
            CatalogId::NsHilb(d) if d < 2 || d % 2 != 0 => {
                bad(format!("NS_HILB degree must be even and >= 2, got {d}"))
            }
            CatalogId::R(n) | CatalogId::Ns3(n) | CatalogId::Pi(n) if n < 1 => {
                bad(format!("{} index must be >= 1, got {n}", self.family_name()))
            }
            _ => Ok(()),
        }
    }

    fn family_name(&self) -> &'static str {
        match self {
            CatalogId::U => "U",
            CatalogId::E8 => "E8",
            CatalogId::A1(_) => "A1",
            CatalogId::I22_2 => "I22_2",
            CatalogId::Lambda2 => "LAMBDA2",
            CatalogId::Lambda0 => "LAMBDA0",
            CatalogId::K3 => "K3",
            CatalogId::NsHilb(_) => "NS_HILB",
            CatalogId::R(_) => "R",
            CatalogId::Ns3(_) => "NS3",
            CatalogId::Pi(_) => "PI",
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family_name();
        match *self {
            CatalogId::A1(p)
            | CatalogId::NsHilb(p)
            | CatalogId::R(p)
            | CatalogId::Ns3(p)
            | CatalogId::Pi(p) => write!(f, "{name}({p})"),
            _ => f.write_str(name),
        }
    }
}

impl FromStr for CatalogId {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        let (name, param) = match upper.find('(') {
            Some(open) => {
                let inner = upper[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| LatticeError::InvalidParameter(format!("unbalanced parentheses in {s:?}")))?;
                let p: i64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| LatticeError::InvalidParameter(format!("bad parameter in {s:?}")))?;
                (&upper[..open], Some(p))
            }
            None => (upper.as_str(), None),
        };
        let id = match (name, param) {
            ("U", None) => CatalogId::U,
            ("E8", None) => CatalogId::E8,
            ("A1", Some(a)) => CatalogId::A1(a),
            ("I22_2", None) => CatalogId::I22_2,
            ("LAMBDA2", None) => CatalogId::Lambda2,
            ("LAMBDA0", None) => CatalogId::Lambda0,
            ("K3", None) => CatalogId::K3,
            ("NS_HILB", Some(d)) => CatalogId::NsHilb(d),
            ("R", Some(n)) => CatalogId::R(n),
            ("NS3", Some(n)) => CatalogId::Ns3(n),
            ("PI", Some(n)) => CatalogId::Pi(n),
            _ => return Err(LatticeError::InvalidParameter(format!("unknown lattice {s:?}"))),
        };
        id.validate()?;
        Ok(id)
    }
}

/// Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
const E8_EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];

pub fn hyperbolic_plane() -> Lattice {
    Lattice::from_i64(&[[0, 1], [1, 0]]).expect("symmetric")
}

pub fn e8() -> Lattice {
    let mut g = [[0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &E8_EDGES {
        g[a][b] = -1;
        g[b][a] = -1;
    }
    Lattice::from_i64(&g).expect("symmetric")
}

/// Gram `[[10, n+10], [n+10, 10]]` in the basis `(f, h)`.
pub fn r_lattice(n: i64) -> Lattice {
    Lattice::from_i64(&[[10, n + 10], [n + 10, 10]]).expect("symmetric")
}

/// `R(n)` extended by the half-diagonal, basis `(f, h, delta)`.
pub fn ns3(n: i64) -> Lattice {
    r_lattice(n).direct_sum(&Lattice::rank_one(-2))
}

/// `gamma = h - 2 delta` in `NS3` coordinates.
pub fn ns3_gamma() -> LatticeVector {
    LatticeVector::from_i64(&[0, 1, -2])
}

/// `delta_2 = 4f - 9 delta` in `NS3` coordinates.
pub fn ns3_delta2() -> LatticeVector {
    LatticeVector::from_i64(&[4, 0, -9])
}

/// Builds the lattice named by `id`.
pub fn build(id: CatalogId) -> Result<Lattice, LatticeError> {
    id.validate()?;
    let u = hyperbolic_plane;
    Ok(match id {
        CatalogId::U => u(),
        CatalogId::E8 => e8(),
        CatalogId::A1(a) => Lattice::rank_one(a),
        CatalogId::I22_2 => {
            let mut diag = vec![1i64; 22];
            diag.extend([-1, -1]);
            Lattice::diagonal(&diag)
        }
        CatalogId::Lambda2 => Lattice::diagonal(&[2, 2]),
        CatalogId::Lambda0 => e8()
            .power(2)
            .direct_sum(&u().power(2))
            .direct_sum(&Lattice::diagonal(&[2, 2])),
        CatalogId::K3 => u().power(3).direct_sum(&e8().rescale(-1)?.power(2)),
        CatalogId::NsHilb(d) => Lattice::from_i64(&[[d, 0], [0, -2]])?,
        CatalogId::R(n) => r_lattice(n),
        CatalogId::Ns3(n) => ns3(n),
        CatalogId::Pi(n) => ns3(n).induced_gram(&[ns3_gamma(), ns3_delta2()])?,
    })
}

/// Rank, discriminant, signature and parity of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogReport {
    pub rank: usize,
    pub discriminant: BigInt,
    pub signature: Signature,
    pub even: bool,
}

impl CatalogReport {
    pub fn of(lattice: &Lattice) -> Self {
        CatalogReport {
            rank: lattice.rank(),
            discriminant: lattice.discriminant(),
            signature: lattice.signature(),
            even: lattice.is_even(),
        }
    }
}

pub fn catalog_report(id: CatalogId) -> Result<CatalogReport, LatticeError> {
    Ok(CatalogReport::of(&build(id)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_grams() {
        assert_eq!(build(CatalogId::Lambda2).unwrap(), Lattice::from_i64(&[[2, 0], [0, 2]]).unwrap());
        assert_eq!(build(CatalogId::R(1)).unwrap(), Lattice::from_i64(&[[10, 11], [11, 10]]).unwrap());
        assert_eq!(build(CatalogId::Pi(1)).unwrap(), Lattice::from_i64(&[[2, 8], [8, -2]]).unwrap());
    }

    #[test]
    fn e8_is_unimodular_positive_definite() {
        let r = CatalogReport::of(&e8());
        assert_eq!(r.discriminant, bi(1));
        assert_eq!(r.signature, Signature::new(8, 0, 0));
        assert!(r.even);
        let neg = e8().rescale(-1).unwrap();
        assert_eq!(neg.signature(), Signature::new(0, 8, 0));
    }

    #[test]
    fn reports() {
        let l0 = catalog_report(CatalogId::Lambda0).unwrap();
        assert_eq!((l0.rank, l0.signature, l0.even), (22, Signature::new(20, 2, 0), true));
        assert_eq!(l0.discriminant, bi(4));
        let k3 = catalog_report(CatalogId::K3).unwrap();
        assert_eq!(k3.rank, 22);
        assert_eq!(k3.signature, Signature::new(3, 19, 0));
        assert_eq!(k3.discriminant, bi(-1));
        assert!(k3.even);
        let a1 = catalog_report(CatalogId::A1(-2)).unwrap();
        assert_eq!((a1.rank, a1.discriminant.clone(), a1.even), (1, bi(-2), true));
        let odd = catalog_report(CatalogId::I22_2).unwrap();
        assert_eq!(odd.signature, Signature::new(22, 2, 0));
        assert!(!odd.even);
    }

    #[test]
    fn parse_and_display() {
        for s in ["U", "E8", "A1(-2)", "I22_2", "LAMBDA2", "LAMBDA0", "K3", "NS_HILB(10)", "R(3)", "NS3(2)", "PI(7)"] {
            let id: CatalogId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("ns_hilb( 34 )".parse::<CatalogId>().unwrap(), CatalogId::NsHilb(34));
    }

    #[test]
    fn invalid_parameters() {
        for s in ["A1(0)", "NS_HILB(9)", "NS_HILB(0)", "R(0)", "PI(-1)", "NS3(0)", "FOO", "R", "R(x)", "E8(2)"] {
            assert!(s.parse::<CatalogId>().is_err(), "{s} should be rejected");
        }
        assert!(build(CatalogId::R(0)).is_err());
    }
}
