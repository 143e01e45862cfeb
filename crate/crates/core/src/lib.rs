//! Exact integral lattice arithmetic for Neron-Severi lattices of Hilbert
//! squares of K3 surfaces and double EPW sextics.
//!
//! - [`lattice`]: Gram-matrix lattices, products, discriminants, signatures,
//!   reflections, saturations and orthogonal complements.
//! - [`catalog`]: named lattices (`U`, `E8`, the K3 lattice, `NS(S^[2])`, ...).
//! - [`pell`]: the negative Pell equation `y^2 - D x^2 = -1`.
//! - [`family`]: the degree family `d(n) = 8n^2 + 16n + 10`, the Pell
//!   obstruction, and the involution fixing the EPW polarization.
//! - [`cli`], [`verify`]: the `epwlat` command line and its self-check.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod family;
pub mod lattice;
pub mod matrix;
pub mod pell;
pub mod sample;
pub mod verify;

pub use catalog::{build, catalog_report, CatalogId, CatalogReport};
pub use error::{FamilyError, LatticeError, PellError};
pub use family::{family, FamilyRecord, InvolutionReport, OgradyStatus};
pub use lattice::{Isometry, Lattice, LatticeVector, Signature};
pub use matrix::IntMatrix;
pub use pell::{ContinuedFraction, PellSolution};
