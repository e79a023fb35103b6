//! Exact-arithmetic construction and verification of Yetter-Drinfeld
//! structures over finite-dimensional Hopf algebras.
//!
//! The crate builds Hopf algebras from structure constants over Q or a
//! prime field, and mechanically verifies, with no tolerances anywhere:
//!
//! - Hopf algebra axioms, duals, and Hopf automorphisms;
//! - (alpha, beta)-twisted Yetter-Drinfeld modules and their compatibility
//!   conditions in both equivalent forms;
//! - the braided crossed group-category structure on the disjoint union of
//!   all twisted module categories: tensor products, conjugation functors,
//!   braidings with both hexagons, left/right duals with snake identities;
//! - diagonal crossed products, the Drinfeld double with its R-matrix, and
//!   the module-category correspondence;
//! - the quasitriangular T-coalgebra assembled from the crossed products,
//!   and that its representations reproduce the categorical structure;
//! - pairs in involution and the induced category and algebra isomorphisms.
//!
//! The `ydcheck` binary exposes the verification suites over JSON input
//! files; see the crate README for the formats.

pub mod dcp;
pub mod dt;
pub mod hopf;
pub mod io;
pub mod kernel;
pub mod pii;
pub mod report;
pub mod suite;
pub mod tcat;
pub mod ydmod;

/// Errors shared by the algebraic construction modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] kernel::KernelError),
    #[error(transparent)]
    Hopf(#[from] hopf::HopfError),
    #[error("component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("{0}")]
    Invalid(String),
}
