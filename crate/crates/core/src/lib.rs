//! Exact finite-dimensional algebras given by structure constants, their
//! derivation spaces, invertible derivations satisfying the square condition,
//! and the twisted algebras built from them.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod exact;
pub mod io;
pub mod search;
pub mod suite;

pub use algebra::{default_basis, Algebra, BilinearOp, Kind, LinearMap};
pub use axioms::{AxiomId, CheckReport, Witness};
pub use derivations::{derivation_space, invder_search, is_derivation, is_invder, DerivationSpace, InvDerAlgebra, InvDerVerdict, SearchBounds, SearchOutcome};
pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Vector};
pub use io::AlgebraFile;
