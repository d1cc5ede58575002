//! Dynamical Lie algebras of driven N-level quantum systems.
//!
//! Given an N-level Hamiltonian `H(t) = H0 + f(t)·H1` with diagonal drift
//! `H0` and nearest-neighbour dipole coupling `H1`, this crate constructs
//! the skew-Hermitian generators `iH0′` (traceless part) and `iH1`,
//! computes the real Lie algebra they generate by numerical commutator
//! closure, and classifies the result among `su(N)`, the odd orthogonal
//! algebra `so(2ℓ+1)`, the symplectic algebra `sp(ℓ)`, and proper
//! subalgebras — together with constructive certificates (descent
//! sequences and basis reconstructions) when the symmetric-coupling
//! criteria apply.

pub mod error;
pub mod exact;
pub mod linalg;
pub mod rules;
pub mod tables;

pub use error::{Error, Result};
pub use exact::IntMatrix;
pub use linalg::{C64, ComplexMatrix, ExtendOutcome, OrthoBasis, matrix_nullspace};
pub use tables::{Family, GenLabel, Generator, GeneratorTable, Root, TableRecord};

/// Default relative tolerance for rank/membership decisions.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
