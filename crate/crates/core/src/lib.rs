//! Deterministic-LOCC convertibility of bipartite pure states.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`linalg`]: dense complex matrices, Kronecker products, partial trace,
//!   Gram matrices and a Jacobi eigensolver for small Hermitian matrices.
//! - [`schmidt`]: Schmidt vectors, entanglement entropy and the majorization
//!   classifier, including the closed-form test for three-level vectors.
//! - [`construction`]: the six-branch 3×32 witness states, the cloning and
//!   deleting machines as word substitutions, and closed-form spectra.
//! - [`sweep`]: classification of the witness pair across the overlap
//!   parameter, threshold location and the no-deleting check.
//!
//! IO, file formats and the command line live in the `locc-cli` crate.

#![no_std]

extern crate alloc;

pub mod construction;
pub mod error;
pub mod linalg;
pub mod schmidt;
pub mod sweep;
pub mod tol;

pub use construction::{
    apply_cloner, apply_deleter, build_initial, closed_form_final_spectrum,
    closed_form_initial_spectrum, expand, gram_reduced_density, BlankChoice, BranchTerm,
    ClosedFormSpectra, Expansion, QubitSpec, Sign, Symbol, SymbolicState,
};
pub use error::{Error, Result};
pub use linalg::{
    gram_matrix, hermitian_eigs, kron, partial_trace_b, CMatrix, DensityMatrix, Eigen, PureState,
};
pub use num_complex::Complex64;
pub use schmidt::{
    classify, entanglement_entropy, incomparable_fast_path_d3, majorizes, schmidt_vector,
    ConvertibilityVerdict, SchmidtVector,
};
pub use sweep::{
    classify_construction, find_threshold, no_deleting_check, sweep, PairReport, ThresholdResult,
};
