//! `meanspin` represents spin-1/2 (qubit) states by the three mean spin
//! projections (sx, sy, sz) onto orthogonal axes and works with them
//! directly:
//!
//! - [`qcore`] holds the value types: spinors, structurally Hermitian 2x2
//!   density matrices, and the mean/probability/sigma triples.
//! - [`represent`] converts among the four state descriptions
//!   (means, probabilities, density matrix, spinor).
//! - [`superpose`] combines two pure states, given a sigma triple encoding
//!   the complex coefficients, in closed form over the nine real inputs and
//!   cross-checks the result against direct spinor arithmetic.
//! - [`measure`] simulates projective measurements with a pinned
//!   deterministic generator and runs the estimate-project-superpose
//!   pipeline end to end.
//!
//! All values are immutable and all operations are pure functions, so the
//! whole crate is thread-safe by construction.

pub mod error;
pub mod measure;
pub mod qcore;
pub mod represent;
pub mod superpose;

pub use error::{Error, Result};
pub use measure::{
    end_to_end_experiment, estimate_means, project_to_pure, simulate_shots, Axis, EstimatedMeans,
    ExperimentReport, ShotRecord,
};
pub use qcore::{
    density_from_spinor, DensityMatrix2, MeanSpinVector, ProbabilityTriple, SigmaTriple, Spinor,
};
pub use represent::{
    density_from_means, density_from_probabilities, means_from_density, means_from_probabilities,
    means_from_state, probabilities_from_means, state_from_means,
};
pub use superpose::{
    coefficients_from_sigma, normalization_t, sigma_from_coefficients, superpose_checked,
    superpose_closed, superpose_oracle, CheckedSuperposition, Method, SuperpositionResult,
};
