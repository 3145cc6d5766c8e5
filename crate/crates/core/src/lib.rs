//! Bubbling solutions of the Moser-Trudinger equation on flat rectangular tori.
//!
//! The equation is `Δu + λ(u e^{u²} − avg) = 0` with zero mean on a torus
//! `T = [−a/2,a/2) × [−b/2,b/2)`. For small λ its solutions concentrate at
//! critical points of a reduced energy built from the torus Green's function.
//! This crate provides the pieces needed to construct and verify such
//! solutions at desk scale:
//!
//! * [`green`] — zero-mean torus Green's function (theta-product and Ewald
//!   evaluators), half-period series, aspect-ratio thresholds, Robin constant;
//! * [`reduced`] — the reduced energy over bubble centers and weights, the
//!   two-bubble weight system and its branch catalog (the 7-vs-9 count);
//! * [`bubble`] — projected-bubble ansatz with exactly closed parameters,
//!   valid at arbitrarily small λ through a log-space expansion mode;
//! * [`residual`] — weighted sup-norm residual and linearization-gap
//!   measurements on multiscale sample clouds, plus moment integrals;
//! * [`kernels`] — approximate-kernel fields Z/PZ, their Gram matrix, and the
//!   near-kernel spectrum of the linearized operator;
//! * [`solver`] — spectral Newton refinement on a periodic grid, energy
//!   evaluation, family enumeration and λ-continuation.
//!
//! Everything is deterministic: sample clouds are seeded, and parallel
//! reductions (enabled through the default `parallel` feature) preserve
//! sequential ordering.

pub mod bubble;
pub mod error;
pub mod field;
pub mod geom;
pub mod green;
pub mod grid;
pub mod kernels;
pub mod par;
pub mod quad;
pub mod reduced;
pub mod residual;
pub mod solver;
pub mod special;

pub use error::Error;
pub use geom::TorusGeometry;
pub use green::{EwaldGreen, GreenEvaluator, GreenValue, HalfPeriodTable, ThetaGreen};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
