use thiserror::Error;

/// Errors shared across the numerical modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Evaluation point is lattice-equivalent to the Green's function pole.
    #[error("evaluation point within {radius:.3e} of the Green's function pole")]
    SingularPole { radius: f64 },

    /// A series or extrapolation could not be certified at the requested tolerance.
    #[error("truncation not certifiable at tol {tol:.3e}: {context}")]
    TruncationFailure { tol: f64, context: String },

    /// Two configuration points closer than the separation floor.
    #[error("configuration points {i} and {j} separated by {dist:.3e} < floor {floor:.3e}")]
    SeparationViolation {
        i: usize,
        j: usize,
        dist: f64,
        floor: f64,
    },

    /// Grid spacing too coarse for the concentration scale.
    #[error("grid too coarse: {points_across:.2} points across delta = {delta:.3e} (need >= {required})")]
    GridTooCoarse {
        delta: f64,
        points_across: f64,
        required: f64,
    },

    /// Adaptive quadrature failed to reach its tolerance.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    /// Newton iteration hit its cap without reaching tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Krylov linear solve stagnated.
    #[error("linear solve stagnation at iteration {iterations} (relative residual {rel_residual:.3e})")]
    LinearSolveStagnation {
        iterations: usize,
        rel_residual: f64,
    },

    /// Iterative eigensolver failed to converge.
    #[error("eigensolver failure: {0}")]
    EigensolverFailure(String),

    /// Exponent overflow in the nonlinearity; reported, never wrapped.
    #[error("overflow guard: max lambda*v^2 = {max_exponent:.1} > 700")]
    Overflow { max_exponent: f64 },

    /// Invalid configuration or argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
