//! Zero-mean Green's function of the flat rectangular torus.
//!
//! `−ΔG(·,p) = δ_p − 1/|T|` with `∫G = 0`. Two independent evaluators are
//! provided: [`ThetaGreen`] (theta-product representation, with analytic
//! gradient and Hessian) and [`EwaldGreen`] (Gaussian-split lattice sum,
//! value only, used as a cross-validation oracle). The additive constant of
//! the theta representation is fixed by matching `G(p3)` to the half-period
//! series `f3(τ)`, the only in-text ground truth.

mod ewald;
mod series;
mod theta;

pub use ewald::EwaldGreen;
pub use series::{half_period_values, tau_thresholds, HalfPeriodTable};
pub use theta::ThetaGreen;

use crate::geom::TorusGeometry;
use crate::Result;

/// Value, gradient and Hessian of G at a point.
#[derive(Debug, Clone, Copy)]
pub struct GreenValue {
    pub value: f64,
    /// ∇G, units 1/length.
    pub gradient: [f64; 2],
    /// Symmetric 2×2 Hessian, units 1/length².
    pub hessian: [[f64; 2]; 2],
}

/// Common interface of the torus Green's function evaluators.
///
/// Evaluators are immutable after construction and safe to share across
/// threads.
pub trait GreenEvaluator: Sync {
    fn geometry(&self) -> &TorusGeometry;

    /// G with derivatives at `z` (pole at the origin).
    fn eval(&self, z: [f64; 2]) -> Result<GreenValue>;

    /// G(z) alone.
    fn value(&self, z: [f64; 2]) -> Result<f64> {
        Ok(self.eval(z)?.value)
    }

    /// Regular part `H(z) = G(z) + log|z|/2π`, smooth through the pole.
    fn regular_part(&self, z: [f64; 2]) -> f64;

    /// Robin constant `H(0)`; on a torus it is independent of the pole.
    fn robin(&self) -> f64 {
        self.regular_part([0.0, 0.0])
    }
}

/// Per-half-period criticality report: gradient norm and Hessian
/// classification of G at p1, p2, p3.
#[derive(Debug, Clone)]
pub struct CriticalityReport {
    pub period: [f64; 2],
    pub grad_norm: f64,
    pub hess_det: f64,
    pub kind: CriticalKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    Saddle,
    Minimum,
    Maximum,
    Degenerate,
}

/// Classify G at the three half periods.
///
/// The gradient vanishes there by lattice symmetry; p1 and p2 are saddles and
/// p3 is the global minimum.
pub fn half_period_criticality<G: GreenEvaluator>(green: &G) -> Result<Vec<CriticalityReport>> {
    let geom = *green.geometry();
    let mut out = Vec::with_capacity(3);
    for p in geom.half_periods() {
        let gv = green.eval(p)?;
        let det = gv.hessian[0][0] * gv.hessian[1][1] - gv.hessian[0][1] * gv.hessian[1][0];
        let kind = if det.abs() < 1e-12 / geom.area() {
            CriticalKind::Degenerate
        } else if det < 0.0 {
            CriticalKind::Saddle
        } else if gv.hessian[0][0] > 0.0 {
            CriticalKind::Minimum
        } else {
            CriticalKind::Maximum
        };
        out.push(CriticalityReport {
            period: p,
            grad_norm: gv.gradient[0].hypot(gv.gradient[1]),
            hess_det: det,
            kind,
        });
    }
    Ok(out)
}

/// Robin constant with a Richardson-extrapolation certificate.
///
/// The analytic limit of the theta representation is returned; it is
/// certified by extrapolating `G(r,0) + log(r)/2π` in r² along a shrinking
/// radius sequence and demanding agreement within `tol`.
pub fn robin_constant(green: &ThetaGreen, tol: f64) -> Result<f64> {
    let analytic = green.robin();
    let r0 = 1e-3 * green.geometry().min_side();
    let sample = |r: f64| -> Result<f64> {
        Ok(green.value([r, 0.0])? + r.ln() / (2.0 * std::f64::consts::PI))
    };
    // H(r) = H(0) + c r^2 + O(r^4): one Richardson level kills the r^2 term
    let h0 = sample(r0)?;
    let h1 = sample(0.5 * r0)?;
    let h2 = sample(0.25 * r0)?;
    let e1 = (4.0 * h1 - h0) / 3.0;
    let e2 = (4.0 * h2 - h1) / 3.0;
    if (e1 - e2).abs() > tol || (e2 - analytic).abs() > tol {
        return Err(crate::Error::TruncationFailure {
            tol,
            context: format!(
                "robin extrapolation disagreement: levels {e1:.15e}, {e2:.15e}, analytic {analytic:.15e}"
            ),
        });
    }
    Ok(analytic)
}
