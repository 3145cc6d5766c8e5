use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Flat rectangular torus `[−a/2, a/2) × [−b/2, b/2)`.
///
/// Half periods are derived, never stored: `p1 = (a/2, 0)`, `p2 = (0, b/2)`,
/// `p3 = (a/2, b/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusGeometry {
    a: f64,
    b: f64,
}

impl TorusGeometry {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInput(format!(
                "torus sides must be positive finite, got a={a}, b={b}"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn unit_square() -> Self {
        Self { a: 1.0, b: 1.0 }
    }

    pub fn square(side: f64) -> Result<Self> {
        Self::new(side, side)
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Aspect ratio b/a.
    #[inline]
    pub fn tau(&self) -> f64 {
        self.b / self.a
    }

    #[inline]
    pub fn area(&self) -> f64 {
        self.a * self.b
    }

    #[inline]
    pub fn min_side(&self) -> f64 {
        self.a.min(self.b)
    }

    /// Half periods p1, p2, p3.
    pub fn half_periods(&self) -> [[f64; 2]; 3] {
        [
            [0.5 * self.a, 0.0],
            [0.0, 0.5 * self.b],
            [0.5 * self.a, 0.5 * self.b],
        ]
    }

    /// Uniformly scaled copy `s * geom`.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        Self::new(self.a * s, self.b * s)
    }

    /// Reduce a point to the centered fundamental cell `[−a/2, a/2) × [−b/2, b/2)`.
    ///
    /// Tie-break: the cell is half-open, so `a/2` maps to `−a/2`. Every module
    /// uses this one reduction.
    pub fn reduce_to_fundamental(&self, z: [f64; 2]) -> [f64; 2] {
        [wrap_half_open(z[0], self.a), wrap_half_open(z[1], self.b)]
    }

    /// Shortest lattice displacement from `q` to `p` (reduced `p − q`).
    pub fn displacement(&self, p: [f64; 2], q: [f64; 2]) -> [f64; 2] {
        self.reduce_to_fundamental([p[0] - q[0], p[1] - q[1]])
    }

    /// Torus distance between two points.
    pub fn distance(&self, p: [f64; 2], q: [f64; 2]) -> f64 {
        let d = self.displacement(p, q);
        // the reduced displacement already realizes the shortest image in each
        // coordinate except exactly on the cell boundary, where both images
        // have equal length
        d[0].hypot(d[1])
    }
}

/// Wrap x into [−period/2, period/2).
#[inline]
fn wrap_half_open(x: f64, period: f64) -> f64 {
    let mut y = x - period * (x / period).round();
    // round() sends period/2 to period, so y lands in [-period/2, period/2];
    // fold the closed upper endpoint back to the open lower one
    if y >= 0.5 * period {
        y -= period;
    }
    if y < -0.5 * period {
        y += period;
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn full_period_reduces_to_origin() {
        let g = TorusGeometry::new(2.0, 3.0).unwrap();
        let r = g.reduce_to_fundamental([2.0, 0.0]);
        assert_abs_diff_eq!(r[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r[1], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn boundary_tie_break_is_half_open() {
        let g = TorusGeometry::new(2.0, 3.0).unwrap();
        // (a/2, b/2) sits on the cell boundary; with the half-open convention
        // both coordinates map to the negative edge
        let r = g.reduce_to_fundamental([1.0, 1.5]);
        assert_abs_diff_eq!(r[0], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r[1], -1.5, epsilon = 1e-15);
        // and the result is itself a fixed point of reduction
        let rr = g.reduce_to_fundamental(r);
        assert_eq!(r, rr);
    }

    #[test]
    fn single_wrap() {
        let g = TorusGeometry::new(1.0, 1.0).unwrap();
        let r = g.reduce_to_fundamental([0.1, -0.7]);
        assert_abs_diff_eq!(r[0], 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(r[1], 0.3, epsilon = 1e-15);
    }

    #[test]
    fn reduction_is_lattice_equivalent_and_idempotent() {
        let g = TorusGeometry::new(1.3, 0.7).unwrap();
        for k in 0..200 {
            let x = (k as f64) * 0.717 - 70.0;
            let y = (k as f64) * -1.331 + 55.0;
            let r = g.reduce_to_fundamental([x, y]);
            assert!(r[0] >= -0.65 && r[0] < 0.65, "r0={}", r[0]);
            assert!(r[1] >= -0.35 && r[1] < 0.35, "r1={}", r[1]);
            let mx = (x - r[0]) / 1.3;
            let my = (y - r[1]) / 0.7;
            assert_abs_diff_eq!(mx, mx.round(), epsilon = 1e-9);
            assert_abs_diff_eq!(my, my.round(), epsilon = 1e-9);
        }
    }

    #[test]
    fn distance_is_symmetric_and_respects_images() {
        let g = TorusGeometry::new(1.0, 2.0).unwrap();
        let p = [0.45, -0.9];
        let q = [-0.45, 0.9];
        assert_abs_diff_eq!(g.distance(p, q), g.distance(q, p), epsilon = 1e-15);
        // across the seam the images are closer than the naive difference
        assert!(g.distance(p, q) < (p[0] - q[0]).hypot(p[1] - q[1]));
    }
}
