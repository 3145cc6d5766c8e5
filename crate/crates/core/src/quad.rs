//! Panel-based Gauss-Legendre quadrature with geometric subdivision, the
//! workhorse for every concentrated radial integral in the crate.

use crate::error::Error;
use crate::Result;

/// Gauss-Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on the Legendre recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integrate f over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(c + h * x);
        }
        s * h
    }
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Panel edges covering [0, outer]: linear panels through the concentration
/// scale `inner`, then geometrically growing panels out to `outer`.
///
/// Handles inner scales hundreds of orders of magnitude below `outer` by
/// working on the stored edge list, never on a uniform grid.
pub fn radial_panel_edges(inner: f64, outer: f64) -> Vec<f64> {
    assert!(outer > 0.0);
    let mut edges = vec![0.0];
    if inner > 0.0 && inner < outer {
        // resolve the core: [0, 4*inner] in a few linear panels
        for k in 1..=4 {
            edges.push(inner * k as f64);
        }
        let mut r = 4.0 * inner;
        while r < outer {
            r *= 2.0;
            edges.push(r.min(outer));
        }
    } else {
        for k in 1..=8 {
            edges.push(outer * k as f64 / 8.0);
        }
    }
    if *edges.last().unwrap() < outer {
        edges.push(outer);
    }
    edges.dedup();
    edges
}

/// Integrate a radial function over the panel decomposition.
pub fn integrate_radial<F: FnMut(f64) -> f64>(
    gl: &GaussLegendre,
    edges: &[f64],
    mut f: F,
) -> f64 {
    let mut total = 0.0;
    for w in edges.windows(2) {
        total += gl.integrate(w[0], w[1], &mut f);
    }
    total
}

/// Adaptive panel integration to an absolute tolerance: each panel is
/// accepted when an n-point and a (2n)-point rule agree.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    a: f64,
    b: f64,
    tol: f64,
    f: &F,
) -> Result<f64> {
    let coarse = GaussLegendre::new(12);
    let fine = GaussLegendre::new(24);
    let mut total = 0.0;
    let mut stack = vec![(a, b, 0u32)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let c = coarse.integrate(lo, hi, f);
        let s = fine.integrate(lo, hi, f);
        if (c - s).abs() <= tol.max(1e-16 * s.abs()) || (hi - lo) < 1e-15 * (b - a) {
            total += s;
        } else {
            if depth > 60 {
                return Err(Error::QuadratureFailure(format!(
                    "panel [{lo:.3e},{hi:.3e}] not converged at depth {depth}"
                )));
            }
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, depth + 1));
            stack.push((mid, hi, depth + 1));
        }
    }
    Ok(total)
}

/// Uniform trapezoid on [0, 2π); spectrally accurate for smooth periodic
/// integrands.
pub fn integrate_angular<F: FnMut(f64) -> f64>(n_theta: usize, mut f: F) -> f64 {
    let dt = std::f64::consts::TAU / n_theta as f64;
    let mut s = 0.0;
    for i in 0..n_theta {
        s += f(i as f64 * dt);
    }
    s * dt
}
