//! Half-period values of G as explicit one-dimensional series in the aspect
//! ratio, with certified geometric tail bounds.
//!
//! f1(τ) = τ/12 − log2/(2π) − (1/π) Σ_{n≥1} log(1 + e^{−2πnτ})
//! f2(τ) = −τ/24 − (1/π) Σ_{n≥0} log(1 − e^{−π(2n+1)τ})
//! f3(τ) = −τ/24 − (1/π) Σ_{n≥0} log(1 + e^{−π(2n+1)τ})
//!
//! These are G(p1), G(p2), G(p3); G is scale invariant so they depend on τ
//! only.

use std::f64::consts::PI;

use crate::error::Error;
use crate::Result;

const TERM_CAP: usize = 10_000;

/// Green's values at the three half periods for aspect ratio `tau`.
#[derive(Debug, Clone, Copy)]
pub struct HalfPeriodTable {
    pub tau: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    /// Largest term count used by the three series.
    pub truncation_terms: usize,
    /// Rigorous bound on the dropped tails.
    pub truncation_bound: f64,
}

fn sum_until<F: Fn(usize) -> f64>(
    term: F,
    tail_bound: impl Fn(usize) -> f64,
    tol: f64,
) -> Result<(f64, usize, f64)> {
    let mut s = 0.0;
    for n in 0..TERM_CAP {
        s += term(n);
        let bound = tail_bound(n);
        if bound <= tol {
            return Ok((s, n + 1, bound));
        }
    }
    Err(Error::TruncationFailure {
        tol,
        context: format!("series tail not below tol within {TERM_CAP} terms"),
    })
}

/// Evaluate f1, f2, f3 by direct summation with tail certificates <= `tol`.
pub fn half_period_values(tau: f64, tol: f64) -> Result<HalfPeriodTable> {
    if !(tau > 0.0) || !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "half_period_values requires tau > 0 and tol > 0, got tau={tau}, tol={tol}"
        )));
    }
    // f1: terms log(1+x^n), x = e^{-2 pi tau}; tail <= x^{N+1}/(1-x)
    let x = (-2.0 * PI * tau).exp();
    let (s1, n1, b1) = sum_until(
        |n| (x.powi(n as i32 + 1)).ln_1p(),
        |n| x.powi(n as i32 + 2) / (1.0 - x),
        tol * PI,
    )?;
    // f2/f3: terms log(1 -/+ y^{2n+1}), y = e^{-pi tau};
    // |log(1 -/+ u)| <= u/(1-u), so tail <= y^{2N+3} / ((1-y^2)(1-y))
    let y = (-PI * tau).exp();
    let tail23 = |n: usize| y.powi(2 * n as i32 + 3) / ((1.0 - y * y) * (1.0 - y));
    let (s2, n2, b2) = sum_until(|n| (-(y.powi(2 * n as i32 + 1))).ln_1p(), tail23, tol * PI)?;
    let (s3, n3, b3) = sum_until(|n| (y.powi(2 * n as i32 + 1)).ln_1p(), tail23, tol * PI)?;

    let table = HalfPeriodTable {
        tau,
        f1: tau / 12.0 - 0.5 * 2.0f64.ln() / PI - s1 / PI,
        f2: -tau / 24.0 - s2 / PI,
        f3: -tau / 24.0 - s3 / PI,
        truncation_terms: n1.max(n2).max(n3),
        truncation_bound: (b1.max(b2).max(b3)) / PI,
    };
    Ok(table)
}

/// Aspect-ratio thresholds: `f1(tau1) = 0` and `f2(tau0) = 0`.
///
/// f1 is strictly increasing and f2 strictly decreasing, so plain bisection
/// converges; the roots satisfy `tau0 * tau1 = 1` by modular symmetry.
pub fn tau_thresholds(tol: f64) -> Result<(f64, f64)> {
    let f1 = |t: f64| half_period_values(t, 1e-16).map(|h| h.f1);
    let f2 = |t: f64| half_period_values(t, 1e-16).map(|h| h.f2);
    let tau1 = bisect(&f1, 1.0, 2.0, tol)?;
    let tau0 = bisect(&f2, 0.5, 1.0, tol)?;
    Ok((tau0, tau1))
}

fn bisect<F: Fn(f64) -> Result<f64>>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    assert!(
        flo * fhi < 0.0,
        "bisection bracket does not straddle a root"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm == 0.0 || (hi - lo) < 1e-16 * mid {
            break;
        }
        if fm * flo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    let root = 0.5 * (lo + hi);
    let fr = f(root)?;
    if fr.abs() > tol {
        return Err(Error::TruncationFailure {
            tol,
            context: format!("bisection residual |f({root})| = {:.3e}", fr.abs()),
        });
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    // Golden values: 400-term partial sums of the defining series evaluated
    // in 40-digit arithmetic.
    const F1_AT_1: f64 = -0.02757945001908145380048632;
    const F3_AT_1: f64 = -0.05515890003816289603614947;
    const F1_AT_2: f64 = 0.05634775653285678205282788;

    #[test]
    fn golden_partial_sums() {
        let t1 = half_period_values(1.0, 1e-15).unwrap();
        assert_abs_diff_eq!(t1.f1, F1_AT_1, epsilon = 1e-14);
        assert_abs_diff_eq!(t1.f2, F1_AT_1, epsilon = 1e-14);
        assert_abs_diff_eq!(t1.f3, F3_AT_1, epsilon = 1e-14);
        let t2 = half_period_values(2.0, 1e-15).unwrap();
        assert_abs_diff_eq!(t2.f1, F1_AT_2, epsilon = 1e-14);
    }

    #[test]
    fn matches_printed_approximations() {
        // the text states f1(1) = f2(1) ≈ −0.03 and f3(1) ≈ −0.06
        let t = half_period_values(1.0, 1e-12).unwrap();
        assert!((t.f1 - (-0.03)).abs() < 0.005);
        assert!((t.f2 - (-0.03)).abs() < 0.005);
        assert!((t.f3 - (-0.06)).abs() < 0.005);
    }

    #[test]
    fn table_invariants() {
        for &tau in &[0.3, 0.7, 1.0, 1.6, 3.0] {
            let t = half_period_values(tau, 1e-14).unwrap();
            assert!(t.f3 <= t.f1 + 1e-15 && t.f3 <= t.f2 + 1e-15, "tau={tau}");
        }
    }

    #[test]
    fn modular_symmetry() {
        for &tau in &[0.5, 0.8, 1.3, 2.0, 4.0] {
            let t = half_period_values(tau, 1e-15).unwrap();
            let ti = half_period_values(1.0 / tau, 1e-15).unwrap();
            assert_abs_diff_eq!(t.f1, ti.f2, epsilon = 1e-13);
            assert_abs_diff_eq!(t.f3, ti.f3, epsilon = 1e-13);
        }
    }

    #[test]
    fn thresholds() {
        let (tau0, tau1) = tau_thresholds(1e-13).unwrap();
        // golden roots from 40-digit bisection of the same series
        assert_abs_diff_eq!(tau1, 1.324740844727921484462508, epsilon = 1e-11);
        assert_abs_diff_eq!(tau0, 0.754864624261949473144657, epsilon = 1e-11);
        assert!((tau0 * tau1 - 1.0).abs() < 1e-10);
        assert!(tau0 < 1.0 && 1.0 < tau1);
        let f1 = half_period_values(tau1, 1e-16).unwrap().f1;
        assert!(f1.abs() <= 1e-12);
    }

    #[test]
    fn uncertifiable_tiny_tau() {
        // the series degenerate as tau -> 0+; the cap must trip, not hang
        let err = half_period_values(1e-5, 1e-14);
        assert!(matches!(err, Err(Error::TruncationFailure { .. })));
    }
}
