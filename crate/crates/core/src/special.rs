//! Scalar special functions needed by the evaluators: the exponential
//! integral E1 (Ewald real-space kernel) and the Bessel function J0
//! (radial Fourier coefficients).

use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Exponential integral `E1(x) = ∫_x^∞ e^{−t}/t dt`, x > 0.
///
/// Power series below x = 1, modified-Lentz continued fraction above.
pub fn exp_int_e1(x: f64) -> f64 {
    assert!(x > 0.0, "E1 requires x > 0, got {x}");
    if x <= 1.0 {
        // -gamma - ln x + sum (-1)^{k+1} x^k / (k k!)
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..=40 {
            term *= -x / k as f64;
            let add = -term / k as f64;
            sum += add;
            if add.abs() < 1e-18 * (1.0 + sum.abs()) {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else {
        // e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200 {
            let a = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-x).exp() * h
    }
}

/// Bessel function of the first kind, order zero.
///
/// Power series for |x| <= 16, Hankel asymptotic expansion beyond; both
/// branches deliver ~1e-10 absolute accuracy or better.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x <= 16.0 {
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..80 {
            let kf = k as f64;
            term *= -q / (kf * kf);
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        // P, Q sums of the Hankel expansion with A_m built by recurrence;
        // stop at the smallest term (asymptotic series)
        let mut p = 1.0;
        let mut q = 0.0;
        let mut a = 1.0; // A_0
        let mut last = f64::MAX;
        for m in 1..24 {
            let mf = m as f64;
            a *= -((2.0 * mf - 1.0) * (2.0 * mf - 1.0)) / (8.0 * mf);
            let term = a / x.powi(m as i32);
            if term.abs() >= last {
                break;
            }
            last = term.abs();
            // (-1)^k with m = 2k or m = 2k+1
            let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if m % 2 == 0 {
                p += sign * term;
            } else {
                q += sign * term;
            }
        }
        let chi = x - 0.25 * PI;
        (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
    }
}

/// log(1 + e^t) without overflow for large |t|.
#[inline]
pub fn log1p_exp(t: f64) -> f64 {
    if t > 36.0 {
        t + (-t).exp()
    } else if t < -700.0 {
        0.0
    } else {
        t.exp().ln_1p()
    }
}
