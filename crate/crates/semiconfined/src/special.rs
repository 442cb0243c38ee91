//! Scalar special functions: generalized Laguerre polynomials and the
//! log-gamma function.
//!
//! These two are the only transcendental ingredients of the closed-form
//! eigenfunctions, so they are implemented here directly and pinned by tests
//! rather than pulled from a larger numerics stack.

use crate::error::Error;

/// Evaluates the generalized Laguerre polynomial `L_n^{(alpha)}(z)` by the
/// upward three-term recurrence
///
/// ```text
/// L_0 = 1
/// L_1 = 1 + alpha - z
/// k L_k = (2k - 1 + alpha - z) L_{k-1} - (k - 1 + alpha) L_{k-2}
/// ```
///
/// which is numerically stable for `z >= 0`, the only region the models
/// evaluate. Requires `alpha > -1` (the classical orthogonality range).
pub fn laguerre(n: usize, alpha: f64, z: f64) -> Result<f64, Error> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::invalid("alpha", alpha, "alpha > -1"));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - z;
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 + alpha - z) * cur - (k - 1.0 + alpha) * prev) / k;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Constant value for `ln(pi)`.
const LN_PI: f64 = 1.1447298858494002;

/// Constant value for `ln(2 * sqrt(e / pi))`.
const LN_2_SQRT_E_OVER_PI: f64 = 0.6207822376352452;

/// Lanczos partial-fraction coefficients for the gamma function
/// (Pugh 2004, r = 10.900511, 11 terms; the same table statrs uses).
const GAMMA_DK: &[f64] = &[
    2.4857408913875355e-5,
    1.0514237858172197,
    -3.4568709722201625,
    4.512277094668948,
    -2.9828522532357664,
    1.056397115771267,
    -1.9542877319164587e-1,
    1.709705434044412e-2,
    -5.719261174043057e-4,
    4.633994733599057e-6,
    -2.7199490848860772e-9,
];

/// Auxiliary shift in the Lanczos approximation.
const GAMMA_R: f64 = 10.900511;

/// Computes `ln Gamma(x)` for `x > 0` with ~16 significant digits using the
/// Lanczos approximation (Pugh 2004). Arguments `x <= 0` (and NaN) are
/// rejected: the models only ever need positive arguments, and keeping the
/// domain strict turns silent pole evaluations into errors.
pub fn log_gamma(x: f64) -> Result<f64, Error> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain("x", x, "x > 0"));
    }
    Ok(ln_gamma_unchecked(x))
}

fn ln_gamma_unchecked(x: f64) -> f64 {
    use std::f64::consts::{E, PI};
    if x < 0.5 {
        let s = GAMMA_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(GAMMA_DK[0], |s, t| s + t.1 / (t.0 as f64 - x));
        LN_PI
            - (PI * x).sin().ln()
            - s.ln()
            - LN_2_SQRT_E_OVER_PI
            - (0.5 - x) * ((0.5 - x + GAMMA_R) / E).ln()
    } else {
        let s = GAMMA_DK
            .iter()
            .enumerate()
            .skip(1)
            .fold(GAMMA_DK[0], |s, t| s + t.1 / (x + t.0 as f64 - 1.0));
        s.ln() + LN_2_SQRT_E_OVER_PI + (x - 0.5) * ((x - 0.5 + GAMMA_R) / E).ln()
    }
}

/// `ln(n!)` as a convenience wrapper over [`log_gamma`].
pub fn log_factorial(n: usize) -> f64 {
    ln_gamma_unchecked(n as f64 + 1.0)
}
