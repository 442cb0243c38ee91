//! Adaptive Gauss–Legendre quadrature on finite intervals, plus the
//! half-line truncation used for normalization and overlap integrals.
//!
//! The base rule is a 15-point Gauss–Legendre panel (exact through degree
//! 29). Adaptivity compares each panel against its two halves and bisects
//! where the discrepancy exceeds the panel's share of the tolerance budget;
//! this resolves the algebraic wall behavior `(x + a)^p` of the
//! eigenfunctions without any special-casing, because Gauss nodes never
//! touch the endpoints.

use std::sync::OnceLock;

use crate::error::Error;

/// How an integral is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Error-driven panel bisection (the default).
    Adaptive,
    /// A fixed composite rule with `panels` equal 15-point panels and no
    /// error control. Useful for smooth integrands of known scale and for
    /// testing the base rule in isolation.
    Composite { panels: usize },
}

/// Tolerances and budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    /// Target relative accuracy with respect to the integral's magnitude.
    pub rel_tol: f64,
    /// Absolute-accuracy floor; governs integrals that are genuinely ~0,
    /// such as orthogonality overlaps.
    pub abs_tol: f64,
    /// Maximum number of panel bisections before giving up.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            scheme: Scheme::Adaptive,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<(), Error> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::invalid("rel_tol", self.rel_tol, "rel_tol > 0"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::invalid("abs_tol", self.abs_tol, "abs_tol > 0"));
        }
        if let Scheme::Composite { panels } = self.scheme {
            if panels == 0 {
                return Err(Error::invalid("panels", 0.0, "panels >= 1"));
            }
        }
        Ok(())
    }
}

/// 15-point Gauss–Legendre nodes and weights on `[-1, 1]`.
///
/// Computed once by Newton iteration on the degree-15 Legendre polynomial
/// (cos initial guesses converge in a handful of steps) instead of being
/// transcribed as 30 literal constants; the polynomial-exactness test pins
/// the result.
fn gl15() -> &'static ([f64; 15], [f64; 15]) {
    static RULE: OnceLock<([f64; 15], [f64; 15])> = OnceLock::new();
    RULE.get_or_init(|| {
        const N: usize = 15;
        // P_N and P_N' via the Legendre three-term recurrence.
        fn p_dp(x: f64) -> (f64, f64) {
            let mut p_prev = 1.0; // P_0
            let mut p = x; // P_1
            for k in 2..=N {
                let k = k as f64;
                let p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
                p_prev = p;
                p = p_next;
            }
            let dp = N as f64 * (x * p - p_prev) / (x * x - 1.0);
            (p, dp)
        }
        let mut nodes = [0.0; 15];
        let mut weights = [0.0; 15];
        for i in 0..N {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, dp) = p_dp(x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = p_dp(x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// One 15-point panel on `[lo, hi]`.
fn panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let (nodes, weights) = gl15();
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        sum += w * f(c + h * x);
    }
    sum * h
}

/// Integrates `f` over the finite interval `[lo, hi]`.
///
/// Returns the integral to within `max(abs_tol, rel_tol * |result|)`, or
/// [`Error::QuadratureDidNotConverge`] carrying the best estimate and its
/// error bound once the subdivision budget is exhausted. `lo == hi` yields
/// exactly zero.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<f64, Error> {
    spec.validate()?;
    if !lo.is_finite() {
        return Err(Error::domain("lo", lo, "finite"));
    }
    if !hi.is_finite() {
        return Err(Error::domain("hi", hi, "finite"));
    }
    if lo > hi {
        return Err(Error::domain("hi", hi, "hi >= lo"));
    }
    if lo == hi {
        return Ok(0.0);
    }

    match spec.scheme {
        Scheme::Composite { panels } => {
            let width = (hi - lo) / panels as f64;
            let mut total = 0.0;
            for i in 0..panels {
                let a = lo + i as f64 * width;
                let b = if i + 1 == panels { hi } else { a + width };
                total += panel(&f, a, b);
            }
            Ok(total)
        }
        Scheme::Adaptive => integrate_adaptive(&f, lo, hi, spec),
    }
}

fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<f64, Error> {
    struct Panel {
        lo: f64,
        hi: f64,
        estimate: f64,
    }

    let whole = panel(f, lo, hi);
    let span = hi - lo;
    let mut stack = vec![Panel {
        lo,
        hi,
        estimate: whole,
    }];
    let mut accepted = 0.0;
    let mut accepted_error = 0.0;
    let mut accepted_magnitude = 0.0; // sum of |panel| values, an L1-size proxy
    let mut pending: f64 = whole; // sum of estimates still on the stack
    let mut subdivisions = 0usize;

    while let Some(p) = stack.pop() {
        pending -= p.estimate;
        let mid = 0.5 * (p.lo + p.hi);
        let left = panel(f, p.lo, mid);
        let right = panel(f, mid, p.hi);
        let refined = left + right;
        let err = (refined - p.estimate).abs();

        // The panel's share of the global budget, apportioned by length.
        let scale = (accepted + pending + refined).abs().max(whole.abs());
        let global_tol = (spec.rel_tol * scale).max(spec.abs_tol);
        let local_tol = global_tol * (p.hi - p.lo) / span;

        // A panel narrower than a few ulps cannot be split meaningfully.
        let exhausted = (p.hi - p.lo) <= 4.0 * f64::EPSILON * p.hi.abs().max(p.lo.abs()).max(1.0);

        if err <= local_tol || exhausted {
            accepted += refined;
            accepted_error += err;
            accepted_magnitude += left.abs() + right.abs();
        } else {
            subdivisions += 1;
            if subdivisions > spec.max_subdivisions {
                let estimate = accepted + pending + refined;
                return Err(Error::QuadratureDidNotConverge {
                    estimate,
                    error_bound: accepted_error + err,
                    subdivisions: spec.max_subdivisions,
                });
            }
            pending += left + right;
            stack.push(Panel {
                lo: p.lo,
                hi: mid,
                estimate: left,
            });
            stack.push(Panel {
                lo: mid,
                hi: p.hi,
                estimate: right,
            });
        }
    }

    // Panels accepted because they hit ulp width may carry errors far above
    // their budget (that is how a non-integrable singularity shows up), so
    // the accumulated bound needs a final audit. The yardstick is the
    // integral's L1 size, not |accepted|: a cancelling integrand (e.g. a
    // product of orthogonal states) legitimately carries rounding-scale
    // error bounds enormously larger than its near-zero result.
    let audit_scale = accepted.abs().max(accepted_magnitude);
    let final_tol = (spec.rel_tol * audit_scale).max(spec.abs_tol);
    if accepted_error > 2.0 * final_tol {
        return Err(Error::QuadratureDidNotConverge {
            estimate: accepted,
            error_bound: accepted_error,
            subdivisions,
        });
    }
    Ok(accepted)
}

/// Finds an upper cutoff for a decaying integrand on `[lo, ∞)` by doubling:
/// the returned point `b` satisfies `|f| < 1e-18 * peak` on a probe set near
/// `b`, where `peak` is the largest magnitude seen while searching. `scale`
/// sets the initial step and should be the integrand's characteristic width.
pub fn upper_cutoff<F: Fn(f64) -> f64>(f: F, lo: f64, scale: f64) -> f64 {
    assert!(scale > 0.0 && scale.is_finite(), "scale must be positive");
    let mut peak = 0.0f64;
    let mut width = scale;
    for _ in 0..200 {
        // Probe a few interior points of the current window as well as its
        // end, so that an isolated zero (a wavefunction node) cannot fake
        // decay.
        let probes = [
            lo + 0.25 * width,
            lo + 0.5 * width,
            lo + 0.8137 * width,
            lo + width,
        ];
        let mags: Vec<f64> = probes.iter().map(|&x| f(x).abs()).collect();
        for &m in &mags {
            if m > peak {
                peak = m;
            }
        }
        let tail_quiet = mags[2] < 1e-18 * peak && mags[3] < 1e-18 * peak;
        if peak > 0.0 && tail_quiet {
            return lo + width;
        }
        width *= 2.0;
    }
    lo + width
}

/// Integrates a decaying `f` over `[lo, ∞)` by truncating at
/// [`upper_cutoff`] and integrating the remaining finite interval.
pub fn integrate_half_line<F: Fn(f64) -> f64 + Copy>(
    f: F,
    lo: f64,
    scale: f64,
    spec: &QuadratureSpec,
) -> Result<f64, Error> {
    let hi = upper_cutoff(f, lo, scale);
    integrate(f, lo, hi, spec)
}
