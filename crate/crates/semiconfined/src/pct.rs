//! The point canonical transformation (PCT) that generates the semiconfined
//! family from the isotonic oscillator on the half-line.
//!
//! Given the constant-mass problem `(-d²/du² + U(u)) φ = ε φ` and a mass
//! profile `M(x)`, the substitution
//!
//! ```text
//! u(x) = ā v(x) + b̄,   v(x) = ∫ √M dx,   φ_n(u(x)) ∝ M^{-1/4} ψ_n(x)
//! ```
//!
//! turns it into `(-d/dx (1/M) d/dx + V_eff) ψ = E ψ` with
//!
//! ```text
//! V_eff(x) = ā² U(u(x)) + M''/(4M²) - 7M'²/(16M³) + c̄,
//! E_n      = ā² ε_n + c̄.
//! ```
//!
//! Everything in [`crate::models`] can be reproduced this way, which is the
//! point: the closed forms and this composition are two independent routes
//! to the same functions, and [`crate::verify`] holds them against each
//! other. The internal frequency `ω̄` of the source oscillator is pure
//! gauge — with the canonical `ā = √(ω/(2ω̄))` it cancels from every
//! physical output (tested, not assumed).

use crate::error::Error;
use crate::models::{IsotonicModel, SemiconfinedModel};

/// Constants of the transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PctParams {
    /// Scale `ā` between the half-line coordinate and `v(x)`.
    pub a_bar: f64,
    /// Shift `b̄` (0 in the canonical choice: keeps the centrifugal wall
    /// of the source glued to the mass wall of the target).
    pub b_bar: f64,
    /// Energy offset `c̄`.
    pub c_bar: f64,
}

/// The mass profile `M(x) = (1 + x/a)^{-m}` on `(-a, ∞)`, `0 < m < 2`.
///
/// Shares its definition with [`SemiconfinedModel::mass`]; the standalone
/// type exists because the transformation is a statement about the profile
/// alone, not about any particular target potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProfile {
    a: f64,
    m: f64,
}

impl MassProfile {
    pub fn new(a: f64, m: f64) -> Result<Self, Error> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::invalid("a", a, "a > 0"));
        }
        if !(m.is_finite() && m > 0.0 && m < 2.0) {
            return Err(Error::invalid("m", m, "0 < m < 2"));
        }
        Ok(MassProfile { a, m })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// `M(x) = t^{-m}`, `t = (x + a)/a`; `f64::INFINITY` for `x ≤ -a`.
    pub fn mass(&self, x: f64) -> f64 {
        let t = (x + self.a) / self.a;
        if t <= 0.0 {
            f64::INFINITY
        } else {
            t.powf(-self.m)
        }
    }

    fn t(&self, x: f64) -> Result<f64, Error> {
        if !x.is_finite() {
            return Err(Error::domain("x", x, "finite"));
        }
        let t = (x + self.a) / self.a;
        if t <= 0.0 {
            return Err(Error::domain("x", x, "x > -a"));
        }
        Ok(t)
    }
}

/// Antiderivative `v(x) = ∫ √M dx = (2a/(2-m)) t^{1-m/2}`, the constant
/// fixed so that `v(-a⁺) = 0` (any other choice is absorbed by `b̄`).
pub fn velocity_integral(profile: &MassProfile, x: f64) -> Result<f64, Error> {
    let t = profile.t(x)?;
    let s = 2.0 - profile.m;
    Ok(2.0 * profile.a / s * t.powf(0.5 * s))
}

/// The transformed coordinate `u(x) = ā v(x) + b̄`; with canonical params
/// this is a strictly increasing bijection `(-a, ∞) → (0, ∞)`.
pub fn change_of_variable(profile: &MassProfile, params: &PctParams, x: f64) -> Result<f64, Error> {
    Ok(params.a_bar * velocity_integral(profile, x)? + params.b_bar)
}

/// The kinetic-energy remainder `M''/(4M²) - 7M'²/(16M³)` of the
/// transformation, in closed form for the power profile:
///
/// ```text
/// -m (3m - 4) t^{m-2} / (16 a²)
/// ```
///
/// Vanishes identically at `m = 4/3`.
pub fn mass_correction(profile: &MassProfile, x: f64) -> Result<f64, Error> {
    let t = profile.t(x)?;
    let m = profile.m;
    Ok(-m * (3.0 * m - 4.0) * t.powf(m - 2.0) / (16.0 * profile.a * profile.a))
}

/// The canonical transformation constants
/// `ā = √(ω/(2ω̄))`, `b̄ = 0`, `c̄ = -ωα/2`.
///
/// The constant `c̄` is what makes the target spectrum come out as
/// `ω(n + ½)`; it depends on `α`, not on the wall position `a`.
pub fn canonical_params(omega: f64, omega_bar: f64, alpha: f64) -> Result<PctParams, Error> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::invalid("omega", omega, "omega > 0"));
    }
    if !(omega_bar.is_finite() && omega_bar > 0.0) {
        return Err(Error::invalid("omega_bar", omega_bar, "omega_bar > 0"));
    }
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::invalid("alpha", alpha, "alpha >= 0"));
    }
    Ok(PctParams {
        a_bar: (omega / (2.0 * omega_bar)).sqrt(),
        b_bar: 0.0,
        c_bar: -0.5 * omega * alpha,
    })
}

/// Default source-oscillator gauge: `ω̄ = 2ω` (then `ā = ½` exactly and
/// the transformed coordinate is `v(x)/2`). Any positive `ω̄` gives the
/// same physics; this is the one used where a concrete value is needed.
pub fn default_omega_bar(omega: f64) -> f64 {
    2.0 * omega
}

/// Builds the source isotonic model, mass profile and canonical constants
/// that transform into `model`. Requires `α > ½` so that the recovered
/// coupling `g = α² - ¼` is strictly positive (the source family is only
/// defined for a repulsive core).
pub fn source_system(
    model: &SemiconfinedModel,
    omega_bar: f64,
) -> Result<(IsotonicModel, MassProfile, PctParams), Error> {
    let alpha = model.alpha();
    if alpha <= 0.5 {
        return Err(Error::invalid(
            "alpha",
            alpha,
            "alpha > 1/2 (so that g = alpha^2 - 1/4 > 0)",
        ));
    }
    let g = alpha * alpha - 0.25;
    let iso = IsotonicModel::new(omega_bar, g)?;
    let profile = MassProfile::new(model.a(), model.m())?;
    let params = canonical_params(model.omega(), omega_bar, alpha)?;
    Ok((iso, profile, params))
}

/// The transformed potential `ā² U(u(x)) + mass_correction(x) + c̄`.
///
/// For the canonical setup this must equal
/// [`SemiconfinedModel::potential`] identically; the two are kept as
/// independent code paths precisely so that the identity is a check, not a
/// tautology.
pub fn transform_potential(
    iso: &IsotonicModel,
    profile: &MassProfile,
    params: &PctParams,
    x: f64,
) -> Result<f64, Error> {
    let u = change_of_variable(profile, params, x)?;
    Ok(params.a_bar * params.a_bar * iso.potential(u)?
        + mass_correction(profile, x)?
        + params.c_bar)
}

/// The transformed energy `ā² ε_n + c̄`; equal to `ω(n + ½)` for the
/// canonical constants, independent of the gauge `ω̄`.
pub fn transform_energy(iso: &IsotonicModel, params: &PctParams, n: usize) -> f64 {
    params.a_bar * params.a_bar * iso.energy(n) + params.c_bar
}

/// The transformed (unnormalized) eigenfunction `M(x)^{1/4} φ_n(u(x))`.
///
/// Proportional to [`SemiconfinedModel::wavefunction`] with an
/// x-independent ratio; normalization is deliberately left to the caller.
pub fn transform_wavefunction(
    iso: &IsotonicModel,
    profile: &MassProfile,
    params: &PctParams,
    n: usize,
    x: f64,
) -> Result<f64, Error> {
    let u = change_of_variable(profile, params, x)?;
    Ok(profile.mass(x).powf(0.25) * iso.wavefunction(n, u)?)
}
