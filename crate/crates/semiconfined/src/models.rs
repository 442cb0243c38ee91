//! Closed-form models: the auxiliary isotonic oscillator on the half-line
//! and the semiconfined position-dependent-mass oscillator family.
//!
//! Both models are exactly solvable; everything here is an explicit formula
//! in terms of Laguerre polynomials and gamma functions. The independent
//! numerical checks live in [`crate::verify`].

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::special::{laguerre, log_factorial, log_gamma};

/// Arguments this close to (or below) the hard wall, measured in units of
/// `a`, are treated as the wall itself: the wavefunction is 0 and the
/// potential is `+∞`. Keeps `ln(1 + x/a)` from overflowing in the closed
/// forms.
const WALL_GUARD: f64 = 1e-14;

/// Largest argument for which `exp` is finite in f64.
const MAX_EXP_ARG: f64 = 709.78;

fn require_finite(name: &'static str, value: f64) -> Result<(), Error> {
    if !value.is_finite() {
        return Err(Error::invalid(name, value, "finite"));
    }
    Ok(())
}

/// Converts the inverse-square coupling `g > 0` into the Laguerre order
/// `α = ½·sqrt(1 + 4g)`; `α > ½` always, and `α → ½` as `g → 0⁺`.
pub fn alpha_from_g(g: f64) -> Result<f64, Error> {
    require_finite("g", g)?;
    if g <= 0.0 {
        return Err(Error::invalid("g", g, "g > 0"));
    }
    Ok(0.5 * (1.0 + 4.0 * g).sqrt())
}

/// The isotonic oscillator on `u ∈ (0, ∞)`:
///
/// ```text
/// U(u) = ¼ ω̄² u² + g / u²,   ε_n = ω̄ (2n + α + 1),   α = ½ √(1 + 4g)
/// ```
///
/// with normalized eigenfunctions
/// `φ_n(u) = N_n u^{α+½} e^{-ω̄u²/4} L_n^{(α)}(ω̄u²/2)`.
///
/// This is the source model of the point canonical transformation in
/// [`crate::pct`]; it is useful on its own mainly for cross-checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotonicModel {
    omega_bar: f64,
    g: f64,
    alpha: f64,
}

impl IsotonicModel {
    /// Builds the model, requiring `ω̄ > 0` and `g > 0`.
    pub fn new(omega_bar: f64, g: f64) -> Result<Self, Error> {
        require_finite("omega_bar", omega_bar)?;
        if omega_bar <= 0.0 {
            return Err(Error::invalid("omega_bar", omega_bar, "omega_bar > 0"));
        }
        let alpha = alpha_from_g(g)?;
        Ok(IsotonicModel {
            omega_bar,
            g,
            alpha,
        })
    }

    pub fn omega_bar(&self) -> f64 {
        self.omega_bar
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// Laguerre order `α = ½ √(1 + 4g)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `U(u) = ¼ ω̄² u² + g/u²` for `u > 0`.
    pub fn potential(&self, u: f64) -> Result<f64, Error> {
        require_finite("u", u)?;
        if u <= 0.0 {
            return Err(Error::domain("u", u, "u > 0"));
        }
        Ok(0.25 * self.omega_bar * self.omega_bar * u * u + self.g / (u * u))
    }

    /// `ε_n = ω̄ (2n + α + 1)`.
    pub fn energy(&self, n: usize) -> f64 {
        self.omega_bar * (2.0 * n as f64 + self.alpha + 1.0)
    }

    /// `ln N_n` for the unit-norm eigenfunction on `(0, ∞)`:
    /// `N_n = sqrt( 2 (ω̄/2)^{α+1} n! / Γ(n + α + 1) )`.
    fn log_norm(&self, n: usize) -> f64 {
        let a = self.alpha;
        0.5 * (std::f64::consts::LN_2 + (a + 1.0) * (self.omega_bar / 2.0).ln() + log_factorial(n)
            - log_gamma(n as f64 + a + 1.0).expect("n + alpha + 1 > 0"))
    }

    /// Normalized eigenfunction `φ_n(u)`; continuously extended by
    /// `φ_n(0) = 0` (the exponent `α + ½` is positive). Negative `u` is a
    /// domain error.
    pub fn wavefunction(&self, n: usize, u: f64) -> Result<f64, Error> {
        require_finite("u", u)?;
        if u < 0.0 {
            return Err(Error::domain("u", u, "u >= 0"));
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let z = 0.5 * self.omega_bar * u * u;
        let log_mag = self.log_norm(n) + (self.alpha + 0.5) * u.ln() - 0.5 * z;
        Ok(log_mag.exp() * laguerre(n, self.alpha, z).expect("alpha > 1/2 by construction"))
    }
}

/// Location and value of the effective potential's minimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialMinimum {
    pub x_min: f64,
    pub v_min: f64,
}

/// Confinement bound `(m - 1)/(2 - m)` for `0 < m < 2`.
///
/// A model with order `α` above this bound has a wavefunction that vanishes
/// at the wall (its leading exponent there is positive); at or below the
/// bound the closed forms stop describing a semiconfined state, so the
/// [`SemiconfinedModel`] constructor rejects such `α`. The bound is
/// negative for `m < 1` (every `α > 0` qualifies), zero at `m = 1`, and
/// grows without bound as `m → 2⁻`.
pub fn semiconfinement_bound(m: f64) -> Result<f64, Error> {
    require_finite("m", m)?;
    if m <= 0.0 || m >= 2.0 {
        return Err(Error::invalid("m", m, "0 < m < 2"));
    }
    Ok((m - 1.0) / (2.0 - m))
}

/// The semiconfined oscillator with position-dependent mass
/// `M(x) = (1 + x/a)^{-m}` on `x ∈ (-a, ∞)`, `0 < m < 2`.
///
/// Under the kinetic operator `-d/dx (1/M) d/dx` (units `ħ = 2m₀ = 1`), the
/// effective potential
///
/// ```text
/// V(x) = ω² a² t^{2-m} / (4 (2-m)²)
///      + [ (2-m)² α² - (m-1)² ] / (4 a² t^{2-m})
///      - ω α / 2,                          t = (x + a)/a
/// ```
///
/// has the mass-independent equidistant spectrum `E_n = ω (n + ½)` with
/// normalized eigenfunctions
///
/// ```text
/// ψ_n(x) = C_n t^{α + ½ - m(α+1)/2} e^{-z/2} L_n^{(α)}(z),
/// z(x)   = ω a² t^{2-m} / (2-m)²
/// ```
///
/// extended by 0 for `x ≤ -a`. At `m = 1`, `α = a²ω` this reduces to the
/// semiconfined harmonic oscillator, and the wall-regularized harmonic well
/// `¼ M(x) ω² x²` is recovered.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SemiconfinedModel {
    omega: f64,
    a: f64,
    alpha: f64,
    m: f64,
}

impl SemiconfinedModel {
    /// Builds the model, requiring `ω > 0`, `a > 0`, `0 < m < 2`, `α > 0`
    /// and `α` strictly above [`semiconfinement_bound`].
    pub fn new(omega: f64, a: f64, alpha: f64, m: f64) -> Result<Self, Error> {
        require_finite("omega", omega)?;
        require_finite("a", a)?;
        require_finite("alpha", alpha)?;
        if omega <= 0.0 {
            return Err(Error::invalid("omega", omega, "omega > 0"));
        }
        if a <= 0.0 {
            return Err(Error::invalid("a", a, "a > 0"));
        }
        let bound = semiconfinement_bound(m)?;
        if alpha <= 0.0 {
            return Err(Error::invalid("alpha", alpha, "alpha > 0"));
        }
        if alpha <= bound {
            return Err(Error::invalid("alpha", alpha, "alpha > (m - 1)/(2 - m)"));
        }
        Ok(SemiconfinedModel { omega, a, alpha, m })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// Dimensionless wall coordinate `t = (x + a)/a`.
    #[inline]
    fn t(&self, x: f64) -> f64 {
        (x + self.a) / self.a
    }

    /// Mass profile `M(x) = t^{-m}`; returns `f64::INFINITY` for `x ≤ -a`
    /// (the wall is impenetrable, so infinite mass is a legal value here,
    /// not an error).
    pub fn mass(&self, x: f64) -> f64 {
        let t = self.t(x);
        if t <= 0.0 {
            f64::INFINITY
        } else {
            t.powf(-self.m)
        }
    }

    /// Laguerre argument `z(x) = ω a² t^{2-m} / (2-m)²`.
    pub(crate) fn laguerre_argument(&self, x: f64) -> f64 {
        let s = 2.0 - self.m;
        self.omega * self.a * self.a * self.t(x).powf(s) / (s * s)
    }

    /// Leading wall exponent `p = α + ½ - m(α + 1)/2` of
    /// `ψ_n(x) ~ t^p` as `x → -a⁺`. Positive exactly when
    /// `α > (m-1)/(2-m)`, which is what the constructor enforces.
    pub fn boundary_exponent(&self) -> f64 {
        self.alpha + 0.5 - 0.5 * self.m * (self.alpha + 1.0)
    }

    /// Effective potential `V(x)`; `x ≤ -a` is a domain error, while points
    /// within the wall guard (`t ≤ 1e-14`) return `+∞` to signal the wall.
    pub fn potential(&self, x: f64) -> Result<f64, Error> {
        require_finite("x", x)?;
        let t = self.t(x);
        if t <= 0.0 {
            return Err(Error::domain("x", x, "x > -a"));
        }
        if t <= WALL_GUARD {
            return Ok(f64::INFINITY);
        }
        let s = 2.0 - self.m;
        let ts = t.powf(s);
        let harmonic = self.omega * self.omega * self.a * self.a * ts / (4.0 * s * s);
        let centrifugal_num = ((self.m - 2.0) * self.alpha - (self.m - 1.0))
            * ((self.m - 2.0) * self.alpha + self.m - 1.0);
        let centrifugal = centrifugal_num / (4.0 * self.a * self.a * ts);
        Ok(harmonic + centrifugal - 0.5 * self.omega * self.alpha)
    }

    /// `E_n = ω (n + ½)` — independent of both `m` and `α`.
    pub fn energy(&self, n: usize) -> f64 {
        self.omega * (n as f64 + 0.5)
    }

    /// `ln C_n` for the unit-norm eigenfunction on `(-a, ∞)`:
    ///
    /// ```text
    /// C_n = (ω a² / (2-m)²)^{(α+1)/2} sqrt( (2-m) n! / (a Γ(α + n + 1)) )
    /// ```
    pub fn log_normalization_constant(&self, n: usize) -> f64 {
        let s = 2.0 - self.m;
        let base = self.omega * self.a * self.a / (s * s);
        0.5 * ((self.alpha + 1.0) * base.ln() + s.ln() - self.a.ln() + log_factorial(n)
            - log_gamma(self.alpha + n as f64 + 1.0).expect("alpha + n + 1 > 0"))
    }

    /// Normalization constant `C_n`, or an overflow error carrying
    /// `ln C_n` when it is representable only in log space.
    pub fn normalization_constant(&self, n: usize) -> Result<f64, Error> {
        let log_value = self.log_normalization_constant(n);
        if log_value > MAX_EXP_ARG {
            return Err(Error::NormalizationOverflow { log_value });
        }
        Ok(log_value.exp())
    }

    /// Normalized eigenfunction `ψ_n(x)`, continuously extended by 0 for
    /// `x ≤ -a` (and within the wall guard). Total: every finite `x` maps
    /// to a value.
    pub fn wavefunction(&self, n: usize, x: f64) -> f64 {
        let t = self.t(x);
        if t <= WALL_GUARD {
            return 0.0;
        }
        let z = self.laguerre_argument(x);
        let log_mag =
            self.log_normalization_constant(n) + self.boundary_exponent() * t.ln() - 0.5 * z;
        if log_mag < -745.0 {
            // The envelope alone underflows; the polynomial cannot rescue
            // a double. Returning exact zero keeps tails well-defined.
            return 0.0;
        }
        log_mag.exp() * laguerre(n, self.alpha, z).expect("alpha > 0 by construction")
    }

    /// Closed-form location and value of the potential minimum:
    ///
    /// ```text
    /// x_min = -a + [ (2-m)² sqrt(α² - κ²) / (a^m ω) ]^{1/(2-m)},
    /// v_min = ω ( sqrt(α² - κ²) - α ) / 2,      κ = (m-1)/(2-m)
    /// ```
    ///
    /// `v_min ≤ 0` always, with equality exactly at `m = 1` (κ = 0).
    ///
    /// The interior stationary point exists when `α > |κ|`. For `m ≥ 1`
    /// the constructor already guarantees this (`α > κ ≥ 0`). For `m < 1`
    /// the bound is negative, so models with `0 < α ≤ |κ|` are valid but
    /// their centrifugal coefficient is not repulsive: the potential is
    /// then monotone with its infimum on the wall, and this returns
    /// `x_min = -a` with `v_min = -∞` (coefficient negative) or the
    /// limiting value `-ωα/2` (coefficient exactly zero).
    pub fn potential_minimum(&self) -> PotentialMinimum {
        let s = 2.0 - self.m;
        let kappa = (self.m - 1.0) / s;
        let disc = self.alpha * self.alpha - kappa * kappa;
        if disc <= 0.0 {
            return PotentialMinimum {
                x_min: -self.a,
                v_min: if disc == 0.0 {
                    -0.5 * self.omega * self.alpha
                } else {
                    f64::NEG_INFINITY
                },
            };
        }
        let root = disc.sqrt();
        let t_pow_s = s * s * root / (self.omega * self.a * self.a);
        let x_min = -self.a + self.a * t_pow_s.powf(1.0 / s);
        let v_min = 0.5 * self.omega * (root - self.alpha);
        PotentialMinimum { x_min, v_min }
    }
}
