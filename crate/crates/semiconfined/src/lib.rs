//! Semiconfined quantum oscillators with a position-dependent mass.
//!
//! A particle on `(-a, ∞)` with mass profile `M(x) = (1 + x/a)^{-m}`,
//! `0 < m < 2`, governed by the kinetic operator `-d/dx (1/M) d/dx`, admits
//! a family of exactly solvable confining potentials whose spectrum is the
//! plain harmonic ladder `E_n = ω(n + 1/2)` — independent of the mass
//! deformation — while the eigenfunctions pick up Laguerre-polynomial
//! profiles that vanish at the hard wall `x = -a`.
//!
//! The crate provides:
//!
//! - [`models`]: the closed forms — potential, spectrum, normalized
//!   eigenfunctions, potential minimum — for the semiconfined family and for
//!   the auxiliary half-line (isotonic) oscillator it maps onto;
//! - [`pct`]: the point canonical transformation that generates the family
//!   from the half-line oscillator, kept as an independent construction
//!   route so the two can be checked against each other;
//! - [`verify`]: a self-auditing numerical verifier (flux-conservative
//!   finite differences, Sturm-sequence eigensolver, quadrature Gram
//!   matrices, operator residuals) that never trusts the closed forms it is
//!   checking;
//! - [`special`] and [`quad`]: the minimal numerics the above need;
//! - [`cli`]: table/report emission behind the `semiconfined` binary.
//!
//! Units are chosen so that `ħ = 2m₀ = 1`.
//!
//! # Example
//!
//! ```
//! use semiconfined::SemiconfinedModel;
//!
//! let model = SemiconfinedModel::new(1.0, 2.0, 4.0, 1.5)?;
//! assert_eq!(model.energy(1), 1.5);
//! assert!((model.potential(0.0)? - 2.234375).abs() < 1e-12);
//!
//! let minimum = model.potential_minimum();
//! assert!((minimum.v_min - 0.5 * (15f64.sqrt() - 4.0)).abs() < 1e-12);
//! # Ok::<(), semiconfined::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod models;
pub mod pct;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::Error;
pub use models::{IsotonicModel, PotentialMinimum, SemiconfinedModel};
