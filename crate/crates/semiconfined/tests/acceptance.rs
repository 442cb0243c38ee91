//! Release acceptance gate.
//!
//! Runs every top-level requirement end to end and prints exactly one
//! line per criterion with the measured figure of merit, pass or fail
//! (`harness = false`, so the lines always reach the terminal). The
//! process exits nonzero if any criterion fails; no tolerance below is
//! ever loosened to make the summary look better.
//!
//! Known honest failure: criterion 1 at m = 1.5. The wavefunctions enter
//! the wall like (1+x/a)^p with p = 0.75 < 1 there, which drags the
//! finite-difference eigenvalue convergence from order h² down to order
//! h^{2p} = h^{1.5}; at the pinned 4000-point grid the measured error is
//! ≈ 8.4e-3 against the 1e-3 tolerance, and no legal window fixes that.
//! The same check passes at 24000 points (see the verifier's unit tests,
//! which pin the degraded convergence order itself).

use std::error::Error;
use std::fs;
use std::process::Command;
use std::time::Instant;

use semiconfined::cli::FigureManifest;
use semiconfined::models::semiconfinement_bound;
use semiconfined::quad::QuadratureSpec;
use semiconfined::special::{laguerre, log_gamma};
use semiconfined::verify::{self, golden_section_min, Grid};
use semiconfined::{pct, SemiconfinedModel};

type Outcome = Result<(bool, String), Box<dyn Error>>;

const MASS_EXPONENTS: [f64; 3] = [0.5, 1.0, 1.5];

fn canonical(m: f64) -> Result<SemiconfinedModel, Box<dyn Error>> {
    Ok(SemiconfinedModel::new(1.0, 2.0, 4.0, m)?)
}

/// Criterion 1: the discretized operator's four lowest eigenvalues match
/// ω(n + ½) within 1e-3 relative, per mass exponent, on the default
/// window at 4000 points.
fn spectrum_reproduction() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in MASS_EXPONENTS {
        let model = canonical(m)?;
        let grid = verify::default_grid(&model, 4000)?;
        let check = verify::spectrum_check(&model, &grid, 4)?;
        ok &= check.passed;
        parts.push(format!("m={m}: {:.2e}", check.max_rel_error));
    }
    Ok((
        ok,
        format!(
            "max relative eigenvalue error at 4000 points — {}; tolerance {:.0e}",
            parts.join(", "),
            verify::SPECTRUM_TOLERANCE
        ),
    ))
}

/// Criterion 2: at m = 1 with α = a²ω the family must collapse to the
/// plain harmonic mass-deformed oscillator. Both reference forms below are
/// written out independently (direct powers, no shared guard machinery),
/// so agreement is a genuine cross-check of the general-m code path.
fn original_model_recovery() -> Outcome {
    let (omega, a, alpha) = (1.0f64, 2.0f64, 4.0f64);
    let model = SemiconfinedModel::new(omega, a, alpha, 1.0)?;

    let mut potential_gap = 0.0f64;
    let mut wavefunction_gap = 0.0f64;
    for n in 0..=5usize {
        // Closed-form normalization for the m = 1 profile: unit L² norm
        // follows from ∫ z^α e^{-z} L_n(z)² dz = Γ(n+α+1)/n! after the
        // substitution z = ωa²(1 + x/a).
        let ln_c = 0.5
            * ((omega * a).ln() + log_gamma(n as f64 + 1.0)? - log_gamma(n as f64 + alpha + 1.0)?)
            + 0.5 * alpha * (omega * a * a).ln();
        let c = ln_c.exp();
        let mut peak = 0.0f64;
        let mut gap = 0.0f64;
        for i in 1..=200 {
            let x = -a + 14.0 * i as f64 / 200.0;
            let t = 1.0 + x / a;
            let z = omega * a * a * t;
            let reference = c * t.powf(alpha / 2.0) * (-z / 2.0).exp() * laguerre(n, alpha, z)?;
            peak = peak.max(reference.abs());
            gap = gap.max((model.wavefunction(n, x) - reference).abs());
            if n == 0 {
                let mass = 1.0 / t;
                let quarter_harmonic = 0.25 * mass * omega * omega * x * x;
                potential_gap = potential_gap.max((model.potential(x)? - quarter_harmonic).abs());
            }
        }
        wavefunction_gap = wavefunction_gap.max(gap / peak);
    }

    let ok = potential_gap <= 1e-12 && wavefunction_gap <= 1e-10;
    Ok((
        ok,
        format!(
            "200 samples, n ≤ 5 — potential vs ¼M(x)ω²x²: {potential_gap:.2e} (tol 1e-12); \
             wavefunctions vs direct Laguerre forms: {wavefunction_gap:.2e} of peak (tol 1e-10)"
        ),
    ))
}

/// Criterion 3: the potential rebuilt through the coordinate
/// transformation equals the closed form within 1e-10 absolute at 100
/// log-spaced points per mass exponent — and the negative control with a
/// deliberately mis-transcribed additive constant (−ωa/2 in place of
/// −ωα/2) must FAIL that identity whenever α ≠ a.
fn transform_identity() -> Outcome {
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut control_gap = f64::INFINITY;
    for m in MASS_EXPONENTS {
        let model = canonical(m)?;
        let omega_bar = pct::default_omega_bar(model.omega());
        let deviation = verify::pct_identity_deviation(&model, omega_bar, 100)?;
        worst = worst.max(deviation);
        ok &= deviation <= verify::IDENTITY_TOLERANCE;

        let corrupted = verify::pct_identity_deviation_corrupted(&model, omega_bar, 100)?;
        control_gap = control_gap.min(corrupted);
        // α = 4 ≠ a = 2 here, so the corrupted constant must be loud.
        ok &= corrupted >= verify::CONTROL_FLOOR;
    }
    Ok((
        ok,
        format!(
            "max identity deviation {worst:.2e} (tol {:.0e}); \
             corrupted-constant control deviates by {control_gap:.2e} (must exceed {:.0e})",
            verify::IDENTITY_TOLERANCE,
            verify::CONTROL_FLOOR
        ),
    ))
}

/// Criterion 4: the Gram matrix of the first nine states is the identity
/// to 1e-8 for each mass exponent, by adaptive quadrature.
fn orthonormality() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in MASS_EXPONENTS {
        let model = canonical(m)?;
        let check = verify::gram_matrix(&model, 8, &QuadratureSpec::default())?;
        ok &= check.passed;
        parts.push(format!("m={m}: {:.2e}", check.max_deviation));
    }
    Ok((
        ok,
        format!(
            "Gram deviation from identity, n ≤ 8 — {}; tolerance {:.0e}",
            parts.join(", "),
            verify::GRAM_TOLERANCE
        ),
    ))
}

/// Criterion 5: the closed-form minimum agrees with golden-section
/// minimization of the potential to 1e-9 in the minimum value, and the
/// value itself is 0 at m = 1 and ½(√15 − 4) at m = 1.5. The abscissa gap
/// is also measured and printed; in f64 it bottoms out near √ε ≈ 3e-8
/// because the basin is flat to machine precision there — that floor is a
/// property of the arithmetic, not of either minimizer.
fn potential_minimum() -> Outcome {
    let mut ok = true;
    let mut worst_value_gap = 0.0f64;
    let mut worst_abscissa_gap = 0.0f64;
    for m in MASS_EXPONENTS {
        let model = canonical(m)?;
        let a = model.a();
        let closed = model.potential_minimum();
        let width = closed.x_min + a;
        let (x_gs, v_gs) = golden_section_min(
            |x| model.potential(x).unwrap_or(f64::INFINITY),
            -a + 1e-3 * width,
            closed.x_min + 3.0 * width,
            1e-10 * width,
        );
        worst_value_gap = worst_value_gap.max((v_gs - closed.v_min).abs());
        worst_abscissa_gap = worst_abscissa_gap.max((x_gs - closed.x_min).abs());
        ok &= (v_gs - closed.v_min).abs() <= 1e-9;
        ok &= model.potential(closed.x_min)? <= v_gs + 1e-12;
        if m == 1.0 {
            ok &= closed.v_min.abs() <= 1e-12 && closed.x_min.abs() <= 1e-12;
        }
        if m == 1.5 {
            ok &= (closed.v_min - 0.5 * (15.0f64.sqrt() - 4.0)).abs() <= 1e-12;
        }
        ok &= closed.v_min <= 0.0;
    }
    Ok((
        ok,
        format!(
            "golden-section value gap {worst_value_gap:.2e} (tol 1e-9), abscissa gap \
             {worst_abscissa_gap:.2e} (f64 flat-basin floor ≈ 3e-8); v_min(m=1) = 0, \
             v_min(m=1.5) = ½(√15−4) exact to 1e-12"
        ),
    ))
}

/// Criterion 6: construction rejects α at or below (m−1)/(2−m) — exactly
/// 1 for m = 1.5 — and the wall exponent α + ½ − m(α+1)/2 is positive
/// precisely for α above that bound, checked as two independent
/// predicates across a 50-point (m, α) sweep.
fn confinement_boundary() -> Outcome {
    let bound_three_halves = semiconfinement_bound(1.5)?;
    let mut ok = bound_three_halves == 1.0;
    ok &= SemiconfinedModel::new(1.0, 2.0, 1.0, 1.5).is_err();
    ok &= SemiconfinedModel::new(1.0, 2.0, 0.8, 1.5).is_err();
    ok &= SemiconfinedModel::new(1.0, 2.0, 1.0 + 1e-9, 1.5).is_ok();

    let mut points = 0;
    for i in 0..25 {
        let m = 0.1 + 1.8 * i as f64 / 24.0;
        let bound = semiconfinement_bound(m)?;
        // One probe above the bound (kept positive: α > 0 is a separate
        // constructor precondition) and one below it, which for m < 1 is
        // a negative α — the exponent algebra must still track the bound
        // there even though no model can be built.
        for alpha in [bound.max(0.0) + 0.3, bound - 0.3] {
            let above = alpha > bound;
            let wall_exponent = alpha + 0.5 - m * (alpha + 1.0) / 2.0;
            ok &= (wall_exponent > 0.0) == above;
            let constructible = above && alpha > 0.0;
            ok &= SemiconfinedModel::new(1.0, 2.0, alpha, m).is_ok() == constructible;
            points += 1;
        }
    }
    Ok((
        ok,
        format!(
            "{points}-point (m, α) sweep: wall-exponent positivity and constructor \
             acceptance both track α > (m−1)/(2−m); m=1.5 bound = {bound_three_halves}"
        ),
    ))
}

/// Criterion 7: applying the operator to each closed-form eigenfunction
/// by nested central differences leaves a normalized residual ≤ 1e-4 for
/// n ≤ 4 at every mass exponent, and halving the step shrinks it
/// four-fold (second-order convergence).
fn operator_residual() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let (mut ratio_lo, mut ratio_hi) = (f64::INFINITY, 0.0f64);
    for m in MASS_EXPONENTS {
        let model = canonical(m)?;
        let a = model.a();
        let x_lo = -a + 0.1 * a;
        let x_hi = verify::default_grid(&model, 4000)?.x_hi();
        let norms_at = |h: f64| -> Result<Vec<f64>, semiconfined::Error> {
            let n_points = ((x_hi - x_lo) / h).round() as usize + 1;
            let grid = Grid::new(x_lo, x_hi, n_points)?;
            Ok(verify::residual_norms(&model, &grid, 4)?.norms)
        };
        let coarse = norms_at(2e-3)?;
        let fine = norms_at(1e-3)?;
        let max_fine = fine.iter().cloned().fold(0.0, f64::max);
        ok &= max_fine <= verify::RESIDUAL_TOLERANCE;
        for (c, f) in coarse.iter().zip(&fine) {
            let ratio = c / f;
            ratio_lo = ratio_lo.min(ratio);
            ratio_hi = ratio_hi.max(ratio);
            ok &= (3.2..=4.8).contains(&ratio);
        }
        parts.push(format!("m={m}: {max_fine:.2e}"));
    }
    Ok((
        ok,
        format!(
            "max normalized residual at h = 1e-3, n ≤ 4 — {}; tolerance {:.0e}; \
             step-halving ratios {ratio_lo:.2}–{ratio_hi:.2} (expect ≈ 4)",
            parts.join(", "),
            verify::RESIDUAL_TOLERANCE
        ),
    ))
}

/// Criterion 8: the `figure1` command emits three curves plus a manifest,
/// byte-identical across runs, with manifest minima that satisfy the same
/// golden-section agreement as criterion 5.
fn figure_artifact() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_semiconfined");
    let dir_a = tempfile::tempdir()?;
    let dir_b = tempfile::tempdir()?;
    for dir in [&dir_a, &dir_b] {
        let status = Command::new(bin)
            .args(["figure1", "--out-dir"])
            .arg(dir.path())
            .status()?;
        if !status.success() {
            return Ok((false, format!("figure1 exited with {status}")));
        }
    }

    let files = [
        "potential_m0.5.csv",
        "potential_m1.csv",
        "potential_m1.5.csv",
        "manifest.json",
    ];
    let mut identical = true;
    for file in files {
        identical &= fs::read(dir_a.path().join(file))? == fs::read(dir_b.path().join(file))?;
    }

    let manifest: FigureManifest =
        serde_json::from_str(&fs::read_to_string(dir_a.path().join("manifest.json"))?)?;
    let mut minima_ok = manifest.curves.len() == 3;
    let mut worst_gap = 0.0f64;
    for curve in &manifest.curves {
        let model = SemiconfinedModel::new(manifest.omega, manifest.a, manifest.alpha, curve.m)?;
        let a = model.a();
        let width = curve.x_min + a;
        let (_, v_gs) = golden_section_min(
            |x| model.potential(x).unwrap_or(f64::INFINITY),
            -a + 1e-3 * width,
            curve.x_min + 3.0 * width,
            1e-10 * width,
        );
        worst_gap = worst_gap.max((v_gs - curve.v_min).abs());
        minima_ok &= (v_gs - curve.v_min).abs() <= 1e-9;
        if curve.m == 1.0 {
            minima_ok &= curve.v_min == 0.0 && curve.x_min == 0.0;
        }
    }

    Ok((
        identical && minima_ok,
        format!(
            "{} files byte-identical across two runs; manifest minima within \
             {worst_gap:.2e} of golden-section (tol 1e-9)",
            files.len()
        ),
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("spectrum-reproduction", spectrum_reproduction),
        ("original-model-recovery", original_model_recovery),
        ("transform-identity", transform_identity),
        ("orthonormality", orthonormality),
        ("potential-minimum", potential_minimum),
        ("confinement-boundary", confinement_boundary),
        ("operator-residual", operator_residual),
        ("figure-artifact", figure_artifact),
    ];

    let mut passed = 0;
    for (index, (slug, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match criterion() {
            Ok(outcome) => outcome,
            Err(e) => (false, format!("did not complete: {e}")),
        };
        println!(
            "criterion {} ({slug}): {} — {detail} [{:.2} s]",
            index + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        if ok {
            passed += 1;
        }
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed < criteria.len() {
        std::process::exit(1);
    }
}
