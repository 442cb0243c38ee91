//! End-to-end tests of the command-line interface: each test spawns the
//! real binary and checks the emitted tables, report documents, exit
//! codes, and determinism guarantees a downstream plotting or CI script
//! would rely on.

use std::path::Path;
use std::process::Command;

use semiconfined::cli::FigureManifest;
use semiconfined::SemiconfinedModel;

/// Runs the binary with `args`, returning (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_semiconfined"))
        .args(args)
        .output()
        .expect("binary spawns");
    (
        output.status.code().expect("no signal death"),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

/// A parsed CSV document: `# key = value` metadata, a header row, and the
/// data rows kept as strings (verification reports mix text and numbers).
struct CsvTable {
    metadata: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    /// The data rows as floats, for the all-numeric tables.
    fn float_rows(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.parse().expect("numeric cell"))
                    .collect()
            })
            .collect()
    }
}

fn parse_csv(text: &str) -> CsvTable {
    let mut metadata = Vec::new();
    let mut header = Vec::new();
    let mut rows = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            let (key, value) = rest.split_once(" = ").expect("metadata shape");
            metadata.push((key.to_owned(), value.to_owned()));
        } else if header.is_empty() {
            header = line.split(',').map(str::to_owned).collect();
        } else {
            rows.push(line.split(',').map(str::to_owned).collect());
        }
    }
    CsvTable {
        metadata,
        header,
        rows,
    }
}

fn meta<'t>(table: &'t CsvTable, key: &str) -> &'t str {
    &table
        .metadata
        .iter()
        .find(|(k, _)| k == key)
        .unwrap_or_else(|| panic!("metadata key {key} missing"))
        .1
}

fn canonical_model(m: f64) -> SemiconfinedModel {
    SemiconfinedModel::new(1.0, 2.0, 4.0, m).unwrap()
}

// ---------------------------------------------------------------------
// potential
// ---------------------------------------------------------------------

#[test]
fn potential_table_is_wall_to_endpoint_and_rechecks() {
    let (code, stdout, _) = run(&["potential", "--x-max", "2"]);
    assert_eq!(code, 0);
    let table = parse_csv(&stdout);
    assert_eq!(table.header, vec!["x", "potential"]);
    let rows = table.float_rows();
    assert!(rows.iter().all(|r| r.len() == 2));

    // Strictly monotone x column.
    for pair in rows.windows(2) {
        assert!(pair[0][0] < pair[1][0], "x column not monotone");
    }

    // The 17-significant-digit serialization round-trips f64 exactly, so
    // every row must agree bit-for-bit with the library evaluated at the
    // parsed abscissa.
    let model = canonical_model(1.0);
    for row in &rows {
        assert_eq!(
            row[1],
            model.potential(row[0]).unwrap(),
            "row at x = {} disagrees with the library",
            row[0]
        );
    }

    // The final sample is pinned on the requested endpoint, where the
    // m = 1 potential takes the round value 1/2.
    let last = rows.last().unwrap();
    assert_eq!(last[0], 2.0);
    assert!((last[1] - 0.5).abs() < 1e-12);
}

// ---------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------

#[test]
fn wavefunction_table_boundaries_signs_and_norm() {
    for (n, expected_alternations) in [(0usize, 0usize), (2, 2), (3, 3)] {
        let n_arg = n.to_string();
        let (code, stdout, _) = run(&["wavefunction", "--n", &n_arg]);
        assert_eq!(code, 0);
        let table = parse_csv(&stdout);
        assert_eq!(table.header, vec!["x", "psi"]);
        let rows = table.float_rows();

        // Boundary rows carry exact zeros: the wall by definition, the far
        // end because the table extends to the f64 underflow point.
        assert_eq!(rows.first().unwrap()[1], 0.0);
        assert_eq!(rows.last().unwrap()[1], 0.0);

        // Sign alternations of the nonzero samples count the nodes.
        let mut alternations = 0;
        let mut last_sign = 0.0f64;
        for row in &rows {
            let psi = row[1];
            if psi != 0.0 {
                if last_sign != 0.0 && psi.signum() != last_sign {
                    alternations += 1;
                }
                last_sign = psi.signum();
            }
        }
        assert_eq!(alternations, expected_alternations, "n = {n}");

        // Trapezoid reconstruction of the norm from the emitted rows.
        let mut norm = 0.0;
        for pair in rows.windows(2) {
            let (x0, f0) = (pair[0][0], pair[0][1] * pair[0][1]);
            let (x1, f1) = (pair[1][0], pair[1][1] * pair[1][1]);
            norm += 0.5 * (f0 + f1) * (x1 - x0);
        }
        assert!((norm - 1.0).abs() <= 1e-3, "n = {n}: trapezoid norm {norm}");
    }
}

// ---------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------

#[test]
fn spectrum_table_reproduces_the_ladder() {
    let (code, stdout, _) = run(&["spectrum"]);
    assert_eq!(code, 0);
    let table = parse_csv(&stdout);
    assert_eq!(
        table.header,
        vec!["n", "energy_analytic", "energy_numeric", "rel_error"]
    );
    assert_eq!(meta(&table, "grid_points"), "4000");
    let rows = table.float_rows();
    assert_eq!(rows.len(), 4);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0], n as f64);
        assert_eq!(row[1], n as f64 + 0.5);
        assert!(
            row[3] <= 1e-3,
            "n = {n}: relative error {} above tolerance",
            row[3]
        );
        assert!((row[2] - row[1]).abs() <= 1e-3 * row[1]);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let first = run(&["spectrum"]);
    let second = run(&["spectrum"]);
    assert_eq!(first, second);
}

// ---------------------------------------------------------------------
// formats
// ---------------------------------------------------------------------

#[test]
fn json_format_carries_the_same_numbers_as_csv() {
    let (code_csv, csv_text, _) = run(&["spectrum"]);
    let (code_json, json_text, _) = run(&["spectrum", "--format", "json"]);
    assert_eq!((code_csv, code_json), (0, 0));

    let table = parse_csv(&csv_text);
    let doc: serde_json::Value = serde_json::from_str(&json_text).unwrap();

    let columns: Vec<&str> = doc["columns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(columns, table.header);

    // Same numbers, bit for bit, in both serializations.
    let csv_rows = table.float_rows();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), csv_rows.len());
    for (json_row, csv_row) in rows.iter().zip(&csv_rows) {
        for (json_cell, csv_cell) in json_row.as_array().unwrap().iter().zip(csv_row) {
            assert_eq!(json_cell.as_f64().unwrap(), *csv_cell);
        }
    }

    // Re-serializing the parsed document and parsing again is lossless:
    // the emitted digits already pin every f64 exactly.
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, reparsed);
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

#[test]
fn verify_passes_at_default_parameters() {
    let (code, stdout, stderr) = run(&["verify"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stderr.contains("verification passed"));

    let table = parse_csv(&stdout);
    assert_eq!(
        table.header,
        vec!["check", "value", "threshold", "direction", "passed"]
    );
    assert_eq!(meta(&table, "passed"), "true");
    assert_eq!(meta(&table, "m"), "1.0000000000000000e0");

    // Every deviation row names its threshold and comparison direction.
    assert!(table.rows.len() >= 5, "expected several checks");
    for row in &table.rows {
        assert_eq!(row.len(), 5, "row {row:?}");
        row[1].parse::<f64>().expect("value cell");
        row[2].parse::<f64>().expect("threshold cell");
        assert!(
            matches!(row[3].as_str(), "at_most" | "at_least"),
            "row {row:?}"
        );
        assert_eq!(row[4], "true", "row {row:?}");
    }
}

#[test]
fn verify_reports_underresolved_wall_cusp_with_exit_one() {
    // At m = 1.5 the default 4000-point grid cannot reach the spectrum
    // tolerance (the wall cusp degrades finite-difference convergence to
    // order 1.5); the command must say so in the report and in the exit
    // code while still emitting the full document.
    let (code, stdout, stderr) = run(&["verify", "--m", "1.5"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("verification FAILED"));

    let table = parse_csv(&stdout);
    assert_eq!(meta(&table, "passed"), "false");
    let failed: Vec<&str> = table
        .rows
        .iter()
        .filter(|row| row[4] == "false")
        .map(|row| row[0].as_str())
        .collect();
    assert_eq!(failed, vec!["spectrum-max-relative-error"]);
}

#[test]
fn verify_json_is_a_self_auditing_document() {
    let (code, stdout, _) = run(&["verify", "--format", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 5);
    for check in checks {
        assert!(check["value"].is_number());
        assert!(check["threshold"].is_number());
        assert!(check["passed"].is_boolean());
    }
}

// ---------------------------------------------------------------------
// exit codes
// ---------------------------------------------------------------------

#[test]
fn invalid_parameters_exit_two() {
    // Mass exponent outside (0, 2).
    let (code, _, stderr) = run(&["potential", "--m", "2.5"]);
    assert_eq!(code, 2, "stderr: {stderr}");
    assert!(!stderr.is_empty());

    // α below the semiconfinement bound for m = 1.5.
    let (code, _, _) = run(&["verify", "--alpha", "0.8", "--m", "1.5"]);
    assert_eq!(code, 2);

    // State index above the configured ceiling.
    let (code, _, _) = run(&["wavefunction", "--n", "5", "--n-max", "3"]);
    assert_eq!(code, 2);

    // Unparseable flag value (handled by the argument parser itself).
    let (code, _, _) = run(&["spectrum", "--m", "plenty"]);
    assert_eq!(code, 2);
}

#[test]
fn unwritable_output_exits_three() {
    let (code, _, stderr) = run(&["potential", "--out", "/nonexistent-directory/table.csv"]);
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(!stderr.is_empty());
}

// ---------------------------------------------------------------------
// figure1
// ---------------------------------------------------------------------

fn read(dir: &Path, file: &str) -> String {
    std::fs::read_to_string(dir.join(file)).unwrap_or_else(|e| panic!("{file}: {e}"))
}

#[test]
fn figure1_emits_deterministic_curves_with_correct_minima() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let (code, _, stderr) = run(&["figure1", "--out-dir", dir.path().to_str().unwrap()]);
        assert_eq!(code, 0, "stderr: {stderr}");
    }

    let files = [
        "potential_m0.5.csv",
        "potential_m1.csv",
        "potential_m1.5.csv",
        "manifest.json",
    ];
    for file in files {
        assert_eq!(
            read(dir_a.path(), file),
            read(dir_b.path(), file),
            "{file} differs between identical runs"
        );
    }

    let manifest: FigureManifest =
        serde_json::from_str(&read(dir_a.path(), "manifest.json")).unwrap();
    assert_eq!(
        (manifest.omega, manifest.a, manifest.alpha),
        (1.0, 2.0, 4.0)
    );
    assert_eq!(manifest.samples, 500);
    assert_eq!(manifest.curves.len(), 3);

    for curve in &manifest.curves {
        let table = parse_csv(&read(dir_a.path(), &curve.file));
        let rows = table.float_rows();
        assert_eq!(rows.len(), manifest.samples);
        let model = canonical_model(curve.m);
        for pair in rows.windows(2) {
            assert!(pair[0][0] < pair[1][0], "m={}: x not monotone", curve.m);
        }
        for row in &rows {
            assert_eq!(row[1], model.potential(row[0]).unwrap());
        }
        // Semiconfinement in one glance: the potential towers over its
        // minimum at both window edges.
        let first = rows.first().unwrap()[1];
        let last = rows.last().unwrap()[1];
        assert!(
            first > curve.v_min + 1.0,
            "m={}: wall edge too low",
            curve.m
        );
        assert!(last > curve.v_min + 1.0, "m={}: far edge too low", curve.m);
    }

    let at = |m: f64| {
        manifest
            .curves
            .iter()
            .find(|c| c.m == m)
            .unwrap_or_else(|| panic!("curve m={m} missing"))
    };
    assert_eq!(at(1.0).x_min, 0.0);
    assert_eq!(at(1.0).v_min, 0.0);
    assert!((at(1.5).x_min - (-1.8828125)).abs() < 1e-12);
    assert!((at(1.5).v_min - 0.5 * (15.0f64.sqrt() - 4.0)).abs() < 1e-12);
    assert!(
        at(0.5).v_min < 0.0,
        "fractional-m minimum should dip below 0"
    );
}
