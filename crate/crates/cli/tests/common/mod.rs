#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Named CLI invocations whose stdout is pinned under `tests/golden/`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    (
        "photo",
        &[
            "photo",
            "--freq",
            "1.5e15",
            "--threshold",
            "1e15",
            "--points",
            "5",
        ],
    ),
    (
        "decay_seed42",
        &[
            "decay",
            "--n0",
            "10000",
            "--half-life",
            "1200",
            "--dt",
            "10",
            "--tmax",
            "1200",
            "--seed",
            "42",
        ],
    ),
    (
        "decay_lambda0",
        &[
            "decay", "--n0", "100", "--lambda", "0", "--dt", "1", "--tmax", "5", "--seed", "7",
        ],
    ),
    (
        "decay_fast",
        &[
            "decay", "--n0", "1000", "--lambda", "5", "--dt", "10", "--tmax", "50", "--seed", "1",
        ],
    ),
    (
        "decay_ensemble",
        &[
            "decay",
            "--n0",
            "500",
            "--tmax",
            "200",
            "--dt",
            "20",
            "--seed",
            "9",
            "--ensemble",
            "8",
        ],
    ),
    (
        "schrodinger_square",
        &["schrodinger", "--points", "21", "--levels", "3"],
    ),
    (
        "schrodinger_double",
        &[
            "schrodinger",
            "--potential",
            "double",
            "--barrier-height",
            "500",
            "--barrier-width",
            "0.1",
            "--points",
            "31",
            "--levels",
            "2",
        ],
    ),
    (
        "schrodinger_tabulated",
        &[
            "schrodinger",
            "--potential",
            "tabulated",
            "--file",
            "@fixtures/quartic.txt",
            "--points",
            "41",
            "--levels",
            "3",
        ],
    ),
    (
        "circular",
        &[
            "circular",
            "--radius",
            "1",
            "--omega",
            "1",
            "--samples",
            "5",
            "--t1",
            "6.283185307179586",
        ],
    ),
    (
        "circular_svg",
        &["circular", "--samples", "9", "--format", "svg"],
    ),
    ("oscillator", &["oscillator", "--dt", "0.1", "--tmax", "2"]),
    (
        "oscillator_compare",
        &["oscillator", "--compare", "--dt", "0.1", "--tmax", "2"],
    ),
    (
        "pendulum",
        &["pendulum", "--theta0", "0.5", "--dt", "0.05", "--tmax", "1"],
    ),
    (
        "string",
        &["string", "--mode", "2", "--frames", "5", "--points", "9"],
    ),
    ("tables_temperature", &["tables"]),
    (
        "tables_stirling",
        &["tables", "--table", "stirling", "--n-max", "20"],
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Arguments starting with `@` are resolved relative to `tests/`.
pub fn resolve(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(rel) => crate_dir().join("tests").join(rel).display().to_string(),
            None => a.to_string(),
        })
        .collect()
}

pub fn openph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_openph"))
        .args(resolve(args))
        .output()
        .expect("spawn openph")
}

pub fn golden_path(name: &str, args: &[&str]) -> PathBuf {
    let ext = if args.contains(&"svg") { "svg" } else { "csv" };
    crate_dir()
        .join("tests/golden")
        .join(format!("{name}.{ext}"))
}

/// Compares stdout with the pinned file; `OPENPH_UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let out = openph(args);
    if out.status.code() != Some(0) {
        return Err(format!(
            "{name}: exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_path(name, args);
    if std::env::var_os("OPENPH_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == out.stdout {
        Ok(())
    } else {
        Err(format!("{name}: output differs from {}", path.display()))
    }
}
