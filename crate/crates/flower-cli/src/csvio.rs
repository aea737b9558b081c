//! CSV reading/writing for fronts, designs, and convergence traces.

use std::path::{Path, PathBuf};

use crate::CliError;

/// Render a two-objective front as CSV with an `f1,f2` header.
pub fn front_csv(points: &[[f64; 2]]) -> String {
    let mut out = String::from("f1,f2\n");
    for p in points {
        out.push_str(&format!("{},{}\n", p[0], p[1]));
    }
    out
}

/// Render disc-brake designs as CSV: decision variables then objectives.
pub fn design_csv(rows: &[(Vec<f64>, [f64; 2])]) -> String {
    let mut out = String::from("r,R,F,s,f1,f2\n");
    for (x, f) in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            x[0], x[1], x[2], x[3], f[0], f[1]
        ));
    }
    out
}

/// Render a best-objective convergence trace as CSV.
pub fn trace_csv(best_per_iteration: &[f64]) -> String {
    let mut out = String::from("iteration,best\n");
    for (i, best) in best_per_iteration.iter().enumerate() {
        out.push_str(&format!("{i},{best}\n"));
    }
    out
}

/// Parse a front CSV produced by this tool (or compatible): two
/// comma-separated numeric columns per line, optional `f1,f2` header.
/// Parse failures report the 1-based line number and exit as usage errors.
pub fn read_front_csv(path: &Path) -> Result<Vec<[f64; 2]>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mut points = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if idx == 0 && line.eq_ignore_ascii_case("f1,f2") {
            continue;
        }
        let mut fields = line.split(',');
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(CliError::Usage(format!(
                "{}: line {}: expected two comma-separated values",
                path.display(),
                idx + 1
            )));
        };
        let parse = |s: &str, which: &str| -> Result<f64, CliError> {
            s.trim().parse::<f64>().map_err(|_| {
                CliError::Usage(format!(
                    "{}: line {}: invalid {which} value '{}'",
                    path.display(),
                    idx + 1,
                    s.trim()
                ))
            })
        };
        points.push([parse(a, "f1")?, parse(b, "f2")?]);
    }
    Ok(points)
}

/// Write text to a path, mapping failures to I/O errors.
pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Output path for repetition `seed`. With a single repetition the path is
/// used verbatim; with several, each gets a `-seed<N>` suffix before the
/// extension so runs never overwrite each other.
pub fn rep_path(base: &Path, reps: usize, seed: u64) -> PathBuf {
    if reps == 1 {
        return base.to_path_buf();
    }
    let stem = base
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("front");
    let ext = base.extension().and_then(|s| s.to_str());
    let name = match ext {
        Some(ext) => format!("{stem}-seed{seed}.{ext}"),
        None => format!("{stem}-seed{seed}"),
    };
    base.with_file_name(name)
}
