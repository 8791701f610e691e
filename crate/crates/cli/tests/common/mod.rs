//! Golden corpus: each directory under `tests/golden` holds `args` (one
//! argument per line), the input files it names, `expected.stdout` and
//! `expected.code`. The binary runs with the case directory as working
//! directory and empty standard input.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

pub fn golden_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_cases() -> Vec<PathBuf> {
    let mut dirs: Vec<PathBuf> = std::fs::read_dir(golden_root())
        .expect("golden directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.is_dir())
        .collect();
    dirs.sort();
    dirs
}

pub fn case_args(dir: &Path) -> Vec<String> {
    std::fs::read_to_string(dir.join("args")).expect("args file").lines().map(str::to_string).collect()
}

/// `Ok(subcommand)` when stdout and exit code match byte for byte.
pub fn check_case(dir: &Path) -> Result<String, String> {
    let args = case_args(dir);
    let out = Command::new(env!("CARGO_BIN_EXE_projconn"))
        .args(&args)
        .current_dir(dir)
        .stdin(Stdio::null())
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    let want_out = std::fs::read(dir.join("expected.stdout")).map_err(|e| e.to_string())?;
    let want_code: i32 = std::fs::read_to_string(dir.join("expected.code"))
        .map_err(|e| e.to_string())?
        .trim()
        .parse()
        .map_err(|e| format!("expected.code: {e}"))?;
    let code = out.status.code().unwrap_or(-1);
    if code != want_code {
        return Err(format!("exit code {code}, expected {want_code}"));
    }
    if out.stdout != want_out {
        return Err("stdout differs".into());
    }
    Ok(args[0].clone())
}
