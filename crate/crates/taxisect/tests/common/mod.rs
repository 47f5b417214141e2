#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `(stem, source)` for every `.taxi` file, sorted by name.
pub fn corpus() -> Vec<(String, String)> {
    let mut out: Vec<_> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "taxi"))
        .map(|p| (p.file_stem().unwrap().to_str().unwrap().to_string(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

pub fn blessing() -> bool {
    std::env::var_os("TAXISECT_BLESS").is_some()
}

/// Compares `actual` with the stored golden file, or rewrites it when
/// `TAXISECT_BLESS` is set. Returns a description of the mismatch.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(name);
    if blessing() {
        fs::create_dir_all(golden_dir()).unwrap();
        fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected =
        fs::read_to_string(&path).map_err(|e| format!("{}: {e} (run with TAXISECT_BLESS=1)", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        let line = expected.lines().zip(actual.lines()).position(|(a, b)| a != b).map(|i| i + 1);
        Err(format!("{name} differs from golden (first differing line: {line:?})"))
    }
}
