//! On-disk cache for enumerated canonical supersets and prime sets.
//!
//! One file per (kind, n, variant), holding sorted line-delimited row-major
//! bit strings under a header that records the count, the code version, and
//! a checksum of the body. A read is only trusted when both the count and
//! the checksum match; anything else falls through to recomputation.

use mingen::boolmat::BoolMat;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

pub struct ResultCache {
    dir: Option<PathBuf>,
    pub hits: std::cell::Cell<usize>,
    pub misses: std::cell::Cell<usize>,
}

fn body_checksum(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    hex(&hasher.finalize())
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl ResultCache {
    pub fn new(dir: Option<PathBuf>) -> ResultCache {
        if let Some(d) = &dir {
            let _ = fs::create_dir_all(d);
        }
        ResultCache {
            dir,
            hits: std::cell::Cell::new(0),
            misses: std::cell::Cell::new(0),
        }
    }

    fn path(&self, kind: &str, n: usize, variant: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{kind}-n{n}-{variant}-v{}.txt", env!("CARGO_PKG_VERSION"))))
    }

    /// Load a validated matrix list or compute and store it.
    pub fn matrices_or<F>(&self, kind: &str, n: usize, variant: &str, compute: F) -> Vec<BoolMat>
    where
        F: FnOnce() -> Vec<BoolMat>,
    {
        if let Some(path) = self.path(kind, n, variant) {
            if let Some(mats) = read_matrix_file(&path, n) {
                self.hits.set(self.hits.get() + 1);
                return mats;
            }
            self.misses.set(self.misses.get() + 1);
            let mats = compute();
            write_matrix_file(&path, kind, n, variant, &mats);
            return mats;
        }
        compute()
    }
}

fn read_matrix_file(path: &Path, n: usize) -> Option<Vec<BoolMat>> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    let header = lines.next()?;
    if !header.starts_with("# ") {
        return None;
    }
    let mut count: Option<usize> = None;
    let mut checksum: Option<&str> = None;
    for field in header[2..].split_whitespace() {
        let (key, value) = field.split_once('=')?;
        match key {
            "count" => count = value.parse().ok(),
            "checksum" => checksum = Some(value),
            _ => {}
        }
    }
    let body: Vec<&str> = lines.collect();
    if Some(body.len()) != count {
        return None;
    }
    if body_checksum(&body.join("\n")) != checksum? {
        return None;
    }
    body.iter()
        .map(|line| {
            let m = BoolMat::parse(line).ok()?;
            (m.ncols() == n).then_some(m)
        })
        .collect()
}

fn write_matrix_file(path: &Path, kind: &str, n: usize, variant: &str, mats: &[BoolMat]) {
    let body: Vec<String> = mats.iter().map(|m| m.to_bit_string()).collect();
    let body = body.join("\n");
    let header = format!(
        "# kind={kind} n={n} variant={variant} count={} version={} checksum={}",
        mats.len(),
        env!("CARGO_PKG_VERSION"),
        body_checksum(&body)
    );
    let _ = fs::write(path, format!("{header}\n{body}"));
}
