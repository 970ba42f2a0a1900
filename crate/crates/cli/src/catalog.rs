//! The bundled manifold catalog. `SYMPROD_CATALOG` points at a directory of
//! `*.json` files that replaces it.

use std::path::{Path, PathBuf};

use symprod_core::orbifold::ManifoldData;

use crate::error::{CliError, Result};
use crate::manifest::{load_manifold, parse_manifold};

pub const ENV: &str = "SYMPROD_CATALOG";

const BUNDLED: [(&str, &str); 8] = [
    ("point", include_str!("../catalog/point.json")),
    ("p1", include_str!("../catalog/p1.json")),
    ("elliptic", include_str!("../catalog/elliptic.json")),
    ("genus2", include_str!("../catalog/genus2.json")),
    ("p2", include_str!("../catalog/p2.json")),
    ("k3", include_str!("../catalog/k3.json")),
    ("abelian", include_str!("../catalog/abelian.json")),
    ("p1xp1", include_str!("../catalog/p1xp1.json")),
];

fn override_dir() -> Option<PathBuf> {
    std::env::var_os(ENV).map(PathBuf::from)
}

fn key(name: &str) -> String {
    name.strip_suffix(".json")
        .unwrap_or(name)
        .to_ascii_lowercase()
}

/// Catalog entry names, sorted.
pub fn names() -> Result<Vec<String>> {
    let mut out = match override_dir() {
        Some(dir) => {
            let entries = std::fs::read_dir(&dir).map_err(|source| CliError::Io {
                path: dir.display().to_string(),
                source,
            })?;
            let mut v = Vec::new();
            for e in entries.flatten() {
                let p = e.path();
                if p.extension().is_some_and(|x| x == "json") {
                    if let Some(stem) = p.file_stem() {
                        v.push(stem.to_string_lossy().into_owned());
                    }
                }
            }
            v
        }
        None => BUNDLED.iter().map(|(n, _)| n.to_string()).collect(),
    };
    out.sort();
    Ok(out)
}

/// Loads a catalog entry by name (case-insensitive, `.json` optional).
pub fn lookup(name: &str) -> Result<Option<ManifoldData>> {
    let k = key(name);
    match override_dir() {
        Some(dir) => {
            for n in names()? {
                if key(&n) == k {
                    return load_manifold(&dir.join(format!("{n}.json"))).map(Some);
                }
            }
            Ok(None)
        }
        None => BUNDLED
            .iter()
            .find(|(n, _)| *n == k)
            .map(|(n, text)| parse_manifold(text, &format!("catalog entry {n}")))
            .transpose(),
    }
}

/// `--manifold` accepts a path to a JSON file or a catalog name.
pub fn resolve(arg: &str) -> Result<ManifoldData> {
    let path = Path::new(arg);
    if path.is_file() {
        return load_manifold(path);
    }
    lookup(arg)?.ok_or_else(|| CliError::UnknownManifold(arg.to_string()))
}
