//! The JSON manifold format.
//!
//! ```json
//! { "name": "K3", "dim_c": 2, "hodge": [[1, 0, 1], [0, 20, 0], [1, 0, 1]], "calabi_yau": true }
//! ```
//!
//! Fields: `name`; `dim_c` or `dim_real`; `betti` (from degree 0) and/or
//! `hodge` (`h[p][q]`); optional `hodgeB` (`h^{-p,q}`); `calabi_yau`
//! (derives `hodgeB` when absent); optional `pairing`, a list of
//! `{ "degrees": [i, j], "matrix": [[...]] }` blocks with integer or
//! `"a/b"` entries.

use serde::Deserialize;
use symprod_core::orbifold::{ManifoldData, PairingBlock};
use symprod_core::Rational;

use crate::error::{CliError, Result};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Block {
    degrees: [u32; 2],
    matrix: Vec<Vec<Entry>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldFile {
    name: String,
    dim_c: Option<u32>,
    dim_real: Option<u32>,
    betti: Option<Vec<u64>>,
    hodge: Option<Vec<Vec<u64>>>,
    #[serde(rename = "hodgeB")]
    hodge_b: Option<Vec<Vec<u64>>>,
    #[serde(default)]
    calabi_yau: bool,
    pairing: Option<Vec<Block>>,
}

fn entry(e: &Entry) -> std::result::Result<Rational, String> {
    let text = match e {
        Entry::Int(n) => n.to_string(),
        Entry::Text(s) => s.trim().to_string(),
    };
    text.parse::<Rational>()
        .map_err(|_| format!("pairing entry {text:?} is not a rational number"))
}

fn build(f: ManifoldFile) -> std::result::Result<ManifoldData, String> {
    let dim_c = match (f.dim_c, &f.hodge) {
        (Some(d), _) => Some(d),
        (None, Some(h)) => Some(h.len().saturating_sub(1) as u32),
        (None, None) => None,
    };
    if let (Some(d), Some(r)) = (dim_c, f.dim_real) {
        if 2 * d != r {
            return Err(format!("dim_real {r} is not twice dim_c {d}"));
        }
    }
    let mut x = match (&f.hodge, &f.betti) {
        (Some(h), betti) => {
            let d = dim_c.expect("set from the table");
            let x = ManifoldData::complex(&f.name, d, h).map_err(|e| e.to_string())?;
            if let Some(b) = betti {
                x.check_betti(b).map_err(|e| e.to_string())?;
            }
            x
        }
        (None, Some(b)) => {
            let r = f
                .dim_real
                .or(dim_c.map(|d| 2 * d))
                .ok_or("dim_real is required without dim_c")?;
            ManifoldData::real(&f.name, r, b).map_err(|e| e.to_string())?
        }
        (None, None) => return Err("one of betti or hodge is required".into()),
    };
    if let Some(b) = &f.hodge_b {
        x = x.with_hodge_b(b).map_err(|e| e.to_string())?;
    }
    if f.calabi_yau {
        x = x.with_calabi_yau().map_err(|e| e.to_string())?;
    }
    x.check_duality().map_err(|e| e.to_string())?;
    if let Some(blocks) = f.pairing {
        let blocks = blocks
            .iter()
            .map(|b| {
                let matrix = b
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(entry).collect())
                    .collect::<std::result::Result<_, _>>()?;
                Ok(PairingBlock {
                    degrees: (b.degrees[0], b.degrees[1]),
                    matrix,
                })
            })
            .collect::<std::result::Result<Vec<_>, String>>()?;
        x = x.with_pairing(blocks);
    }
    Ok(x)
}

/// Parses and validates a manifold description; `origin` names it in errors.
pub fn parse_manifold(text: &str, origin: &str) -> Result<ManifoldData> {
    let fail = |message: String| CliError::Manifest {
        path: origin.to_string(),
        message,
    };
    let file: ManifoldFile = serde_json::from_str(text).map_err(|e| fail(e.to_string()))?;
    build(file).map_err(fail)
}

pub fn load_manifold(path: &std::path::Path) -> Result<ManifoldData> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_manifold(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_betti_from_hodge() {
        let x = parse_manifold(
            r#"{"name":"K3","dim_c":2,"hodge":[[1,0,1],[0,20,0],[1,0,1]]}"#,
            "k3",
        )
        .unwrap();
        assert_eq!(x.betti_numbers(), &[1, 0, 22, 0, 1]);
    }

    #[test]
    fn point() {
        let x = parse_manifold(r#"{"name":"point","dim_c":0,"hodge":[[1]]}"#, "pt").unwrap();
        assert_eq!(x.dim_real(), 0);
    }

    #[test]
    fn duality_violation() {
        let r = parse_manifold(
            r#"{"name":"bad","dim_c":2,"hodge":[[1,1,0],[0,1,0],[0,0,1]]}"#,
            "bad",
        );
        assert!(matches!(r, Err(CliError::Manifest { .. })));
    }

    #[test]
    fn real_manifold_with_pairing() {
        let x = parse_manifold(
            r#"{"name":"X","dim_real":4,"betti":[1,0,1,0,1],
                "pairing":[{"degrees":[0,4],"matrix":[[1]]},{"degrees":[2,2],"matrix":[["-1/2"]]}]}"#,
            "x",
        )
        .unwrap();
        assert_eq!(x.pairing().unwrap().len(), 2);
    }

    #[test]
    fn rejects_missing_data_and_unknown_fields() {
        assert!(parse_manifold(r#"{"name":"X","dim_real":4}"#, "x").is_err());
        assert!(parse_manifold(r#"{"name":"X","dim_c":0,"hodge":[[1]],"colour":1}"#, "x").is_err());
        assert!(parse_manifold(r#"{"name":"X","betti":[1]}"#, "x").is_err());
        assert!(parse_manifold("not json", "x").is_err());
    }
}
