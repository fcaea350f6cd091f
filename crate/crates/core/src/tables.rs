//! Precomputed GF(2) tables shipped as `data/tables.json`: the structure
//! constants of sl(6) and L and the twenty basis cocycles ψ_μ, guarded by a
//! SHA-256 checksum of the payload.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{build_quotient, build_sl6, LieAlgebra, StructureTableDoc};
use crate::cochain::Cochain;
use crate::cohomology::{basis_cocycle, CocycleDoc};
use crate::error::{Error, Result};
use crate::field::Gf2;
use crate::rootsys::{h2_weights, Weight};

pub const SHIPPED: &str = include_str!("../data/tables.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesPayload {
    pub sl6: StructureTableDoc,
    pub quotient: StructureTableDoc,
    pub cocycles: Vec<CocycleDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesFile {
    pub sha256: String,
    pub payload: TablesPayload,
}

pub struct Tables {
    pub sl6: LieAlgebra<Gf2>,
    pub quotient: LieAlgebra<Gf2>,
    pub cocycles: BTreeMap<Weight, Cochain<Gf2>>,
}

pub fn checksum(payload: &TablesPayload) -> Result<String> {
    let bytes = serde_json::to_vec(payload)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

pub fn generate() -> Result<TablesFile> {
    let sl6 = build_sl6::<Gf2>();
    let quotient = build_quotient::<Gf2>();
    let cocycles = h2_weights()
        .into_iter()
        .map(|w| {
            Ok(CocycleDoc {
                weight: w,
                cocycle: basis_cocycle(&quotient, w)?.to_doc(&quotient),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let payload = TablesPayload {
        sl6: sl6.to_table_doc(),
        quotient: quotient.to_table_doc(),
        cocycles,
    };
    Ok(TablesFile {
        sha256: checksum(&payload)?,
        payload,
    })
}

pub fn parse(text: &str) -> Result<Tables> {
    let file: TablesFile = serde_json::from_str(text)?;
    let sum = checksum(&file.payload)?;
    if sum != file.sha256 {
        return Err(Error::Verification(format!(
            "tables checksum mismatch: stored {}, computed {sum}",
            file.sha256
        )));
    }
    let sl6 = LieAlgebra::from_table_doc(&file.payload.sl6)?;
    let quotient = LieAlgebra::from_table_doc(&file.payload.quotient)?;
    let cocycles = file
        .payload
        .cocycles
        .iter()
        .map(|c| Ok((c.weight, Cochain::from_doc(&quotient, &c.cocycle)?)))
        .collect::<Result<_>>()?;
    Ok(Tables {
        sl6,
        quotient,
        cocycles,
    })
}

/// The tables compiled into the crate.
pub fn load() -> Result<Tables> {
    parse(SHIPPED)
}

pub fn default_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join("tables.json")
}

/// Regenerates the tables file at `path`; returns the new checksum.
pub fn rebuild(path: &Path) -> Result<String> {
    let file = generate()?;
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(file.sha256)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_match_a_fresh_computation() {
        let shipped: TablesFile = serde_json::from_str(SHIPPED).unwrap();
        assert_eq!(shipped, generate().unwrap());
        let t = load().unwrap();
        assert_eq!(t.quotient.dim(), 34);
        assert_eq!(t.sl6.dim(), 35);
        assert_eq!(t.cocycles.len(), 20);
        let fresh = build_quotient::<Gf2>();
        for i in 0..34 {
            for j in 0..34 {
                assert_eq!(t.quotient.bracket_basis(i, j), fresh.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn tampering_is_detected() {
        let tampered = SHIPPED.replacen("\"1\"", "\"0\"", 1);
        assert!(matches!(parse(&tampered), Err(Error::Verification(_))));
    }
}
