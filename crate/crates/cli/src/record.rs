//! Persistent result records: construction or derivation provenance, the
//! binary generator, and the computed weight profile.

use anyhow::{anyhow, bail, Context, Result};
use sdcodes::bincode::{classify, BinaryCode, WeightProfile};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::Path;

/// Where a code came from, with everything needed to rebuild it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Construct {
        group: String,
        ring: String,
        gamma: String,
        v1: String,
        v2: String,
        gray_chain: String,
    },
    Extend {
        base: String,
        c: String,
        x: String,
    },
    Neighbor {
        base: String,
        x_suffix: String,
        zero_prefix: usize,
        coords: String,
    },
    External,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorText {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeRecord {
    pub id: String,
    pub created: String,
    pub provenance: Provenance,
    /// Self-duality held over the coefficient ring before the Gray map;
    /// false voids the preservation guarantees of the profile.
    pub ring_self_dual: bool,
    pub generator: GeneratorText,
    pub profile: WeightProfile,
}

/// Stable content id: prefix of the SHA-256 of the generator text.
pub fn generator_id(code: &BinaryCode) -> String {
    let mut text = format!("{} {}\n", code.n(), code.k());
    for r in 0..code.k() {
        text.push_str(&code.generator().row_string(r));
        text.push('\n');
    }
    let digest = Sha256::digest(text.as_bytes());
    digest[..6].iter().map(|b| format!("{b:02x}")).collect()
}

impl CodeRecord {
    pub fn new(code: &BinaryCode, profile: WeightProfile, provenance: Provenance, ring_self_dual: bool) -> Self {
        let rows = (0..code.k()).map(|r| code.generator().row_string(r)).collect();
        CodeRecord {
            id: generator_id(code),
            created: chrono::Utc::now().to_rfc3339(),
            provenance,
            ring_self_dual,
            generator: GeneratorText { n: code.n(), k: code.k(), rows },
            profile,
        }
    }

    pub fn code(&self) -> Result<BinaryCode> {
        let refs: Vec<&str> = self.generator.rows.iter().map(|s| s.as_str()).collect();
        let code = BinaryCode::from_01_rows(&refs)?;
        if (code.n(), code.k()) != (self.generator.n, self.generator.k) {
            bail!(
                "generator header says [{}, {}], rows reduce to [{}, {}]",
                self.generator.n,
                self.generator.k,
                code.n(),
                code.k()
            );
        }
        Ok(code)
    }

    /// Recompute the profile from the stored generator and compare it
    /// bit-exactly with the stored one.
    pub fn verify(&self) -> Result<()> {
        let code = self.code()?;
        let recomputed = classify(&code)?;
        if recomputed != self.profile {
            bail!(
                "stored profile does not reproduce:\n stored: {}\n recomputed: {}",
                serde_json::to_string(&self.profile)?,
                serde_json::to_string(&recomputed)?
            );
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self)?;
        fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Rebuild the construction parameters from a construct record.
    pub fn construct_provenance(&self) -> Result<(String, String, String, String, String)> {
        match &self.provenance {
            Provenance::Construct { group, ring, gamma, v1, v2, .. } => Ok((
                group.clone(),
                ring.clone(),
                gamma.clone(),
                v1.clone(),
                v2.clone(),
            )),
            other => Err(anyhow!("record has no construction provenance (kind: {other:?})")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> BinaryCode {
        BinaryCode::from_01_rows(&["10000111", "01001011", "00101101", "00011110"]).unwrap()
    }

    #[test]
    fn record_round_trip_verifies() {
        let code = hamming();
        let profile = classify(&code).unwrap();
        let rec = CodeRecord::new(&code, profile, Provenance::External, true);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rec.json");
        rec.save(&path).unwrap();
        let loaded = CodeRecord::load(&path).unwrap();
        assert_eq!(loaded.id, rec.id);
        loaded.verify().unwrap();
    }

    #[test]
    fn tampered_profile_fails_verification() {
        let code = hamming();
        let mut profile = classify(&code).unwrap();
        profile.counts.insert(4, 15);
        let rec = CodeRecord::new(&code, profile, Provenance::External, true);
        assert!(rec.verify().is_err());
    }

    #[test]
    fn ids_are_stable_and_content_addressed() {
        let a = generator_id(&hamming());
        let b = generator_id(&hamming());
        assert_eq!(a, b);
        assert_eq!(a.len(), 12);
    }
}
