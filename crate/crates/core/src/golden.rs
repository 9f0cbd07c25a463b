//! Reference tables of double Schubert polynomials for all of W_3 (type C)
//! and W'_3 (type D), shipped as data files in the text grammar.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gamma::GammaElement;
use crate::schubert::SchubertEngine;
use crate::text::parse_gamma;
use crate::weyl::{CartanType, SignedPermutation};

const C3: &str = include_str!("../data/golden_c3.txt");
const D3: &str = include_str!("../data/golden_d3.txt");
const C3_SHA256: &str = "ae709cf29f552f1ee4019a26d9bb7644f7817d827eb1d20e1f2e7d390ae390cb";
const D3_SHA256: &str = "e269fbfa4ff53c4318516486a4fac1e44cbf04dd86d75cc8b65c3dfd19aeab18";

#[derive(Clone, Debug)]
pub struct GoldenRow {
    pub perm: SignedPermutation,
    /// The row as transcribed, before normalization.
    pub source: String,
    pub expected: GammaElement,
}

#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub cartan_type: CartanType,
    pub rows: Vec<GoldenRow>,
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub perm: SignedPermutation,
    pub expected: GammaElement,
    pub computed: GammaElement,
}

impl GoldenTable {
    /// Loads and checksums the table for `C` or `D`.
    pub fn load(ty: CartanType) -> Result<GoldenTable> {
        let (data, sum) = match ty {
            CartanType::C => (C3, C3_SHA256),
            CartanType::D => (D3, D3_SHA256),
            CartanType::B => return Err(Error::Cache("no reference table for type B".into())),
        };
        let digest = hex::encode(Sha256::digest(data.as_bytes()));
        if digest != sum {
            return Err(Error::Cache(format!(
                "reference table checksum mismatch: {digest}"
            )));
        }
        Self::parse(ty, data)
    }

    pub fn parse(ty: CartanType, data: &str) -> Result<GoldenTable> {
        let mut rows: Vec<GoldenRow> = Vec::new();
        for line in data.lines().filter(|l| !l.trim().is_empty()) {
            let (perm, expr) = line.split_once('\t').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("missing tab in '{line}'"),
            })?;
            let perm = SignedPermutation::parse(perm, ty.family())?;
            if rows.iter().any(|r| r.perm == perm) {
                return Err(Error::InvalidPermutation(format!("{perm} listed twice")));
            }
            let expected = parse_gamma(expr, ty.flavor())?;
            rows.push(GoldenRow {
                perm,
                source: expr.to_string(),
                expected,
            });
        }
        Ok(GoldenTable {
            cartan_type: ty,
            rows,
        })
    }

    /// Rows whose computed polynomial differs from the reference.
    pub fn check(&self, engine: &SchubertEngine) -> Result<Vec<Mismatch>> {
        let mut out = Vec::new();
        for row in &self.rows {
            let computed = engine.double_schubert(&row.perm)?;
            if *computed != row.expected {
                out.push(Mismatch {
                    perm: row.perm.clone(),
                    expected: row.expected.clone(),
                    computed: (*computed).clone(),
                });
            }
        }
        Ok(out)
    }
}
