//! The configuration file format: JSON with an explicit field, shape, and
//! column entries as exact strings (`"a/b"` or integers).

use serde::{Deserialize, Serialize};

use projorb::config::Configuration;
use projorb::field::FieldCtx;

/// On-disk form of a configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigFile {
    pub field: FieldSpec,
    pub n: usize,
    pub m: usize,
    /// `m` arrays of `n` entries each; columns are the points.
    pub columns: Vec<Vec<Entry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    /// `"rational"`
    Name(String),
    /// `{"prime": q}`
    Prime { prime: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Str(String),
}

impl ConfigFile {
    pub fn field_ctx(&self) -> Result<FieldCtx, String> {
        match &self.field {
            FieldSpec::Name(name) if name == "rational" => Ok(FieldCtx::Rational),
            FieldSpec::Name(name) => Err(format!(
                "unknown field {name:?}: expected \"rational\" or {{\"prime\": q}}"
            )),
            FieldSpec::Prime { prime } => {
                FieldCtx::prime(*prime).map_err(|e| e.to_string())
            }
        }
    }

    /// Validates the file and builds the exact configuration.
    pub fn to_configuration(&self) -> Result<Configuration, String> {
        let field = self.field_ctx()?;
        if self.columns.len() != self.m {
            return Err(format!(
                "declared m = {} but found {} columns",
                self.m,
                self.columns.len()
            ));
        }
        let mut points = Vec::with_capacity(self.m);
        for (k, col) in self.columns.iter().enumerate() {
            if col.len() != self.n {
                return Err(format!(
                    "column {} has {} entries, expected n = {}",
                    k + 1,
                    col.len(),
                    self.n
                ));
            }
            let coords = col
                .iter()
                .map(|e| match e {
                    Entry::Int(v) => Ok(field.from_int(*v)),
                    Entry::Str(s) => field
                        .parse(s)
                        .map_err(|_| format!("column {}: cannot parse entry {s:?}", k + 1)),
                })
                .collect::<Result<Vec<_>, String>>()?;
            let point = projorb::config::ProjectivePoint::normalize(coords)
                .map_err(|e| format!("column {}: {e}", k + 1))?;
            points.push(point);
        }
        Configuration::new(field, self.n, points).map_err(|e| e.to_string())
    }

    /// Renders a configuration with exact string entries.
    pub fn from_configuration(cfg: &Configuration) -> ConfigFile {
        let field = match cfg.field() {
            FieldCtx::Rational => FieldSpec::Name("rational".to_string()),
            FieldCtx::Prime(q) => FieldSpec::Prime { prime: q },
        };
        let columns = cfg
            .columns()
            .iter()
            .map(|col| col.coords().iter().map(|c| Entry::Str(c.to_string())).collect())
            .collect();
        ConfigFile { field, n: cfg.n(), m: cfg.m(), columns }
    }
}
