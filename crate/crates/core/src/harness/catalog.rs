use serde::Serialize;
use thiserror::Error;

use crate::spec::{parse_spec, RingSpec, SpecError};
use crate::{Limits, Ring};

pub const DEFAULT_CATALOG: &str = include_str!("../../catalog/default.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Spec { line: usize, source: SpecError },
    #[error("line {line}: {message}")]
    Option { line: usize, message: String },
}

/// Parsed catalog text: ring specs plus size options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub specs: Vec<RingSpec>,
    pub budget: usize,
    pub pair_budget: usize,
    pub oracle_cap: usize,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut catalog = Catalog {
            specs: Vec::new(),
            budget: 1024,
            pair_budget: 1024,
            oracle_cap: Limits::default().oracle_cap,
        };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once('=') {
                let bad = |message: String| CatalogError::Option { line: i + 1, message };
                let value: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("`{}` is not a number", value.trim())))?;
                match key.trim() {
                    "budget" => catalog.budget = value,
                    "pair_budget" => catalog.pair_budget = value,
                    "oracle_cap" => catalog.oracle_cap = value,
                    other => return Err(bad(format!("unknown option `{other}`"))),
                }
                continue;
            }
            let spec = parse_spec(line).map_err(|source| CatalogError::Spec { line: i + 1, source })?;
            catalog.specs.push(spec);
        }
        Ok(catalog)
    }

    pub fn default_catalog() -> Catalog {
        Self::parse(DEFAULT_CATALOG).expect("bundled catalog parses")
    }

    /// Keeps only the given specs (matched on normalized text), in catalog order.
    pub fn restricted(&self, keep: &[&str]) -> Catalog {
        Catalog {
            specs: self
                .specs
                .iter()
                .filter(|s| keep.contains(&s.to_string().as_str()))
                .cloned()
                .collect(),
            ..self.clone()
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Catalog {
        self.budget = budget;
        self.pair_budget = self.pair_budget.max(budget);
        self
    }

    /// Limits used for every ring built from this catalog.
    pub fn limits(&self) -> Limits {
        Limits {
            oracle_cap: self.oracle_cap,
            order_cap: Limits::default().order_cap.max(self.budget),
            ..Limits::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryStatus {
    Built,
    /// Above the budget; not constructed.
    Gated,
    /// Construction failed.
    Error,
    /// Constructed, but the ring-axiom audit failed.
    AuditFailed,
}

/// One catalog ring after construction and audit.
#[derive(Debug, Clone)]
pub struct CatalogRing {
    pub label: String,
    pub ring: Ring,
}

/// Catalog line outcome for reports.
#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub spec: String,
    pub status: EntryStatus,
    pub order: Option<usize>,
    pub audit_exhaustive: Option<bool>,
    pub detail: Option<String>,
}
