//! Config file schema and validation.
//!
//! A config is a single JSON document:
//!
//! ```json
//! {
//!   "curve": { "genus": 0 },
//!   "policy": "strict",
//!   "bundles": [
//!     { "label": "E", "rank": 2, "degree": 0, "h0": 2, "h1": 0 },
//!     { "label": "O_C", "rank": 1, "degree": 0 }
//!   ],
//!   "queries": [ { "kind": "quot-ext", "e": "E", "f": "O_C", "g": "O_C", "d": 2 } ]
//! }
//! ```
//!
//! Every bundle label referenced by a query must be defined exactly once in
//! `bundles`; degrees of graded values are serialized as decimal string keys.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use quotcoh_core::curve::{BundleClass, CohPolicy, CurveModel, CANONICAL_LABEL, TRIVIAL_LABEL};
use quotcoh_core::graded::GradedDim;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub curve: CurveSpec,
    pub policy: CohPolicy,
    pub bundles: Vec<BundleSpec>,
    pub queries: Vec<Query>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub genus: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub label: String,
    pub rank: u64,
    pub degree: i64,
    #[serde(default)]
    pub h0: Option<u64>,
    #[serde(default)]
    pub h1: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Factor {
    pub label: String,
    pub k: u64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Quot,
    Flag,
    Sym,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Query {
    /// Cohomology of the tautological bundle of `f` on the symmetric product.
    SymCoh { f: String, d: u32 },
    /// Cohomology of the tautological bundle of `f` on the Quot scheme of `e`.
    QuotCoh { e: String, f: String, d: u32 },
    /// Extension groups between the tautological bundles of `f` and `g`.
    QuotExt {
        e: String,
        f: String,
        g: String,
        d: u32,
    },
    /// Vanishing verdict for a product of wedge powers of dual tautological
    /// bundles; an optional `twist` label adds a natural line bundle.
    Vanishing {
        e: String,
        d: u32,
        factors: Vec<Factor>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<String>,
    },
    /// Right-hand side of the wedge-power extension conjecture.
    Conjecture {
        e: String,
        d: u32,
        l: String,
        wedge: u32,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        factors: Vec<Factor>,
    },
    /// The composed tautological functor applied to a graded value literal.
    Functor { e: String, d: u32, value: GradedDim },
    /// Twisted cohomology: with `e`, on the Quot scheme; without, on the
    /// symmetric product (where `f` may also be omitted).
    TwistedCoh {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f: Option<String>,
        m: String,
        d: u32,
    },
    /// Twisted extension groups on the Quot scheme.
    TwistedExt {
        e: String,
        f: String,
        f_twist: String,
        g: String,
        g_twist: String,
        d: u32,
    },
    /// Dimension and Betti data of one of the spaces.
    Geometry {
        space: SpaceKind,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e: Option<String>,
        d: u32,
    },
    /// Internal-coherence sweep over finite parameter ranges.
    Consistency {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        genera: Option<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e_ranks: Option<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e_degrees: Option<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_d: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_lo: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree_hi: Option<i64>,
    },
    /// Series-vs-enumeration equivalence sweep for the graded powers.
    OracleVerify {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_dim: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_k: Option<usize>,
    },
}

impl Query {
    pub fn kind(&self) -> &'static str {
        match self {
            Query::SymCoh { .. } => "sym-coh",
            Query::QuotCoh { .. } => "quot-coh",
            Query::QuotExt { .. } => "quot-ext",
            Query::Vanishing { .. } => "vanishing",
            Query::Conjecture { .. } => "conjecture",
            Query::Functor { .. } => "functor",
            Query::TwistedCoh { .. } => "twisted-coh",
            Query::TwistedExt { .. } => "twisted-ext",
            Query::Geometry { .. } => "geometry",
            Query::Consistency { .. } => "consistency",
            Query::OracleVerify { .. } => "oracle-verify",
        }
    }

    fn length(&self) -> Option<u32> {
        match self {
            Query::SymCoh { d, .. }
            | Query::QuotCoh { d, .. }
            | Query::QuotExt { d, .. }
            | Query::Vanishing { d, .. }
            | Query::Conjecture { d, .. }
            | Query::Functor { d, .. }
            | Query::TwistedCoh { d, .. }
            | Query::TwistedExt { d, .. }
            | Query::Geometry { d, .. } => Some(*d),
            Query::Consistency { .. } | Query::OracleVerify { .. } => None,
        }
    }
}

// Sanity ceilings so that fat-fingered configs fail with a clear message
// instead of exhausting memory or overflowing class arithmetic.
const MAX_GENUS: u32 = 1_000_000;
const MAX_RANK: u64 = 1_000_000_000;
const MAX_DEGREE: i64 = 1_000_000_000_000;
const MAX_LENGTH: u32 = 10_000;
const MAX_SWEEP_D: u32 = 16;
const MAX_SWEEP_SPAN: i64 = 100;

/// A parsed, validated config with the bundle table resolved.
pub struct ResolvedConfig {
    pub curve: CurveModel,
    pub policy: CohPolicy,
    pub bundles: BTreeMap<String, BundleClass>,
    pub queries: Vec<Query>,
}

impl ResolvedConfig {
    pub fn bundle(&self, query: usize, label: &str) -> Result<&BundleClass, CliError> {
        self.bundles.get(label).ok_or_else(|| CliError::Config {
            query: Some(query),
            message: format!("bundle label {label:?} is not defined in the config"),
        })
    }
}

pub fn resolve(
    config: Config,
    policy_override: Option<CohPolicy>,
) -> Result<ResolvedConfig, CliError> {
    let curve = CurveModel::new(config.curve.genus);
    let mut bundles = BTreeMap::new();
    if config.curve.genus > MAX_GENUS {
        return Err(CliError::config(format!(
            "genus {} exceeds the supported ceiling {MAX_GENUS}",
            config.curve.genus
        )));
    }
    for spec in &config.bundles {
        if bundles.contains_key(&spec.label) {
            return Err(CliError::config(format!(
                "bundle label {:?} is defined more than once",
                spec.label
            )));
        }
        if spec.rank > MAX_RANK || spec.degree.abs() > MAX_DEGREE {
            return Err(CliError::config(format!(
                "bundle {:?}: rank must be <= {MAX_RANK} and |degree| <= {MAX_DEGREE}",
                spec.label
            )));
        }
        let class = match (spec.h0, spec.h1) {
            (Some(h0), Some(h1)) => {
                BundleClass::with_cohomology(&spec.label, spec.rank, spec.degree, h0, h1)
            }
            (None, None) => BundleClass::new(&spec.label, spec.rank, spec.degree),
            _ => {
                return Err(CliError::config(format!(
                    "bundle {:?}: h0 and h1 must be given together",
                    spec.label
                )))
            }
        }
        .map_err(|e| CliError::config(e.to_string()))?;
        if spec.label == TRIVIAL_LABEL && (spec.rank != 1 || spec.degree != 0) {
            return Err(CliError::config(format!(
                "the label {TRIVIAL_LABEL:?} is reserved for the trivial class (rank 1, degree 0)"
            )));
        }
        if spec.label == CANONICAL_LABEL
            && (spec.rank != 1 || spec.degree != curve.canonical_degree())
        {
            return Err(CliError::config(format!(
                "the label {CANONICAL_LABEL:?} is reserved for the canonical class \
                 (rank 1, degree {})",
                curve.canonical_degree()
            )));
        }
        bundles.insert(spec.label.clone(), class);
    }
    for (index, query) in config.queries.iter().enumerate() {
        if let Some(d) = query.length() {
            if d > MAX_LENGTH {
                return Err(CliError::Config {
                    query: Some(index),
                    message: format!("d = {d} exceeds the supported ceiling {MAX_LENGTH}"),
                });
            }
        }
        if let Query::Consistency {
            genera,
            e_ranks,
            max_d,
            degree_lo,
            degree_hi,
            ..
        } = query
        {
            let span_ok = match (degree_lo, degree_hi) {
                (Some(lo), Some(hi)) => hi - lo <= MAX_SWEEP_SPAN,
                (Some(lo), None) => 6 - lo <= MAX_SWEEP_SPAN,
                (None, Some(hi)) => hi + 2 <= MAX_SWEEP_SPAN,
                (None, None) => true,
            };
            let lists_ok = genera.as_ref().is_none_or(|g| g.len() <= 16)
                && e_ranks
                    .as_ref()
                    .is_none_or(|r| r.len() <= 16 && r.iter().all(|&r| r <= 64));
            if !span_ok || !lists_ok || max_d.is_some_and(|d| d > MAX_SWEEP_D) {
                return Err(CliError::Config {
                    query: Some(index),
                    message: format!(
                        "consistency ranges too large: max_d <= {MAX_SWEEP_D}, degree span \
                         <= {MAX_SWEEP_SPAN}, at most 16 genera and 16 ranks (each <= 64)"
                    ),
                });
            }
        }
    }
    Ok(ResolvedConfig {
        curve,
        policy: policy_override.unwrap_or(config.policy),
        bundles,
        queries: config.queries,
    })
}

pub fn parse(text: &str) -> Result<Config, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::config(format!("invalid config JSON: {e}")))
}
