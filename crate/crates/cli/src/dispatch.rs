//! Executes validated queries against the core library and assembles one
//! result object per query.

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use quotcoh_core::curve::CurveError;
use quotcoh_core::formulas::{self, FormulaError, PredictionReport, QuotContext, Status, Verdict};
use quotcoh_core::geometry;
use quotcoh_core::graded::GradedDim;
use quotcoh_core::oracle;

use crate::config::{Query, ResolvedConfig, SpaceKind};
use crate::error::CliError;

/// The table/latex-friendly digest of one result.
pub enum Summary {
    Prediction {
        status: &'static str,
        tainted: bool,
        value: GradedDim,
        euler: BigInt,
        total: BigUint,
    },
    Verdict {
        verdict: &'static str,
        reason: String,
        witness: Option<GradedDim>,
    },
    Space {
        name: String,
        dimension: u64,
        poincare: Option<GradedDim>,
    },
    Sweep {
        checks: usize,
        failures: usize,
    },
}

pub struct QueryOutcome {
    pub kind: &'static str,
    pub json: Value,
    pub summary: Summary,
}

pub fn execute(config: &ResolvedConfig) -> Result<Vec<QueryOutcome>, CliError> {
    config
        .queries
        .iter()
        .enumerate()
        .map(|(index, query)| run_query(config, index, query))
        .collect()
}

fn formula_error(index: usize, error: FormulaError) -> CliError {
    match &error {
        FormulaError::Curve(CurveError::AmbiguousCohomology { .. }) => CliError::Policy {
            query: index,
            message: error.to_string(),
        },
        _ => CliError::Config {
            query: Some(index),
            message: error.to_string(),
        },
    }
}

fn context(
    config: &ResolvedConfig,
    index: usize,
    e_label: &str,
    d: u32,
) -> Result<QuotContext, CliError> {
    let e = config.bundle(index, e_label)?.clone();
    QuotContext::new(config.curve, e, d, config.policy).map_err(|e| formula_error(index, e))
}

fn status_str(status: Status) -> &'static str {
    match status {
        Status::Proven => "proven",
        Status::Conjectural => "conjectural",
    }
}

fn prediction_outcome(
    query: &Query,
    report: PredictionReport,
    extra: Option<(&str, Value)>,
) -> QueryOutcome {
    let mut result = serde_json::to_value(&report).expect("report serializes");
    let obj = result.as_object_mut().expect("report is an object");
    obj.insert("type".to_string(), json!("prediction"));
    obj.insert("grading".to_string(), json!("cohomological"));
    if let Some((key, value)) = extra {
        obj.insert(key.to_string(), value);
    }
    QueryOutcome {
        kind: query.kind(),
        json: json!({ "query": query, "result": result }),
        summary: Summary::Prediction {
            status: status_str(report.status),
            tainted: report.generic_tainted,
            value: report.value,
            euler: report.euler,
            total: report.total,
        },
    }
}

fn verdict_outcome(query: &Query, verdict: Verdict, citation: String) -> QueryOutcome {
    let (name, reason, witness, tainted) = match &verdict {
        Verdict::Vanishes { reason } => ("vanishes", reason.clone(), None, false),
        Verdict::NonzeroWitness {
            reason,
            witness,
            generic_witness,
        } => (
            "nonzero-witness",
            reason.clone(),
            Some(witness.clone()),
            *generic_witness,
        ),
        Verdict::NotCovered { reason } => ("not-covered", reason.clone(), None, false),
    };
    let result = json!({
        "type": "verdict",
        "verdict": verdict,
        "status": "proven",
        "citation": citation,
        "grading": "cohomological",
        "generic_tainted": tainted,
    });
    QueryOutcome {
        kind: query.kind(),
        json: json!({ "query": query, "result": result }),
        summary: Summary::Verdict {
            verdict: name,
            reason,
            witness,
        },
    }
}

fn run_query(
    config: &ResolvedConfig,
    index: usize,
    query: &Query,
) -> Result<QueryOutcome, CliError> {
    match query {
        Query::SymCoh { f, d } => {
            let f = config.bundle(index, f)?;
            let report = formulas::sym_product_taut_coh(config.curve, f, *d, config.policy)
                .map_err(|e| formula_error(index, e))?;
            Ok(prediction_outcome(query, report, None))
        }
        Query::QuotCoh { e, f, d } => {
            let ctx = context(config, index, e, *d)?;
            let f = config.bundle(index, f)?;
            let report = formulas::quot_taut_coh(&ctx, f).map_err(|e| formula_error(index, e))?;
            let push = formulas::quot_pushforward_class(&ctx, f);
            let extra = json!({
                "class": { "label": push.class.label, "rank": push.class.rank, "degree": push.class.degree },
                "d": push.d,
                "taut_rank": push.taut_rank,
            });
            Ok(prediction_outcome(
                query,
                report,
                Some(("pushforward", extra)),
            ))
        }
        Query::QuotExt { e, f, g, d } => {
            let ctx = context(config, index, e, *d)?;
            let f = config.bundle(index, f)?;
            let g = config.bundle(index, g)?;
            let report = formulas::quot_ext(&ctx, f, g).map_err(|e| formula_error(index, e))?;
            Ok(prediction_outcome(query, report, None))
        }
        Query::Vanishing {
            e,
            d,
            factors,
            twist,
        } => {
            let ctx = context(config, index, e, *d)?;
            let mut resolved = Vec::with_capacity(factors.len());
            for factor in factors {
                resolved.push((config.bundle(index, &factor.label)?.clone(), factor.k));
            }
            let (verdict, citation) = match twist {
                None => (
                    formulas::dual_vanishing(&ctx, &resolved)
                        .map_err(|e| formula_error(index, e))?,
                    "vanishing of ⊗ Λ^k_i F_i^[[d]]∨ under Σ min(k_i, rk F_i) < rk E".to_string(),
                ),
                Some(m) => {
                    let m = config.bundle(index, m)?;
                    (
                        formulas::twisted_quot_vanishing(&ctx, &resolved, m)
                            .map_err(|e| formula_error(index, e))?,
                        format!(
                            "vanishing of {}_((d)) ⊗ (⊗ Λ^k_i F_i^[[d]]∨) under Σ min(k_i, rk F_i) < rk E",
                            m.label
                        ),
                    )
                }
            };
            Ok(verdict_outcome(query, verdict, citation))
        }
        Query::Conjecture {
            e,
            d,
            l,
            wedge,
            factors,
        } => {
            let ctx = context(config, index, e, *d)?;
            let l = config.bundle(index, l)?;
            let mut resolved = Vec::with_capacity(factors.len());
            for factor in factors {
                let k = u32::try_from(factor.k).map_err(|_| CliError::Config {
                    query: Some(index),
                    message: format!("factor exponent {} is out of range", factor.k),
                })?;
                resolved.push((config.bundle(index, &factor.label)?.clone(), k));
            }
            let report = formulas::conjecture_rhs(&ctx, l, *wedge, &resolved)
                .map_err(|e| formula_error(index, e))?;
            Ok(prediction_outcome(query, report, None))
        }
        Query::Functor { e, d, value } => {
            let ctx = context(config, index, e, *d)?;
            let out = formulas::functor_composition(&ctx, value);
            let report = PredictionReport::new(
                out,
                Status::Proven,
                format!("(-) ⊗ S^{}H*(O_C)", d - 1),
                false,
            );
            Ok(prediction_outcome(query, report, None))
        }
        Query::TwistedCoh { e, f, m, d } => {
            let m_class = config.bundle(index, m)?;
            let report = match (e, f) {
                (Some(e), Some(f)) => {
                    let ctx = context(config, index, e, *d)?;
                    let f = config.bundle(index, f)?;
                    formulas::twisted_quot_coh(&ctx, f, m_class)
                }
                (Some(e), None) => {
                    let ctx = context(config, index, e, *d)?;
                    let trivial = quotcoh_core::BundleClass::trivial();
                    formulas::twisted_quot_coh(&ctx, &trivial, m_class)
                }
                (None, f) => {
                    let f = f
                        .as_ref()
                        .map(|label| config.bundle(index, label))
                        .transpose()?;
                    formulas::twisted_sym_coh(config.curve, f, m_class, *d, config.policy)
                }
            }
            .map_err(|e| formula_error(index, e))?;
            Ok(prediction_outcome(query, report, None))
        }
        Query::TwistedExt {
            e,
            f,
            f_twist,
            g,
            g_twist,
            d,
        } => {
            let ctx = context(config, index, e, *d)?;
            let f = config.bundle(index, f)?;
            let f_twist = config.bundle(index, f_twist)?;
            let g = config.bundle(index, g)?;
            let g_twist = config.bundle(index, g_twist)?;
            let report = formulas::twisted_quot_ext(&ctx, f, f_twist, g, g_twist)
                .map_err(|e| formula_error(index, e))?;
            Ok(prediction_outcome(query, report, None))
        }
        Query::Geometry { space, e, d } => {
            let info = match space {
                SpaceKind::Quot | SpaceKind::Flag => {
                    let label = e.as_ref().ok_or_else(|| CliError::Config {
                        query: Some(index),
                        message: "geometry of the Quot scheme or flag variety needs \"e\""
                            .to_string(),
                    })?;
                    let e = config.bundle(index, label)?;
                    match space {
                        SpaceKind::Quot => geometry::quot_info(e, *d),
                        _ => geometry::flag_info(config.curve, e, *d),
                    }
                }
                SpaceKind::Sym => geometry::sym_info(config.curve, *d),
            };
            let result = json!({
                "type": "space",
                "space": &info,
                "status": "proven",
                "citation": "dim Quot_d(E) = dim Flag_d(E) = d·rk E; dim C^(d) = d",
                "grading": "topological",
                "generic_tainted": false,
            });
            Ok(QueryOutcome {
                kind: query.kind(),
                json: json!({ "query": query, "result": result }),
                summary: Summary::Space {
                    name: info.name,
                    dimension: info.dimension,
                    poincare: info.poincare,
                },
            })
        }
        Query::Consistency {
            genera,
            e_ranks,
            e_degrees,
            max_d,
            degree_lo,
            degree_hi,
        } => {
            // SweepRanges::default() uses the generic policy, which is the
            // only mode under which every case in the sweep evaluates.
            let mut ranges = formulas::SweepRanges::default();
            if let Some(g) = genera {
                ranges.genera = g.clone();
            }
            if let Some(r) = e_ranks {
                if r.iter().any(|&r| r < 2) {
                    return Err(CliError::Config {
                        query: Some(index),
                        message: "consistency sweep requires every rk E >= 2".to_string(),
                    });
                }
                ranges.e_ranks = r.clone();
            }
            if let Some(e) = e_degrees {
                ranges.e_degrees = e.clone();
            }
            if let Some(d) = max_d {
                if *d == 0 {
                    return Err(CliError::Config {
                        query: Some(index),
                        message: "consistency sweep requires max_d >= 1".to_string(),
                    });
                }
                ranges.max_d = *d;
            }
            if let Some(lo) = degree_lo {
                ranges.degree_lo = *lo;
            }
            if let Some(hi) = degree_hi {
                ranges.degree_hi = *hi;
            }
            let report = formulas::consistency_sweep(&ranges);
            let result = json!({
                "type": "sweep",
                "passed": report.all_passed(),
                "checks": report.total_checks(),
                "failures": report.total_failures(),
                "sections": report.sections,
                "status": "proven",
                "citation": "coherence of the conjecture with its proven specializations",
                "grading": "cohomological",
                "generic_tainted": false,
            });
            Ok(QueryOutcome {
                kind: query.kind(),
                json: json!({ "query": query, "result": result }),
                summary: Summary::Sweep {
                    checks: report.total_checks(),
                    failures: report.total_failures(),
                },
            })
        }
        Query::OracleVerify { max_dim, max_k } => {
            let max_dim = max_dim.unwrap_or(4);
            let max_k = max_k.unwrap_or(4);
            let sweep =
                oracle::equivalence_sweep(max_dim, -2, 3, max_k).map_err(|e| CliError::Config {
                    query: Some(index),
                    message: e.to_string(),
                })?;
            let result = json!({
                "type": "sweep",
                "passed": sweep.all_passed(),
                "checks": sweep.checks,
                "failures": sweep.mismatches.len(),
                "mismatches": sweep.mismatches,
                "status": "proven",
                "citation": "series-expansion powers against the enumeration oracle",
                "grading": "cohomological",
                "generic_tainted": false,
            });
            Ok(QueryOutcome {
                kind: query.kind(),
                json: json!({ "query": query, "result": result }),
                summary: Summary::Sweep {
                    checks: sweep.checks,
                    failures: sweep.mismatches.len(),
                },
            })
        }
    }
}
