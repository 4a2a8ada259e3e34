//! Output renderers. All three formats are deterministic: JSON object keys
//! are sorted, and nothing varies between runs unless `--timestamps` is
//! passed.

use serde_json::{json, Value};

use crate::dispatch::{QueryOutcome, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Latex,
}

pub struct RenderOptions {
    pub format: Format,
    pub timestamp: Option<u64>,
}

pub fn render(outcomes: &[QueryOutcome], genus: u32, policy: &str, opts: &RenderOptions) -> String {
    match opts.format {
        Format::Json => render_json(outcomes, genus, policy, opts),
        Format::Table => render_table(outcomes, genus, policy, opts),
        Format::Latex => render_latex(outcomes, opts),
    }
}

fn render_json(
    outcomes: &[QueryOutcome],
    genus: u32,
    policy: &str,
    opts: &RenderOptions,
) -> String {
    let results: Vec<&Value> = outcomes.iter().map(|o| &o.json).collect();
    let mut top = json!({
        "genus": genus,
        "policy": policy,
        "results": results,
    });
    if let Some(ts) = opts.timestamp {
        top.as_object_mut()
            .expect("top level is an object")
            .insert("timestamp".to_string(), json!(ts));
    }
    let mut text = serde_json::to_string_pretty(&top).expect("results serialize");
    text.push('\n');
    text
}

fn summary_cells(summary: &Summary, latex: bool) -> (String, String, String) {
    match summary {
        Summary::Prediction {
            status,
            tainted,
            value,
            euler,
            total,
        } => {
            let rendered = if latex {
                format!("${}$", value.latex_string())
            } else {
                value.polynomial_string()
            };
            let mut status = status.to_string();
            if *tainted {
                status.push_str(if latex { " (generic)" } else { "*" });
            }
            (status, rendered, format!("euler {euler}, total {total}"))
        }
        Summary::Verdict {
            verdict,
            reason,
            witness,
        } => {
            let rendered = match witness {
                Some(w) if latex => format!("${}$", w.latex_string()),
                Some(w) => w.polynomial_string(),
                None => "-".to_string(),
            };
            (verdict.to_string(), rendered, reason.clone())
        }
        Summary::Space {
            name,
            dimension,
            poincare,
        } => {
            let rendered = match poincare {
                Some(p) if latex => format!("${}$", p.latex_string()),
                Some(p) => p.polynomial_string(),
                None => "-".to_string(),
            };
            (name.clone(), rendered, format!("dimension {dimension}"))
        }
        Summary::Sweep { checks, failures } => {
            let status = if *failures == 0 { "passed" } else { "FAILED" };
            (
                status.to_string(),
                format!("{checks} checks"),
                format!("{failures} failures"),
            )
        }
    }
}

fn render_table(
    outcomes: &[QueryOutcome],
    genus: u32,
    policy: &str,
    opts: &RenderOptions,
) -> String {
    let mut lines = vec![format!("# genus {genus}, policy {policy}")];
    if let Some(ts) = opts.timestamp {
        lines.push(format!("# timestamp {ts}"));
    }
    lines.push("idx | kind | status | value | note".to_string());
    for (i, outcome) in outcomes.iter().enumerate() {
        let (status, value, note) = summary_cells(&outcome.summary, false);
        lines.push(format!(
            "{i} | {} | {status} | {value} | {note}",
            outcome.kind
        ));
    }
    lines.join("\n") + "\n"
}

fn render_latex(outcomes: &[QueryOutcome], opts: &RenderOptions) -> String {
    let mut lines = Vec::new();
    if let Some(ts) = opts.timestamp {
        lines.push(format!("% timestamp {ts}"));
    }
    lines.push(r"\begin{tabular}{rlll}".to_string());
    lines.push(r"\hline".to_string());
    lines.push(r"\# & kind & status & value \\".to_string());
    lines.push(r"\hline".to_string());
    for (i, outcome) in outcomes.iter().enumerate() {
        let (status, value, _) = summary_cells(&outcome.summary, true);
        lines.push(format!(
            r"{i} & {} & {} & {} \\",
            escape_latex(outcome.kind),
            escape_latex(&status),
            value
        ));
    }
    lines.push(r"\hline".to_string());
    lines.push(r"\end{tabular}".to_string());
    lines.join("\n") + "\n"
}

fn escape_latex(text: &str) -> String {
    text.replace('_', r"\_").replace('#', r"\#")
}
