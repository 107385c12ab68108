//! Rendering of analysis results as human tables, JSON, or TSV.
//!
//! All vertex ids are 1-based on the way out. Output is deterministic:
//! repeated invocations on the same input produce identical bytes.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

use domval::checks::{CheckOutcome, CheckStatus};
use domval::closed_forms::FamilyReport;
use domval::family::FamilySpec;
use domval::solver::DominationReport;
use domval::verify::Summary;
use domval::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

/// One invocation's worth of output: which mode ran, how to format it, and
/// the payload to show.
pub struct OutputRecord {
    pub mode: &'static str,
    pub format: Format,
    pub payload: Payload,
}

pub enum Payload {
    Report {
        source: String,
        n: usize,
        edges: usize,
        report: DominationReport,
    },
    Family {
        spec: FamilySpec,
        variants: Vec<(&'static str, FamilyReport)>,
        solver: Option<DominationReport>,
        /// (variant name, agrees with solver) — present only with --solve.
        verdicts: Vec<(&'static str, bool)>,
    },
    Verify {
        outcomes: Vec<CheckOutcome>,
        summary: Summary,
    },
}

impl OutputRecord {
    /// True when nothing in the payload counts as a failed check.
    pub fn all_checks_passed(&self) -> bool {
        match &self.payload {
            Payload::Report { .. } => true,
            Payload::Family { verdicts, .. } => verdicts.iter().all(|(_, ok)| *ok),
            Payload::Verify { summary, .. } => summary.fail == 0,
        }
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("valid json");
                s.push('\n');
                s
            }
            Format::Table => self.render_table(),
            Format::Tsv => self.render_tsv(),
        }
    }

    fn to_json(&self) -> Value {
        match &self.payload {
            Payload::Report {
                source,
                n,
                edges,
                report,
            } => json!({
                "mode": self.mode,
                "source": source,
                "n": n,
                "edges": edges,
                "gamma": report.gamma,
                "tau": report.tau,
                "dv": report.dv,
                "gamma_sets": sets_json(&report.gamma_sets),
                "truncated": report.truncated,
            }),
            Payload::Family {
                spec,
                variants,
                solver,
                verdicts,
            } => {
                let mut obj = json!({
                    "mode": self.mode,
                    "spec": spec.to_string(),
                    "variants": variants.iter().map(|(name, r)| json!({
                        "variant": name,
                        "gamma": r.gamma,
                        "tau": r.tau,
                        "dv": r.dv,
                    })).collect::<Vec<_>>(),
                });
                if let Some(r) = solver {
                    obj["solver"] = json!({
                        "gamma": r.gamma,
                        "tau": r.tau,
                        "dv": r.dv,
                        "gamma_sets": sets_json(&r.gamma_sets),
                        "truncated": r.truncated,
                    });
                    obj["verdicts"] = verdicts
                        .iter()
                        .map(|(name, ok)| json!({"variant": name, "agrees": ok}))
                        .collect();
                }
                obj
            }
            Payload::Verify { outcomes, summary } => json!({
                "mode": self.mode,
                "summary": {
                    "pass": summary.pass,
                    "fail": summary.fail,
                    "not_applicable": summary.not_applicable,
                },
                "outcomes": outcomes.iter().map(|o| json!({
                    "check": o.check,
                    "subject": o.subject,
                    "status": o.status.to_string(),
                    "detail": o.detail,
                })).collect::<Vec<_>>(),
            }),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Report {
                source,
                n,
                edges,
                report,
            } => {
                let _ = writeln!(out, "{}: {source}", self.mode);
                let _ = writeln!(out, "n = {n}, edges = {edges}");
                let _ = writeln!(out, "gamma = {}", report.gamma);
                let _ = writeln!(out, "tau   = {}", report.tau);
                out.push('\n');
                let _ = writeln!(out, "vertex  dv");
                for (v, d) in report.dv.iter().enumerate() {
                    let _ = writeln!(out, "{:>6}  {d}", v + 1);
                }
                out.push('\n');
                let shown = report.gamma_sets.len();
                let _ = writeln!(
                    out,
                    "gamma-sets ({shown} of {}{}):",
                    report.tau,
                    if report.truncated { ", truncated" } else { "" }
                );
                for s in &report.gamma_sets {
                    let _ = writeln!(out, "  {}", set_string(s));
                }
            }
            Payload::Family {
                spec,
                variants,
                solver,
                verdicts,
            } => {
                let _ = writeln!(out, "family: {spec}");
                for (name, r) in variants {
                    let _ = writeln!(
                        out,
                        "{name:>10}: gamma = {}, tau = {}, dv = {}",
                        r.gamma,
                        r.tau,
                        dv_string(&r.dv)
                    );
                }
                if let Some(r) = solver {
                    let _ = writeln!(
                        out,
                        "{:>10}: gamma = {}, tau = {}, dv = {}",
                        "solver",
                        r.gamma,
                        r.tau,
                        dv_string(&r.dv)
                    );
                    for (name, ok) in verdicts {
                        let _ = writeln!(
                            out,
                            "{name:>10}: {}",
                            if *ok { "AGREE" } else { "DISAGREE" }
                        );
                    }
                }
            }
            Payload::Verify { outcomes, summary } => {
                let _ = writeln!(out, "verification sweep: {} checks", outcomes.len());
                let _ = writeln!(out, "  pass:           {}", summary.pass);
                let _ = writeln!(out, "  fail:           {}", summary.fail);
                let _ = writeln!(out, "  not applicable: {}", summary.not_applicable);
                for o in outcomes {
                    if o.status == CheckStatus::Fail {
                        let _ = writeln!(out, "FAIL {} [{}] {}", o.check, o.subject, o.detail);
                    }
                }
                let _ = writeln!(
                    out,
                    "result: {}",
                    if summary.fail == 0 { "PASS" } else { "FAIL" }
                );
            }
        }
        out
    }

    fn render_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode\t{}", self.mode);
        match &self.payload {
            Payload::Report {
                source,
                n,
                edges,
                report,
            } => {
                let _ = writeln!(out, "source\t{source}");
                let _ = writeln!(out, "n\t{n}");
                let _ = writeln!(out, "edges\t{edges}");
                let _ = writeln!(out, "gamma\t{}", report.gamma);
                let _ = writeln!(out, "tau\t{}", report.tau);
                for (v, d) in report.dv.iter().enumerate() {
                    let _ = writeln!(out, "dv\t{}\t{d}", v + 1);
                }
                for s in &report.gamma_sets {
                    let _ = writeln!(out, "set\t{}", members_string(s));
                }
                let _ = writeln!(out, "truncated\t{}", report.truncated);
            }
            Payload::Family {
                spec,
                variants,
                solver,
                verdicts,
            } => {
                let _ = writeln!(out, "spec\t{spec}");
                for (name, r) in variants {
                    let _ = writeln!(out, "variant\t{name}\tgamma\t{}", r.gamma);
                    let _ = writeln!(out, "variant\t{name}\ttau\t{}", r.tau);
                    for (v, d) in r.dv.iter().enumerate() {
                        let _ = writeln!(out, "variant\t{name}\tdv\t{}\t{d}", v + 1);
                    }
                }
                if let Some(r) = solver {
                    let _ = writeln!(out, "solver\tgamma\t{}", r.gamma);
                    let _ = writeln!(out, "solver\ttau\t{}", r.tau);
                    for (v, d) in r.dv.iter().enumerate() {
                        let _ = writeln!(out, "solver\tdv\t{}\t{d}", v + 1);
                    }
                    for (name, ok) in verdicts {
                        let _ = writeln!(
                            out,
                            "verdict\t{name}\t{}",
                            if *ok { "agree" } else { "disagree" }
                        );
                    }
                }
            }
            Payload::Verify { outcomes, summary } => {
                for o in outcomes {
                    let _ = writeln!(
                        out,
                        "check\t{}\t{}\t{}\t{}",
                        o.check, o.subject, o.status, o.detail
                    );
                }
                let _ = writeln!(
                    out,
                    "summary\t{}\t{}\t{}",
                    summary.pass, summary.fail, summary.not_applicable
                );
            }
        }
        out
    }
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(
        sets.iter()
            .map(|s| Value::Array(s.members().iter().map(|v| Value::from(v + 1)).collect()))
            .collect(),
    )
}

fn set_string(s: &VertexSet) -> String {
    let ids: Vec<String> = s.members().iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", ids.join(", "))
}

fn members_string(s: &VertexSet) -> String {
    let ids: Vec<String> = s.members().iter().map(|v| (v + 1).to_string()).collect();
    ids.join(" ")
}

fn dv_string(dv: &[u64]) -> String {
    let parts: Vec<String> = dv.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(", "))
}
