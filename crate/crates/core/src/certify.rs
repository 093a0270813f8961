//! Certificates for minor-containment claims and the engine that replays
//! them.
//!
//! A certificate names a base matroid, a sequence of deletions and
//! contractions, an ordered list of candidate targets and the target the
//! claim expects. Replaying applies the operations, searches the targets
//! in order, stops at the first hit, and audits the witness independently.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{MatroidError, Result};
use crate::matroid::{BinaryMatroid, ElementLabel, MinorOp, MinorOpKind, OpEffect, OpTrace};
use crate::minor::{find_minor_witness, verify_witness, MinorWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// Contract in a graphic matroid, look for M(K5) / M(K3,3).
    Direct,
    /// Delete in a matroid, look for M*(K5) / M*(K3,3).
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCase {
    pub name: String,
    /// Catalog name, or inline text in the matrix file format.
    pub base: String,
    pub ops: Vec<MinorOp>,
    pub targets: Vec<String>,
    pub expected: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim_kind: Option<ClaimKind>,
    /// Free-form note on where the case comes from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl CertificateCase {
    /// Stated claim kind, or the one implied by the operations.
    pub fn kind(&self) -> ClaimKind {
        self.claim_kind.unwrap_or_else(|| {
            if self.ops.iter().all(|op| op.kind == MinorOpKind::Delete) && !self.ops.is_empty() {
                ClaimKind::Dual
            } else {
                ClaimKind::Direct
            }
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.ops.is_empty() {
            return Err(MatroidError::input("certificate has no operations"));
        }
        let expected = resolve_name(&self.expected);
        if !self.targets.iter().any(|t| resolve_name(t) == expected) {
            return Err(MatroidError::input(format!(
                "expected target `{}` is not among the listed targets",
                self.expected
            )));
        }
        resolve_matroid(&self.base)?;
        Ok(())
    }

    pub fn op_labels(&self) -> Vec<&ElementLabel> {
        self.ops.iter().map(|op| &op.element).collect()
    }
}

fn is_inline_matrix(s: &str) -> bool {
    s.contains('\n')
}

/// Canonical catalog name when there is one, otherwise the text itself.
fn resolve_name(s: &str) -> String {
    if is_inline_matrix(s) {
        return catalog::parse_matrix_file(s).map_or_else(|_| s.to_string(), |(n, _)| n);
    }
    catalog::canonical_name(s).map_or_else(|| s.to_string(), str::to_string)
}

/// Resolves a catalog name or inline matrix text.
pub fn resolve_matroid(s: &str) -> Result<BinaryMatroid> {
    if is_inline_matrix(s) {
        catalog::parse_matrix_file(s).map(|(_, m)| m)
    } else {
        catalog::get_named(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub case_name: String,
    /// Target found, by canonical name; `None` when no listed target is a minor.
    pub verdict: Option<String>,
    pub expected: String,
    pub matched_expected: bool,
    pub witness: Option<MinorWitness>,
    pub witness_verified: bool,
    /// Whether the operated-on elements form a circuit of the base.
    /// Informational only.
    pub opset_is_circuit: bool,
    /// Elements whose contraction went through the loop path.
    pub loop_contractions: Vec<ElementLabel>,
    /// Elements whose deletion went through the coloop path.
    pub coloop_deletions: Vec<ElementLabel>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.matched_expected && self.witness_verified
    }
}

/// Replays a single certificate.
pub fn replay_case(c: &CertificateCase) -> Result<ReplayReport> {
    replay_case_traced(c).map(|(r, _)| r)
}

/// Like [`replay_case`], also returning the per-operation trace.
pub fn replay_case_traced(c: &CertificateCase) -> Result<(ReplayReport, Vec<OpTrace>)> {
    let start = Instant::now();
    let ctx = |e: MatroidError| e.in_case(&c.name);
    let base = resolve_matroid(&c.base).map_err(ctx)?;
    let (host, trace) = base.apply_minor_ops_traced(&c.ops).map_err(ctx)?;
    let opset: Vec<&ElementLabel> = c.op_labels();
    let opset_is_circuit = base.is_circuit(&opset).map_err(ctx)?;

    let mut verdict = None;
    let mut witness = None;
    let mut witness_verified = false;
    for t in &c.targets {
        let target = resolve_matroid(t).map_err(ctx)?;
        if let Some(w) = find_minor_witness(&host, &target).map_err(ctx)? {
            witness_verified = verify_witness(&host, &target, &w).map_err(ctx)?;
            verdict = Some(resolve_name(t));
            witness = Some(w);
            break;
        }
    }
    let matched_expected = verdict.as_deref() == Some(resolve_name(&c.expected).as_str());
    let path = |want: fn(&OpEffect) -> bool| -> Vec<ElementLabel> {
        trace
            .iter()
            .filter(|t| want(&t.effect))
            .map(|t| t.op.element.clone())
            .collect()
    };
    let report = ReplayReport {
        case_name: c.name.clone(),
        verdict,
        expected: resolve_name(&c.expected),
        matched_expected,
        witness,
        witness_verified,
        opset_is_circuit,
        loop_contractions: path(|e| *e == OpEffect::LoopContractedAsDeletion),
        coloop_deletions: path(|e| *e == OpEffect::ColoopDeletedAsContraction),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        error: None,
    };
    Ok((report, trace))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReplaySummary {
    pub reports: Vec<ReplayReport>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl ReplaySummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Orders `g2` before `g10`: alphabetic prefix, then numeric suffix.
pub fn case_sort_key(name: &str) -> (String, u64, String) {
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(name.len());
    let (prefix, rest) = name.split_at(split);
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    let tail = rest[digits.len()..].to_string();
    (prefix.to_string(), digits.parse().unwrap_or(0), tail)
}

/// Replays every case independently; a failing case never stops the rest.
/// Reports come back sorted by case name.
pub fn replay_all(cases: &[CertificateCase]) -> ReplaySummary {
    let mut reports: Vec<ReplayReport> = cases
        .par_iter()
        .map(|c| {
            replay_case(c).unwrap_or_else(|e| ReplayReport {
                case_name: c.name.clone(),
                verdict: None,
                expected: c.expected.clone(),
                matched_expected: false,
                witness: None,
                witness_verified: false,
                opset_is_circuit: false,
                loop_contractions: Vec::new(),
                coloop_deletions: Vec::new(),
                elapsed_ms: 0.0,
                error: Some(e.to_string()),
            })
        })
        .collect();
    reports.sort_by_key(|r| case_sort_key(&r.case_name));
    let passed = reports.iter().filter(|r| r.passed()).count();
    ReplaySummary {
        total: reports.len(),
        failed: reports.len() - passed,
        passed,
        reports,
    }
}

/// Reads certificates from JSON: either one case object or an array.
pub fn load_certificates(json: &str) -> Result<Vec<CertificateCase>> {
    let value: serde_json::Value = serde_json::from_str(json)
        .map_err(|e| MatroidError::input(format!("certificate JSON: {e}")))?;
    let cases: Vec<CertificateCase> = match value {
        serde_json::Value::Array(_) => serde_json::from_value(value),
        _ => serde_json::from_value(value).map(|c| vec![c]),
    }
    .map_err(|e| MatroidError::input(format!("certificate JSON: {e}")))?;
    for c in &cases {
        c.validate().map_err(|e| e.in_case(&c.name))?;
    }
    Ok(cases)
}

pub fn certificates_to_json(cases: &[CertificateCase]) -> String {
    serde_json::to_string_pretty(cases).expect("certificates serialize")
}

/// `(case, operated-on elements, expected target, original command)`.
const BUILT_IN: &[(&str, &[&str], &str, &str)] = &[
    (
        "g1",
        &["r1", "s1", "s3"],
        "M(K5)",
        "!contract 1;!contract -1;!contract -3",
    ),
    (
        "g2",
        &["r4", "r5", "s9"],
        "M(K33)",
        "!contract 4;!contract 5;!contract -9",
    ),
    (
        "g3",
        &["r1", "r2", "r3", "s2"],
        "M(K5)",
        "!contract 1;!contract 2;!contract 3;!contract -2",
    ),
    (
        "g4",
        &["r4", "r5", "r6", "s6"],
        "M(K33)",
        "!contract 4;!contract 5;!contract 6;!contract -6",
    ),
    (
        "g5",
        &["r7", "r8", "r9", "s8"],
        "M(K33)",
        "!contract 7;!contract 8;!contract 9;!contract -8",
    ),
    (
        "g6",
        &["r6", "r7", "r8", "s7"],
        "M(K33)",
        "!contract 6;!contract 7;!contract 8;!contract -7",
    ),
    (
        "g7",
        &["r1", "r2", "s5"],
        "M(K5)",
        "!contract 1;!contract 2;!contract -5",
    ),
    (
        "g8",
        &["r4", "s5", "s6"],
        "M(K5)",
        "!contract 4;!contract -5;!contract -6",
    ),
    (
        "g9",
        &["r1", "r2", "r3", "s2"],
        "M(K33)",
        "!contract 1;!contract 2;!contract 3;!contract -2",
    ),
    (
        "g10",
        &["r1", "r6", "s1", "s3"],
        "M(K5)",
        "!contract 1;!contract 6;!contract -1;!contract -3",
    ),
    (
        "g11",
        &["r3", "r6", "s5", "s7"],
        "M(K33)",
        "!contract 3;!contract 6;!contract -5;!contract -7",
    ),
    (
        "g12",
        &["r8", "s1", "s2", "s3"],
        "M(K33)",
        "!contract 8;!contract -1;!contract -2;!contract -3",
    ),
    (
        "g13",
        &["r2", "r6", "s6", "s9"],
        "M(K33)",
        "!contract 2;!contract 6;!contract -6;!contract -9",
    ),
    (
        "g14",
        &["r7", "r8", "s2", "s5"],
        "M(K33)",
        "!contract 7;!contract 8;!contract -2;!contract -5",
    ),
    (
        "g15",
        &["r7", "r8", "r9", "s3"],
        "M(K33)",
        "!contract 7;!contract 8;!contract 9;!contract -3",
    ),
    (
        "g16",
        &["r6", "r7", "r9", "s5"],
        "M(K33)",
        "!contract 6;!contract 7;!contract 9;!contract -5",
    ),
    (
        "g18",
        &["r4", "r7", "s4", "s5"],
        "M(K33)",
        "!contract 4;!contract 7;!contract -4;!contract -5",
    ),
    (
        "g20",
        &["r1", "r2", "s7", "s8"],
        "M(K33)",
        "!contract 1;!contract 2;!contract -7;!contract -8",
    ),
    (
        "g21",
        &["r4", "s2", "s5"],
        "M(K5)",
        "!contract 4;!contract -2;!contract -5",
    ),
    (
        "g22",
        &["r5", "r6", "r7", "s6"],
        "M(K5)",
        "!contract 5;!contract 6;!contract 7;!contract -6",
    ),
    (
        "g23",
        &["r1", "r8", "s3", "s4"],
        "M(K33)",
        "!contract 1;!contract 8;!contract -3;!contract -4",
    ),
    (
        "g24",
        &["r1", "s1", "s9"],
        "M(K5)",
        "!contract 1;!contract -1;!contract -9",
    ),
    (
        "g25",
        &["r5", "s10", "s12"],
        "M(K5)",
        "!contract 5;!contract -10;!contract -12",
    ),
    (
        "g26",
        &["r5", "r6", "r7", "s4"],
        "M(K5)",
        "!contract 5;!contract 6;!contract 7;!contract -4",
    ),
    (
        "g27",
        &["r1", "r2", "r3", "r4", "s2"],
        "M(K5)",
        "!contract 1;!contract 2;!contract 3;!contract 4;!contract -2",
    ),
    (
        "g28",
        &["r1", "r2", "r3", "r4", "r5", "s2"],
        "M(K5)",
        "!contract 1;!contract 2;!contract 3;!contract 4;!contract 5;!contract -2",
    ),
    (
        "g29",
        &["r1", "r2", "r3", "r4", "r5", "s2"],
        "M(K33)",
        "!contract 1;!contract 2;!contract 3;!contract 4;!contract 5;!contract -2",
    ),
    (
        "r15",
        &["r6", "r7", "s8"],
        "M*(K33)",
        "!delete 6;!delete 7;!delete -8",
    ),
    (
        "r16",
        &["r8", "s1", "s3", "s8"],
        "M*(K33)",
        "!delete 8;!delete -1;!delete -3;!delete -8",
    ),
];

/// The 29 built-in cases, in case order.
pub fn built_in_cases() -> Vec<CertificateCase> {
    BUILT_IN
        .iter()
        .map(|&(name, elements, expected, command)| {
            let dual = name.starts_with('r');
            let op = if dual {
                MinorOp::delete
            } else {
                MinorOp::contract
            };
            let targets = if dual {
                ["M*(K5)", "M*(K33)"]
            } else {
                ["M(K5)", "M(K33)"]
            };
            CertificateCase {
                name: name.to_string(),
                base: name.to_string(),
                ops: elements
                    .iter()
                    .map(|e| op(e).expect("valid label"))
                    .collect(),
                targets: targets.iter().map(|t| t.to_string()).collect(),
                expected: expected.to_string(),
                claim_kind: Some(if dual {
                    ClaimKind::Dual
                } else {
                    ClaimKind::Direct
                }),
                provenance: Some(format!("macek -pGF2 '{command};!minor' {name}")),
            }
        })
        .collect()
}

pub fn built_in_case(name: &str) -> Option<CertificateCase> {
    built_in_cases().into_iter().find(|c| c.name == name)
}

/// Reads a signed-index command (`!contract 4;!delete -9`) with positive
/// indices naming rows `r{i}` and negative ones columns `s{i}`.
pub fn ops_from_signed_command(command: &str) -> Result<Vec<MinorOp>> {
    let mut ops = Vec::new();
    for part in command.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let Some(rest) = part.strip_prefix('!') else {
            return Err(MatroidError::input(format!(
                "`{part}` does not start with `!`"
            )));
        };
        let mut toks = rest.split_whitespace();
        let verb = toks.next().unwrap_or("");
        let make = match verb {
            "contract" => MinorOp::contract,
            "delete" => MinorOp::delete,
            "minor" => continue,
            other => return Err(MatroidError::input(format!("unknown command `{other}`"))),
        };
        let idx: i64 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .filter(|&i| i != 0)
            .ok_or_else(|| MatroidError::input(format!("`{part}` needs a nonzero index")))?;
        let label = if idx > 0 {
            format!("r{idx}")
        } else {
            format!("s{}", -idx)
        };
        ops.push(make(&label)?);
    }
    Ok(ops)
}
