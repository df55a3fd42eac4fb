//! JSON report payloads emitted by the subcommands.
//!
//! Every report serializes with a stable field order (struct order) so that
//! identical inputs produce byte-identical output regardless of worker
//! count. The `--human` flag switches to a plain-text rendering; JSON is
//! the default.

use serde::Serialize;

/// Field inspection report (`field` subcommand).
#[derive(Debug, Serialize)]
pub struct FieldReport {
    pub p: u32,
    pub m: u32,
    pub q: u32,
    /// Ascending coefficients of the modulus over the prime field.
    pub modulus: Vec<u32>,
    pub frobenius_power: u32,
    /// Multiplicative order of the automorphism σ: a ↦ a^(p^i).
    pub theta_order: u32,
    /// Size of the subfield fixed by σ.
    pub fixed_subfield: u32,
    /// ω as a polynomial in the prime-field basis, ascending.
    pub omega_vector: Vec<u32>,
}

/// Result of a `skew` calculator operation.
#[derive(Debug, Serialize)]
pub struct SkewReport {
    pub op: String,
    pub operands: Vec<String>,
    /// Primary result polynomial (product, gcd, lcm, reciprocal, …).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    /// Quotient for division ops.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    /// Remainder for division ops.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder: Option<String>,
}

/// Classical parameters as a JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct ClassicalReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    /// True when the distance bounds met (always for exact searches).
    pub exact: bool,
}

/// Quantum parameters as a JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct QeccReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    pub mds: bool,
    /// Slack in the quantum Singleton bound: n − k + 2 − 2d.
    pub defect: i64,
    pub source: String,
}

/// Composite report for the `code` subcommand.
#[derive(Debug, Serialize)]
pub struct CodeReport {
    /// Echo of the field block.
    pub field: FieldReport,
    pub r: usize,
    pub s: usize,
    /// Monic-normalized generators, formatted.
    pub ell: String,
    pub s_poly: String,
    pub t: Vec<String>,
    pub separable: bool,
    /// Dimension of the mixed code as an F_q-space.
    pub dim: usize,
    /// Number of rows in the minimal generating set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    /// Gray-image parameters, present when `gray`/`distance` ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gray: Option<ClassicalReport>,
    /// Dual-containment verdict, present when `dual` ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_containing: Option<bool>,
    /// CSS output, present when `qecc` ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qecc: Option<QeccReport>,
}

/// One candidate from the `search` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    pub ell: String,
    pub t: Vec<String>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub defect: i64,
    pub qecc: QeccReport,
}

/// Full `search` output; `resume` appears when the budget ran out.
#[derive(Debug, Serialize)]
pub struct SearchReport {
    pub examined: u64,
    pub candidates: Vec<Candidate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resume: Option<String>,
}

/// Verdict for one manifest entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Skip => write!(f, "SKIP"),
        }
    }
}

/// Per-entry outcome of a reproduction run.
#[derive(Debug, Serialize)]
pub struct EntryReport {
    pub label: String,
    pub status: Verdict,
    /// Computed values, one `"name: value"` string per checked quantity.
    pub computed: Vec<String>,
    /// Expected values in the same format and order.
    pub expected: Vec<String>,
    /// Mismatches spelled out (empty on PASS).
    pub diffs: Vec<String>,
    /// Documented reading decisions and data notes for this entry.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Whole-target reproduction report.
#[derive(Debug, Serialize)]
pub struct ReproduceReport {
    pub target: String,
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn human_entry(e: &EntryReport) -> String {
    let mut line = format!("{:4} {}", e.status.to_string(), e.label);
    if !e.diffs.is_empty() {
        line.push_str(&format!("  [{}]", e.diffs.join("; ")));
    }
    line
}
