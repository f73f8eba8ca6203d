//! The serialized report shared by every command. Markdown is rendered from
//! a [`Report`] alone, so a report read back from JSON renders identically.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    /// Enabled rules, by name; absent for commands that do not decide orders.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rules: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cases: Vec<CaseReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<MuReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationReport>,
    /// Conditions a reader should know about, e.g. over-approximated branches.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Every order is settled: the conjecture holds for the group.
    Verified,
    /// Some partial augmentations survive that are not known to be trivial.
    Inconclusive,
    Success,
    Invalid,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Verified | Outcome::Success => 0,
            Outcome::Invalid => 1,
            Outcome::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psl: Option<(u64, u32)>,
    pub classes: Vec<ClassSummary>,
    /// `*` for the ordinary table, otherwise the characteristic.
    pub tables: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub power_maps: Vec<PowerMapSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub name: String,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerMapSummary {
    pub prime: u64,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    AllTrivial,
    Nonexistent,
    Exceptional,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MethodReport {
    Rule {
        rule: String,
        alias: String,
        justification: String,
    },
    Help,
    EmptyAdmissible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub order: u64,
    pub classes: Vec<String>,
    pub method: MethodReport,
    pub verdict: VerdictKind,
    pub solutions: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exceptional: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<BranchReport>,
}

/// Partial augmentations chosen for `u^{k/order}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerReport {
    pub order: u64,
    pub classes: Vec<String>,
    pub entries: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `fourier-motzkin`, `fallback-box`, `infeasible` or `fixed`.
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_width: Option<i64>,
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub entries: Vec<i64>,
    /// Class name of the conjugate group element, or absent when exceptional.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub powers: Vec<PowerReport>,
    pub over_approximated: bool,
    pub bounds: BoundsReport,
    /// Distinct constraints after deduplication.
    pub constraints: usize,
    pub solutions: Vec<SolutionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FormSet>,
    /// Every distinct constraint; filled by `solve` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forms: Option<FormSet>,
}

/// Forms together with the γ abbreviations used to render them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSet {
    pub gammas: Vec<GammaDef>,
    pub forms: Vec<FormReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDef {
    pub name: String,
    pub coeffs: Vec<i64>,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub label: String,
    pub table: String,
    /// 1-based row index.
    pub character: usize,
    pub l: u64,
    pub scale: u64,
    pub coeffs: Vec<String>,
    pub constant: String,
    pub affine: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuReport {
    pub order: u64,
    pub classes: Vec<String>,
    pub powers: Vec<PowerReport>,
    pub gammas: Vec<GammaDef>,
    pub form: FormReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<Evaluation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub nu: Vec<i64>,
    pub value: String,
    /// Non-negative integer.
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub violations: Vec<ViolationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub location: String,
    pub message: String,
}

impl Report {
    pub fn new(command: &str, outcome: Outcome) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            generated: None,
            group: None,
            rules: None,
            notes: Vec::new(),
            cases: Vec::new(),
            mu: None,
            validation: None,
            flags: Vec::new(),
            outcome,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
