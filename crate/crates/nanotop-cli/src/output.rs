//! Machine-readable output shapes and shared rendering helpers.
//!
//! Sets are serialized as arrays of element names in universe order, so
//! every JSON document is byte-deterministic for a fixed input.

use serde::Serialize;

use nanotop::{SetFamily, Subset, VerdictReport};

pub fn subset_names(s: &Subset) -> Vec<String> {
    s.element_names().map(str::to_owned).collect()
}

pub fn family_names(f: &SetFamily) -> Vec<Vec<String>> {
    f.iter().map(subset_names).collect()
}

#[derive(Serialize)]
pub struct TopologyJson {
    pub universe: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub target: Vec<String>,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub tau: Vec<Vec<String>>,
    pub closed: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub set: Vec<String>,
    pub classes: Vec<ClassRowJson>,
}

#[derive(Serialize)]
pub struct ClassRowJson {
    pub kind: String,
    pub open: bool,
    pub closed: bool,
    pub interior: Vec<String>,
    pub closure: Vec<String>,
}

#[derive(Serialize)]
pub struct FamilyJson {
    pub kind: String,
    pub side: String,
    pub count: usize,
    pub members: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub spaces: usize,
    pub reports: Vec<ReportJson>,
    pub summary: SummaryJson,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub space: String,
    pub theorem: String,
    pub status: String,
    pub checked: u64,
    pub witnesses: Vec<Vec<String>>,
    pub detail: Option<String>,
}

impl ReportJson {
    pub fn from_report(r: &VerdictReport) -> Self {
        ReportJson {
            space: r.space.clone(),
            theorem: r.theorem.token().to_owned(),
            status: r.status.token().to_owned(),
            checked: r.checked_count,
            witnesses: r.witnesses.iter().map(subset_names).collect(),
            detail: r.detail.clone(),
        }
    }
}

#[derive(Serialize, Default)]
pub struct SummaryJson {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub witness_found: usize,
    pub witness_not_found: usize,
}

#[derive(Serialize)]
pub struct MineJson {
    pub goal: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<crate::spacefile::SpaceFile>,
    pub witnesses: Vec<Vec<String>>,
}

/// One verify report as a text line.
pub fn report_line(r: &VerdictReport) -> String {
    let mut line = format!(
        "{} | {} | {} | checked={}",
        r.space, r.theorem, r.status, r.checked_count
    );
    if !r.witnesses.is_empty() {
        let rendered: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
        line.push_str(&format!(" | witnesses: {}", rendered.join(" ")));
    }
    if let Some(detail) = &r.detail {
        line.push_str(&format!(" | {detail}"));
    }
    line
}
