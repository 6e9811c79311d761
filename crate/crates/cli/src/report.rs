//! CSV and JSON renderings of classification results.
//!
//! Sweep rows use the columns in [`PAIR_COLUMNS`]. `li*`/`lf*` are the
//! closed-form coefficients in formula order (not sorted), so the
//! individual inequalities can be read off a row directly.

use locc_core::{ConvertibilityVerdict, PairReport, SchmidtVector, ThresholdResult};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::numfmt::{json_num, json_nums};

pub const PAIR_COLUMNS: [&str; 13] = [
    "alpha",
    "li1",
    "li2",
    "li3",
    "lf1",
    "lf2",
    "lf3",
    "verdict",
    "entropy_i",
    "entropy_f",
    "forward_blocked",
    "backward_blocked",
    "paper_claim_upheld",
];

#[derive(Debug, Serialize)]
pub struct PairRow {
    pub alpha: Box<RawValue>,
    pub li1: Box<RawValue>,
    pub li2: Box<RawValue>,
    pub li3: Box<RawValue>,
    pub lf1: Box<RawValue>,
    pub lf2: Box<RawValue>,
    pub lf3: Box<RawValue>,
    pub verdict: &'static str,
    pub entropy_i: Box<RawValue>,
    pub entropy_f: Box<RawValue>,
    pub forward_blocked: bool,
    pub backward_blocked: bool,
    pub paper_claim_upheld: bool,
}

impl From<&PairReport> for PairRow {
    fn from(r: &PairReport) -> Self {
        let [li1, li2, li3] = r.closed_form.initial;
        let [lf1, lf2, lf3] = r.closed_form.cloned;
        PairRow {
            alpha: json_num(r.alpha),
            li1: json_num(li1),
            li2: json_num(li2),
            li3: json_num(li3),
            lf1: json_num(lf1),
            lf2: json_num(lf2),
            lf3: json_num(lf3),
            verdict: r.verdict.as_str(),
            entropy_i: json_num(r.entropy_initial),
            entropy_f: json_num(r.entropy_final),
            forward_blocked: r.forward_blocked,
            backward_blocked: r.backward_blocked,
            paper_claim_upheld: r.paper_claim_upheld,
        }
    }
}

impl PairRow {
    fn csv_line(&self) -> String {
        [
            self.alpha.get(),
            self.li1.get(),
            self.li2.get(),
            self.li3.get(),
            self.lf1.get(),
            self.lf2.get(),
            self.lf3.get(),
            self.verdict,
            self.entropy_i.get(),
            self.entropy_f.get(),
            bool_str(self.forward_blocked),
            bool_str(self.backward_blocked),
            bool_str(self.paper_claim_upheld),
        ]
        .join(",")
    }
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn pairs_csv(reports: &[PairReport]) -> String {
    let mut out = PAIR_COLUMNS.join(",");
    out.push('\n');
    for r in reports {
        out.push_str(&PairRow::from(r).csv_line());
        out.push('\n');
    }
    out
}

pub fn pairs_json(reports: &[PairReport]) -> String {
    let rows: Vec<PairRow> = reports.iter().map(PairRow::from).collect();
    to_json(&rows)
}

/// Counts printed after a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub rows: usize,
    pub incomparable: usize,
    pub forward_only: usize,
    pub other: usize,
    pub no_deleting_universal: bool,
    pub paper_claim_upheld_everywhere: bool,
}

impl SweepSummary {
    pub fn new(reports: &[PairReport]) -> Self {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count();
        let incomparable = count(ConvertibilityVerdict::Incomparable);
        let forward_only = count(ConvertibilityVerdict::ForwardOnly);
        SweepSummary {
            rows: reports.len(),
            incomparable,
            forward_only,
            other: reports.len() - incomparable - forward_only,
            no_deleting_universal: reports.iter().all(|r| r.backward_blocked),
            paper_claim_upheld_everywhere: reports.iter().all(|r| r.paper_claim_upheld),
        }
    }

    /// `key=value` lines.
    pub fn render(&self) -> String {
        format!(
            "rows={}\nincomparable={}\nforward_only={}\nother={}\nno_deleting_universal={}\npaper_claim_upheld_everywhere={}\n",
            self.rows,
            self.incomparable,
            self.forward_only,
            self.other,
            self.no_deleting_universal,
            self.paper_claim_upheld_everywhere,
        )
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub verdict: &'static str,
    pub forward_possible: bool,
    pub backward_possible: bool,
    pub schmidt_a: Vec<Box<RawValue>>,
    pub schmidt_b: Vec<Box<RawValue>>,
    pub entropy_a: Box<RawValue>,
    pub entropy_b: Box<RawValue>,
    /// Three-level closed-form test; `null` when it does not apply.
    pub incomparable_fast_path: Option<bool>,
}

impl AnalyzeReport {
    pub fn new(
        a: &SchmidtVector,
        b: &SchmidtVector,
        verdict: ConvertibilityVerdict,
        entropies: (f64, f64),
        fast_path: Option<bool>,
    ) -> Self {
        AnalyzeReport {
            verdict: verdict.as_str(),
            forward_possible: verdict.forward_possible(),
            backward_possible: verdict.backward_possible(),
            schmidt_a: json_nums(a.probs()),
            schmidt_b: json_nums(b.probs()),
            entropy_a: json_num(entropies.0),
            entropy_b: json_num(entropies.1),
            incomparable_fast_path: fast_path,
        }
    }

    pub fn to_csv(&self) -> String {
        let join = |v: &[Box<RawValue>]| v.iter().map(|x| x.get()).collect::<Vec<_>>().join(";");
        let fast = match self.incomparable_fast_path {
            Some(b) => bool_str(b),
            None => "",
        };
        format!(
            "verdict,forward_possible,backward_possible,entropy_a,entropy_b,schmidt_a,schmidt_b,incomparable_fast_path\n{},{},{},{},{},{},{},{}\n",
            self.verdict,
            bool_str(self.forward_possible),
            bool_str(self.backward_possible),
            self.entropy_a.get(),
            self.entropy_b.get(),
            join(&self.schmidt_a),
            join(&self.schmidt_b),
            fast,
        )
    }
}

#[derive(Debug, Serialize)]
pub struct ThresholdReport {
    pub alpha_star: Box<RawValue>,
    pub bracket: [Box<RawValue>; 2],
    pub verdict_below: &'static str,
    pub verdict_above: &'static str,
    pub grid_sign_changes: usize,
}

impl From<&ThresholdResult> for ThresholdReport {
    fn from(t: &ThresholdResult) -> Self {
        ThresholdReport {
            alpha_star: json_num(t.alpha_star),
            bracket: [json_num(t.bracket.0), json_num(t.bracket.1)],
            verdict_below: t.verdict_below.as_str(),
            verdict_above: t.verdict_above.as_str(),
            grid_sign_changes: t.grid_sign_changes,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
