//! Output rows and the three emitters (json, csv, text).
//!
//! Output is deterministic: rows are pre-sorted by the caller (spin^c index
//! ascending, sweep keys ascending), JSON field order is struct order, and
//! rationals always serialize as exact `"num/den"` strings.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use corrterm::{Evidence, ObstructionReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// One spin^c structure and its correction term.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct DRow {
    pub i: i64,
    pub d: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct StaircaseRow {
    pub a: i64,
    pub m: i64,
    pub delta: i64,
}

/// Full `knot` summary; selector flags trim it to a single section.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq, Default)]
pub struct KnotOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_plus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thickness: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub staircase: Option<Vec<StaircaseRow>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum EvidenceRow {
    Sum { ell: i64, lhs: i64, rhs: i64, ok: bool },
    Forced { lens_param: i64, summand_d: String },
    Note { note: String },
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ReportOut {
    pub p: i64,
    pub q: i64,
    pub slope: i64,
    pub verdict: String,
    pub evidence: Vec<EvidenceRow>,
}

impl ReportOut {
    pub fn new(p: i64, q: i64, report: &ObstructionReport) -> Self {
        ReportOut {
            p,
            q,
            slope: p * q,
            verdict: match report.verdict {
                Verdict::Pass => "pass".into(),
                Verdict::Contradiction => "contradiction".into(),
            },
            evidence: report
                .evidence
                .iter()
                .map(|e| match e {
                    Evidence::SumIdentity { ell, lhs, rhs } => EvidenceRow::Sum {
                        ell: *ell,
                        lhs: *lhs,
                        rhs: *rhs,
                        ok: lhs == rhs,
                    },
                    Evidence::ForcedConclusion { lens_param, summand_d } => EvidenceRow::Forced {
                        lens_param: *lens_param,
                        summand_d: summand_d.to_exact_string(),
                    },
                    Evidence::Note(note) => EvidenceRow::Note { note: note.clone() },
                })
                .collect(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == "pass"
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SlopeRow {
    pub slope: i64,
    pub p: i64,
    pub q: i64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct LspaceObstructOut {
    pub g: i64,
    pub th: i64,
    pub slope: i64,
    pub smallest_prime_factor: i64,
    pub excluded: bool,
    pub reason: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct GenAlexOut {
    pub q: i64,
    pub p: i64,
    pub genus: i64,
    pub alex: String,
    pub poly: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct BlockRow {
    pub value: i64,
    pub len: i64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ReconstructOut {
    pub q: i64,
    pub p: i64,
    pub genus: i64,
    pub v: Vec<i64>,
    pub blocks: Vec<BlockRow>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct CrossCheckRow {
    pub q: i64,
    pub p: i64,
    pub genus: i64,
    pub vi_match: bool,
    pub constraints_pass: bool,
    pub thickness: i64,
    pub thickness_lower: i64,
    pub thickness_upper: i64,
    pub ok: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct MoserRow {
    pub p: i64,
    pub q: i64,
    pub slope: i64,
    pub ok: bool,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

/// Plain CSV: a header row and unquoted cells (no cell ever contains a
/// comma; rationals are `num/den`).
pub fn print_csv(header: &[&str], rows: &[Vec<String>]) {
    println!("{}", header.join(","));
    for row in rows {
        println!("{}", row.join(","));
    }
}

/// Aligned columns for human reading.
pub fn print_table(header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    println!("{}", fmt_row(header.iter().map(|h| h.to_string()).collect()));
    for row in rows {
        println!("{}", fmt_row(row.clone()));
    }
}

pub fn d_rows_cells(rows: &[DRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| vec![r.i.to_string(), r.d.clone()])
        .collect()
}

pub fn evidence_cells(rows: &[EvidenceRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|e| match e {
            EvidenceRow::Sum { ell, lhs, rhs, ok } => vec![
                "sum".to_string(),
                ell.to_string(),
                lhs.to_string(),
                rhs.to_string(),
                ok.to_string(),
                String::new(),
            ],
            EvidenceRow::Forced { lens_param, summand_d } => vec![
                "forced".to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                format!("a={lens_param} d(Y)={summand_d}"),
            ],
            EvidenceRow::Note { note } => vec![
                "note".to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                note.clone(),
            ],
        })
        .collect()
}

pub const EVIDENCE_HEADER: [&str; 6] = ["type", "ell", "lhs", "rhs", "ok", "detail"];
