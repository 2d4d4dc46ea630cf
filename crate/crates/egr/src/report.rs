//! Text and JSON renderings of verification, bound and audit results.
//!
//! Both renderings are produced from the same record, so they always carry
//! the same numbers.

use std::collections::BTreeMap;
use std::fmt::Write;

use egr_core::bounds::{BoundReport, ExcessReport, Verdict};
use egr_core::EgrReport;
use serde::Serialize;

use crate::ingest::audit::{AuditStatus, CorpusAudit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Text => self.text(),
            OutputMode::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serialises");
                s.push('\n');
                s
            }
        }
    }
}

fn multiset(m: &BTreeMap<u64, usize>) -> String {
    let items: Vec<String> = m.iter().map(|(v, c)| format!("{v}x{c}")).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub source: String,
    pub order: usize,
    pub degrees: BTreeMap<usize, usize>,
    /// `None` for an acyclic graph.
    pub girth: Option<u32>,
    pub lambda_multiset: BTreeMap<u64, usize>,
    pub is_egr: bool,
    pub lambda: Option<u64>,
    pub cycles: u64,
    /// `[v, k, g, λ]` when the graph is egr.
    pub parameters: Option<[u64; 4]>,
    pub expected: Option<[u64; 4]>,
    pub matches: bool,
}

impl VerifyReport {
    pub fn new(source: String, r: &EgrReport, expected: Option<[u64; 4]>) -> VerifyReport {
        let parameters = r
            .parameters()
            .map(|(v, k, g, l)| [v as u64, k as u64, u64::from(g), l]);
        let matches = match expected {
            Some(e) => parameters == Some(e),
            None => r.is_egr,
        };
        VerifyReport {
            source,
            order: r.order,
            degrees: r.degrees.clone(),
            girth: Some(r.girth),
            lambda_multiset: r.lambda_multiset.clone(),
            is_egr: r.is_egr,
            lambda: r.lambda,
            cycles: r.cycles,
            parameters,
            expected,
            matches,
        }
    }

    pub fn acyclic(source: String, g: &egr_core::Graph, expected: Option<[u64; 4]>) -> VerifyReport {
        VerifyReport {
            source,
            order: g.order(),
            degrees: g.degree_multiset(),
            girth: None,
            lambda_multiset: BTreeMap::new(),
            is_egr: false,
            lambda: None,
            cycles: 0,
            parameters: None,
            expected,
            matches: false,
        }
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let degrees: Vec<String> = self.degrees.iter().map(|(d, c)| format!("{d}x{c}")).collect();
        let girth = self.girth.map_or("acyclic".to_string(), |g| g.to_string());
        writeln!(s, "source: {}", self.source).unwrap();
        writeln!(s, "order: {}", self.order).unwrap();
        writeln!(s, "degrees: {{{}}}", degrees.join(", ")).unwrap();
        writeln!(s, "girth: {girth}").unwrap();
        writeln!(s, "girth cycles: {}", self.cycles).unwrap();
        writeln!(s, "lambda multiset: {}", multiset(&self.lambda_multiset)).unwrap();
        match self.parameters {
            Some([v, k, g, l]) => writeln!(s, "egr({v},{k},{g},{l})").unwrap(),
            None => writeln!(s, "not egr").unwrap(),
        }
        if let Some([v, k, g, l]) = self.expected {
            let verdict = if self.matches { "match" } else { "MISMATCH" };
            writeln!(s, "expected egr({v},{k},{g},{l}): {verdict}").unwrap();
        }
        s
    }
}

/// Bound report with the optional excess of a given order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub k: u64,
    pub g: u64,
    pub lambda: u64,
    pub bipartite: bool,
    pub parity: bool,
    pub n0: u64,
    pub bound: u64,
    pub refined: u64,
    pub admissible: bool,
    pub order: Option<u64>,
    pub excluded: Vec<u64>,
    pub certified_bound: Option<u64>,
    pub excess: Option<u64>,
    pub verdict: Option<String>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn new(b: &BoundReport, excess: Option<(&ExcessReport, &[u64])>) -> BoundsReport {
        let mut notes = b.notes.clone();
        let (order, excluded, certified, ex, verdict) = match excess {
            Some((e, excluded)) => {
                notes.extend(e.notes.iter().cloned());
                let verdict = match e.verdict {
                    Verdict::ExtremalCertified => "extremal".to_string(),
                    Verdict::GapAtMost(d) => format!("gap at most {d}"),
                };
                (Some(e.order), excluded.to_vec(), Some(e.certified_bound), Some(e.excess), Some(verdict))
            }
            None => (None, Vec::new(), None, None, None),
        };
        BoundsReport {
            k: b.query.k,
            g: b.query.g,
            lambda: b.query.lambda,
            bipartite: b.query.bipartite,
            parity: b.query.parity_refine,
            n0: b.n0,
            bound: b.egr_bound,
            refined: b.refined,
            admissible: b.admissible,
            order,
            excluded,
            certified_bound: certified,
            excess: ex,
            verdict,
            notes,
        }
    }
}

impl Render for BoundsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "k={} g={} lambda={}", self.k, self.g, self.lambda).unwrap();
        writeln!(s, "n0: {}", self.n0).unwrap();
        writeln!(s, "bound: {}", self.bound).unwrap();
        writeln!(s, "refined: {}", self.refined).unwrap();
        writeln!(s, "admissible: {}", self.admissible).unwrap();
        if let (Some(v), Some(c), Some(e), Some(verdict)) =
            (self.order, self.certified_bound, self.excess, &self.verdict)
        {
            writeln!(s, "order: {v}").unwrap();
            writeln!(s, "certified bound: {c}").unwrap();
            writeln!(s, "excess: {e}").unwrap();
            writeln!(s, "verdict: {verdict}").unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    }
}

impl Render for CorpusAudit {
    fn text(&self) -> String {
        let mut s = String::new();
        let status = match self.status {
            AuditStatus::DataMissing => "data missing",
            AuditStatus::Pass => "pass",
            AuditStatus::Fail => "FAIL",
        };
        writeln!(s, "audit {}: {status}", self.manifest).unwrap();
        for g in &self.graphs {
            let girth = g.girth.map_or("acyclic".to_string(), |x| x.to_string());
            writeln!(
                s,
                "  {}: order {}, girth {girth}, lambda {}, egr {}",
                g.source,
                g.order,
                multiset(&g.lambda_multiset),
                g.is_egr
            )
            .unwrap();
        }
        for e in &self.errors {
            writeln!(s, "  error {}: {}", e.file, e.message).unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use egr_core::bounds::{egr_lower_bound, excess_report, BoundQuery};

    #[test]
    fn bounds_json_has_stable_fields() {
        let q = BoundQuery::new(8, 5, 7);
        let b = egr_lower_bound(&q).unwrap();
        let e = excess_report(520, &q, &[]).unwrap();
        let r = BoundsReport::new(&b, Some((&e, &[])));
        let v: serde_json::Value = serde_json::from_str(&r.render(OutputMode::Json)).unwrap();
        for key in ["n0", "bound", "refined", "admissible", "excess", "verdict", "notes"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["bound"], 107);
        assert_eq!(v["excess"], 413);
        let text = r.render(OutputMode::Text);
        assert!(text.contains("bound: 107\n") && text.contains("excess: 413\n"));

        let plain = BoundsReport::new(&b, None);
        let v: serde_json::Value = serde_json::to_value(&plain).unwrap();
        assert!(v["excess"].is_null() && v["verdict"].is_null());
    }

    #[test]
    fn verify_text_and_json_agree() {
        let g = egr_core::graph::named::petersen();
        let r = VerifyReport::new("p".into(), &egr_core::is_egr(&g).unwrap(), Some([10, 3, 5, 4]));
        assert!(r.matches);
        assert!(r.text().contains("egr(10,3,5,4)"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["parameters"], serde_json::json!([10, 3, 5, 4]));
    }
}
