//! Serialization shared by the CLI and the browser demo.
//!
//! Counts are emitted as decimal strings, never native numbers, so any
//! JSON consumer survives arbitrary precision. Serialization is
//! deterministic: re-parsing and re-serializing a document is
//! byte-identical.

use crate::error::Error;
use crate::family::{family_table, Family, FamilyTable};
use crate::identities::{self, Status, VerificationReport};
use crate::oracle::{self, Constraint, LatticePoint, StepSet};
use serde::{Deserialize, Serialize};

/// JSON document for one family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub family: String,
    pub size: usize,
    pub kind: String,
    pub rows: Vec<Vec<String>>,
}

pub fn table_doc(family: Family, size: usize) -> Result<TableDoc, Error> {
    let (kind, rows) = match family_table(family, size)? {
        FamilyTable::Square(m) => (
            "square",
            (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        ),
        FamilyTable::Triangle(t) => (
            "triangle",
            (0..t.size())
                .map(|p| t.row(p).iter().map(ToString::to_string).collect())
                .collect(),
        ),
    };
    Ok(TableDoc {
        family: family.name().to_string(),
        size,
        kind: kind.to_string(),
        rows,
    })
}

impl TableDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization")
    }

    /// Square tables: a headerless grid. Triangles: `p,q,value` triples
    /// under a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.kind == "square" {
            for row in &self.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        } else {
            out.push_str("p,q,value\n");
            for (p, row) in self.rows.iter().enumerate() {
                for (q, value) in row.iter().enumerate() {
                    out.push_str(&format!("{p},{q},{value}\n"));
                }
            }
        }
        out
    }

    pub fn to_md(&self) -> String {
        let mut out = String::new();
        if self.kind == "square" {
            out.push_str("| p\\q |");
            for q in 0..self.size {
                out.push_str(&format!(" {q} |"));
            }
            out.push('\n');
            out.push_str("| --- |");
            for _ in 0..self.size {
                out.push_str(" --- |");
            }
            out.push('\n');
            for (p, row) in self.rows.iter().enumerate() {
                out.push_str(&format!("| {p} |"));
                for value in row {
                    out.push_str(&format!(" {value} |"));
                }
                out.push('\n');
            }
        } else {
            // Ragged rows: row p carries exactly its p+1 cells.
            for row in &self.rows {
                out.push('|');
                for value in row {
                    out.push_str(&format!(" {value} |"));
                }
                out.push('\n');
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub params: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

/// JSON document for one verification report, joined with the registry
/// metadata of its identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub identity: String,
    pub description: String,
    pub anchor: String,
    pub errata_expected: bool,
    pub status: String,
    pub cases_checked: u64,
    pub counterexamples: Vec<CounterexampleDoc>,
}

pub fn report_doc(report: &VerificationReport) -> ReportDoc {
    let ident = identities::identity(report.identity_id)
        .expect("report refers to a registered identity");
    ReportDoc {
        identity: report.identity_id.to_string(),
        description: ident.description.to_string(),
        anchor: ident.anchor.to_string(),
        errata_expected: ident.errata_expected,
        status: match report.status {
            Status::Verified => "Verified".to_string(),
            Status::Refuted => "Refuted".to_string(),
        },
        cases_checked: report.cases_checked,
        counterexamples: report
            .counterexamples
            .iter()
            .map(|c| CounterexampleDoc {
                params: c.params.clone(),
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
            })
            .collect(),
    }
}

pub fn reports_json(reports: &[VerificationReport]) -> String {
    let docs: Vec<ReportDoc> = reports.iter().map(report_doc).collect();
    serde_json::to_string(&docs).expect("report serialization")
}

pub fn report_json(report: &VerificationReport) -> String {
    serde_json::to_string(&report_doc(report)).expect("report serialization")
}

/// One human-readable line per report.
pub fn report_text(report: &VerificationReport) -> String {
    let doc = report_doc(report);
    let mut line = format!(
        "{:<14} {:<9} {:>6} cases",
        doc.identity, doc.status, doc.cases_checked
    );
    if doc.errata_expected {
        line.push_str("  [errata-expected]");
    }
    if let Some(first) = doc.counterexamples.first() {
        line.push_str(&format!(
            "  minimal counterexample at {:?}: lhs = {}, rhs = {}",
            first.params, first.lhs, first.rhs
        ));
    }
    line
}

/// Default verification bound for the errata report.
pub const ERRATA_DEFAULT_BOUND: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataDoc {
    pub bound: u32,
    pub entries: Vec<ReportDoc>,
}

/// Runs the full registry and keeps only the refuted identities.
pub fn errata_doc(bound: u32) -> ErrataDoc {
    let entries = identities::verify_all(bound)
        .iter()
        .filter(|r| r.status == Status::Refuted)
        .map(report_doc)
        .collect();
    ErrataDoc { bound, entries }
}

impl ErrataDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("errata serialization")
    }

    pub fn to_md(&self) -> String {
        let mut out = String::new();
        out.push_str("# Errata\n\n");
        out.push_str(&format!(
            "Identities refuted by exact evaluation with every parameter bounded by {}.\n",
            self.bound
        ));
        for entry in &self.entries {
            out.push_str(&format!("\n## {}\n\n", entry.identity));
            out.push_str(&format!("- statement: `{}`\n", entry.anchor));
            out.push_str(&format!("- {}\n", entry.description));
            out.push_str(&format!("- cases checked: {}\n", entry.cases_checked));
            if let Some(first) = entry.counterexamples.first() {
                out.push_str(&format!(
                    "- minimal counterexample at {:?}: lhs = {}, rhs = {}\n",
                    first.params, first.lhs, first.rhs
                ));
            }
            if entry.counterexamples.len() > 1 {
                out.push_str("- further counterexamples (capped):\n");
                for c in &entry.counterexamples[1..] {
                    out.push_str(&format!(
                        "  - at {:?}: lhs = {}, rhs = {}\n",
                        c.params, c.lhs, c.rhs
                    ));
                }
            }
        }
        out
    }
}

/// JSON document for a path enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDoc {
    pub p: u32,
    pub q: u32,
    pub steps: String,
    pub constraint: String,
    pub count: String,
    pub truncated: bool,
    pub paths: Vec<String>,
}

pub fn enumeration_doc(
    target: LatticePoint,
    steps: StepSet,
    constraint: Constraint,
    limit: usize,
    budget: u64,
) -> Result<EnumerationDoc, Error> {
    let count = oracle::count_paths(target, steps, constraint, budget)?;
    let listing = oracle::list_paths(target, steps, constraint, limit);
    Ok(EnumerationDoc {
        p: target.p,
        q: target.q,
        steps: match steps {
            StepSet::RightDown => "hv".to_string(),
            StepSet::RightDownDiagonal => "hvd".to_string(),
        },
        constraint: match constraint {
            Constraint::Unrestricted => "none".to_string(),
            Constraint::Subdiagonal => "subdiagonal".to_string(),
        },
        count: count.count.to_string(),
        truncated: listing.truncated,
        paths: listing.paths.iter().map(|p| oracle::path_string(p)).collect(),
    })
}

/// Registry metadata listing, for identity pickers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityInfo {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub errata_expected: bool,
}

pub fn identity_list() -> Vec<IdentityInfo> {
    identities::registry()
        .iter()
        .map(|i| IdentityInfo {
            id: i.id.to_string(),
            description: i.description.to_string(),
            anchor: i.anchor.to_string(),
            errata_expected: i.errata_expected,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        for family in Family::ALL {
            let doc = table_doc(family, 7).unwrap();
            let json = doc.to_json();
            let parsed: TableDoc = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn square_csv_is_headerless_grid() {
        let doc = table_doc(Family::Rect, 3).unwrap();
        assert_eq!(doc.to_csv(), "1,1,1\n1,2,3\n1,3,6\n");
    }

    #[test]
    fn triangle_csv_is_triples() {
        let doc = table_doc(Family::Schroder, 2).unwrap();
        assert_eq!(doc.to_csv(), "p,q,value\n0,0,1\n1,0,1\n1,1,2\n");
    }

    #[test]
    fn triangle_md_is_ragged() {
        let doc = table_doc(Family::Catalan, 3).unwrap();
        assert_eq!(doc.to_md(), "| 1 |\n| 1 | 1 |\n| 1 | 2 | 2 |\n");
        let single = table_doc(Family::Catalan, 1).unwrap();
        assert_eq!(single.to_md(), "| 1 |\n");
    }

    #[test]
    fn errata_contains_exactly_the_expected_entries() {
        let doc = errata_doc(10);
        let ids: Vec<&str> =
            doc.entries.iter().map(|e| e.identity.as_str()).collect();
        assert_eq!(ids, ["GF2", "S32_PRINTED"]);
        for entry in &doc.entries {
            assert!(entry.errata_expected);
            assert!(!entry.counterexamples.is_empty());
        }
    }

    #[test]
    fn enumeration_doc_contents() {
        let doc = enumeration_doc(
            LatticePoint::new(1, 1),
            StepSet::RightDownDiagonal,
            Constraint::Subdiagonal,
            10,
            oracle::DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(doc.count, "2");
        assert_eq!(doc.paths, vec!["DR".to_string(), "X".to_string()]);
        assert!(!doc.truncated);
    }

    #[test]
    fn identity_list_covers_registry() {
        let list = identity_list();
        assert_eq!(list.len(), identities::registry().len());
        assert_eq!(list[0].id, "B1");
    }
}
