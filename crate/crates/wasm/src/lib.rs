//! Thin JSON-over-strings bindings for the browser demo in `www/`.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page needs no exception plumbing. All logic
//! lives in lattice-core, which keeps these wrappers host-testable.

use lattice_core::error::Error;
use lattice_core::family::Family;
use lattice_core::format::{
    enumeration_doc, identity_list, report_doc, table_doc, ReportDoc,
};
use lattice_core::identities;
use lattice_core::oracle::{Constraint, LatticePoint, StepSet, DEFAULT_BUDGET};
use wasm_bindgen::prelude::*;

fn error_json(message: &str) -> String {
    serde_json::json!({ "error": message }).to_string()
}

fn or_error(result: Result<String, Error>) -> String {
    result.unwrap_or_else(|e| error_json(&e.to_string()))
}

/// A family table as the same JSON document the CLI emits.
#[wasm_bindgen]
pub fn table_json(family: &str, size: u32) -> String {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return error_json(&e.to_string()),
    };
    or_error(table_doc(family, size as usize).map(|doc| doc.to_json()))
}

/// Path listing plus exact count for one target cell.
#[wasm_bindgen]
pub fn enumerate_json(
    p: u32,
    q: u32,
    steps: &str,
    constraint: &str,
    limit: u32,
) -> String {
    let steps = match steps {
        "hv" => StepSet::RightDown,
        "hvd" => StepSet::RightDownDiagonal,
        other => return error_json(&format!("unknown step set {other:?}")),
    };
    let constraint = match constraint {
        "none" => Constraint::Unrestricted,
        "subdiagonal" => Constraint::Subdiagonal,
        other => return error_json(&format!("unknown constraint {other:?}")),
    };
    or_error(
        enumeration_doc(
            LatticePoint::new(p, q),
            steps,
            constraint,
            limit as usize,
            DEFAULT_BUDGET,
        )
        .map(|doc| serde_json::to_string(&doc).expect("serialization")),
    )
}

/// Verification report(s): a JSON array for "all", one object otherwise.
#[wasm_bindgen]
pub fn verify_json(identity: &str, bound: u32) -> String {
    if identity == "all" {
        let docs: Vec<ReportDoc> = identities::verify_all(bound)
            .iter()
            .map(report_doc)
            .collect();
        return serde_json::to_string(&docs).expect("serialization");
    }
    or_error(
        identities::verify(identity, bound)
            .map(|r| serde_json::to_string(&report_doc(&r)).expect("serialization")),
    )
}

/// Registry metadata for the identity picker.
#[wasm_bindgen]
pub fn identities_json() -> String {
    serde_json::to_string(&identity_list()).expect("serialization")
}
