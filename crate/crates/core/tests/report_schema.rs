//! The report JSON validates against the shipped schema and is deterministic.

use cybe::catalog::load_catalog;
use cybe::lie::sl4;
use cybe::verify::{check_entry, RunOptions, REPORT_SCHEMA};

#[test]
fn entry_report_validates() {
    let g = sl4();
    let catalog = load_catalog(g).unwrap();
    let opts = RunOptions::default().with_assignments(["a=0"]).unwrap();
    let report = check_entry(g, &catalog, "r8_1", &opts).unwrap();
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let instance: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert!(compiled.is_valid(&instance));
    assert_eq!(instance["parameters"]["a"], "0");
    assert_eq!(report.to_json(), check_entry(g, &catalog, "r8_1", &opts).unwrap().to_json());
}

#[test]
fn schema_rejects_unknown_verdicts() {
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let bad = serde_json::json!({
        "engine_version": "0", "catalog_hash": "0".repeat(64), "assumptions": [], "parameters": {},
        "checks": [{"check_id": "x", "subject": "", "verdict": "maybe", "required": true, "witness": ""}]
    });
    assert!(!compiled.is_valid(&bad));
}
