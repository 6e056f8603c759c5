//! Static cross-reference between Jordan types, rank-one symmetric spaces
//! `(A1)–(A9)` and Hilbert-scheme cases `(H1)–(H9)`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::JordanLabel;

const TABLE: &str = include_str!("../../data/jordan_xref.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricLink {
    pub case: String,
    pub group: String,
    pub condition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanEntry {
    pub label: String,
    pub symmetric: Vec<SymmetricLink>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertLink {
    pub symmetric: String,
    pub case: String,
    pub condition: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XrefTable {
    pub jordan: Vec<JordanEntry>,
    pub hilbert: Vec<HilbertLink>,
}

pub fn table() -> &'static XrefTable {
    static T: OnceLock<XrefTable> = OnceLock::new();
    T.get_or_init(|| serde_json::from_str(TABLE).expect("bundled cross-reference table is valid"))
}

/// One printed row: a Jordan type with its symmetric cases and the Hilbert cases they feed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XrefRow {
    pub jordan: String,
    pub symmetric: Vec<SymmetricLink>,
    pub hilbert: Vec<HilbertLink>,
}

/// Family name without size, e.g. `J3` for `J3(4)`.
pub fn family(label: &JordanLabel) -> &'static str {
    match label {
        JordanLabel::J1(_) => "J1",
        JordanLabel::J2(_) => "J2",
        JordanLabel::J3(_) => "J3",
        JordanLabel::J4(_) => "J4",
        JordanLabel::J5 => "J5",
    }
}

pub fn row(label: &JordanLabel) -> XrefRow {
    let t = table();
    let fam = family(label);
    let entry = t.jordan.iter().find(|e| e.label == fam).expect("every family is listed");
    let hilbert = t.hilbert.iter().filter(|h| entry.symmetric.iter().any(|s| s.case == h.symmetric)).cloned().collect();
    XrefRow { jordan: fam.to_string(), symmetric: entry.symmetric.clone(), hilbert }
}

impl XrefRow {
    pub fn hilbert_cases(&self) -> Vec<String> {
        let mut v: Vec<String> = self.hilbert.iter().map(|h| h.case.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}
