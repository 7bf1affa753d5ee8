//! Serializable reports. Every JSON document carries `schema: 1`.

use prym_core::hecke::IdentityCheck;
use prym_core::prym::HypothesisReport;
use prym_core::verify::CaseReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub index: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepInfo {
    pub index: usize,
    pub degree: u64,
    pub field_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeInfo {
    /// Number of double cosets.
    pub d: usize,
    pub b: i64,
    pub b1: i64,
    pub q: i64,
    #[serde(rename = "degK")]
    pub deg_k: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub representative: String,
    pub size: usize,
    pub element_order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub degree: u64,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRow {
    pub index: usize,
    pub degree: u64,
    pub field_degree: usize,
    /// Indices of the complex characters in the Galois orbit.
    pub orbit: Vec<usize>,
    pub trace_values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub schema: u32,
    pub group: GroupInfo,
    pub classes: Vec<ClassRow>,
    pub characters: Vec<CharacterRow>,
    pub rational: Vec<RationalRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub subgroup: SubgroupInfo,
    pub reps: Vec<RepInfo>,
    pub hecke: HeckeInfo,
    pub identities_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub group: GroupInfo,
    /// False when subgroup enumeration stopped at its work cap.
    pub complete: bool,
    pub triples: Vec<ScanRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleRow {
    pub label: String,
    pub class_order: usize,
    pub class_size: usize,
    #[serde(rename = "A")]
    pub a: i64,
    pub mixed_cosets: usize,
    pub fixed_dims: Vec<u64>,
    pub generates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRow {
    pub class: String,
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureRow {
    pub entries: Vec<EntryRow>,
    pub branch_points: u32,
    #[serde(rename = "genus_X")]
    pub genus_x: i64,
    #[serde(rename = "dim_P")]
    pub dim_p: i64,
    pub fixed_points: i64,
    /// `yes`, `no` or `unknown`.
    pub realizable: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub crosscheck: bool,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub schema: u32,
    pub group: GroupInfo,
    pub subgroup: SubgroupInfo,
    pub reps: Vec<RepInfo>,
    pub hypothesis: HypothesisReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hecke: Option<HeckeInfo>,
    #[serde(default)]
    pub identities: Vec<IdentityCheck>,
    #[serde(default)]
    pub admissible: Vec<AdmissibleRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signatures: Option<Vec<SignatureRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub pass: bool,
    pub cases: Vec<CaseReport>,
}
