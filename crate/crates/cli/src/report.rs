//! Serializable report types. JSON output is exactly `Report` serialized.

use kkh_core::{GradedDims, LaurentPolynomial};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputInfo,
    pub conventions: Conventions,
    pub result: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    pub file: String,
    /// SHA-256 of the raw input bytes, hex encoded.
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub orientation: String,
    pub grading: String,
    pub homology: String,
    pub crossing_cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_pairs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member_orientation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Kh(KhPayload),
    Jones(JonesPayload),
    Family(FamilyPayload),
    Kkh(KkhPayload),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEntry {
    pub i: i32,
    pub j: i32,
    pub dim: usize,
}

pub fn dim_entries(g: &GradedDims) -> Vec<DimEntry> {
    g.iter().map(|((i, j), dim)| DimEntry { i, j, dim }).collect()
}

pub fn dims_from_entries(entries: &[DimEntry]) -> GradedDims {
    entries.iter().map(|e| ((e.i, e.j), e.dim)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: i32,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub text: String,
    /// Increasing exponent order, zero coefficients omitted.
    pub terms: Vec<Term>,
}

impl From<&LaurentPolynomial> for Polynomial {
    fn from(p: &LaurentPolynomial) -> Self {
        Polynomial {
            text: p.to_string(),
            terms: p.terms().map(|(exp, coeff)| Term { exp, coeff }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhPayload {
    pub crossings: usize,
    pub components: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub dims: Vec<DimEntry>,
    pub poincare: String,
    pub euler: Polynomial,
    pub jones: Polynomial,
    pub euler_equals_jones: bool,
    pub d_squared_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesPayload {
    pub crossings: usize,
    pub components: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub jones: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMemberReport {
    pub id: String,
    pub choice: String,
    pub pd: String,
    pub crossings: usize,
    pub components: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<DimEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPayload {
    /// Number of replacement choices enumerated before deduplication.
    pub choices: usize,
    pub members: Vec<FamilyMemberReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KkhMemberReport {
    pub id: String,
    pub choice: String,
    pub pd: String,
    pub dims: Vec<DimEntry>,
    pub euler: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KkhTotal {
    pub dims: Vec<DimEntry>,
    pub poincare: String,
    pub euler: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KkhPayload {
    pub members: Vec<KkhMemberReport>,
    pub total: KkhTotal,
    /// Sum of the state-sum Jones polynomials of the members.
    pub jones_sum: Polynomial,
    pub euler_equals_jones: bool,
    pub d_squared_checked: bool,
}
