//! JSON interchange formats.
//!
//! Arrays use the canonical form `{"modulus":r,"shape":[...],"exponents":[...]}`
//! written compactly with a trailing newline, so equal arrays always produce
//! identical bytes.

use std::path::Path;

use perfect_arrays_core::checkers::{Condition1Failure, PairCheck};
use perfect_arrays_core::{
    ChainReport, CorrelationTable, ExponentArray, Perfection, PropertyReport, ShiftVector,
};
use serde::{Deserialize, Serialize};

use crate::{io, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayFile {
    pub modulus: u32,
    pub shape: Vec<usize>,
    pub exponents: Vec<i64>,
}

impl From<&ExponentArray> for ArrayFile {
    fn from(a: &ExponentArray) -> Self {
        ArrayFile {
            modulus: a.modulus(),
            shape: a.shape().to_vec(),
            exponents: a.exponents().iter().map(|&e| i64::from(e)).collect(),
        }
    }
}

impl ArrayFile {
    pub fn to_array(&self) -> Result<ExponentArray> {
        Ok(ExponentArray::new(
            self.modulus,
            self.shape.clone(),
            &self.exponents,
        )?)
    }
}

pub fn to_canonical_json(a: &ExponentArray) -> String {
    let mut s = serde_json::to_string(&ArrayFile::from(a)).expect("array serializes");
    s.push('\n');
    s
}

pub fn array_from_json(s: &str) -> Result<ExponentArray> {
    serde_json::from_str::<ArrayFile>(s)?.to_array()
}

pub fn read_array(path: &Path) -> Result<ExponentArray> {
    array_from_json(&io::read_to_string(path)?)
}

pub fn write_array(path: &Path, a: &ExponentArray) -> Result<()> {
    io::write_atomic(path, to_canonical_json(a).as_bytes())
}

/// Serializes any report with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableFile {
    pub shape: Vec<usize>,
    pub backend: String,
    pub values: Vec<[f64; 2]>,
    /// Shifts with a nonzero value; exact tables only.
    pub nonzero_shifts: Option<Vec<Vec<i64>>>,
}

impl From<&CorrelationTable> for TableFile {
    fn from(t: &CorrelationTable) -> Self {
        TableFile {
            shape: t.shape().to_vec(),
            backend: t.backend().to_string(),
            values: t
                .to_complex()
                .iter()
                .map(|z| [clean(z.re), clean(z.im)])
                .collect(),
            nonzero_shifts: t
                .nonzero_shifts()
                .map(|s| s.into_iter().map(|v| v.0).collect()),
        }
    }
}

/// Drops the float noise of exactly-zero sums (and negative zero) so exact
/// tables serialize the same on every platform.
fn clean(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r + 0.0
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub zero_shifts: usize,
    pub total_shifts: usize,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureFile {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub shift: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub property: String,
    pub divisors: Vec<usize>,
    pub holds: bool,
    pub pairs: Vec<PairFile>,
    pub condition1_failures: Vec<FailureFile>,
    pub condition2_failures: Vec<Vec<i64>>,
    pub summary_table: Option<TableFile>,
    pub witness: Option<Vec<i64>>,
    pub notes: Vec<String>,
}

impl From<&PairCheck> for PairFile {
    fn from(p: &PairCheck) -> Self {
        PairFile {
            first: p.first.clone(),
            second: p.second.clone(),
            zero_shifts: p.zero_shifts,
            total_shifts: p.total_shifts,
            orthogonal: p.orthogonal(),
        }
    }
}

impl From<&Condition1Failure> for FailureFile {
    fn from(f: &Condition1Failure) -> Self {
        FailureFile {
            first: f.first.clone(),
            second: f.second.clone(),
            shift: f.shift.0.clone(),
        }
    }
}

impl From<&PropertyReport> for ReportFile {
    fn from(r: &PropertyReport) -> Self {
        ReportFile {
            property: r.property.name().to_string(),
            divisors: r.divisors.clone(),
            holds: r.holds,
            pairs: r.pairs.iter().map(PairFile::from).collect(),
            condition1_failures: r
                .condition1_failures
                .iter()
                .map(FailureFile::from)
                .collect(),
            condition2_failures: r.condition2_failures.iter().map(|s| s.0.clone()).collect(),
            summary_table: r.summary_table.as_ref().map(TableFile::from),
            witness: r.witness.as_ref().map(|s| s.0.clone()),
            notes: r.notes.iter().map(|n| n.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainFile {
    pub gaop: ReportFile,
    pub array_perfect: bool,
    pub array_witness: Option<Vec<i64>>,
    pub associated_perfect: bool,
    pub associated_witness: Option<Vec<i64>>,
    pub implication_holds: bool,
}

fn witness(p: &Perfection) -> Option<Vec<i64>> {
    p.witness().map(|s: &ShiftVector| s.0.clone())
}

impl From<&ChainReport> for ChainFile {
    fn from(c: &ChainReport) -> Self {
        ChainFile {
            gaop: ReportFile::from(&c.gaop),
            array_perfect: c.array.is_perfect(),
            array_witness: witness(&c.array),
            associated_perfect: c.associated.is_perfect(),
            associated_witness: witness(&c.associated),
            implication_holds: c.implication_holds(),
        }
    }
}
