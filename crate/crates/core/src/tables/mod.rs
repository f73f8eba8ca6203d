//! Groups given by their conjugacy classes, power maps and ordinary and
//! Brauer character tables.
//!
//! A [`GroupData`] is only obtainable through [`load_group`] (or
//! [`GroupData::from_file`]), which runs every structural check, so holders
//! may rely on the invariants documented on the accessor methods.

mod format;
mod validate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::{factorize, Cyclotomic};

pub use format::{ClassEntry, GroupFile, TableEntry};
pub use validate::Violation;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("malformed group file: {0}")]
    Schema(String),
    #[error("{} invariant violation(s):\n{}", .0.len(), render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("no {prime}-power map is recorded for this group")]
    MissingPowerMap { prime: u64 },
    #[error("class '{0}' is unknown")]
    UnknownClass(String),
    #[error("class '{class}' is not covered by the characteristic {characteristic} table")]
    NotCovered { class: String, characteristic: u64 },
    #[error("row {row} is out of range (table has {rows} rows)")]
    RowOutOfRange { row: usize, rows: usize },
}

fn render_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("  {x}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub element_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerMap {
    pub prime: u64,
    /// Image class index for every class index.
    pub images: Vec<usize>,
}

/// `G = PSL(2, p^f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PslParams {
    pub p: u64,
    pub f: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    characteristic: u64,
    classes: Vec<usize>,
    rows: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// 0 for the ordinary table, `p` for a `p`-modular Brauer table.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_ordinary(&self) -> bool {
        self.characteristic == 0
    }

    /// Group class indices covered by the table, in column order.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn covers(&self, class: usize) -> bool {
        self.classes.contains(&class)
    }

    /// Value of row `row` (0-based) at group class `class`, if covered.
    pub fn value(&self, row: usize, class: usize) -> Option<&Cyclotomic> {
        let col = self.classes.iter().position(|&c| c == class)?;
        self.rows.get(row).map(|r| &r[col])
    }

    /// Degree of a row: its value at the identity class.
    pub fn degree(&self, row: usize) -> Cyclotomic {
        self.value(row, 0)
            .cloned()
            .expect("validated tables cover the identity class")
    }

    /// Label used in reports: `*` for the ordinary table, otherwise `p`.
    pub fn label(&self) -> String {
        if self.characteristic == 0 {
            "*".to_string()
        } else {
            self.characteristic.to_string()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    name: String,
    order: u64,
    exponent: u64,
    psl: Option<PslParams>,
    classes: Vec<ClassInfo>,
    powermaps: Vec<PowerMap>,
    tables: Vec<CharacterTable>,
    provenance: std::collections::BTreeMap<String, String>,
}

impl GroupData {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn psl_params(&self) -> Option<PslParams> {
        self.psl
    }

    /// Conjugacy classes; index 0 is always the identity class `1a`.
    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class(&self, index: usize) -> &ClassInfo {
        &self.classes[index]
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn powermaps(&self) -> &[PowerMap] {
        &self.powermaps
    }

    pub fn tables(&self) -> &[CharacterTable] {
        &self.tables
    }

    pub fn provenance(&self) -> &std::collections::BTreeMap<String, String> {
        &self.provenance
    }

    pub fn ordinary_table(&self) -> &CharacterTable {
        self.tables
            .iter()
            .find(|t| t.is_ordinary())
            .expect("validated groups carry exactly one ordinary table")
    }

    pub fn table(&self, characteristic: u64) -> Option<&CharacterTable> {
        self.tables
            .iter()
            .find(|t| t.characteristic == characteristic)
    }

    /// Largest degree of an ordinary character.
    pub fn max_ordinary_degree(&self) -> i64 {
        let t = self.ordinary_table();
        (0..t.num_rows())
            .filter_map(|r| t.degree(r).to_rational())
            .filter_map(|q| i64::try_from(q.to_integer()).ok())
            .max()
            .unwrap_or(1)
    }

    pub fn powermap(&self, prime: u64) -> Option<&PowerMap> {
        self.powermaps.iter().find(|m| m.prime == prime)
    }

    /// Class of `g^d` for `g` in class `class`, composing prime power maps
    /// along the factorization of `d`.
    pub fn class_of_power(&self, class: usize, d: u64) -> Result<usize, TableError> {
        assert!(d >= 1, "power must be positive");
        let mut c = class;
        for (p, e) in factorize(d) {
            let map = self
                .powermap(p)
                .ok_or(TableError::MissingPowerMap { prime: p })?;
            for _ in 0..e {
                c = map.images[c];
            }
        }
        Ok(c)
    }

    pub fn character_value<'t>(
        &self,
        table: &'t CharacterTable,
        row: usize,
        class: usize,
    ) -> Result<&'t Cyclotomic, TableError> {
        if row >= table.num_rows() {
            return Err(TableError::RowOutOfRange {
                row,
                rows: table.num_rows(),
            });
        }
        table.value(row, class).ok_or_else(|| TableError::NotCovered {
            class: self.classes[class].name.clone(),
            characteristic: table.characteristic,
        })
    }

    /// Pretty-printed JSON in the group file format.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("group files serialize");
        s.push('\n');
        s
    }
}

/// Parses and validates a group file.
pub fn load_group(source: &[u8]) -> Result<GroupData, TableError> {
    let file: GroupFile =
        serde_json::from_slice(source).map_err(|e| TableError::Schema(e.to_string()))?;
    GroupData::from_file(&file)
}

/// Runs every structural check on a group file without building the group.
/// Returns the full list of violations; an empty list means the file loads.
pub fn validate_source(source: &[u8]) -> Result<Vec<Violation>, TableError> {
    match load_group(source) {
        Ok(_) => Ok(Vec::new()),
        Err(TableError::Invalid(v)) => Ok(v),
        Err(e) => Err(e),
    }
}
