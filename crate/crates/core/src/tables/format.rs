//! On-disk group file format (JSON).
//!
//! ```text
//! { "name": "...", "order": 504, "exponent": 126, "psl": {"p": 2, "f": 3},
//!   "classes": [{"name": "1a", "order": 1}, ...],
//!   "powermaps": {"2": ["1a", "1a", ...], ...},
//!   "tables": [{"char": 0, "classes": ["1a", ...], "chars": [[1, ...], ...]}],
//!   "provenance": {"powermaps.2": "...", ...} }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::validate::Checker;
use super::{CharacterTable, ClassInfo, GroupData, PowerMap, PslParams, TableError};
use crate::cyclo::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psl: Option<PslParams>,
    pub classes: Vec<ClassEntry>,
    pub powermaps: BTreeMap<String, Vec<String>>,
    pub tables: Vec<TableEntry>,
    /// Free-text provenance notes keyed by the entry they describe.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub provenance: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntry {
    pub name: String,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub classes: Vec<String>,
    pub chars: Vec<Vec<Value>>,
}

impl GroupData {
    pub fn from_file(file: &GroupFile) -> Result<GroupData, TableError> {
        let mut ck = Checker::default();

        let classes: Vec<ClassInfo> = file
            .classes
            .iter()
            .map(|c| ClassInfo {
                name: c.name.clone(),
                element_order: c.order,
            })
            .collect();
        ck.check_group_header(file, &classes);
        let index = |name: &str| classes.iter().position(|c| c.name == name);

        let mut powermaps = Vec::new();
        for (key, names) in &file.powermaps {
            let loc = format!("powermaps.{key}");
            let Ok(prime) = key.parse::<u64>() else {
                ck.push(&loc, "key is not an integer");
                continue;
            };
            if names.len() != classes.len() {
                ck.push(
                    &loc,
                    format!("has {} images for {} classes", names.len(), classes.len()),
                );
                continue;
            }
            let mut images = Vec::with_capacity(names.len());
            for (i, n) in names.iter().enumerate() {
                match index(n) {
                    Some(j) => images.push(j),
                    None => ck.push(&format!("{loc}[{i}]"), format!("unknown class '{n}'")),
                }
            }
            if images.len() == names.len() {
                powermaps.push(PowerMap { prime, images });
            }
        }
        powermaps.sort_by_key(|m| m.prime);
        ck.check_powermaps(file.exponent, &classes, &powermaps);

        let mut tables = Vec::new();
        for (t, entry) in file.tables.iter().enumerate() {
            let loc = format!("tables[{t}] (char {})", entry.characteristic);
            let mut cols = Vec::with_capacity(entry.classes.len());
            for n in &entry.classes {
                match index(n) {
                    Some(j) => cols.push(j),
                    None => ck.push(&loc, format!("unknown class '{n}'")),
                }
            }
            if cols.len() != entry.classes.len() {
                continue;
            }
            let mut rows = Vec::with_capacity(entry.chars.len());
            for (r, row) in entry.chars.iter().enumerate() {
                let mut values = Vec::with_capacity(row.len());
                for (col, v) in row.iter().enumerate() {
                    match Cyclotomic::from_literal(v) {
                        Ok(x) => values.push(x.canonical()),
                        Err(e) => ck.push(
                            &format!("{loc} chi_{} column {}", r + 1, col + 1),
                            e.to_string(),
                        ),
                    }
                }
                rows.push(values);
            }
            tables.push(CharacterTable {
                characteristic: entry.characteristic,
                classes: cols,
                rows,
            });
        }
        ck.check_tables(file.order, &classes, &tables);

        ck.finish()?;
        Ok(GroupData {
            name: file.name.clone(),
            order: file.order,
            exponent: file.exponent,
            psl: file.psl,
            classes,
            powermaps,
            tables,
            provenance: file.provenance.clone(),
        })
    }

    pub fn to_file(&self) -> GroupFile {
        let name = |i: usize| self.classes[i].name.clone();
        GroupFile {
            name: self.name.clone(),
            order: self.order,
            exponent: self.exponent,
            psl: self.psl,
            classes: self
                .classes
                .iter()
                .map(|c| ClassEntry {
                    name: c.name.clone(),
                    order: c.element_order,
                })
                .collect(),
            powermaps: self
                .powermaps
                .iter()
                .map(|m| (m.prime.to_string(), m.images.iter().map(|&i| name(i)).collect()))
                .collect(),
            tables: self
                .tables
                .iter()
                .map(|t| TableEntry {
                    characteristic: t.characteristic,
                    classes: t.classes.iter().map(|&i| name(i)).collect(),
                    chars: t
                        .rows
                        .iter()
                        .map(|r| r.iter().map(Cyclotomic::to_literal).collect())
                        .collect(),
                })
                .collect(),
            provenance: self.provenance.clone(),
        }
    }
}
