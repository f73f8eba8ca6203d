//! Embedded group files for `PSL(2,8)` and `PSL(2,17)`.

use crate::tables::{load_group, GroupData};

pub const PSL_2_8: &str = include_str!("../data/psl_2_8.json");
pub const PSL_2_17: &str = include_str!("../data/psl_2_17.json");

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 2] = ["psl_2_8", "psl_2_17"];

/// Source text of a builtin dataset.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "psl_2_8" => Some(PSL_2_8),
        "psl_2_17" => Some(PSL_2_17),
        _ => None,
    }
}

pub fn builtin(name: &str) -> Option<GroupData> {
    builtin_source(name).map(|s| load_group(s.as_bytes()).expect("builtin datasets are valid"))
}

pub fn psl_2_8() -> GroupData {
    builtin("psl_2_8").unwrap()
}

pub fn psl_2_17() -> GroupData {
    builtin("psl_2_17").unwrap()
}
