//! Exact-arithmetic verification of the Zassenhaus conjecture for finite
//! groups with the Luthar-Passi (HeLP) method.
//!
//! * [`cyclo`]: cyclotomic field arithmetic, Galois action and traces.
//! * [`tables`]: groups, conjugacy classes, power maps and character tables.
//! * [`engine`]: partial augmentations, μ-forms, exact solving and
//!   classification.
//! * [`rules`]: theorem filters for `PSL(2, p^f)`.

pub mod cyclo;
pub mod datasets;
pub mod engine;
pub mod rules;
pub mod tables;
