//! Recognition procedures for positive, threshold, read-once and linear
//! read-once Boolean functions, with exact certificates.

pub mod chow;
pub mod enumerate;
pub mod error;
pub mod formula;
mod lp;
pub mod monotone;
pub mod patterns;
pub mod readonce;
pub mod report;
mod serde_util;
pub mod table;
pub mod threshold;
pub mod verify;

pub use error::{Error, Result};
pub use table::{PartialAssignment, Permutation, Point, TruthTable};
