//! Exact invariants of inclusion graphs.

pub mod distance;
pub mod domination;
pub mod exact;
pub mod matching;
pub mod perfect;
pub mod planarity;
pub mod poset;
pub mod report;

pub use report::{invariant_report, InvariantReport, ReportOptions, Selection};
