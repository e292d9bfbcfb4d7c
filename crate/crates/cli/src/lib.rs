//! Dataset format and report emitters behind the `lefkappa` binary.

pub mod dataset;
pub mod report;
