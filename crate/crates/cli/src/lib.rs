//! File format and report types behind the `supertensor` binary.

pub mod lsa;
pub mod report;
