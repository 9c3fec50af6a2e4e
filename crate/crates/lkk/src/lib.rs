//! IO companion to `lkk-core`: graph and matrix file formats, canonical
//! JSON reports, and the parallel sweep driver behind the `lkk` binary.

pub mod format;
pub mod report;
pub mod sweep;
