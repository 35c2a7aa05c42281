//! Enumeration, verification suites and table reproduction on top of
//! `fishlab-core`, plus the `fishlab` command line.

pub mod cli;
pub mod enumerate;
pub mod explore;
pub mod fixtures;
pub mod report;
pub mod table;
pub mod verify;
