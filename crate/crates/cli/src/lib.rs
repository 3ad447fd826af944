//! Sweep orchestration, result cache and report emission behind the
//! `distpoly` command-line tool.

pub mod cache;
pub mod range;
pub mod record;
pub mod report;
pub mod sweep;
