//! Library side of the `adlv` command: tables, queries and verification
//! suites over `adlv-core`, rendered as json, csv or markdown.

pub mod config;
pub mod error;
pub mod expr;
pub mod query;
pub mod render;
pub mod tables;
pub mod verify;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;
