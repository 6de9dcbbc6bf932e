//! IO companion to `polyneq-core`: JSON interchange schemas, CSV export,
//! run manifests, and a parallel scan driver. The binary in `main.rs` is a
//! thin shell over these modules.

pub mod csvout;
pub mod manifest;
pub mod parallel;
pub mod schema;
