//! Run manifests.
//!
//! Every invocation that produces output is stamped with a single-line
//! JSON manifest recording the subcommand, its effective arguments, the
//! package version, wall-clock start/finish, and any files written. When
//! `--out` is used the manifest is the first line of each output file and
//! the only thing printed to stdout.

use serde::Serialize;
use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub version: &'static str,
    pub started_unix: f64,
    pub finished_unix: f64,
    pub outputs: Vec<String>,
}

fn now_unix() -> f64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0)
}

impl RunManifest {
    pub fn start(command: &str) -> RunManifest {
        RunManifest {
            command: command.to_string(),
            args: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION"),
            started_unix: now_unix(),
            finished_unix: 0.0,
            outputs: Vec::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.args.insert(key.to_string(), value.to_string());
        self
    }

    pub fn finish(&mut self) {
        self.finished_unix = now_unix();
    }

    /// The manifest as one line of JSON (no trailing newline).
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("manifest serializes")
    }
}
