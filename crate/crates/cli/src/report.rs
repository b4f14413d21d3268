use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Outcome of one solve, reduce or verify command.
///
/// `valid` is always the output of the matching verifier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub instance_digest: String,
    pub solution: Option<String>,
    pub queries: Option<u64>,
    pub millis: f64,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, String>,
}

impl RunReport {
    pub fn new(command: &str, digest: String, elapsed: Duration) -> Self {
        Self {
            command: command.to_string(),
            instance_digest: digest,
            solution: None,
            queries: None,
            millis: elapsed.as_secs_f64() * 1e3,
            valid: false,
            extra: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.extra.insert(key.to_string(), value.to_string());
        self
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("report serializes"));
            return;
        }
        println!("command: {}", self.command);
        println!("digest: {}", self.instance_digest);
        println!("solution: {}", self.solution.as_deref().unwrap_or("none"));
        if let Some(q) = self.queries {
            println!("queries: {q}");
        }
        for (k, v) in &self.extra {
            println!("{k}: {v}");
        }
        println!("millis: {:.3}", self.millis);
        println!("valid: {}", self.valid);
    }
}

/// `sha256:<hex>` of the canonical instance text.
pub fn digest(canonical: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(canonical.as_bytes())))
}
