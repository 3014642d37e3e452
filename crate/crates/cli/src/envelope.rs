use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub name: String,
    pub argv: Vec<String>,
}

/// The single JSON document every successful command prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: CommandEcho,
    pub result: Value,
    pub diagnostics: Vec<String>,
}

impl Envelope {
    pub fn new(name: &str, argv: Vec<String>, result: Value, diagnostics: Vec<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: CommandEcho { name: name.to_string(), argv },
            result,
            diagnostics,
        }
    }

    /// Pretty-printed, newline-terminated. Key order follows the payload
    /// structs, and parsing then re-emitting gives the same bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    #[cfg(test)]
    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
