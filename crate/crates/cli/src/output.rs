//! Export formats. Big integers serialize as decimal strings in every
//! format; no output path goes through native floating point or 64-bit
//! integers. Identical invocations must produce byte-identical output, so
//! nothing here is allowed to depend on time, environment, or map order.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

/// One exported table: a labeled family, the route that produced it, and
/// its rows. Also the on-disk cache format (one file per row block).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableBlock {
    pub label: String,
    pub method: String,
    pub rows: Vec<RowBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowBlock {
    pub n: usize,
    /// Decimal strings, index = k.
    pub values: Vec<String>,
}

pub fn to_csv(block: &TableBlock) -> String {
    let mut out = String::from("n,k,value,provenance\n");
    for row in &block.rows {
        for (k, v) in row.values.iter().enumerate() {
            out.push_str(&format!("{},{},{},{}\n", row.n, k, v, block.method));
        }
    }
    out
}

pub fn to_json(block: &TableBlock) -> String {
    let mut s = serde_json::to_string_pretty(block).expect("block serializes");
    s.push('\n');
    s
}

/// Writes to the file when given, else to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}
