//! Per-loop event records, serializable as JSON lines.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::criteria::{Criterion, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Rejected,
    Reduced,
    Zero,
}

/// One selection of the main loop. `pair` is `[Num(F), Num(G), u, v]` with
/// `u`, `v` printed as polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceEvent {
    #[serde(rename = "loop")]
    pub loop_index: usize,
    pub pair: (usize, usize, String, String),
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<Criterion>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub side: Option<Side>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_num: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub new_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub new_sig: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub new_num: Option<usize>,
}

pub fn write_jsonl<W: Write>(events: &[TraceEvent], mut out: W) -> io::Result<()> {
    for e in events {
        serde_json::to_writer(&mut out, e)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
