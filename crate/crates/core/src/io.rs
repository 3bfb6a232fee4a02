//! Trace CSV and summary JSON.
//!
//! Trace CSV has one header row and the columns
//! `step,time_s,travel_lambda,tx_x,tx_y,tx_z,h_re,h_im,mag_db,phase_deg`.
//! `travel_lambda` is the scheduled platform travel for the step, identical
//! across modes so traces of a triplet line up. `phase_deg` is the wrapped
//! principal value. Gains are written with 18 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::TraceSummary;
use crate::scenario::ChannelTrace;

pub const FORMAT_VERSION: u32 = 1;

pub const CSV_HEADER: &str = "step,time_s,travel_lambda,tx_x,tx_y,tx_z,h_re,h_im,mag_db,phase_deg";

pub fn trace_to_csv(trace: &ChannelTrace) -> String {
    let mut out = String::with_capacity(160 * (trace.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in &trace.samples {
        let p = s.tx_position;
        let _ = writeln!(
            out,
            "{},{:.6},{:.6},{:.12},{:.12},{:.12},{:.17e},{:.17e},{:.9},{:.9}",
            s.step_index,
            s.time_s,
            trace.trajectory.travel_lambda(s.step_index),
            p.x,
            p.y,
            p.z,
            s.h.re,
            s.h.im,
            20.0 * s.h.norm().log10(),
            s.h.arg().to_degrees(),
        );
    }
    out
}

/// One parsed CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub step: usize,
    /// The nine numeric columns after `step`, in header order.
    pub values: [f64; 9],
}

impl CsvRow {
    pub fn h(&self) -> crate::geometry::ComplexGain {
        crate::geometry::ComplexGain::new(self.values[5], self.values[6])
    }
}

/// Reads a trace CSV written by [`trace_to_csv`].
pub fn parse_trace_csv(text: &str) -> Result<Vec<CsvRow>> {
    let bad = |line: usize, message: String| Error::config(line, "csv", message);
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => return Err(bad(1, "missing or unexpected header".into())),
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split(',').collect();
            if fields.len() != 10 {
                return Err(bad(i + 1, format!("expected 10 fields, found {}", fields.len())));
            }
            let step = fields[0]
                .parse()
                .map_err(|_| bad(i + 1, format!("bad step `{}`", fields[0])))?;
            let mut values = [0.0; 9];
            for (v, f) in values.iter_mut().zip(&fields[1..]) {
                *v = f.parse().map_err(|_| bad(i + 1, format!("bad number `{f}`")))?;
            }
            Ok(CsvRow { step, values })
        })
        .collect()
}

/// Summary JSON for a single run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub format_version: u32,
    pub summary: TraceSummary,
    /// Canonical configuration text that reproduces the run.
    pub config: String,
}

/// Side-by-side summaries of a triplet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub format_version: u32,
    pub fixed: TraceSummary,
    pub compensated: TraceSummary,
    pub stationary: TraceSummary,
    pub config: String,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Writes `contents` to a sibling temporary file and renames it into place.
pub fn write_whole_file(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path).map_err(Error::from)
}
