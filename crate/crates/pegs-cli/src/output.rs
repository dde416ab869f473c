//! The machine-readable result record emitted by `compute`.
//!
//! One JSON object with a fixed key order — metric, m, L, value,
//! pattern_count, metadata — and the value printed with 17 significant
//! digits so it parses back to the identical double. Metadata keys are
//! sorted, so identical invocations emit identical bytes.

use std::collections::BTreeMap;

pub struct RunResult {
    metric: &'static str,
    m: usize,
    delay: usize,
    value: f64,
    pattern_count: u64,
    metadata: BTreeMap<String, String>,
}

impl RunResult {
    pub fn new(metric: &'static str, m: usize, delay: usize) -> Self {
        RunResult {
            metric,
            m,
            delay,
            value: f64::NAN,
            pattern_count: 0,
            metadata: BTreeMap::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: String) {
        self.metadata.insert(key.to_string(), value);
    }

    pub fn finish(&mut self, value: f64, pattern_count: u64) {
        self.value = value;
        self.pattern_count = pattern_count;
    }

    pub fn to_json(&self) -> String {
        let mut out = String::with_capacity(160);
        out.push_str("{\"metric\":\"");
        out.push_str(self.metric);
        out.push_str("\",\"m\":");
        out.push_str(&self.m.to_string());
        out.push_str(",\"L\":");
        out.push_str(&self.delay.to_string());
        out.push_str(",\"value\":");
        out.push_str(&format_value(self.value));
        out.push_str(",\"pattern_count\":");
        out.push_str(&self.pattern_count.to_string());
        out.push_str(",\"metadata\":{");
        for (i, (key, value)) in self.metadata.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('"');
            out.push_str(&escape(key));
            out.push_str("\":\"");
            out.push_str(&escape(value));
            out.push('"');
        }
        out.push_str("}}");
        out
    }
}

/// 17 significant digits in scientific notation: enough to round-trip any
/// finite double, and a valid JSON number.
fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
