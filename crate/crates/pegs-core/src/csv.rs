//! Plain CSV readers and writers for signals and adjacency matrices.
//!
//! Signal files hold one time sample per row, one channel per column, with
//! an optional header row of channel names (any row whose cells do not all
//! parse as numbers is taken as the header). Adjacency files hold a square
//! matrix of nonnegative weights with no header. No quoting or escaping is
//! supported; cells are comma-separated and surrounding whitespace is
//! ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signal::MultivariateSignal;

/// Parse a signal CSV. Reports 1-based line numbers on malformed input.
pub fn parse_signal_csv(text: &str) -> Result<MultivariateSignal> {
    let mut lines = numbered_lines(text);
    let (first_no, first_line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty file".to_string()))?;
    let first_cells = split_cells(first_line);
    if first_cells.is_empty() {
        return Err(Error::parse(first_no, "empty row".to_string()));
    }
    let width = first_cells.len();

    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    match parse_numeric_row(&first_cells) {
        Some(row) => rows.push(validate_finite_row(row, first_no)?),
        None => names = Some(first_cells.iter().map(|c| c.to_string()).collect()),
    }

    for (line_no, line) in lines {
        let cells = split_cells(line);
        if cells.len() != width {
            return Err(Error::parse(
                line_no,
                format!("row has {} cells, expected {}", cells.len(), width),
            ));
        }
        match parse_numeric_row(&cells) {
            Some(row) => rows.push(validate_finite_row(row, line_no)?),
            None => {
                let bad = cells
                    .iter()
                    .find(|c| c.parse::<f64>().is_err())
                    .expect("some cell failed to parse");
                return Err(Error::parse(line_no, format!("non-numeric cell '{bad}'")));
            }
        }
    }

    if rows.is_empty() {
        return Err(Error::parse(2, "no data rows after header".to_string()));
    }

    // Rows are time samples; transpose to channel-major.
    let n = rows.len();
    let mut channels = vec![Vec::with_capacity(n); width];
    for row in &rows {
        for (s, &v) in row.iter().enumerate() {
            channels[s].push(v);
        }
    }
    let signal = MultivariateSignal::from_channels(channels)?;
    match names {
        Some(names) => signal.with_names(names),
        None => Ok(signal),
    }
}

/// Render a signal as CSV with a header row. Values use the shortest
/// representation that parses back to the identical float, so a written
/// signal reloads exactly.
pub fn signal_to_csv(u: &MultivariateSignal) -> String {
    let p = u.num_channels();
    let mut out = String::new();
    match u.channel_names() {
        Some(names) => out.push_str(&names.join(",")),
        None => {
            let fallback: Vec<String> = (1..=p).map(|s| format!("ch{s}")).collect();
            out.push_str(&fallback.join(","));
        }
    }
    out.push('\n');
    for t in 0..u.num_samples() {
        for s in 0..p {
            if s > 0 {
                out.push(',');
            }
            out.push_str(&u.sample(t, s).to_string());
        }
        out.push('\n');
    }
    out
}

/// Parse an adjacency CSV into a graph: a `p x p` matrix of nonnegative
/// weights, row `i` column `j` holding the weight of arc `i -> j`.
pub fn parse_adjacency_csv(text: &str) -> Result<Graph> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;
    for (line_no, line) in numbered_lines(text) {
        let cells = split_cells(line);
        if let Some(w) = width {
            if cells.len() != w {
                return Err(Error::parse(
                    line_no,
                    format!("row has {} cells, expected {}", cells.len(), w),
                ));
            }
        } else {
            width = Some(cells.len());
        }
        match parse_numeric_row(&cells) {
            Some(row) => rows.push(validate_finite_row(row, line_no)?),
            None => {
                let bad = cells
                    .iter()
                    .find(|c| c.parse::<f64>().is_err())
                    .expect("some cell failed to parse");
                return Err(Error::parse(line_no, format!("non-numeric cell '{bad}'")));
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "empty file".to_string()));
    }
    Graph::from_matrix(&rows)
}

/// Render an adjacency matrix as CSV, one row per vertex.
pub fn adjacency_to_csv(g: &Graph) -> String {
    let n = g.num_vertices();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&g.weight(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

/// Non-empty trimmed lines with their 1-based line numbers. Blank lines
/// are skipped, so a trailing newline does not create a phantom row.
fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.trim().is_empty())
}

fn split_cells(line: &str) -> Vec<&str> {
    line.split(',').map(|c| c.trim()).collect()
}

fn parse_numeric_row(cells: &[&str]) -> Option<Vec<f64>> {
    cells.iter().map(|c| c.parse::<f64>().ok()).collect()
}

fn validate_finite_row(row: Vec<f64>, line_no: usize) -> Result<Vec<f64>> {
    if let Some(pos) = row.iter().position(|v| !v.is_finite()) {
        return Err(Error::parse(
            line_no,
            format!("non-finite value in column {}", pos + 1),
        ));
    }
    Ok(row)
}
