//! Aligned plain-text output.

use coxkit_core::words::CellTable;
use coxkit_core::{CoxeterDiagram, IntMatrix, LaurentMatrix};

/// Left-aligns `rows` into columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.push_str(&" ".repeat(width[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The cell table: row `t`, column `s` lists `L_s ∩ R_t`.
pub fn table_text(d: &CoxeterDiagram, table: &CellTable) -> String {
    let n = table.size();
    let mut rows = vec![std::iter::once(String::new()).chain((0..n).map(|s| d.name(s).to_string())).collect()];
    for t in 0..n {
        let mut row = vec![d.name(t).to_string()];
        for s in 0..n {
            let cell = table.cell(t, s);
            row.push(if cell.is_empty() {
                "-".to_string()
            } else {
                cell.iter().map(|w| w.display(d)).collect::<Vec<_>>().join(",")
            });
        }
        rows.push(row);
    }
    aligned(&rows)
}

fn labelled(labels: &[String], entries: impl Fn(usize, usize) -> String) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect()];
    for (r, label) in labels.iter().enumerate() {
        rows.push(std::iter::once(label.clone()).chain((0..labels.len()).map(|c| entries(r, c))).collect());
    }
    aligned(&rows)
}

/// An integer matrix with row and column labels.
pub fn int_matrix_text(labels: &[String], m: &IntMatrix) -> String {
    labelled(labels, |r, c| m[(r, c)].to_string())
}

/// A Laurent matrix with row and column labels.
pub fn laurent_matrix_text(labels: &[String], m: &LaurentMatrix) -> String {
    labelled(labels, |r, c| m[(r, c)].to_string())
}
