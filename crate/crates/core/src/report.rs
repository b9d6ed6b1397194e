//! Tabular output for the CLI and tests.
//!
//! CSV keeps every float at round-trip precision so downstream tooling can
//! reproduce comparisons bit-for-bit; Markdown rounds for reading.

use crate::experiments::transition::TransitionEstimate;
use crate::optimizer::RunTrace;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}` (expected csv or markdown)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Integer(u64),
    Float(f64),
}

impl From<&str> for Cell {
    fn from(value: &str) -> Self {
        Cell::Text(value.to_owned())
    }
}

impl From<String> for Cell {
    fn from(value: String) -> Self {
        Cell::Text(value)
    }
}

impl From<u64> for Cell {
    fn from(value: u64) -> Self {
        Cell::Integer(value)
    }
}

impl From<usize> for Cell {
    fn from(value: usize) -> Self {
        Cell::Integer(value as u64)
    }
}

impl From<f64> for Cell {
    fn from(value: f64) -> Self {
        Cell::Float(value)
    }
}

impl Cell {
    pub fn real<T: Real>(value: T) -> Self {
        Cell::Float(value.to_f64().unwrap_or(f64::NAN))
    }

    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Cell::Text(s), Format::Csv) => escape_csv(s),
            (Cell::Text(s), Format::Markdown) => s.clone(),
            (Cell::Integer(v), _) => v.to_string(),
            // `{}` on f64 prints the shortest string that parses back to
            // the same bits.
            (Cell::Float(v), Format::Csv) => v.to_string(),
            (Cell::Float(v), Format::Markdown) => format!("{v:.6}"),
        }
    }
}

fn escape_csv(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    /// Renders the table; CSV output is header plus rows, Markdown carries
    /// the title as a heading.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                out.push_str(
                    &self
                        .columns
                        .iter()
                        .map(|c| escape_csv(c))
                        .collect::<Vec<_>>()
                        .join(","),
                );
                out.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(|c| c.render(format)).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Markdown => {
                let mut out = format!("### {}\n\n", self.title);
                out.push_str(&format!("| {} |\n", self.columns.join(" | ")));
                out.push_str(&format!(
                    "|{}\n",
                    " --- |".repeat(self.columns.len())
                ));
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(|c| c.render(format)).collect();
                    out.push_str(&format!("| {} |\n", line.join(" | ")));
                }
                out
            }
        }
    }
}

/// One CSV line per generation with every counter and the best fitness the
/// generation ended with.
pub fn run_trace_table<T: Real>(trace: &RunTrace<T>) -> Table {
    let mut table = Table::new(
        format!(
            "{} on {} (n = {}, seed = {})",
            trace.algorithm.name(),
            trace.problem_name,
            trace.population_size,
            trace.seed
        ),
        &[
            "run_id",
            "generation",
            "worst_recomputations",
            "best_updates",
            "replacements",
            "worst_encounters",
            "worst_replacements",
            "best_fitness",
        ],
    );
    for rec in &trace.records {
        table.push_row(vec![
            Cell::Integer(trace.run_id),
            Cell::Integer(rec.generation as u64),
            Cell::Integer(rec.worst_recomputations),
            Cell::Integer(rec.best_updates),
            Cell::Integer(rec.replacements),
            Cell::Integer(rec.worst_encounters),
            Cell::Integer(rec.worst_replacements),
            Cell::real(trace.best_after(rec.generation)),
        ]);
    }
    table
}

/// Transition rows and columns in descending position order (`k = n` was
/// the first slot the walk touches, so it leads).
pub fn transition_table(estimate: &TransitionEstimate) -> Table {
    let n = estimate.size;
    let mut columns: Vec<String> = vec!["from_k".into()];
    columns.extend((1..=n).rev().map(|k| format!("to_{k}")));
    columns.push("samples".into());
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new(
        format!("worst-position transitions (n = {n})"),
        &column_refs,
    );
    for k in (1..=n).rev() {
        let mut row: Vec<Cell> = vec![Cell::Integer(k as u64)];
        row.extend(
            (1..=n)
                .rev()
                .map(|to| Cell::Float(estimate.matrix[k - 1][to - 1])),
        );
        row.push(Cell::Integer(estimate.row_samples[k - 1]));
        table.push_row(row);
    }
    table
}

/// Observed law of the initial worst position, descending in `k`.
pub fn initial_distribution_table(estimate: &TransitionEstimate) -> Table {
    let mut table = Table::new(
        format!(
            "initial worst position (n = {}, samples = {})",
            estimate.size, estimate.initial_samples
        ),
        &["k", "probability"],
    );
    for k in (1..=estimate.size).rev() {
        table.push_row(vec![
            Cell::Integer(k as u64),
            Cell::Float(estimate.initial_distribution[k - 1]),
        ]);
    }
    table
}
