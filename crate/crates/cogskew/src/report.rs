//! Report serialisation.
//!
//! CSV columns, in order: `name, before_deg, after_deg, accuracy_pct,
//! time_ms, note`. Angles carry three decimals, accuracy two and time is
//! whole milliseconds. Failed rows leave the numeric cells empty and put
//! the reason in `note`.

use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::bench::{CorpusReport, Measurement, Outcome, ReportRow};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 6] = ["name", "before_deg", "after_deg", "accuracy_pct", "time_ms", "note"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Markdown,
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        match &row.outcome {
            Outcome::Measured(m) => w.write_record([
                row.name.as_str(),
                &format!("{:.3}", m.before_deg),
                &format!("{:.3}", m.after_deg),
                &format!("{:.2}", m.accuracy_pct),
                &m.time_ms.to_string(),
                "",
            ])?,
            Outcome::Failed(note) => w.write_record([row.name.as_str(), "", "", "", "", note])?,
        }
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Report {
            row: 0,
            message: format!("unexpected header {:?}", header.iter().collect::<Vec<_>>()),
        });
    }
    let mut rows = Vec::new();
    for (i, record) in r.records().enumerate() {
        let record = record?;
        let bad = |message: String| Error::Report { row: i + 1, message };
        let field = |k: usize| record.get(k).unwrap_or("");
        let name = field(0).to_owned();
        let numeric = &[field(1), field(2), field(3), field(4)];
        let outcome = if numeric.iter().all(|s| s.is_empty()) {
            Outcome::Failed(field(5).to_owned())
        } else {
            let float = |s: &str| s.parse::<f64>().map_err(|e| bad(format!("'{s}': {e}")));
            Outcome::Measured(Measurement {
                before_deg: float(field(1))?,
                after_deg: float(field(2))?,
                accuracy_pct: float(field(3))?,
                time_ms: field(4)
                    .parse()
                    .map_err(|e| bad(format!("'{}': {e}", field(4))))?,
            })
        };
        rows.push(ReportRow { name, outcome });
    }
    Ok(rows)
}

pub fn to_markdown(report: &CorpusReport) -> String {
    let mut s = String::new();
    s.push_str("| Glyph | Slant before (deg) | Slant after (deg) | Accuracy (%) | Time (ms) |\n");
    s.push_str("|---|---:|---:|---:|---:|\n");
    for row in &report.rows {
        match &row.outcome {
            Outcome::Measured(m) => {
                let _ = writeln!(
                    s,
                    "| {} | {:.3} | {:.3} | {:.2} | {} |",
                    row.name, m.before_deg, m.after_deg, m.accuracy_pct, m.time_ms
                );
            }
            Outcome::Failed(_) => {
                let _ = writeln!(s, "| {} | - | - | - | - |", row.name);
            }
        }
    }
    let sum = &report.summary;
    s.push('\n');
    let fmt = |v: Option<f64>, places: usize| v.map_or("n/a".to_owned(), |v| format!("{v:.places$}"));
    let _ = writeln!(
        s,
        "{} measured, {} failed. Mean accuracy {} %, mean time {} ms.",
        sum.measured,
        sum.failed,
        fmt(sum.mean_accuracy_pct, 2),
        fmt(sum.mean_time_ms, 3)
    );
    let failures: Vec<_> = report
        .rows
        .iter()
        .filter_map(|r| match &r.outcome {
            Outcome::Failed(note) => Some((r.name.as_str(), note.as_str())),
            Outcome::Measured(_) => None,
        })
        .collect();
    if !failures.is_empty() {
        s.push_str("\nFailures:\n\n");
        for (name, note) in failures {
            let _ = writeln!(s, "- {name}: {note}");
        }
    }
    if !report.skipped.is_empty() {
        s.push_str("\nSkipped (unreadable):\n\n");
        for (path, why) in &report.skipped {
            let _ = writeln!(s, "- {}: {why}", path.display());
        }
    }
    s
}
