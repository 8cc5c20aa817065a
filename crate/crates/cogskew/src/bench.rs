//! Batch evaluation: detect, correct and score every image in a corpus.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use cogskew_core::{binarize, correct, CorrectedGlyph, Grayscale, Threshold};

use crate::error::{Error, Result};
use crate::image_io::load_image;

/// Below this many degrees a glyph counts as upright.
pub const UPRIGHT_DEG: f64 = 0.01;

/// Relative reduction in slant, in percent, clamped to `[0, 100]`.
///
/// A glyph that was already upright scores 100 if it stays upright and 0
/// otherwise.
pub fn accuracy(before_deg: f64, after_deg: f64) -> f64 {
    if before_deg < UPRIGHT_DEG {
        return if after_deg < UPRIGHT_DEG { 100.0 } else { 0.0 };
    }
    ((before_deg - after_deg) / before_deg * 100.0).clamp(0.0, 100.0)
}

fn round_to(value: f64, places: i32) -> f64 {
    let scale = 10f64.powi(places);
    (value * scale).round() / scale
}

/// Scores for one glyph, rounded to the precision they are reported at:
/// three decimals for angles, two for accuracy, whole milliseconds.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub before_deg: f64,
    pub after_deg: f64,
    pub accuracy_pct: f64,
    pub time_ms: u64,
}

impl Measurement {
    pub fn new(before_deg: f64, after_deg: f64, elapsed: Duration) -> Self {
        Self {
            before_deg: round_to(before_deg, 3),
            after_deg: round_to(after_deg, 3),
            accuracy_pct: round_to(accuracy(before_deg, after_deg), 2),
            time_ms: elapsed.as_millis() as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Measured(Measurement),
    /// Detection or correction failed; the note says why.
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub name: String,
    pub outcome: Outcome,
}

impl ReportRow {
    pub fn measurement(&self) -> Option<&Measurement> {
        match &self.outcome {
            Outcome::Measured(m) => Some(m),
            Outcome::Failed(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchConfig {
    pub threshold: Threshold,
    /// Timed repetitions per glyph; the median is reported.
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            threshold: Threshold::default(),
            repeats: 5,
        }
    }
}

/// A row plus its unrounded median time.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub row: ReportRow,
    pub elapsed: Option<Duration>,
    pub corrected: Option<CorrectedGlyph>,
}

/// Binarizes, detects and corrects `gray`, timing the pipeline.
pub fn evaluate(name: &str, gray: &Grayscale, config: &BenchConfig) -> Evaluation {
    let run = || {
        let glyph = binarize(gray, config.threshold);
        correct(&glyph, gray, config.threshold)
    };
    let mut times = Vec::with_capacity(config.repeats.max(1));
    let mut result = None;
    for _ in 0..config.repeats.max(1) {
        let start = Instant::now();
        let r = run();
        times.push(start.elapsed());
        result = Some(r);
    }
    times.sort();
    let median = times[times.len() / 2];

    match result.expect("at least one run") {
        Ok(corrected) => Evaluation {
            row: ReportRow {
                name: name.to_owned(),
                outcome: Outcome::Measured(Measurement::new(
                    corrected.before.estimate.angle_deg,
                    corrected.residual.angle_deg,
                    median,
                )),
            },
            elapsed: Some(median),
            corrected: Some(corrected),
        },
        Err(e) => Evaluation {
            row: ReportRow {
                name: name.to_owned(),
                outcome: Outcome::Failed(e.to_string()),
            },
            elapsed: None,
            corrected: None,
        },
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub measured: usize,
    pub failed: usize,
    pub mean_accuracy_pct: Option<f64>,
    pub mean_time_ms: Option<f64>,
}

impl Summary {
    pub fn from_evaluations(evals: &[Evaluation]) -> Self {
        let measured: Vec<&Measurement> = evals.iter().filter_map(|e| e.row.measurement()).collect();
        let times: Vec<f64> = evals
            .iter()
            .filter_map(|e| e.elapsed)
            .map(|d| d.as_secs_f64() * 1e3)
            .collect();
        let mean = |xs: &[f64]| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
        let accs: Vec<f64> = measured.iter().map(|m| m.accuracy_pct).collect();
        Self {
            measured: measured.len(),
            failed: evals.len() - measured.len(),
            mean_accuracy_pct: mean(&accs),
            mean_time_ms: mean(&times),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusReport {
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
    /// Files with an image extension that could not be decoded.
    pub skipped: Vec<(PathBuf, String)>,
}

fn has_image_extension(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| ["pgm", "pnm", "png"].iter().any(|x| e.eq_ignore_ascii_case(x)))
}

/// Evaluates every PGM/PNG file directly inside `dir`, in file name order.
///
/// Images that fail detection become [`Outcome::Failed`] rows. Files that
/// cannot be decoded are listed in [`CorpusReport::skipped`] and produce no
/// row.
pub fn run_corpus(dir: impl AsRef<Path>, config: &BenchConfig) -> Result<CorpusReport> {
    let dir = dir.as_ref();
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && has_image_extension(p))
        .collect();
    paths.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let mut evals = Vec::with_capacity(paths.len());
    let mut skipped = Vec::new();
    for path in paths {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match load_image(&path) {
            Ok(gray) => evals.push(evaluate(&name, &gray, config)),
            Err(e) => skipped.push((path, e.to_string())),
        }
    }
    if evals.is_empty() {
        return Err(Error::EmptyCorpus(dir.to_owned()));
    }
    let summary = Summary::from_evaluations(&evals);
    Ok(CorpusReport {
        rows: evals.into_iter().map(|e| e.row).collect(),
        summary,
        skipped,
    })
}
