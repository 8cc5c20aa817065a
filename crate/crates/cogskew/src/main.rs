use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cogskew::annotate::{annotate, caption};
use cogskew::bench::{accuracy, run_corpus, BenchConfig};
use cogskew::core::{binarize, correct, estimate_skew, shear, ShearSpec, Threshold};
use cogskew::image_io::{load_image, save_image};
use cogskew::report::{to_markdown, write_csv};
use cogskew::Error;

#[derive(Parser)]
#[command(name = "cogskew", version, about = "Detect and remove the slant of single glyph images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the slant angle and direction of a glyph.
    Detect {
        image: PathBuf,
        #[arg(long, default_value = "0.5", value_parser = parse_threshold)]
        threshold: Threshold,
        /// Write an overlay with the centroid line, the normal and the angle.
        #[arg(long, value_name = "OUT")]
        annotate: Option<PathBuf>,
    },
    /// Remove the slant and write the corrected glyph.
    Correct {
        image: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value = "0.5", value_parser = parse_threshold)]
        threshold: Threshold,
        /// Print before/after angles, accuracy and time.
        #[arg(long)]
        report: bool,
    },
    /// Shear an image by a known angle (positive leans the top right).
    Synth {
        #[arg(long, allow_hyphen_values = true)]
        angle: f64,
        image: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Row that stays in place; defaults to the bottom row.
        #[arg(long)]
        anchor: Option<usize>,
    },
    /// Detect and correct every PGM/PNG in a directory and report the scores.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Report file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "0.5", value_parser = parse_threshold)]
        threshold: Threshold,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

fn parse_threshold(s: &str) -> Result<Threshold, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Threshold::new(v).map_err(|e| e.to_string())
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| Error::Io {
            path: p.to_owned(),
            source: e,
        }),
        None => std::io::stdout().write_all(bytes).map_err(|e| Error::Io {
            path: PathBuf::from("<stdout>"),
            source: e,
        }),
    }
}

fn run(cmd: Command) -> Result<(), Error> {
    match cmd {
        Command::Detect {
            image,
            threshold,
            annotate: overlay,
        } => {
            let gray = load_image(&image)?;
            let glyph = binarize(&gray, threshold);
            let d = estimate_skew(&glyph)?;
            println!("{:.3} {}", d.estimate.angle_deg, d.estimate.direction);
            if let Some(out) = overlay {
                save_image(out, &annotate(&glyph, &d.centroids, &d.estimate))?;
            }
        }
        Command::Correct {
            image,
            output,
            threshold,
            report,
        } => {
            let gray = load_image(&image)?;
            let start = Instant::now();
            let fixed = correct(&binarize(&gray, threshold), &gray, threshold)?;
            let elapsed = start.elapsed();
            save_image(&output, &fixed.image)?;
            if report {
                let (b, a) = (fixed.before.estimate.angle_deg, fixed.residual.angle_deg);
                println!("before {}", caption(&fixed.before.estimate));
                println!("after {}", caption(&fixed.residual));
                println!("accuracy {:.2}", accuracy(b, a));
                println!("time_ms {}", elapsed.as_millis());
            }
        }
        Command::Synth {
            angle,
            image,
            output,
            anchor,
        } => {
            let gray = load_image(&image)?;
            let mut spec = ShearSpec::new(angle);
            if let Some(row) = anchor {
                spec = spec.with_anchor(row);
            }
            save_image(output, &shear(&gray, &spec)?)?;
        }
        Command::Bench {
            dir,
            format,
            output,
            threshold,
        } => {
            let config = BenchConfig {
                threshold,
                ..BenchConfig::default()
            };
            let report = run_corpus(&dir, &config)?;
            let bytes = match format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_csv(&report.rows, &mut buf)?;
                    buf
                }
                Format::Md => to_markdown(&report).into_bytes(),
            };
            write_output(output.as_deref(), &bytes)?;
            for (path, why) in &report.skipped {
                eprintln!("skipped {}: {why}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
