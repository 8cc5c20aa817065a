//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one `PASS` / `FAIL` line; the process exits non-zero if
//! any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cogskew::bench::accuracy;
use cogskew::core::{
    band_stats, binarize, correct, estimate_skew, shear, shift_row, split_bands, BandKind, BinaryGlyph, Error,
    Grayscale, ShearSpec, Threshold, Tilt,
};
use cogskew::fixtures::FixtureSet;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Box<dyn Fn() -> bool>;
type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn pipeline(gray: &Grayscale) -> Result<(f64, f64), Error> {
    let t = Threshold::default();
    let c = correct(&binarize(gray, t), gray, t)?;
    Ok((c.before.estimate.angle_deg, c.residual.angle_deg))
}

/// One-pixel bars of height 100 sheared by a known angle: detection within
/// 1 degree, residual at most 0.5 degrees, all in under a second.
fn oracle_round_trip() -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for theta in [5.0, 10.0, 15.0, 20.0] {
        let bar = shear(&Grayscale::from_fn(1, 100, |_, _| 1.0), &ShearSpec::new(theta)).unwrap();
        match pipeline(&bar) {
            Ok((before, after)) => {
                let good = (before - theta).abs() <= 1.0 && after <= 0.5;
                ok &= good;
                parts.push(format!(
                    "{theta}deg->{before:.3}/{after:.3}{}",
                    if good { "" } else { "!" }
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{theta}deg->error({e})"));
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    verdict(
        ok,
        format!("before/residual {} in {:.1} ms", parts.join(" "), elapsed.as_secs_f64() * 1e3),
    )
}

fn accuracy_formula() -> Verdict {
    let cases = [
        ("J", 10.112, 1.245, 87.69, 0.01),
        ("L", 14.543, 0.901, 93.80, 0.01),
        ("P", 14.424, 1.345, 90.675, 0.005),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (row, b, a, want, tol) in cases {
        let got = accuracy(b, a);
        ok &= (got - want).abs() <= tol;
        parts.push(format!("{row}={got:.4} (want {want}+-{tol})"));
    }
    verdict(ok, parts.join(", "))
}

/// Italic capitals A-Z: every detected slant in [8, 22] degrees and at least
/// 22 letters corrected to 90 % accuracy or better.
fn fixture_plausibility() -> Verdict {
    let set = FixtureSet::bundled().expect("bundled fixtures");
    let names = set.capitals("italic");
    if names.len() != 26 {
        return verdict(false, format!("expected 26 italic capitals, found {}", names.len()));
    }
    let mut out_of_range = Vec::new();
    let mut below = Vec::new();
    for name in &names {
        let letter = &name[..1];
        match pipeline(&set.load(name).unwrap()) {
            Ok((before, after)) => {
                if !(8.0..=22.0).contains(&before) {
                    out_of_range.push(format!("{letter}:{before:.2}"));
                }
                if accuracy(before, after) < 90.0 {
                    below.push(letter.to_owned());
                }
            }
            Err(e) => {
                out_of_range.push(format!("{letter}:{e}"));
                below.push(letter.to_owned());
            }
        }
    }
    let reached = names.len() - below.len();
    verdict(
        out_of_range.is_empty() && reached >= 22,
        format!(
            "{reached}/26 at >=90% (below: {}); before outside [8,22]: {}",
            below.join(""),
            if out_of_range.is_empty() {
                "none".to_owned()
            } else {
                out_of_range.join(" ")
            }
        ),
    )
}

/// 1,000 random rows shifted by up to 5 columns either way. Rows carry a
/// 5-sample background margin on the left and the output is wide enough on
/// the right, so nothing is clipped.
fn mass_conservation() -> Verdict {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (proptest::collection::vec(0.0f64..=1.0, 1..64), -5.0f64..=5.0);
    let worst = std::cell::Cell::new(0.0f64);
    let result = runner.run(&strategy, |(ink, shift)| {
        let mut row = vec![0.0; 5];
        row.extend(ink);
        let out = shift_row(&row, shift, row.len() + 6);
        let err = (out.iter().sum::<f64>() - row.iter().sum::<f64>()).abs();
        worst.set(worst.get().max(err));
        prop_assert!(err <= 1e-6, "shift {} lost {}", shift, err);
        Ok(())
    });
    match result {
        Ok(()) => verdict(true, format!("1000 cases, worst |delta ink| {:.2e}", worst.get())),
        Err(e) => verdict(false, e.to_string()),
    }
}

/// Flipping any fixture left-right keeps the angle bit-for-bit and swaps
/// the direction.
fn mirror_antisymmetry() -> Verdict {
    let set = FixtureSet::bundled().expect("bundled fixtures");
    let t = Threshold::default();
    let mut total = 0;
    let mut broken = Vec::new();
    for name in set.names() {
        total += 1;
        let glyph = binarize(&set.load(name).unwrap(), t);
        let (a, b) = match (estimate_skew(&glyph), estimate_skew(&glyph.flip_horizontal())) {
            (Ok(a), Ok(b)) => (a.estimate, b.estimate),
            _ => {
                broken.push(format!("{name}(undetectable)"));
                continue;
            }
        };
        let swapped = matches!(
            (a.direction, b.direction),
            (Tilt::Left, Tilt::Right) | (Tilt::Right, Tilt::Left) | (Tilt::None, Tilt::None)
        );
        if a.angle_deg.to_bits() != b.angle_deg.to_bits() || !swapped {
            broken.push(format!("{name}({:.3}->{:.3})", a.angle_deg, b.angle_deg));
        }
    }
    let shown: Vec<_> = broken.iter().take(6).cloned().collect();
    verdict(
        broken.is_empty(),
        format!(
            "{}/{total} fixtures symmetric{}",
            total - broken.len(),
            if broken.is_empty() {
                String::new()
            } else {
                format!("; e.g. {}", shown.join(" "))
            }
        ),
    )
}

fn degenerate_inputs() -> Verdict {
    let checks: [(&str, Check); 4] = [
        (
            "blank image",
            Box::new(|| {
                let blank = Grayscale::blank(20, 20);
                matches!(pipeline(&blank), Err(Error::NotDetectable { kind: BandKind::Upper }))
            }),
        ),
        (
            "height 7",
            Box::new(|| {
                let short = BinaryGlyph::from_fn(5, 7, |_, _| true);
                matches!(estimate_skew(&short), Err(Error::GlyphTooSmall { height: 7, min: 8 }))
                    && matches!(split_bands(&short), Err(Error::GlyphTooSmall { .. }))
            }),
        ),
        (
            "empty lower band",
            Box::new(|| {
                let top_only = BinaryGlyph::from_fn(6, 20, |x, y| y < 5 && x == 2);
                matches!(
                    estimate_skew(&top_only),
                    Err(Error::NotDetectable { kind: BandKind::Lower })
                )
            }),
        ),
        (
            "blank band stats",
            Box::new(|| {
                let g = BinaryGlyph::from_fn(6, 20, |_, y| y >= 10);
                let (upper, _) = split_bands(&g).unwrap();
                matches!(band_stats(&g, &upper), Err(Error::EmptyBand { kind: BandKind::Upper }))
            }),
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, check) in &checks {
        let result = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(true) => "ok",
            Ok(false) => "wrong result",
            Err(_) => "panicked",
        };
        ok &= result == "ok";
        parts.push(format!("{label}: {result}"));
    }
    verdict(ok, parts.join(", "))
}

/// Detect + correct on a 100x100 glyph, median of 11 runs.
fn throughput() -> Verdict {
    let set = FixtureSet::bundled().expect("bundled fixtures");
    let src = set.load("A-italic").unwrap();
    let (ox, oy) = (
        (100 - src.width().min(100)) / 2,
        (100 - src.height().min(100)) / 2,
    );
    let gray = Grayscale::from_fn(100, 100, |x, y| {
        match (x.checked_sub(ox), y.checked_sub(oy)) {
            (Some(sx), Some(sy)) if sx < src.width() && sy < src.height() => src.get(sx, sy),
            _ => 0.0,
        }
    });
    let mut times: Vec<Duration> = (0..11)
        .map(|_| {
            let start = Instant::now();
            pipeline(&gray).expect("glyph is detectable");
            start.elapsed()
        })
        .collect();
    times.sort();
    let median = times[times.len() / 2];
    verdict(
        median < Duration::from_millis(50),
        format!("median {:.3} ms per 100x100 glyph (limit 50 ms)", median.as_secs_f64() * 1e3),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle round trip on sheared bars", oracle_round_trip),
        ("accuracy formula", accuracy_formula),
        ("italic fixture plausibility", fixture_plausibility),
        ("shift_row mass conservation", mass_conservation),
        ("mirror antisymmetry", mirror_antisymmetry),
        ("degenerate inputs", degenerate_inputs),
        ("throughput", throughput),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let v = catch_unwind(run).unwrap_or_else(|_| verdict(false, "panicked"));
        println!(
            "criterion {}: {} {label}: {}",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
