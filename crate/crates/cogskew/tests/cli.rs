use std::path::Path;
use std::process::{Command, Output};

use cogskew::core::{shear, Grayscale, ShearSpec};
use cogskew::image_io::{load_image, save_image};
use cogskew::report::read_csv;

fn cogskew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cogskew"))
        .args(args)
        .output()
        .expect("run cogskew")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn bar(theta: f64) -> Grayscale {
    shear(&Grayscale::from_fn(1, 100, |_, _| 1.0), &ShearSpec::new(theta)).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn detect_prints_angle_and_direction() {
    let dir = tempfile::tempdir().unwrap();
    let img = dir.path().join("bar.pgm");
    save_image(&img, &bar(10.0)).unwrap();
    let out = cogskew(&["detect", s(&img)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (angle, dir_word) = text.trim().split_once(' ').unwrap();
    assert!((angle.parse::<f64>().unwrap() - 10.0).abs() <= 1.0, "{text}");
    assert_eq!(dir_word, "right");
}

#[test]
fn detect_writes_annotation() {
    let dir = tempfile::tempdir().unwrap();
    let img = dir.path().join("bar.png");
    let overlay = dir.path().join("overlay.png");
    save_image(&img, &bar(-8.0)).unwrap();
    let out = cogskew(&["detect", s(&img), "--annotate", s(&overlay)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("left\n"));
    let src = load_image(&img).unwrap();
    let ann = load_image(&overlay).unwrap();
    assert_eq!((ann.width(), ann.height()), (src.width(), src.height() + 16));
}

#[test]
fn correct_straightens_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let img = dir.path().join("bar.pgm");
    let fixed = dir.path().join("fixed.pgm");
    save_image(&img, &bar(15.0)).unwrap();
    let out = cogskew(&["correct", s(&img), "-o", s(&fixed), "--report"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("before 15."), "{text}");
    assert!(text.contains("after 0.000 N"), "{text}");
    assert!(text.contains("accuracy 100.00"), "{text}");
    let src = load_image(&img).unwrap();
    let out_img = load_image(&fixed).unwrap();
    assert_eq!(out_img.height(), src.height());
    assert!(out_img.width() >= src.width());
}

#[test]
fn synth_shears_by_requested_angle() {
    let dir = tempfile::tempdir().unwrap();
    let img = dir.path().join("upright.pgm");
    let out_path = dir.path().join("sheared.pgm");
    save_image(&img, &Grayscale::from_fn(1, 100, |_, _| 1.0)).unwrap();
    let out = cogskew(&["synth", "--angle", "-12", s(&img), "-o", s(&out_path), "--anchor", "99"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sheared = load_image(&out_path).unwrap();
    assert_eq!(sheared.height(), 100);
    assert_eq!(sheared.width(), 1 + (100.0 * 12f64.to_radians().tan()).ceil() as usize);
    let detect = stdout(&cogskew(&["detect", s(&out_path)]));
    assert!(detect.trim().ends_with("left"), "{detect}");
}

#[test]
fn bench_writes_csv_and_markdown() {
    let dir = tempfile::tempdir().unwrap();
    for theta in [5.0, 10.0] {
        save_image(dir.path().join(format!("bar{theta}.pgm")), &bar(theta)).unwrap();
    }
    let report = dir.path().join("report.csv");
    let out = cogskew(&["bench", s(dir.path()), "-o", s(&report)]);
    assert_eq!(out.status.code(), Some(0));
    let rows = read_csv(std::fs::File::open(&report).unwrap()).unwrap();
    let names: Vec<_> = rows.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["bar10", "bar5"]);

    let md = cogskew(&["bench", s(dir.path()), "--format", "md"]);
    assert_eq!(md.status.code(), Some(0));
    assert!(stdout(&md).starts_with("| Glyph |"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.pgm");
    let blank = dir.path().join("blank.pgm");
    save_image(&blank, &Grayscale::blank(10, 10)).unwrap();

    assert_eq!(cogskew(&["--help"]).status.code(), Some(0));
    assert_eq!(cogskew(&[]).status.code(), Some(1));
    assert_eq!(cogskew(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cogskew(&["detect", s(&blank), "--threshold", "1.5"]).status.code(), Some(1));
    assert_eq!(cogskew(&["synth", s(&blank), "-o", "x.pgm"]).status.code(), Some(1));

    assert_eq!(cogskew(&["detect", s(&missing)]).status.code(), Some(2));
    let undetectable = cogskew(&["detect", s(&blank)]);
    assert_eq!(undetectable.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&undetectable.stderr).contains("not detectable"));
    let too_steep = cogskew(&["synth", "--angle", "45", s(&blank), "-o", s(&dir.path().join("o.pgm"))]);
    assert_eq!(too_steep.status.code(), Some(2));
    assert_eq!(cogskew(&["bench", s(dir.path().join("nothing").as_path())]).status.code(), Some(2));
}
