//! Diagnostic overlay: the glyph in light grey, the extended centroid line
//! and the vertical normal through the lower centroid in black, and the
//! measured angle printed in a caption strip under the glyph.

use cogskew_core::{BinaryGlyph, CentroidPair, Grayscale, SkewEstimate, Tilt};

/// Rows added below the glyph for the caption.
pub const CAPTION_ROWS: usize = 16;

const GLYPH_INK: f64 = 0.35;
const LINE_INK: f64 = 1.0;
const SCALE: usize = 2;

/// 3x5 bitmaps, one `u8` per row, high bit on the left.
fn font(c: char) -> Option<[u8; 5]> {
    Some(match c {
        '0' => [0b111, 0b101, 0b101, 0b101, 0b111],
        '1' => [0b010, 0b110, 0b010, 0b010, 0b111],
        '2' => [0b111, 0b001, 0b111, 0b100, 0b111],
        '3' => [0b111, 0b001, 0b111, 0b001, 0b111],
        '4' => [0b101, 0b101, 0b111, 0b001, 0b001],
        '5' => [0b111, 0b100, 0b111, 0b001, 0b111],
        '6' => [0b111, 0b100, 0b111, 0b101, 0b111],
        '7' => [0b111, 0b001, 0b010, 0b010, 0b010],
        '8' => [0b111, 0b101, 0b111, 0b101, 0b111],
        '9' => [0b111, 0b101, 0b111, 0b001, 0b111],
        '.' => [0b000, 0b000, 0b000, 0b000, 0b010],
        'L' => [0b100, 0b100, 0b100, 0b100, 0b111],
        'R' => [0b110, 0b101, 0b110, 0b101, 0b101],
        'N' => [0b101, 0b111, 0b111, 0b111, 0b101],
        ' ' => [0; 5],
        _ => return None,
    })
}

struct Canvas {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl Canvas {
    fn put(&mut self, x: isize, y: isize, v: f64) {
        if x >= 0 && y >= 0 && (x as usize) < self.width && (y as usize) < self.height {
            let i = y as usize * self.width + x as usize;
            self.data[i] = self.data[i].max(v);
        }
    }

    fn text(&mut self, x0: usize, y0: usize, text: &str) {
        let mut x = x0;
        for c in text.chars() {
            if let Some(rows) = font(c) {
                for (dy, bits) in rows.iter().enumerate() {
                    for dx in 0..3 {
                        if bits & (0b100 >> dx) != 0 {
                            for sy in 0..SCALE {
                                for sx in 0..SCALE {
                                    self.put(
                                        (x + dx * SCALE + sx) as isize,
                                        (y0 + dy * SCALE + sy) as isize,
                                        LINE_INK,
                                    );
                                }
                            }
                        }
                    }
                }
            }
            x += 4 * SCALE;
        }
    }
}

/// Caption text: the angle to three decimals and `L`, `R` or `N` for the
/// tilt direction.
pub fn caption(estimate: &SkewEstimate) -> String {
    let dir = match estimate.direction {
        Tilt::Left => 'L',
        Tilt::Right => 'R',
        Tilt::None => 'N',
    };
    format!("{:.3} {dir}", estimate.angle_deg)
}

pub fn annotate(glyph: &BinaryGlyph, centroids: &CentroidPair, estimate: &SkewEstimate) -> Grayscale {
    let (w, h) = (glyph.width(), glyph.height());
    let mut canvas = Canvas {
        width: w,
        height: h + CAPTION_ROWS,
        data: vec![0.0; w * (h + CAPTION_ROWS)],
    };
    for y in 0..h {
        for x in 0..w {
            if glyph.get(x, y) {
                canvas.put(x as isize, y as isize, GLYPH_INK);
            }
        }
    }

    let CentroidPair { upper, lower } = *centroids;
    let line_x = |y: f64| {
        if upper.x == lower.x {
            lower.x
        } else {
            lower.x + (y - lower.y) * (upper.x - lower.x) / (upper.y - lower.y)
        }
    };
    let normal = lower.x.round() as isize;
    for y in 0..h {
        canvas.put(normal, y as isize, LINE_INK);
        // Join this row's crossing to the next so shallow lines stay connected.
        let a = line_x(y as f64).round() as isize;
        let b = line_x(y as f64 + 1.0).round() as isize;
        let (lo, hi) = (a.min(b), a.max(b));
        canvas.put(a, y as isize, LINE_INK);
        for x in lo..hi {
            canvas.put(x, y as isize, LINE_INK);
        }
    }

    canvas.text(1, h + 3, &caption(estimate));
    Grayscale::new(canvas.width, canvas.height, canvas.data).expect("canvas values stay in [0, 1]")
}
