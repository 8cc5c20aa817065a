//! 8-bit PGM codec.
//!
//! Loading accepts P5 (binary) and P2 (ASCII) with `maxval <= 255` and `#`
//! comments anywhere in the header. Saving always writes `maxval` 255 with a
//! comment-free header: `P5\n<w> <h>\n255\n` (or `P2`).
//!
//! PGM sample 0 is black, while [`Grayscale`] stores ink, so samples are
//! inverted: `ink = (maxval - sample) / maxval`.

use std::fmt::Write as _;

use cogskew_core::Grayscale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PnmFormat {
    /// `P5`
    #[default]
    Binary,
    /// `P2`
    Ascii,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PnmError {
    #[error("not a PGM file (magic must be P5 or P2)")]
    BadMagic,
    #[error("malformed PGM header: {0}")]
    Header(&'static str),
    #[error("maxval {0} is outside 1..=255")]
    Maxval(u32),
    #[error("truncated PGM payload: expected {expected} samples, found {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("sample {value} at index {index} exceeds maxval {maxval}")]
    Sample { index: usize, value: u32, maxval: u32 },
    #[error("malformed PGM sample at index {0}")]
    BadSample(usize),
    #[error(transparent)]
    Raster(#[from] cogskew_core::Error),
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal token, or `None` at end of input.
    fn number(&mut self) -> Option<Result<u32, ()>> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return if self.pos >= self.bytes.len() { None } else { Some(Err(())) };
        }
        if self.bytes.get(self.pos).is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#') {
            return Some(Err(()));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).map_err(|_| ());
        Some(text.and_then(|t| t.parse().map_err(|_| ())))
    }

    fn header_field(&mut self, what: &'static str) -> Result<u32, PnmError> {
        match self.number() {
            Some(Ok(v)) => Ok(v),
            _ => Err(PnmError::Header(what)),
        }
    }
}

pub fn load_pnm(bytes: &[u8]) -> Result<Grayscale, PnmError> {
    let format = match bytes.get(..2) {
        Some(b"P5") => PnmFormat::Binary,
        Some(b"P2") => PnmFormat::Ascii,
        _ => return Err(PnmError::BadMagic),
    };
    let mut cur = Cursor { bytes, pos: 2 };
    if cur.bytes.get(2).is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#') {
        return Err(PnmError::BadMagic);
    }
    let width = cur.header_field("width")? as usize;
    let height = cur.header_field("height")? as usize;
    let maxval = cur.header_field("maxval")?;
    if width == 0 || height == 0 {
        return Err(PnmError::Header("zero dimension"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(PnmError::Maxval(maxval));
    }
    let expected = width
        .checked_mul(height)
        .ok_or(PnmError::Header("dimensions overflow"))?;

    let samples: Vec<u32> = match format {
        PnmFormat::Binary => {
            // Exactly one whitespace byte separates maxval from the raster.
            if !cur.bytes.get(cur.pos).is_some_and(|b| b.is_ascii_whitespace()) {
                return Err(PnmError::Header("missing separator after maxval"));
            }
            let payload = &bytes[cur.pos + 1..];
            if payload.len() < expected {
                return Err(PnmError::Truncated {
                    expected,
                    actual: payload.len(),
                });
            }
            payload[..expected].iter().map(|&b| u32::from(b)).collect()
        }
        PnmFormat::Ascii => {
            let mut out = Vec::with_capacity(expected);
            while out.len() < expected {
                match cur.number() {
                    Some(Ok(v)) => out.push(v),
                    Some(Err(())) => return Err(PnmError::BadSample(out.len())),
                    None => {
                        return Err(PnmError::Truncated {
                            expected,
                            actual: out.len(),
                        })
                    }
                }
            }
            out
        }
    };

    if let Some((index, &value)) = samples.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(PnmError::Sample { index, value, maxval });
    }
    let max = f64::from(maxval);
    let ink = samples.iter().map(|&s| (max - f64::from(s)) / max).collect();
    Ok(Grayscale::new(width, height, ink)?)
}

fn sample(ink: f64) -> u8 {
    (255.0 * (1.0 - ink)).round() as u8
}

pub fn save_pnm(img: &Grayscale, format: PnmFormat) -> Vec<u8> {
    let (w, h) = (img.width(), img.height());
    match format {
        PnmFormat::Binary => {
            let mut out = format!("P5\n{w} {h}\n255\n").into_bytes();
            out.extend(img.data().iter().map(|&v| sample(v)));
            out
        }
        PnmFormat::Ascii => {
            let mut out = format!("P2\n{w} {h}\n255\n");
            for row in img.rows() {
                for (i, &v) in row.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    let _ = write!(out, "{}", sample(v));
                }
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}
