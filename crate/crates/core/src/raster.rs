//! Raster types shared by detection, correction and the shear oracle.
//!
//! Coordinates: column `x` grows rightward from 0, row `y` grows downward
//! from 0 at the top. Intensities are in ink space, so 1.0 is full black ink
//! and 0.0 is background.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};

/// Smallest glyph height for which each quarter band still has two rows.
pub const MIN_GLYPH_HEIGHT: usize = 8;

/// Row-major ink-space intensity raster.
#[derive(Debug, Clone, PartialEq)]
pub struct Grayscale {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl Grayscale {
    /// Builds a raster, validating the buffer length and that every sample
    /// lies in `[0, 1]`.
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        check_dims(width, height, data.len())?;
        if let Some((index, &value)) = data
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(Error::IntensityOutOfRange { index, value });
        }
        Ok(Self { width, height, data })
    }

    /// All-background raster.
    ///
    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn blank(width: usize, height: usize) -> Self {
        Self::from_fn(width, height, |_, _| 0.0)
    }

    /// Builds a raster from `f(x, y)`, clamping each value into `[0, 1]`.
    ///
    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(width > 0 && height > 0, "raster dimensions must be non-zero");
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(clamp_unit(f(x, y)));
            }
        }
        Self { width, height, data }
    }

    /// Builds a raster from rows that were produced by this crate's
    /// interpolation kernels, clamping rounding spill into `[0, 1]`.
    pub(crate) fn from_rows(width: usize, rows: impl IntoIterator<Item = Vec<f64>>) -> Self {
        let mut data = Vec::new();
        let mut height = 0;
        for row in rows {
            debug_assert_eq!(row.len(), width);
            data.extend(row.into_iter().map(clamp_unit));
            height += 1;
        }
        debug_assert!(width > 0 && height > 0);
        Self { width, height, data }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[f64] {
        &self.data[y * self.width..(y + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.width)
    }

    /// Sum of all intensities.
    pub fn total_ink(&self) -> f64 {
        self.data.iter().sum()
    }

    /// Mirror image about the vertical axis.
    pub fn flip_horizontal(&self) -> Self {
        let data = self
            .rows()
            .flat_map(|row| row.iter().rev().copied())
            .collect();
        Self { data, ..*self }
    }
}

impl From<&BinaryGlyph> for Grayscale {
    /// Re-embeds a mask as 0.0 / 1.0 intensities.
    fn from(glyph: &BinaryGlyph) -> Self {
        let data = glyph.mask.iter().map(|&ink| if ink { 1.0 } else { 0.0 }).collect();
        Self {
            width: glyph.width,
            height: glyph.height,
            data,
        }
    }
}

/// Row-major foreground mask, `true` is ink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryGlyph {
    width: usize,
    height: usize,
    mask: Vec<bool>,
}

impl BinaryGlyph {
    pub fn new(width: usize, height: usize, mask: Vec<bool>) -> Result<Self> {
        check_dims(width, height, mask.len())?;
        Ok(Self { width, height, mask })
    }

    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(width > 0 && height > 0, "raster dimensions must be non-zero");
        let mut mask = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                mask.push(f(x, y));
            }
        }
        Self { width, height, mask }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.mask[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[bool] {
        &self.mask[y * self.width..(y + 1) * self.width]
    }

    pub fn foreground_count(&self) -> usize {
        self.mask.iter().filter(|&&ink| ink).count()
    }

    pub fn flip_horizontal(&self) -> Self {
        let mask = self
            .mask
            .chunks_exact(self.width)
            .flat_map(|row| row.iter().rev().copied())
            .collect();
        Self { mask, ..*self }
    }
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::EmptyImage { width, height });
    }
    let expected = width * height;
    if len != expected {
        return Err(Error::DataLength {
            expected,
            actual: len,
        });
    }
    Ok(())
}

fn clamp_unit(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v.clamp(0.0, 1.0)
    }
}

/// Binarization threshold, strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Threshold(f64);

impl Threshold {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::InvalidThreshold(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for Threshold {
    fn default() -> Self {
        Self(0.5)
    }
}

/// Marks every pixel whose intensity reaches the threshold as foreground.
pub fn binarize(img: &Grayscale, threshold: Threshold) -> BinaryGlyph {
    BinaryGlyph {
        width: img.width,
        height: img.height,
        mask: img.data.iter().map(|&v| v >= threshold.0).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandKind {
    Upper,
    Lower,
}

impl fmt::Display for BandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BandKind::Upper => "upper",
            BandKind::Lower => "lower",
        })
    }
}

/// Half-open row range `[start, end)` of a parent glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    pub start: usize,
    pub end: usize,
    pub kind: BandKind,
}

impl Band {
    pub fn rows(&self) -> Range<usize> {
        self.start..self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// Vertical midpoint of the band in full-image row coordinates.
    pub fn mid_row(&self) -> f64 {
        self.start as f64 + self.len() as f64 / 2.0
    }

    pub(crate) fn validate(&self, height: usize) -> Result<()> {
        if self.start < self.end && self.end <= height {
            Ok(())
        } else {
            Err(Error::InvalidBand {
                start: self.start,
                end: self.end,
                height,
            })
        }
    }
}

/// Top and bottom quarter bands, each `floor(height / 4)` rows tall.
pub fn split_bands(glyph: &BinaryGlyph) -> Result<(Band, Band)> {
    let height = glyph.height;
    if height < MIN_GLYPH_HEIGHT {
        return Err(Error::GlyphTooSmall {
            height,
            min: MIN_GLYPH_HEIGHT,
        });
    }
    let band_rows = height / 4;
    Ok((
        Band {
            start: 0,
            end: band_rows,
            kind: BandKind::Upper,
        },
        Band {
            start: height - band_rows,
            end: height,
            kind: BandKind::Lower,
        },
    ))
}
