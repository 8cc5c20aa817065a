//! Slant removal by per-row sub-pixel shifting.
//!
//! The line through both band centroids is extended over every row. For row
//! `y` it sits `d(y) = (y - lower.y) / m` columns away from the vertical
//! through the lower centroid, where `m` is the line's slope `dy/dx`.
//! Shifting each row by `-d(y)` makes the line vertical; a right-leaning
//! glyph therefore has the rows above its lower centroid pushed left and a
//! left-leaning one has them pushed right.

use alloc::vec;
use alloc::vec::Vec;

use libm::ceil;

use crate::detect::{estimate_skew, CentroidPair, Detection, SkewEstimate};
use crate::error::{Error, Result};
use crate::interp::translate;
use crate::raster::{binarize, BinaryGlyph, Grayscale, Threshold};

/// Horizontal displacement of the centroid line from the normal line,
/// one entry per image row.
#[derive(Debug, Clone, PartialEq)]
pub struct RowShiftPlan {
    pub offsets: Vec<f64>,
    /// Column of the vertical reference line (the lower centroid).
    pub anchor_x: f64,
    /// Row of the lower centroid; the plan's offset is zero there.
    pub anchor_y: f64,
    /// `dy/dx` of the centroid line; `None` when the line is vertical.
    pub slope: Option<f64>,
}

impl RowShiftPlan {
    pub fn max_abs_offset(&self) -> f64 {
        self.offsets.iter().fold(0.0, |acc, d| acc.max(d.abs()))
    }

    /// Column where the extended centroid line crosses row `y`.
    pub fn line_x(&self, y: f64) -> f64 {
        match self.slope {
            Some(m) => self.anchor_x + (y - self.anchor_y) / m,
            None => self.anchor_x,
        }
    }
}

pub fn build_shift_plan(centroids: &CentroidPair, height: usize) -> Result<RowShiftPlan> {
    let CentroidPair { upper, lower } = *centroids;
    if upper.y.partial_cmp(&lower.y) != Some(core::cmp::Ordering::Less) {
        return Err(Error::InvalidCentroids {
            upper: upper.y,
            lower: lower.y,
        });
    }
    if upper.x == lower.x {
        return Ok(RowShiftPlan {
            offsets: vec![0.0; height],
            anchor_x: lower.x,
            anchor_y: lower.y,
            slope: None,
        });
    }
    let m = (upper.y - lower.y) / (upper.x - lower.x);
    let offsets = (0..height).map(|y| (y as f64 - lower.y) / m).collect();
    Ok(RowShiftPlan {
        offsets,
        anchor_x: lower.x,
        anchor_y: lower.y,
        slope: Some(m),
    })
}

/// Translates `row` right by `shift` columns (left if negative) into a
/// buffer of `out_width` samples using linear interpolation.
///
/// Samples read from outside `row` are background. Ink is only conserved
/// when the shifted content fits inside `[0, out_width)`, which for a
/// non-negative shift means `out_width >= row.len() + ceil(shift)`.
pub fn shift_row(row: &[f64], shift: f64, out_width: usize) -> Vec<f64> {
    translate(row, shift, out_width)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrectedGlyph {
    /// Shifted source raster, widened by `ceil(max |d|)` on each side.
    pub image: Grayscale,
    /// Columns added on each side of the source.
    pub margin: usize,
    /// Detection on the input glyph.
    pub before: Detection,
    pub plan: RowShiftPlan,
    /// Slant measured again on the re-binarized output.
    pub residual: SkewEstimate,
}

/// Detects the slant of `glyph` and removes it from `gray`, the raster it
/// was binarized from at `threshold`.
pub fn correct(glyph: &BinaryGlyph, gray: &Grayscale, threshold: Threshold) -> Result<CorrectedGlyph> {
    if (gray.width(), gray.height()) != (glyph.width(), glyph.height()) {
        return Err(Error::DimensionMismatch {
            gray_width: gray.width(),
            gray_height: gray.height(),
            glyph_width: glyph.width(),
            glyph_height: glyph.height(),
        });
    }
    let before = estimate_skew(glyph)?;
    let plan = build_shift_plan(&before.centroids, glyph.height())?;

    let margin = ceil(plan.max_abs_offset()) as usize;
    let out_width = gray.width() + 2 * margin;
    let rows = gray
        .rows()
        .zip(&plan.offsets)
        .map(|(row, d)| shift_row(row, margin as f64 - d, out_width));
    let image = Grayscale::from_rows(out_width, rows);

    let residual = estimate_skew(&binarize(&image, threshold))?.estimate;
    Ok(CorrectedGlyph {
        image,
        margin,
        before,
        plan,
        residual,
    })
}
