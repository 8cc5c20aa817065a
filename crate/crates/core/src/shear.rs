//! Horizontal shear with a known angle, used to manufacture slanted glyphs
//! with exact ground truth.

use libm::{ceil, tan};

use crate::error::{Error, Result};
use crate::interp::translate;
use crate::raster::Grayscale;

/// Shear angles must stay strictly below this magnitude.
pub const MAX_SHEAR_DEG: f64 = 45.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShearSpec {
    /// Positive leans the top of the glyph to the right, as italic type does.
    pub theta_deg: f64,
    /// Row left in place. `None` means the bottom row.
    pub anchor_row: Option<usize>,
}

impl ShearSpec {
    pub fn new(theta_deg: f64) -> Self {
        Self {
            theta_deg,
            anchor_row: None,
        }
    }

    pub fn with_anchor(mut self, row: usize) -> Self {
        self.anchor_row = Some(row);
        self
    }
}

/// Shears `img` so that row `y` moves right by `(anchor - y) * tan(theta)`.
///
/// The canvas is widened by at least `ceil(height * tan|theta|)` columns so
/// no ink is clipped. Widening goes on the right for rows that move right
/// and on the left for rows that move left; the anchor row is copied
/// bit-for-bit.
pub fn shear(img: &Grayscale, spec: &ShearSpec) -> Result<Grayscale> {
    let theta = spec.theta_deg;
    if theta.is_nan() || theta.abs() >= MAX_SHEAR_DEG {
        return Err(Error::InvalidShearAngle(theta));
    }
    let height = img.height();
    let anchor = spec.anchor_row.unwrap_or(height - 1);
    if anchor >= height {
        return Err(Error::AnchorOutOfRange { anchor, height });
    }

    let slope = tan(theta.to_radians());
    let displacement = |y: usize| (anchor as f64 - y as f64) * slope;

    // Extreme displacements occur at the first and last rows.
    let (d_top, d_bottom) = (displacement(0), displacement(height - 1));
    let leftward = ceil((-d_top.min(d_bottom)).max(0.0)) as usize;
    let rightward = ceil(d_top.max(d_bottom).max(0.0)) as usize;
    let minimum = ceil(height as f64 * slope.abs()) as usize;
    let widen = minimum.max(leftward + rightward);
    let out_width = img.width() + widen;

    let rows = (0..height).map(|y| translate(img.row(y), leftward as f64 + displacement(y), out_width));
    Ok(Grayscale::from_rows(out_width, rows))
}
