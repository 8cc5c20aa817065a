//! Band statistics, band centroids and the slant angle.
//!
//! The "centroid" of a band is not a first moment. It is derived from the
//! leftmost and rightmost ink columns of the band and, for the upper band,
//! from which half of the image holds more ink:
//!
//! | upper band ink      | upper point                 |
//! |---------------------|-----------------------------|
//! | left > right        | `min_x + (max_x - min_x)/4` |
//! | left < right        | `min_x + (max_x - min_x)/2` |
//! | left == right       | `min_x + (max_x - min_x)/2` |
//!
//! The lower band always uses the midpoint of its extent. Both points sit at
//! the vertical middle of their band, in full-image row coordinates.

use core::fmt;

use libm::atan;

use crate::error::{Error, Result};
use crate::raster::{split_bands, Band, BinaryGlyph};

/// Ink extent and zone counts of one band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandStats {
    /// Leftmost ink column.
    pub min_x: usize,
    /// Rightmost ink column.
    pub max_x: usize,
    /// Ink pixels in columns `[0, width / 2)`.
    pub left_count: usize,
    /// Ink pixels in columns `[width / 2, width)`; the centre column of an
    /// odd-width glyph counts here.
    pub right_count: usize,
}

impl BandStats {
    fn extent(&self) -> f64 {
        (self.max_x - self.min_x) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// Representative points of the upper and lower bands, full-image frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentroidPair {
    pub upper: Point,
    pub lower: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tilt {
    Left,
    Right,
    None,
}

impl fmt::Display for Tilt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tilt::Left => "left",
            Tilt::Right => "right",
            Tilt::None => "none",
        })
    }
}

/// Unsigned slant from vertical plus the side the top leans towards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewEstimate {
    pub angle_deg: f64,
    pub direction: Tilt,
}

impl SkewEstimate {
    pub const UPRIGHT: Self = Self {
        angle_deg: 0.0,
        direction: Tilt::None,
    };

    /// Angle with the sign convention of [`crate::ShearSpec`]: positive
    /// when the top leans right.
    pub fn signed_deg(&self) -> f64 {
        match self.direction {
            Tilt::Left => -self.angle_deg,
            _ => self.angle_deg,
        }
    }
}

/// Result of [`estimate_skew`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub estimate: SkewEstimate,
    pub centroids: CentroidPair,
}

pub fn band_stats(glyph: &BinaryGlyph, band: &Band) -> Result<BandStats> {
    band.validate(glyph.height())?;
    let split = glyph.width() / 2;
    let mut stats: Option<BandStats> = None;
    for y in band.rows() {
        for (x, _) in glyph.row(y).iter().enumerate().filter(|(_, &ink)| ink) {
            let s = stats.get_or_insert(BandStats {
                min_x: x,
                max_x: x,
                left_count: 0,
                right_count: 0,
            });
            s.min_x = s.min_x.min(x);
            s.max_x = s.max_x.max(x);
            if x < split {
                s.left_count += 1;
            } else {
                s.right_count += 1;
            }
        }
    }
    stats.ok_or(Error::EmptyBand { kind: band.kind })
}

pub fn upper_centroid(stats: &BandStats, band: &Band) -> Point {
    let fraction = if stats.left_count > stats.right_count {
        4.0
    } else {
        2.0
    };
    Point {
        x: stats.min_x as f64 + stats.extent() / fraction,
        y: band.mid_row(),
    }
}

pub fn lower_centroid(stats: &BandStats, band: &Band) -> Point {
    Point {
        x: stats.min_x as f64 + stats.extent() / 2.0,
        y: band.mid_row(),
    }
}

/// Measures the slant of `glyph` from the line joining its band centroids.
///
/// The angle is `atan(|dx| / dy)` where `dx` is the horizontal offset of the
/// upper point from the lower one and `dy` their vertical separation.
pub fn estimate_skew(glyph: &BinaryGlyph) -> Result<Detection> {
    let (upper_band, lower_band) = split_bands(glyph)?;
    let stats = |band: &Band| {
        band_stats(glyph, band).map_err(|e| match e {
            Error::EmptyBand { kind } => Error::NotDetectable { kind },
            other => other,
        })
    };
    let upper = upper_centroid(&stats(&upper_band)?, &upper_band);
    let lower = lower_centroid(&stats(&lower_band)?, &lower_band);

    let dx = upper.x - lower.x;
    let dy = lower.y - upper.y;
    let estimate = if dx == 0.0 {
        SkewEstimate::UPRIGHT
    } else {
        SkewEstimate {
            angle_deg: atan(dx.abs() / dy).to_degrees(),
            direction: if dx > 0.0 { Tilt::Right } else { Tilt::Left },
        }
    };
    Ok(Detection {
        estimate,
        centroids: CentroidPair { upper, lower },
    })
}
