//! Slant detection and correction for single character images.
//!
//! A glyph is split into its top and bottom quarter bands. Each band is
//! reduced to a representative point (from the horizontal ink extent and
//! the left/right zone balance), the line through the two points gives the
//! slant, and the slant is removed by shifting every row horizontally by a
//! sub-pixel amount so that the line becomes vertical.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, fixtures and
//! the command line live in the `cogskew` companion crate.
//!
//! ```
//! use cogskew_core::{binarize, correct, estimate_skew, shear, Grayscale, ShearSpec, Threshold};
//!
//! // A one pixel wide vertical bar, slanted by 10 degrees.
//! let bar = Grayscale::from_fn(1, 100, |_, _| 1.0);
//! let slanted = shear(&bar, &ShearSpec::new(10.0)).unwrap();
//!
//! let threshold = Threshold::default();
//! let glyph = binarize(&slanted, threshold);
//! let detection = estimate_skew(&glyph).unwrap();
//! assert!((detection.estimate.angle_deg - 10.0).abs() < 1.0);
//!
//! let corrected = correct(&glyph, &slanted, threshold).unwrap();
//! assert!(corrected.residual.angle_deg <= 0.5);
//! ```

#![no_std]

extern crate alloc;

mod correct;
mod detect;
mod error;
mod interp;
mod raster;
mod shear;

pub use correct::{build_shift_plan, correct, shift_row, CorrectedGlyph, RowShiftPlan};
pub use detect::{
    band_stats, estimate_skew, lower_centroid, upper_centroid, BandStats, CentroidPair, Detection,
    Point, SkewEstimate, Tilt,
};
pub use error::{Error, Result};
pub use raster::{binarize, split_bands, Band, BandKind, BinaryGlyph, Grayscale, Threshold, MIN_GLYPH_HEIGHT};
pub use shear::{shear, ShearSpec, MAX_SHEAR_DEG};
