use crate::raster::BandKind;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("image dimensions must be at least 1x1, got {width}x{height}")]
    EmptyImage { width: usize, height: usize },

    #[error("pixel buffer holds {actual} samples, expected {expected}")]
    DataLength { expected: usize, actual: usize },

    #[error("intensity {value} at index {index} is outside [0, 1]")]
    IntensityOutOfRange { index: usize, value: f64 },

    #[error("threshold {0} is outside the open interval (0, 1)")]
    InvalidThreshold(f64),

    #[error("glyph height {height} is below the minimum of {min} rows")]
    GlyphTooSmall { height: usize, min: usize },

    #[error("{kind} band has no foreground pixels")]
    EmptyBand { kind: BandKind },

    #[error("skew is not detectable: {kind} band has no foreground pixels")]
    NotDetectable { kind: BandKind },

    #[error("band rows {start}..{end} are not valid for a glyph of height {height}")]
    InvalidBand { start: usize, end: usize, height: usize },

    #[error("shear angle {0} degrees is outside (-45, 45)")]
    InvalidShearAngle(f64),

    #[error("anchor row {anchor} is outside an image of height {height}")]
    AnchorOutOfRange { anchor: usize, height: usize },

    #[error("upper centroid row {upper} is not above lower centroid row {lower}")]
    InvalidCentroids { upper: f64, lower: f64 },

    #[error("grayscale source is {gray_width}x{gray_height} but glyph is {glyph_width}x{glyph_height}")]
    DimensionMismatch {
        gray_width: usize,
        gray_height: usize,
        glyph_width: usize,
        glyph_height: usize,
    },
}
