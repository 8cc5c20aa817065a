//! File formats, bundled fixtures and batch evaluation around
//! [`cogskew_core`].
//!
//! * [`pnm`] reads and writes 8-bit PGM (P5 and P2) bit-exactly.
//! * [`image_io`] adds a PNG adapter and picks a codec from magic bytes.
//! * [`fixtures`] serves the checked-in A-Z / a-z glyph rasters.
//! * [`bench`] runs detect + correct over a corpus and scores it.
//! * [`report`] writes CSV / Markdown reports and reads CSV back.
//! * [`annotate`] draws the centroid line and the normal over a glyph.

pub mod annotate;
pub mod bench;
mod error;
pub mod fixtures;
pub mod image_io;
pub mod pnm;
pub mod report;

pub use cogskew_core as core;
pub use error::{Error, Result};
