//! Format dispatch: PGM by default, PNG when the magic bytes (on load) or
//! the `.png` extension (on save) say so.

use std::path::Path;

use cogskew_core::Grayscale;
use image::{GrayImage, ImageFormat, Luma};

use crate::error::{Error, Result};
use crate::pnm::{load_pnm, save_pnm, PnmFormat};

const PNG_MAGIC: &[u8] = b"\x89PNG\r\n\x1a\n";

pub fn decode(bytes: &[u8]) -> Result<Grayscale> {
    if bytes.starts_with(b"P5") || bytes.starts_with(b"P2") {
        Ok(load_pnm(bytes)?)
    } else if bytes.starts_with(PNG_MAGIC) {
        decode_png(bytes)
    } else {
        Err(Error::UnknownFormat)
    }
}

/// Decodes a PNG, compositing any alpha over white before converting to ink.
fn decode_png(bytes: &[u8]) -> Result<Grayscale> {
    let img = image::load_from_memory_with_format(bytes, ImageFormat::Png)?.to_luma_alpha8();
    let (w, h) = img.dimensions();
    let data = img
        .pixels()
        .map(|p| {
            let [luma, alpha] = p.0;
            // Both factors are exact integers, so an opaque pixel rounds to
            // the same value as the PGM path's `(255 - s) / 255`.
            f64::from(u32::from(alpha) * u32::from(255 - luma)) / 65025.0
        })
        .collect();
    Ok(Grayscale::new(w as usize, h as usize, data)?)
}

pub fn encode_png(img: &Grayscale) -> Result<Vec<u8>> {
    let out = GrayImage::from_fn(img.width() as u32, img.height() as u32, |x, y| {
        Luma([(255.0 * (1.0 - img.get(x as usize, y as usize))).round() as u8])
    });
    let mut buf = std::io::Cursor::new(Vec::new());
    out.write_to(&mut buf, ImageFormat::Png)?;
    Ok(buf.into_inner())
}

pub fn load_image(path: impl AsRef<Path>) -> Result<Grayscale> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    decode(&bytes)
}

pub fn is_png_path(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("png"))
}

/// Writes `img` as PNG for a `.png` path and as binary PGM otherwise.
pub fn save_image(path: impl AsRef<Path>, img: &Grayscale) -> Result<()> {
    let path = path.as_ref();
    let bytes = if is_png_path(path) {
        encode_png(img)?
    } else {
        save_pnm(img, PnmFormat::Binary)
    };
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}
