//! Checked-in glyph rasters.
//!
//! A fixture directory holds PGM files and a `manifest.txt` with one
//! `name path` pair per line (path relative to the directory). Blank lines
//! and lines starting with `#` are ignored.
//!
//! The bundled set has, for every letter `L` in A-Z and a-z:
//!
//! * `L-upright`: the upright sans face
//! * `L-italic`: the italic face of the same family
//! * `L-sheared`: `L-upright` sheared by 12 degrees, the italic angle of
//!   that face

use std::path::{Path, PathBuf};

use cogskew_core::Grayscale;

use crate::error::{Error, Result};
use crate::image_io::load_image;

pub const MANIFEST: &str = "manifest.txt";

/// Shear applied to the upright set to build the `-sheared` set.
pub const SHEARED_SET_DEG: f64 = 12.0;

#[derive(Debug, Clone)]
pub struct FixtureSet {
    root: PathBuf,
    entries: Vec<(String, PathBuf)>,
}

impl FixtureSet {
    /// The fixtures shipped in this crate's `fixtures/` directory.
    pub fn bundled() -> Result<Self> {
        Self::open(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
    }

    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root = root.into();
        let manifest = root.join(MANIFEST);
        let text = std::fs::read_to_string(&manifest).map_err(|e| Error::io(&manifest, e))?;
        let entries = parse_manifest(&text)?;
        Ok(Self { root, entries })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(name, _)| name.as_str())
    }

    pub fn path(&self, name: &str) -> Option<PathBuf> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, rel)| self.root.join(rel))
    }

    pub fn load(&self, name: &str) -> Result<Grayscale> {
        let path = self
            .path(name)
            .ok_or_else(|| Error::UnknownFixture(name.to_owned()))?;
        load_image(path)
    }

    /// Names ending in `-<style>` for the 26 capitals, in A-Z order.
    pub fn capitals(&self, style: &str) -> Vec<String> {
        ('A'..='Z')
            .map(|c| format!("{c}-{style}"))
            .filter(|n| self.path(n).is_some())
            .collect()
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<(String, PathBuf)>> {
    let mut entries: Vec<(String, PathBuf)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: &str| Error::Manifest {
            line: i + 1,
            message: message.to_owned(),
        };
        let mut parts = line.split_whitespace();
        let (Some(name), Some(path), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected 'name path'"));
        };
        if entries.iter().any(|(n, _)| n == name) {
            return Err(bad("duplicate fixture name"));
        }
        entries.push((name.to_owned(), PathBuf::from(path)));
    }
    Ok(entries)
}

/// Loads a fixture from the bundled set by name, e.g. `"A-italic"`.
pub fn render_fixture(name: &str) -> Result<Grayscale> {
    FixtureSet::bundled()?.load(name)
}
