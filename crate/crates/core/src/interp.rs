//! Linear interpolation kernel shared by the shear oracle and the corrector.

use alloc::vec::Vec;

/// Samples `row` at fractional position `p`; positions outside the row read
/// as background.
pub(crate) fn sample_linear(row: &[f64], p: f64) -> f64 {
    let base = libm::floor(p);
    let frac = p - base;
    let i0 = base as isize;
    let at = |i: isize| -> f64 {
        if i >= 0 && (i as usize) < row.len() {
            row[i as usize]
        } else {
            0.0
        }
    };
    let a = at(i0);
    if frac == 0.0 {
        return a;
    }
    a + frac * (at(i0 + 1) - a)
}

/// Inverse-mapped translation: `out[x] = row(x - shift)`.
pub(crate) fn translate(row: &[f64], shift: f64, out_width: usize) -> Vec<f64> {
    (0..out_width)
        .map(|x| sample_linear(row, x as f64 - shift))
        .collect()
}
