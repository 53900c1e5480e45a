//! 8-bit binary PGM dumps of magnitudes.

use std::io::Write;
use std::path::Path;

/// Row-major `height x width` magnitudes scaled so the largest maps to 255.
pub fn encode_pgm(width: usize, height: usize, magnitudes: &[f64]) -> Vec<u8> {
    assert_eq!(magnitudes.len(), width * height, "heatmap shape");
    let peak = magnitudes.iter().copied().fold(0.0, f64::max);
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend(magnitudes.iter().map(|&m| if peak > 0.0 { (255.0 * m / peak).round() as u8 } else { 0 }));
    out
}

pub fn write_pgm(path: &Path, width: usize, height: usize, magnitudes: &[f64]) -> std::io::Result<()> {
    std::fs::File::create(path)?.write_all(&encode_pgm(width, height, magnitudes))
}
