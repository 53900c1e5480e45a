//! On-disk containers: a JSON header `NAME.json` next to a payload
//! `NAME.cf64` of little-endian `f64` pairs `(re, im)`, row-major, no padding.
//!
//! Spectra list the offset axis followed by the frequency axes in `axes`;
//! sinograms list the offset axis and carry their angles.

use std::fs;
use std::path::{Path, PathBuf};

use dstfrft_core::radon::Sinogram;
use dstfrft_core::{AnalysisPath, AxisGrid, Complex64, DirectionalGrid, DirectionalSpectrum, FractionalOrder, SampledField};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ContainerError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed header: {reason}")]
    MalformedHeader { path: PathBuf, reason: String },
    #[error("{path}: inconsistent header: {reason}")]
    InconsistentHeader { path: PathBuf, reason: String },
    #[error("{path}: payload holds {found} bytes, header implies {expected}")]
    PayloadLength { path: PathBuf, expected: usize, found: usize },
    #[error("{path}: non-finite value at element {index}")]
    NonFinite { path: PathBuf, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Field,
    Spectrum,
    Sinogram,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisHeader {
    pub count: usize,
    pub origin: f64,
    pub spacing: f64,
    /// Midpoint of the axis, from which the points are generated; lets a
    /// reader rebuild the axis bit for bit. Optional on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centre: Option<f64>,
}

impl From<&AxisGrid> for AxisHeader {
    fn from(a: &AxisGrid) -> Self {
        Self { count: a.count(), origin: a.origin(), spacing: a.spacing(), centre: Some(a.centre()) }
    }
}

impl AxisHeader {
    fn grid(&self) -> Result<AxisGrid, String> {
        let from_origin = AxisGrid::new(self.count, self.origin, self.spacing).map_err(|e| e.to_string())?;
        let Some(c) = self.centre else { return Ok(from_origin) };
        let slack = 1e-12 * (self.origin.abs() + from_origin.length());
        let off = (c - from_origin.centre()).abs();
        if off.is_nan() || off > slack {
            return Err(format!("axis centre {c} disagrees with origin {} and spacing {}", self.origin, self.spacing));
        }
        AxisGrid::centred(self.count, c, self.spacing).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub version: u32,
    pub kind: Kind,
    pub ndim: usize,
    pub axes: Vec<AxisHeader>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directions_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<Vec<f64>>,
}

/// Header and payload file names for `base` (a trailing `.json` or
/// `.cf64` is ignored).
pub fn paths(base: &Path) -> (PathBuf, PathBuf) {
    let stem = match base.extension().and_then(|e| e.to_str()) {
        Some("json") | Some("cf64") => base.with_extension(""),
        _ => base.to_path_buf(),
    };
    let mut header = stem.clone().into_os_string();
    header.push(".json");
    let mut payload = stem.into_os_string();
    payload.push(".cf64");
    (header.into(), payload.into())
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> ContainerError + '_ {
    move |source| ContainerError::Io { path: path.to_path_buf(), source }
}

pub fn encode(values: &[Complex64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(values.len() * 16);
    for v in values {
        out.extend_from_slice(&v.re.to_le_bytes());
        out.extend_from_slice(&v.im.to_le_bytes());
    }
    out
}

fn decode(bytes: &[u8]) -> Vec<Complex64> {
    bytes
        .chunks_exact(16)
        .map(|c| {
            let re = f64::from_le_bytes(c[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(c[8..].try_into().expect("8 bytes"));
            Complex64::new(re, im)
        })
        .collect()
}

fn write(base: &Path, header: &Header, values: &[Complex64]) -> Result<(), ContainerError> {
    let (h, p) = paths(base);
    let text = serde_json::to_string_pretty(header).expect("header serializes");
    fs::write(&h, text + "\n").map_err(io(&h))?;
    fs::write(&p, encode(values)).map_err(io(&p))
}

fn read(base: &Path, kind: Kind) -> Result<(Header, Vec<Complex64>, PathBuf), ContainerError> {
    let (h, p) = paths(base);
    let text = fs::read_to_string(&h).map_err(io(&h))?;
    let header: Header = serde_json::from_str(&text)
        .map_err(|e| ContainerError::MalformedHeader { path: h.clone(), reason: e.to_string() })?;
    let bad = |reason: String| ContainerError::InconsistentHeader { path: h.clone(), reason };
    if header.version != VERSION {
        return Err(bad(format!("unsupported version {}", header.version)));
    }
    if header.kind != kind {
        return Err(bad(format!("expected kind {kind:?}, found {:?}", header.kind)));
    }
    let expected_axes = match kind {
        Kind::Field => header.ndim,
        Kind::Spectrum => header.ndim + 1,
        Kind::Sinogram => 1,
    };
    if !(1..=2).contains(&header.ndim) || header.axes.len() != expected_axes {
        return Err(bad(format!("ndim {} does not match {} axes", header.ndim, header.axes.len())));
    }
    for a in &header.axes {
        a.grid().map_err(bad)?;
    }
    let outer = match kind {
        Kind::Field => 1,
        Kind::Spectrum => header.directions_count.ok_or_else(|| bad("spectrum without directions_count".into()))?,
        Kind::Sinogram => header.angles.as_ref().map(Vec::len).ok_or_else(|| bad("sinogram without angles".into()))?,
    };
    let elements = outer * header.axes.iter().map(|a| a.count).product::<usize>();
    let bytes = fs::read(&p).map_err(io(&p))?;
    if bytes.len() != elements * 16 {
        return Err(ContainerError::PayloadLength { path: p, expected: elements * 16, found: bytes.len() });
    }
    let values = decode(&bytes);
    if let Some(index) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(ContainerError::NonFinite { path: p, index });
    }
    Ok((header, values, h))
}

fn axes_of(header: &Header) -> Vec<AxisGrid> {
    header
        .axes
        .iter()
        .map(|a| a.grid().expect("validated axis"))
        .collect()
}

pub fn write_field(field: &SampledField, base: &Path) -> Result<(), ContainerError> {
    let header = Header {
        version: VERSION,
        kind: Kind::Field,
        ndim: field.ndim(),
        axes: field.axes().iter().map(AxisHeader::from).collect(),
        directions_count: None,
        order: None,
        path: None,
        angles: None,
    };
    write(base, &header, field.values())
}

pub fn read_field(base: &Path) -> Result<SampledField, ContainerError> {
    let (header, values, h) = read(base, Kind::Field)?;
    SampledField::new(axes_of(&header), values)
        .map_err(|e| ContainerError::InconsistentHeader { path: h, reason: e.to_string() })
}

pub fn write_spectrum(spectrum: &DirectionalSpectrum, base: &Path) -> Result<(), ContainerError> {
    let g = spectrum.grid();
    let mut axes = vec![AxisHeader::from(g.b_axis())];
    axes.extend(g.a_axes().iter().map(AxisHeader::from));
    let header = Header {
        version: VERSION,
        kind: Kind::Spectrum,
        ndim: 2,
        axes,
        directions_count: Some(g.direction_count()),
        order: Some(spectrum.order().alphas()),
        path: Some(spectrum.path().name().to_string()),
        angles: None,
    };
    write(base, &header, spectrum.values())
}

pub fn read_spectrum(base: &Path) -> Result<DirectionalSpectrum, ContainerError> {
    let (header, values, h) = read(base, Kind::Spectrum)?;
    let bad = |reason: String| ContainerError::InconsistentHeader { path: h.clone(), reason };
    if header.ndim != 2 {
        return Err(bad("spectra are two-dimensional".into()));
    }
    let axes = axes_of(&header);
    let k = header.directions_count.expect("checked on read");
    let grid = DirectionalGrid::new(k, axes[0], [axes[1], axes[2]]).map_err(|e| bad(e.to_string()))?;
    let order = FractionalOrder::new(header.order.as_deref().ok_or_else(|| bad("spectrum without order".into()))?)
        .map_err(|e| bad(e.to_string()))?;
    let path = header
        .path
        .as_deref()
        .and_then(AnalysisPath::from_name)
        .ok_or_else(|| bad("missing or unknown path".into()))?;
    DirectionalSpectrum::new(grid, values, order, path).map_err(|e| bad(e.to_string()))
}

pub fn write_sinogram(sino: &Sinogram, base: &Path) -> Result<(), ContainerError> {
    let header = Header {
        version: VERSION,
        kind: Kind::Sinogram,
        ndim: 2,
        axes: vec![AxisHeader::from(sino.p_axis())],
        directions_count: Some(sino.angles().len()),
        order: None,
        path: None,
        angles: Some(sino.angles().to_vec()),
    };
    write(base, &header, sino.values())
}

pub fn read_sinogram(base: &Path) -> Result<Sinogram, ContainerError> {
    let (header, values, h) = read(base, Kind::Sinogram)?;
    let axes = axes_of(&header);
    Sinogram::new(header.angles.expect("checked on read"), axes[0], values)
        .map_err(|e| ContainerError::InconsistentHeader { path: h, reason: e.to_string() })
}
