//! The three-branch spatial distance and similarity over pattern pairs.
//!
//! Each comparison yields one value per branch: membership dominant (md),
//! non-membership dominant (nmd), and joint (ed). Branches are
//! built from three step streams per pattern, each taken against an
//! implicit (0, 0) origin element.

use serde::Serialize;

use crate::aifs::{AifsPattern, RealSequence};
use crate::error::Error;

/// Tolerance for the fuzzy precondition mu + nu = 1.
pub const FUZZY_TOLERANCE: f64 = 1e-9;

/// One value per branch. For distances on valid patterns the components
/// normally sit in [0, 1]; strongly alternating patterns can push the md
/// and nmd branches above 1 (see the crate tests), so nothing is clamped.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpatialValue {
    pub md: f64,
    pub nmd: f64,
    pub ed: f64,
}

fn streams(pairs: &[(f64, f64)]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let mut dmu = Vec::with_capacity(pairs.len());
    let mut g = Vec::with_capacity(pairs.len());
    let mut f = Vec::with_capacity(pairs.len());
    let mut prev = (0.0, 0.0);
    for &(mu, nu) in pairs {
        let d = mu - prev.0;
        let gg = prev.1 - nu;
        dmu.push(d);
        g.push(gg);
        f.push(d + gg);
        prev = (mu, nu);
    }
    (dmu, g, f)
}

/// Distance between equal-length raw pair sequences, normalized by 4k.
pub fn spatial_distance_raw(y: &[(f64, f64)], x: &[(f64, f64)]) -> Result<SpatialValue, Error> {
    if y.is_empty() || x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if y.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: x.len(),
        });
    }
    let (dy, gy, fy) = streams(y);
    let (dx, gx, fx) = streams(x);
    let mut md = 0.0;
    let mut nmd = 0.0;
    let mut ed = 0.0;
    for j in 0..y.len() {
        let a = (dy[j] - dx[j]).abs();
        let b = (gy[j] - gx[j]).abs();
        let c = (fy[j] - fx[j]).abs();
        md += a + c;
        nmd += b + c;
        ed += a + b;
    }
    let norm = 4.0 * y.len() as f64;
    Ok(SpatialValue {
        md: md / norm,
        nmd: nmd / norm,
        ed: ed / norm,
    })
}

pub fn spatial_distance(y: &AifsPattern, x: &AifsPattern) -> Result<SpatialValue, Error> {
    spatial_distance_raw(&y.pairs(), &x.pairs())
}

/// Similarity is 1 minus each distance branch.
pub fn spatial_similarity(y: &AifsPattern, x: &AifsPattern) -> Result<SpatialValue, Error> {
    let d = spatial_distance(y, x)?;
    Ok(SpatialValue {
        md: 1.0 - d.md,
        nmd: 1.0 - d.nmd,
        ed: 1.0 - d.ed,
    })
}

pub fn spatial_similarity_raw(y: &[(f64, f64)], x: &[(f64, f64)]) -> Result<SpatialValue, Error> {
    let d = spatial_distance_raw(y, x)?;
    Ok(SpatialValue {
        md: 1.0 - d.md,
        nmd: 1.0 - d.nmd,
        ed: 1.0 - d.ed,
    })
}

/// Distance of a pattern from the all-(0, 0) pattern of the same length.
pub fn spatial_norm(y: &AifsPattern) -> SpatialValue {
    let zeros = vec![(0.0, 0.0); y.k()];
    spatial_distance_raw(&y.pairs(), &zeros).expect("pattern is non-empty")
}

/// First-order reduced distances (d1', d2') for fuzzy patterns. Both
/// patterns must satisfy mu + nu = 1 at every position within
/// [`FUZZY_TOLERANCE`]. d1' sums membership step differences over 4k;
/// d2' is its double.
pub fn fuzzy_reduced_distance(y: &AifsPattern, x: &AifsPattern) -> Result<(f64, f64), Error> {
    if y.k() != x.k() {
        return Err(Error::LengthMismatch {
            left: y.k(),
            right: x.k(),
        });
    }
    y.check_fuzzy(FUZZY_TOLERANCE)?;
    x.check_fuzzy(FUZZY_TOLERANCE)?;
    let (dy, _, _) = streams(&y.pairs());
    let (dx, _, _) = streams(&x.pairs());
    let sum: f64 = dy.iter().zip(&dx).map(|(a, b)| (a - b).abs()).sum();
    let d1 = sum / (4.0 * y.k() as f64);
    Ok((d1, 2.0 * d1))
}

/// Reduced distance over real sequences: consecutive-difference gaps
/// summed over 2k.
pub fn real_reduced_distance(y: &RealSequence, x: &RealSequence) -> Result<f64, Error> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: x.len(),
        });
    }
    let step = |values: &[f64]| -> Vec<f64> {
        let mut prev = 0.0;
        values
            .iter()
            .map(|&v| {
                let d = v - prev;
                prev = v;
                d
            })
            .collect()
    };
    let dy = step(y.values());
    let dx = step(x.values());
    let sum: f64 = dy.iter().zip(&dx).map(|(a, b)| (a - b).abs()).sum();
    Ok(sum / (2.0 * y.len() as f64))
}
