//! Validated points of the probability simplex and elementary angle utilities.
//!
//! The simplex of dimension `n` is the set of nonnegative vectors whose
//! coordinates sum to 1. Dirty inputs are cleaned exactly once, at
//! construction: coordinates in `[-NEG_TOL, 0)` are clamped to zero and the
//! vector is renormalized by its total, so downstream formulas can divide by
//! quantities like `n * p_max - 1` without re-checking.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Accepted deviation of a coordinate sum from 1.
pub const SUM_TOL: f64 = 1e-9;

/// Coordinates in `[-NEG_TOL, 0)` are treated as rounding noise and clamped to 0.
pub const NEG_TOL: f64 = 1e-12;

/// Default exclusion radius around the uniform point, in the max norm.
///
/// The spread map has no continuous extension at the uniform point, so every
/// chord computation rejects points within this radius of it. Callers that
/// need a different radius can test with [`SimplexPoint::is_uniform`]
/// directly.
pub const UNIFORM_EPS: f64 = 1e-10;

/// A validated point of the probability simplex: nonnegative coordinates
/// summing to 1, dimension at least 2.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    /// Validate `raw` as a simplex point.
    ///
    /// Coordinates below `-NEG_TOL` are rejected; coordinates in
    /// `[-NEG_TOL, 0)` are clamped to 0. The post-clamp sum must lie within
    /// `SUM_TOL` of 1, after which the vector is renormalized by its total.
    pub fn new(raw: &[f64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.len() < 2 {
            return Err(Error::BadDimension {
                n: raw.len(),
                min: 2,
            });
        }
        let mut coords = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if value < -NEG_TOL {
                return Err(Error::NegativeCoordinate { index, value });
            }
            coords.push(if value < 0.0 { 0.0 } else { value });
        }
        let sum: f64 = coords.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::BadSum { sum });
        }
        for c in &mut coords {
            *c /= sum;
        }
        Ok(Self { coords })
    }

    /// Wrap coordinates that are already known to satisfy the invariants,
    /// bypassing clamping and renormalization. Used where exactness matters,
    /// e.g. the uniform point whose coordinates must be exactly `1/n`.
    pub(crate) fn from_normalized(coords: Vec<f64>) -> Self {
        debug_assert!(coords.len() >= 2);
        debug_assert!(coords.iter().all(|&c| c >= 0.0));
        debug_assert!((coords.iter().sum::<f64>() - 1.0).abs() <= SUM_TOL);
        Self { coords }
    }

    /// The uniform point of dimension `n`, with coordinates exactly `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadDimension { n, min: 2 });
        }
        Ok(Self::from_normalized(vec![1.0 / n as f64; n]))
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// True iff every coordinate is within `eps` of `1/n`.
    pub fn is_uniform(&self, eps: f64) -> bool {
        let target = 1.0 / self.dim() as f64;
        self.coords.iter().all(|&c| (c - target).abs() <= eps)
    }

    /// Smallest index attaining the minimum coordinate.
    pub fn argmin(&self) -> usize {
        let mut idx = 0;
        for (i, &c) in self.coords.iter().enumerate() {
            if c < self.coords[idx] {
                idx = i;
            }
        }
        idx
    }

    /// Smallest index attaining the maximum coordinate.
    pub fn argmax(&self) -> usize {
        let mut idx = 0;
        for (i, &c) in self.coords.iter().enumerate() {
            if c > self.coords[idx] {
                idx = i;
            }
        }
        idx
    }
}

impl Serialize for SimplexPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// The fixed geometry shared by every operation in dimension `n`: the uniform
/// point and the all-ones vector.
#[derive(Debug, Clone)]
pub struct SimplexContext {
    n: usize,
    u: SimplexPoint,
    ones: Vec<f64>,
}

impl SimplexContext {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            n,
            u: SimplexPoint::uniform(n)?,
            ones: vec![1.0; n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniform(&self) -> &SimplexPoint {
        &self.u
    }

    pub fn ones(&self) -> &[f64] {
        &self.ones
    }
}

pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub(crate) fn norm(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

/// Cosine of the angle between position vectors, clamped to `[-1, 1]` so the
/// arccosine never sees a domain error from rounding.
pub fn cosine_between(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (nx, ny) = (norm(x), norm(y));
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((dot(x, y) / (nx * ny)).clamp(-1.0, 1.0))
}

/// Angle in radians between position vectors, in `[0, pi]`.
pub fn vector_angle(x: &[f64], y: &[f64]) -> Result<f64> {
    Ok(cosine_between(x, y)?.acos())
}
