//! Sampled functions on the circle and the sup-norm distance between them.
//!
//! A [`CircularFunction`] holds `N >= 3` samples taken at the N-th roots of
//! unity, index `i` sitting at angle `2 pi i / N`. The samples are read as the
//! vertices of a piecewise-linear function on the cycle graph, so the discrete
//! sup norm below coincides with the continuous one for grid-aligned inputs.

use crate::error::{Error, Result};

/// A piecewise-linear function on the sampled circle.
///
/// Immutable after construction; every value is finite and the sample count
/// is at least 3. Functions with different sample counts are never comparable.
#[derive(Debug, Clone, PartialEq)]
pub struct CircularFunction {
    values: Vec<f64>,
}

impl CircularFunction {
    /// Validates and wraps a sample vector.
    ///
    /// Rejects vectors shorter than 3 ([`Error::EmptyInput`]) and any NaN or
    /// infinite entry ([`Error::NonFiniteValue`] with the offending index).
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::EmptyInput { len: values.len() });
        }
        for (index, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
        }
        Ok(Self { values })
    }

    /// Wraps values that are already known to be valid.
    pub(crate) fn from_values_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(values.len() >= 3);
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { values }
    }

    /// Number of samples N.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: construction requires at least 3 samples.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The samples in index order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Sample at index `i` taken modulo N, so any integer addresses the circle.
    #[inline]
    pub fn at(&self, i: i64) -> f64 {
        let n = self.values.len() as i64;
        self.values[i.rem_euclid(n) as usize]
    }

    /// Global minimum sample value.
    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Global maximum sample value.
    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Sup-norm distance `max_i |a(i) - b(i)|` between two functions.
///
/// Both functions must have the same sample count; mismatches are rejected
/// rather than resampled.
pub fn sup_distance(a: &CircularFunction, b: &CircularFunction) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max))
}
