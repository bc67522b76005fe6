//! Interval grey numbers in kernel/greyness form.
//!
//! A grey number is known only to lie somewhere inside an interval. On a
//! unit domain it is carried around as a `(kernel, greyness)` pair: the
//! kernel is the interval midpoint and the greyness is the interval width.
//! Arithmetic follows ordinary rules on kernels while greyness takes the
//! maximum of the operands, so uncertainty never shrinks when values are
//! combined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GreyError {
    #[error("reversed interval: lower {lower} > upper {upper}")]
    ReversedInterval { lower: f64, upper: f64 },
}

/// A raw `[lower, upper]` interval, prior to kernel/greyness conversion.
///
/// Bounds are dimensionless; callers are expected to scale data to the
/// unit domain before converting (the decision pipeline's normalization
/// step does exactly that).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreyInterval {
    pub lower: f64,
    pub upper: f64,
}

impl GreyInterval {
    /// Rejects reversed bounds; NaN bounds are incomparable and also
    /// rejected.
    pub fn new(lower: f64, upper: f64) -> Result<Self, GreyError> {
        match lower.partial_cmp(&upper) {
            Some(Ordering::Less | Ordering::Equal) => Ok(Self { lower, upper }),
            _ => Err(GreyError::ReversedInterval { lower, upper }),
        }
    }

    /// The degenerate interval `[c, c]`.
    pub fn crisp(c: f64) -> Self {
        Self { lower: c, upper: c }
    }

    pub fn midpoint(&self) -> f64 {
        (self.lower + self.upper) / 2.0
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

impl fmt::Display for GreyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// A grey number in simplified `(kernel, greyness)` form.
///
/// The kernel is the crisp representative of the underlying interval and
/// the greyness measures its uncertainty (zero for a crisp real). Kernels
/// are not clamped to `[0, 1]`: influence propagation can legitimately
/// push them above 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreyNumber {
    pub kernel: f64,
    pub greyness: f64,
}

impl GreyNumber {
    /// # Panics
    /// Panics if `greyness` is negative.
    pub fn new(kernel: f64, greyness: f64) -> Self {
        assert!(greyness >= 0.0, "greyness must be non-negative");
        Self { kernel, greyness }
    }

    /// A crisp real `c`, represented as `(c, 0)`.
    pub fn crisp(c: f64) -> Self {
        Self {
            kernel: c,
            greyness: 0.0,
        }
    }

    /// Converts an interval to `(midpoint, width)` form.
    pub fn from_interval(iv: GreyInterval) -> Self {
        Self {
            kernel: iv.midpoint(),
            greyness: iv.width(),
        }
    }

    /// Reconstructs the interval `[kernel - greyness/2, kernel + greyness/2]`.
    pub fn to_interval(&self) -> GreyInterval {
        let half = self.greyness / 2.0;
        GreyInterval {
            lower: self.kernel - half,
            upper: self.kernel + half,
        }
    }

    /// Scalar multiple `c ⊙ x`: the kernel scales, the greyness is kept.
    pub fn scale(&self, c: f64) -> Self {
        Self {
            kernel: c * self.kernel,
            greyness: self.greyness,
        }
    }

    /// Precision `γ = 1/(1+g)` and relative kernel `δ = γ·kernel`.
    pub fn relative_score(&self) -> RelativeScore {
        let gamma = 1.0 / (1.0 + self.greyness);
        RelativeScore {
            gamma,
            delta: gamma * self.kernel,
        }
    }

    /// Ranking order: compare relative kernels δ first, then precision γ
    /// (smaller greyness wins a δ tie). This is a total preorder, not a
    /// total order: distinct numbers can compare `Equal`, so no
    /// `PartialOrd` impl is provided.
    pub fn compare(&self, other: &GreyNumber) -> Ordering {
        let a = self.relative_score();
        let b = other.relative_score();
        a.delta
            .partial_cmp(&b.delta)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.gamma.partial_cmp(&b.gamma).unwrap_or(Ordering::Equal))
    }
}

impl From<GreyInterval> for GreyNumber {
    fn from(iv: GreyInterval) -> Self {
        GreyNumber::from_interval(iv)
    }
}

/// `x ⊕ y = (x̂+ŷ, gₓ ∨ g_y)`
impl Add for GreyNumber {
    type Output = GreyNumber;

    fn add(self, rhs: GreyNumber) -> GreyNumber {
        GreyNumber {
            kernel: self.kernel + rhs.kernel,
            greyness: self.greyness.max(rhs.greyness),
        }
    }
}

/// `x ⊗ y = (x̂ŷ, gₓ ∨ g_y)`
impl Mul for GreyNumber {
    type Output = GreyNumber;

    fn mul(self, rhs: GreyNumber) -> GreyNumber {
        GreyNumber {
            kernel: self.kernel * rhs.kernel,
            greyness: self.greyness.max(rhs.greyness),
        }
    }
}

/// `c ⊙ x` as `c * x`.
impl Mul<GreyNumber> for f64 {
    type Output = GreyNumber;

    fn mul(self, rhs: GreyNumber) -> GreyNumber {
        rhs.scale(self)
    }
}

impl fmt::Display for GreyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.kernel, self.greyness)
    }
}

/// The ranking score pair derived from a grey number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelativeScore {
    /// Precision `γ ∈ (0, 1]`; 1 for a crisp number.
    pub gamma: f64,
    /// Relative kernel `δ = γ·kernel`; the primary ranking key.
    pub delta: f64,
}
