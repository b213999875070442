//! Scalar abstraction for timestamps and interval endpoints.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Scalar type carried by temporal attributes: `f32` or `f64`.
///
/// Interval endpoints, timestamps, and post times are all values of one
/// such type. The concrete aliases at the crate root pin `f64`.
pub trait TimeScalar: Float + FromPrimitive + Debug + Display {}

impl<T> TimeScalar for T where T: Float + FromPrimitive + Debug + Display {}
