use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the real plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vector2 {
    pub x1: f64,
    pub x2: f64,
}

impl Vector2 {
    pub const ZERO: Vector2 = Vector2 { x1: 0.0, x2: 0.0 };

    #[inline]
    pub const fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }

    /// Checked constructor for values coming from outside the library.
    pub fn try_new(x1: f64, x2: f64) -> Result<Self> {
        if x1.is_finite() && x2.is_finite() {
            Ok(Self { x1, x2 })
        } else {
            Err(Error::NonFinite(format!("({x1}, {x2})")))
        }
    }

    /// Euclidean direction `(cos θ, sin θ)`.
    #[inline]
    pub fn direction(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x1: c, x2: s }
    }

    #[inline]
    pub fn dot(self, other: Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2
    }

    /// `det[self other]`, positive when `other` is counterclockwise of `self`.
    #[inline]
    pub fn cross(self, other: Self) -> f64 {
        self.x1 * other.x2 - self.x2 * other.x1
    }

    #[inline]
    pub fn euclidean(self) -> f64 {
        self.x1.hypot(self.x2)
    }

    /// Rotation by +90°.
    #[inline]
    pub fn perp(self) -> Self {
        Self { x1: -self.x2, x2: self.x1 }
    }

    /// Polar angle in `[0, 2π)`.
    #[inline]
    pub fn angle(self) -> f64 {
        normalize_angle(self.x2.atan2(self.x1))
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }

    /// Linear interpolation `(1 − s)·self + s·other`.
    #[inline]
    pub fn lerp(self, other: Self, s: f64) -> Self {
        Self { x1: (1.0 - s) * self.x1 + s * other.x1, x2: (1.0 - s) * self.x2 + s * other.x2 }
    }

    pub fn as_array(self) -> [f64; 2] {
        [self.x1, self.x2]
    }
}

/// Maps any angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let tau = std::f64::consts::TAU;
    let r = theta.rem_euclid(tau);
    // rem_euclid can round up to exactly tau
    if r >= tau {
        0.0
    } else {
        r
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    #[inline]
    fn add(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    #[inline]
    fn sub(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    #[inline]
    fn neg(self) -> Vector2 {
        Vector2::new(-self.x1, -self.x2)
    }
}

impl Mul<Vector2> for f64 {
    type Output = Vector2;
    #[inline]
    fn mul(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self * rhs.x1, self * rhs.x2)
    }
}

impl Mul<f64> for Vector2 {
    type Output = Vector2;
    #[inline]
    fn mul(self, rhs: f64) -> Vector2 {
        Vector2::new(self.x1 * rhs, self.x2 * rhs)
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x1, self.x2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn try_new_rejects_non_finite() {
        assert!(Vector2::try_new(f64::NAN, 0.0).is_err());
        assert!(Vector2::try_new(0.0, f64::INFINITY).is_err());
        assert!(Vector2::try_new(1.0, -2.0).is_ok());
    }

    #[test]
    fn angle_is_in_half_open_range() {
        assert_eq!(Vector2::new(1.0, 0.0).angle(), 0.0);
        let a = Vector2::new(1.0, -1e-300).angle();
        assert!((0.0..std::f64::consts::TAU).contains(&a));
        assert_eq!(normalize_angle(-std::f64::consts::TAU), 0.0);
    }

    #[test]
    fn cross_orientation() {
        let e1 = Vector2::new(1.0, 0.0);
        assert_eq!(e1.cross(e1.perp()), 1.0);
        assert_eq!(e1.perp(), Vector2::new(0.0, 1.0));
    }
}
