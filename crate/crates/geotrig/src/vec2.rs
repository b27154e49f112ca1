//! Minimal plane-vector arithmetic used throughout the crate.
//!
//! Everything here is 2D: control sets, duals and adjoint covectors all live
//! in the plane (or its dual, which we identify with the plane coordinatewise).

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A point or vector in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

/// Shorthand constructor.
#[inline]
pub fn vec2(x: f64, y: f64) -> Vec2 {
    Vec2 { x, y }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    /// Unit vector at polar angle `phi`.
    #[inline]
    pub fn unit(phi: f64) -> Vec2 {
        vec2(phi.cos(), phi.sin())
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product; twice the signed area of the
    /// triangle (0, self, other).
    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn normalize(self) -> Vec2 {
        let n = self.norm();
        vec2(self.x / n, self.y / n)
    }

    /// Rotation by `angle` counterclockwise.
    #[inline]
    pub fn rotate(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        vec2(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Rotation by +90 degrees.
    #[inline]
    pub fn perp(self) -> Vec2 {
        vec2(-self.y, self.x)
    }

    /// Reflection across the x-axis: (x, y) -> (x, -y).
    ///
    /// This is the coordinate identification between the plane and its dual
    /// used by the antipolar pairing `p*x - q*y`.
    #[inline]
    pub fn mirror(self) -> Vec2 {
        vec2(self.x, -self.y)
    }

    #[inline]
    pub fn dist(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        vec2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        vec2(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        vec2(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        vec2(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, s: f64) -> Vec2 {
        vec2(self.x / s, self.y / s)
    }
}

/// Distance from `p` to the segment [a, b].
pub fn dist_point_segment(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Distance from `p` to the ray {origin + t*dir, t >= 0}.
pub fn dist_point_ray(p: Vec2, origin: Vec2, dir: Vec2) -> f64 {
    let d = dir.normalize();
    let t = (p - origin).dot(d).max(0.0);
    p.dist(origin + d * t)
}

/// Normalize an angle into [0, 2*pi).
pub fn wrap_angle(phi: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut a = phi % two_pi;
    if a < 0.0 {
        a += two_pi;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_doubled_triangle_area() {
        assert_eq!(vec2(1.0, 0.0).cross(vec2(0.0, 1.0)), 1.0);
        assert_eq!(vec2(2.0, 0.0).cross(vec2(0.0, 3.0)), 6.0);
    }

    #[test]
    fn rotate_and_perp_agree() {
        let v = vec2(0.3, -1.7);
        let r = v.rotate(std::f64::consts::FRAC_PI_2);
        assert!((r - v.perp()).norm() < 1e-15);
    }

    #[test]
    fn segment_distance_clamps_endpoints() {
        let d = dist_point_segment(vec2(-1.0, 1.0), vec2(0.0, 0.0), vec2(2.0, 0.0));
        assert!((d - 2.0f64.sqrt()).abs() < 1e-15);
    }
}
