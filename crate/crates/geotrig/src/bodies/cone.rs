//! Unbounded convex bodies with the ray property (antinorm unit balls).
//!
//! A cone body lives inside a salient closed cone C with boundary rays l0, l1
//! at polar angles phi0 < phi1 < phi0 + pi, and is radially upward-closed:
//! it is exactly { r * e(phi) : r >= R(phi) } for a radial function R. Two
//! internal shapes cover all descriptors: alpha-hyperbolas (closed forms) and
//! chains (a convex polyline plus two boundary rays; ray segments and radial
//! samples normalize to chains).

use crate::error::{Error, Result};
use crate::vec2::{vec2, Vec2};

/// Default truncation radius: numeric horizon for sampling unbounded sets.
pub const DEFAULT_R_MAX: f64 = 1e6;

/// Relative tolerance for angular comparisons against cone boundaries.
const ANGLE_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub enum ConeDescriptor {
    AlphaHyperbola { alpha: f64, rotation: f64 },
    RaySegment { p0: Vec2, p1: Vec2 },
    Polyline { vertices: Vec<Vec2>, rays: (Vec2, Vec2) },
    RadialSamples { phi: Vec<f64>, r: Vec<f64> },
}

#[derive(Clone, Debug)]
pub(crate) enum ConeShape {
    Alpha(AlphaShape),
    Chain(ConeChain),
}

/// The right branch of |x|^alpha - |y|^alpha >= 1, rotated about the origin.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AlphaShape {
    pub alpha: f64,
    pub rotation: f64,
}

/// Convex polyline boundary: vertices at strictly increasing polar angle,
/// extended to infinity by a ray at each end.
#[derive(Clone, Debug)]
pub(crate) struct ConeChain {
    pub verts: Vec<Vec2>,
    /// Unit direction of the boundary ray leaving verts[0] (low-angle end).
    pub d_low: Vec2,
    /// Unit direction of the boundary ray leaving the last vertex.
    pub d_high: Vec2,
    pub vert_angles: Vec<f64>,
    pub ang_low: f64,
    pub ang_high: f64,
    /// Inward unit normals per piece: low ray, edges, high ray.
    pub piece_normals: Vec<Vec2>,
    /// Piece line offsets: n . x = c on the piece; zero only on radial rays.
    pub piece_offsets: Vec<f64>,
}

/// Unbounded convex set with the ray property, not containing the origin.
#[derive(Clone, Debug)]
pub struct ConeBody {
    descriptor: ConeDescriptor,
    pub(crate) shape: ConeShape,
    r_max: f64,
    phi0: f64,
    phi1: f64,
    r_min: f64,
}

/// Verdicts for the structural assumptions on a cone body.
///
/// `star` is the no-boundary-ray property, `star_star` the asymptotic
/// approach to both cone rays. For sampled descriptors `star_star` is
/// extrapolated from the last edge directions and flagged approximate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub i: bool,
    pub star: bool,
    pub star_star: bool,
    pub approximate: bool,
}

/// Argmin face of a linear functional over a cone body. Endpoints are finite
/// representatives; a flag marks sides that continue along a boundary ray.
#[derive(Clone, Copy, Debug)]
pub struct ConeFace {
    pub a: Vec2,
    pub b: Vec2,
    pub unbounded: bool,
}

impl ConeChain {
    fn build(verts: Vec<Vec2>, d_low: Vec2, d_high: Vec2) -> Result<ConeChain> {
        if verts.is_empty() {
            return Err(Error::InvalidBody("chain needs at least one vertex".into()));
        }
        let d_low = d_low.normalize();
        let d_high = d_high.normalize();
        if !d_low.is_finite() || !d_high.is_finite() {
            return Err(Error::InvalidBody("degenerate ray directions".into()));
        }
        // all angles measured in a window centered between the ray directions
        let raw_center = 0.5 * (d_low.angle() + d_high.angle());
        let window = |v: Vec2| -> f64 {
            let mut a = v.angle() - raw_center;
            while a <= -std::f64::consts::PI {
                a += std::f64::consts::TAU;
            }
            while a > std::f64::consts::PI {
                a -= std::f64::consts::TAU;
            }
            a + raw_center
        };
        let ang_low = window(d_low);
        let ang_high = window(d_high);
        let vert_angles: Vec<f64> = verts.iter().map(|&v| window(v)).collect();
        if !(ang_high - ang_low < std::f64::consts::PI - 1e-12) {
            return Err(Error::InvalidBody(
                "cone aperture must be strictly less than pi".into(),
            ));
        }
        if ang_high < ang_low {
            return Err(Error::InvalidBody("ray directions are not ordered".into()));
        }
        for w in vert_angles.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::InvalidBody(
                    "chain vertices must have strictly increasing polar angle".into(),
                ));
            }
        }
        if vert_angles[0] < ang_low - 1e-12 || *vert_angles.last().unwrap() > ang_high + 1e-12 {
            return Err(Error::InvalidBody(
                "chain vertices fall outside the cone spanned by the rays".into(),
            ));
        }
        if verts.iter().any(|v| v.norm() < 1e-12) {
            return Err(Error::InvalidBody("cone body must avoid the origin".into()));
        }

        // boundary traversal by increasing angle keeps the region on the
        // right; convexity means every turn is clockwise (cross <= 0)
        let mut travels = Vec::with_capacity(verts.len() + 1);
        travels.push(-1.0 * d_low);
        for w in verts.windows(2) {
            travels.push((w[1] - w[0]).normalize());
        }
        travels.push(d_high);
        for w in travels.windows(2) {
            if w[0].cross(w[1]) > 1e-10 {
                return Err(Error::InvalidBody("chain boundary is not convex".into()));
            }
        }

        let mut piece_normals = Vec::with_capacity(travels.len());
        let mut piece_offsets = Vec::with_capacity(travels.len());
        for (i, t) in travels.iter().enumerate() {
            let n = vec2(t.y, -t.x); // inward normal: region on the right
            let anchor = if i == 0 { verts[0] } else { verts[i - 1] };
            let c = n.dot(anchor);
            if c < -1e-10 {
                return Err(Error::InvalidBody(
                    "boundary line passes on the wrong side of the origin".into(),
                ));
            }
            let is_ray = i == 0 || i == travels.len() - 1;
            if !is_ray && c <= 1e-12 {
                return Err(Error::InvalidBody(
                    "interior boundary edge passes through the origin".into(),
                ));
            }
            piece_normals.push(n);
            piece_offsets.push(c.max(0.0));
        }

        Ok(ConeChain {
            verts,
            d_low,
            d_high,
            vert_angles,
            ang_low,
            ang_high,
            piece_normals,
            piece_offsets,
        })
    }

    /// Piece index covering window angle `a`: 0 = low ray, 1..=n-1 edges,
    /// n = high ray (n = number of vertices).
    pub fn piece_at(&self, a: f64) -> usize {
        match self
            .vert_angles
            .binary_search_by(|v| v.partial_cmp(&a).unwrap())
        {
            Ok(i) => i + 1,
            Err(i) => i,
        }
        .min(self.verts.len())
    }

    pub fn radial(&self, a: f64) -> f64 {
        if a < self.ang_low - ANGLE_TOL || a > self.ang_high + ANGLE_TOL {
            return f64::INFINITY;
        }
        let i = self.piece_at(a);
        let c = self.piece_offsets[i];
        if c == 0.0 {
            // radial ray piece: zero angular width, boundary at the vertex
            return if i == 0 {
                self.verts[0].norm()
            } else {
                self.verts[self.verts.len() - 1].norm()
            };
        }
        let denom = self.piece_normals[i].dot(Vec2::unit(a));
        if denom <= 0.0 {
            f64::INFINITY
        } else {
            c / denom
        }
    }

    /// Perpendicular offset of each boundary ray from the parallel cone ray.
    pub fn ray_offsets(&self) -> (f64, f64) {
        let low = self.verts[0].cross(self.d_low).abs();
        let high = self.verts[self.verts.len() - 1].cross(self.d_high).abs();
        (low, high)
    }
}

impl AlphaShape {
    /// Canonical-frame boundary: x = (1 + |y|^alpha)^(1/alpha).
    pub fn x_of_y(&self, y: f64) -> f64 {
        (1.0 + y.abs().powf(self.alpha)).powf(1.0 / self.alpha)
    }

    pub fn radial_canonical(&self, a: f64) -> f64 {
        let (s, c) = a.sin_cos();
        let u = c.powf(self.alpha) - s.abs().powf(self.alpha);
        if u <= 0.0 {
            f64::INFINITY
        } else {
            u.powf(-1.0 / self.alpha)
        }
    }

    pub fn beta(&self) -> f64 {
        self.alpha / (self.alpha - 1.0)
    }
}

impl ConeBody {
    fn from_parts(descriptor: ConeDescriptor, shape: ConeShape) -> ConeBody {
        let (phi0, phi1) = match &shape {
            ConeShape::Alpha(a) => (
                a.rotation - std::f64::consts::FRAC_PI_4,
                a.rotation + std::f64::consts::FRAC_PI_4,
            ),
            ConeShape::Chain(c) => (c.ang_low, c.ang_high),
        };
        let mut body = ConeBody {
            descriptor,
            shape,
            r_max: DEFAULT_R_MAX,
            phi0,
            phi1,
            r_min: 0.0,
        };
        body.r_min = body.closest_point().norm();
        body
    }

    /// Right branch of |x|^alpha - |y|^alpha >= 1 (alpha > 1).
    pub fn alpha_hyperbola(alpha: f64) -> Result<ConeBody> {
        ConeBody::alpha_hyperbola_rotated(alpha, 0.0)
    }

    /// Alpha-hyperbola rotated counterclockwise about the origin.
    pub fn alpha_hyperbola_rotated(alpha: f64, rotation: f64) -> Result<ConeBody> {
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::InvalidBody("alpha-hyperbola requires alpha > 1".into()));
        }
        Ok(ConeBody::from_parts(
            ConeDescriptor::AlphaHyperbola { alpha, rotation },
            ConeShape::Alpha(AlphaShape { alpha, rotation }),
        ))
    }

    /// Upward closure of the segment [p0, p1]: all lambda >= 1 multiples.
    pub fn ray_segment(p0: Vec2, p1: Vec2) -> Result<ConeBody> {
        if p0.dist(p1) < 1e-12 {
            return Err(Error::InvalidBody("ray segment endpoints coincide".into()));
        }
        // order endpoints by angle: low end first
        let (lo, hi) = if p0.cross(p1) > 0.0 { (p0, p1) } else { (p1, p0) };
        let chain = ConeChain::build(vec![lo, hi], lo, hi)?;
        Ok(ConeBody::from_parts(
            ConeDescriptor::RaySegment { p0, p1 },
            ConeShape::Chain(chain),
        ))
    }

    /// Convex region bounded by a polyline plus two asymptote rays.
    pub fn polyline(vertices: Vec<Vec2>, ray_low: Vec2, ray_high: Vec2) -> Result<ConeBody> {
        let chain = ConeChain::build(vertices.clone(), ray_low, ray_high)?;
        Ok(ConeBody::from_parts(
            ConeDescriptor::Polyline {
                vertices,
                rays: (ray_low, ray_high),
            },
            ConeShape::Chain(chain),
        ))
    }

    /// Boundary samples (phi_i, r_i), interpolated as the polyline through
    /// the sample points and extended beyond the end samples along the last
    /// edge directions.
    pub fn radial_samples(phi: Vec<f64>, r: Vec<f64>) -> Result<ConeBody> {
        if phi.len() != r.len() || phi.len() < 2 {
            return Err(Error::InvalidBody(
                "radial_samples needs matching phi/r arrays with >= 2 entries".into(),
            ));
        }
        if r.iter().any(|&ri| !(ri > 0.0) || !ri.is_finite()) {
            return Err(Error::InvalidBody("radial samples must be positive and finite".into()));
        }
        let mut pairs: Vec<(f64, f64)> = phi.iter().cloned().zip(r.iter().cloned()).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let verts: Vec<Vec2> = pairs.iter().map(|&(p, ri)| Vec2::unit(p) * ri).collect();
        let d_low = verts[0] - verts[1];
        let d_high = verts[verts.len() - 1] - verts[verts.len() - 2];
        let chain = ConeChain::build(verts, d_low, d_high)?;
        Ok(ConeBody::from_parts(
            ConeDescriptor::RadialSamples { phi, r },
            ConeShape::Chain(chain),
        ))
    }

    pub fn with_r_max(mut self, r_max: f64) -> ConeBody {
        self.r_max = r_max;
        self
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn descriptor(&self) -> &ConeDescriptor {
        &self.descriptor
    }

    /// Angles (phi0, phi1) of the boundary rays l0, l1 of C = cl R+ Omega.
    pub fn cone_angles(&self) -> (f64, f64) {
        (self.phi0, self.phi1)
    }

    /// Map a raw angle into the window centered on the cone axis, so
    /// comparisons against (phi0, phi1) are meaningful.
    pub fn window_angle(&self, raw: f64) -> f64 {
        let center = 0.5 * (self.phi0 + self.phi1);
        let mut a = raw - center;
        while a <= -std::f64::consts::PI {
            a += std::f64::consts::TAU;
        }
        while a > std::f64::consts::PI {
            a -= std::f64::consts::TAU;
        }
        a + center
    }

    /// Radial function R(phi); +infinity outside the cone and along
    /// asymptotic directions.
    pub fn radial(&self, phi: f64) -> f64 {
        let a = self.window_angle(phi);
        match &self.shape {
            ConeShape::Alpha(h) => h.radial_canonical(a - h.rotation),
            ConeShape::Chain(c) => c.radial(a),
        }
    }

    pub fn boundary_point(&self, phi: f64) -> Vec2 {
        Vec2::unit(phi) * self.radial(phi)
    }

    /// The antinorm with this unit ball: positive inside the open cone,
    /// the limsup value on the boundary rays, -infinity outside.
    pub fn antinorm(&self, p: Vec2) -> f64 {
        let r = p.norm();
        if r == 0.0 {
            return 0.0;
        }
        let a = self.window_angle(p.angle());
        let atol = ANGLE_TOL.max(1e-15 * (self.phi1 - self.phi0));
        if a < self.phi0 - atol || a > self.phi1 + atol {
            return f64::NEG_INFINITY;
        }
        if a <= self.phi0 + atol || a >= self.phi1 - atol {
            // on a boundary ray: value r/R if the ray meets the body,
            // otherwise the closure value 0
            return match self.end_radius(a > self.phi0 + atol) {
                Some(re) => r / re,
                None => 0.0,
            };
        }
        r / self.radial(a)
    }

    pub fn contains(&self, p: Vec2, tol: f64) -> bool {
        self.antinorm(p) >= 1.0 - tol
    }

    /// Radius at which the boundary meets the cone ray, if it does (i.e. if
    /// the body has a radial boundary ray at that end).
    pub fn end_radius(&self, high_end: bool) -> Option<f64> {
        match &self.shape {
            ConeShape::Alpha(_) => None,
            ConeShape::Chain(c) => {
                let (i, v) = if high_end {
                    (c.piece_offsets.len() - 1, c.verts[c.verts.len() - 1])
                } else {
                    (0, c.verts[0])
                };
                if c.piece_offsets[i] <= 1e-12 {
                    Some(v.norm())
                } else {
                    None
                }
            }
        }
    }

    /// Lower support m(w) = inf over the body of w . x; -infinity when a
    /// recession direction makes the functional unbounded below.
    pub fn lower_support(&self, w: Vec2) -> f64 {
        match &self.shape {
            ConeShape::Chain(c) => {
                let eps = -1e-14 * w.norm();
                if w.dot(c.d_low) < eps || w.dot(c.d_high) < eps {
                    return f64::NEG_INFINITY;
                }
                c.verts
                    .iter()
                    .map(|v| v.dot(w))
                    .fold(f64::INFINITY, f64::min)
            }
            ConeShape::Alpha(h) => {
                // the lower support of an alpha-hyperbola is the beta-antinorm
                // of the mirrored argument, 1/alpha + 1/beta = 1
                let wc = w.rotate(-h.rotation).mirror();
                let beta = h.beta();
                let u = wc.x.max(0.0).powf(beta) - wc.y.abs().powf(beta);
                if wc.x <= 0.0 || u < 0.0 {
                    if wc.x >= wc.y.abs() - 1e-14 * w.norm() && wc.x >= 0.0 {
                        0.0
                    } else {
                        f64::NEG_INFINITY
                    }
                } else {
                    u.powf(1.0 / beta)
                }
            }
        }
    }

    /// Argmin face of w . x over the body; requires m(w) finite and the
    /// functional coercive enough to attain it.
    pub fn lower_support_face(&self, w: Vec2) -> Result<ConeFace> {
        if w.norm() == 0.0 {
            return Err(Error::ZeroCovector);
        }
        match &self.shape {
            ConeShape::Chain(c) => {
                let m = self.lower_support(w);
                if !m.is_finite() {
                    return Err(Error::Numeric(
                        "lower support is not attained (unbounded below or asymptotic)".into(),
                    ));
                }
                let tol = 1e-12 * w.norm() * c.verts.iter().map(|v| v.norm()).fold(1.0, f64::max);
                let hits: Vec<usize> = (0..c.verts.len())
                    .filter(|&i| c.verts[i].dot(w) <= m + tol)
                    .collect();
                let a = c.verts[hits[0]];
                let b = c.verts[*hits.last().unwrap()];
                let unbounded = (hits[0] == 0 && w.dot(c.d_low).abs() <= tol)
                    || (*hits.last().unwrap() == c.verts.len() - 1
                        && w.dot(c.d_high).abs() <= tol);
                Ok(ConeFace { a, b, unbounded })
            }
            ConeShape::Alpha(h) => {
                let wc = w.rotate(-h.rotation);
                if wc.x <= wc.y.abs() {
                    return Err(Error::Numeric(
                        "lower support is not attained on the open cone boundary".into(),
                    ));
                }
                let tau = (wc.y.abs() / wc.x).powf(1.0 / (h.alpha - 1.0));
                let x = (1.0 - tau.powf(h.alpha)).powf(-1.0 / h.alpha);
                let y = -wc.y.signum() * tau * x;
                let p = vec2(x, y).rotate(h.rotation);
                Ok(ConeFace {
                    a: p,
                    b: p,
                    unbounded: false,
                })
            }
        }
    }

    /// The unique point of the body closest to the origin.
    pub fn closest_point(&self) -> Vec2 {
        match &self.shape {
            ConeShape::Alpha(h) => Vec2::unit(h.rotation),
            ConeShape::Chain(c) => {
                let mut best = c.verts[0];
                let mut best_d = best.norm();
                let mut consider = |p: Vec2| {
                    let d = p.norm();
                    if d < best_d {
                        best_d = d;
                        best = p;
                    }
                };
                for w in c.verts.windows(2) {
                    let seg = w[1] - w[0];
                    let t = (-w[0].dot(seg) / seg.norm_sq()).clamp(0.0, 1.0);
                    consider(w[0] + seg * t);
                }
                for (v, d) in [
                    (c.verts[0], c.d_low),
                    (c.verts[c.verts.len() - 1], c.d_high),
                ] {
                    let t = (-v.dot(d)).max(0.0);
                    consider(v + d * t);
                }
                for &v in &c.verts {
                    consider(v);
                }
                best
            }
        }
    }

    /// Inward one-sided unit normals at the boundary point with angle `phi`,
    /// ordered by traversal (previous piece first).
    pub fn normal_cone(&self, phi: f64) -> (Vec2, Vec2) {
        let a = self.window_angle(phi);
        match &self.shape {
            ConeShape::Alpha(h) => {
                let ac = a - h.rotation;
                let p = Vec2::unit(ac) * h.radial_canonical(ac);
                let n = vec2(
                    p.x.abs().powf(h.alpha - 1.0),
                    -p.y.signum() * p.y.abs().powf(h.alpha - 1.0),
                )
                .normalize()
                .rotate(h.rotation);
                (n, n)
            }
            ConeShape::Chain(c) => {
                // at a vertex angle the normal cone spans two pieces
                for (i, &va) in c.vert_angles.iter().enumerate() {
                    if (va - a).abs() < 1e-9 {
                        return (c.piece_normals[i], c.piece_normals[i + 1]);
                    }
                }
                let i = c.piece_at(a);
                (c.piece_normals[i], c.piece_normals[i])
            }
        }
    }

    /// Antipolar points of the one-sided support lines at the boundary point
    /// with angle `phi`, ordered by traversal. `None` marks a support line
    /// through the origin (radial boundary ray), whose dual runs to infinity.
    ///
    /// Closed forms avoid the cancellation in n . omega for far boundary
    /// points: on the canonical alpha-hyperbola the support covector at
    /// (x, y) is exactly (x^(alpha-1), -sgn(y) |y|^(alpha-1)) with offset 1.
    pub fn dual_points(&self, phi: f64) -> (Option<Vec2>, Option<Vec2>) {
        let a = self.window_angle(phi);
        match &self.shape {
            ConeShape::Alpha(h) => {
                let ac = a - h.rotation;
                let p = Vec2::unit(ac) * h.radial_canonical(ac);
                let k = h.alpha - 1.0;
                let u = vec2(p.x.powf(k), p.y.signum() * p.y.abs().powf(k))
                    .rotate(-h.rotation);
                (Some(u), Some(u))
            }
            ConeShape::Chain(c) => {
                let dual_of = |i: usize| -> Option<Vec2> {
                    let offset = c.piece_offsets[i];
                    if offset <= 1e-12 {
                        None
                    } else {
                        Some(c.piece_normals[i].mirror() / offset)
                    }
                };
                for (i, &va) in c.vert_angles.iter().enumerate() {
                    if (va - a).abs() < 1e-9 {
                        return (dual_of(i), dual_of(i + 1));
                    }
                }
                let i = c.piece_at(a);
                (dual_of(i), dual_of(i))
            }
        }
    }

    /// Structural property report; see `PropertyReport`.
    pub fn check_properties(&self) -> PropertyReport {
        let i = self.verify_shape(1024).is_ok();
        let eps_asym = 1e-3 * self.r_min;
        match &self.shape {
            ConeShape::Alpha(_) => PropertyReport {
                i,
                star: true,
                star_star: true,
                approximate: false,
            },
            ConeShape::Chain(c) => {
                let (off_low, off_high) = c.ray_offsets();
                let radial_low = off_low <= 1e-12 * c.verts[0].norm();
                let radial_high =
                    off_high <= 1e-12 * c.verts[c.verts.len() - 1].norm();
                let star = !radial_low && !radial_high;
                let star_star = off_low < eps_asym && off_high < eps_asym;
                let approximate =
                    matches!(self.descriptor, ConeDescriptor::RadialSamples { .. });
                PropertyReport {
                    i,
                    star,
                    star_star,
                    approximate,
                }
            }
        }
    }

    /// Re-verify convexity and separation from the origin on boundary samples.
    pub fn verify_shape(&self, samples: usize) -> Result<()> {
        if !(self.r_min > 0.0) {
            return Err(Error::InvalidBody("body touches the origin".into()));
        }
        let lo = self.phi0;
        let hi = self.phi1;
        let pts: Vec<Vec2> = (0..=samples)
            .map(|k| {
                let a = lo + (hi - lo) * (k as f64 + 0.5) / (samples as f64 + 1.0);
                self.boundary_point(a)
            })
            .filter(|p| p.is_finite() && p.norm() <= self.r_max)
            .collect();
        for w in pts.windows(9) {
            let mid = (w[0] + w[8]) * 0.5;
            if self.antinorm(mid) < 1.0 - 1e-7 {
                return Err(Error::InvalidBody("sampled chord leaves the body".into()));
            }
        }
        Ok(())
    }

    pub(crate) fn as_chain(&self) -> Option<&ConeChain> {
        match &self.shape {
            ConeShape::Chain(c) => Some(c),
            _ => None,
        }
    }
}

/// An antinorm together with its unit ball.
#[derive(Clone, Debug)]
pub struct Antinorm {
    body: ConeBody,
}

impl Antinorm {
    pub fn new(body: ConeBody) -> Antinorm {
        Antinorm { body }
    }

    pub fn body(&self) -> &ConeBody {
        &self.body
    }

    /// nu(p): positively homogeneous, positive inside the cone, -infinity
    /// outside.
    pub fn eval(&self, p: Vec2) -> f64 {
        self.body.antinorm(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega2() -> ConeBody {
        ConeBody::alpha_hyperbola(2.0).unwrap()
    }

    #[test]
    fn antinorm_on_the_hyperbola() {
        let o2 = omega2();
        // paper example: nu = sqrt(x^2 - y^2) on the cone
        assert!((o2.antinorm(vec2(2.0, 0.0)) - 2.0).abs() < 1e-12);
        assert_eq!(o2.antinorm(vec2(1.0, 1.0)), 0.0);
        assert_eq!(o2.antinorm(vec2(0.0, 1.0)), f64::NEG_INFINITY);
        let p = vec2(3.0, 1.0);
        assert!((o2.antinorm(p) - (9.0f64 - 1.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn antinorm_is_positively_homogeneous() {
        let o3 = ConeBody::alpha_hyperbola(3.0).unwrap();
        let p = vec2(1.7, 0.6);
        let base = o3.antinorm(p);
        for lambda in [0.5, 2.0, 10.0] {
            let v = o3.antinorm(p * lambda);
            assert!((v - lambda * base).abs() <= 1e-10 * v.abs().max(1.0));
        }
    }

    #[test]
    fn ray_segment_antinorm_and_closest() {
        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        // nu(x, y) = x on the cone |y| <= x
        assert!((rs.antinorm(vec2(2.0, 0.5)) - 2.0).abs() < 1e-12);
        assert!((rs.antinorm(vec2(3.0, 3.0)) - 3.0).abs() < 1e-12);
        assert_eq!(rs.antinorm(vec2(0.5, 1.0)), f64::NEG_INFINITY);
        assert!((rs.closest_point() - vec2(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn closest_point_of_rotated_hyperbola() {
        let rot = std::f64::consts::FRAC_PI_4;
        let o3 = ConeBody::alpha_hyperbola_rotated(3.0, rot).unwrap();
        let expected = Vec2::unit(rot);
        assert!((o3.closest_point() - expected).norm() < 1e-12);

        // brute-force oracle over a dense boundary sampling
        let (lo, hi) = o3.cone_angles();
        let mut best = f64::INFINITY;
        let mut best_p = Vec2::ZERO;
        for k in 1..20000 {
            let a = lo + (hi - lo) * k as f64 / 20000.0;
            let p = o3.boundary_point(a);
            if p.norm() < best {
                best = p.norm();
                best_p = p;
            }
        }
        assert!((best_p - expected).norm() < 1e-3);
    }

    #[test]
    fn properties_of_the_paper_examples() {
        let o2 = omega2();
        let r = o2.check_properties();
        assert!(r.i && r.star && r.star_star);

        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        let r = rs.check_properties();
        assert!(r.i && !r.star && r.star_star);

        // antipolar of the ray segment: vertex (1,0), rays parallel to (1,±1)
        let anti = ConeBody::polyline(
            vec![vec2(1.0, 0.0)],
            vec2(1.0, -1.0),
            vec2(1.0, 1.0),
        )
        .unwrap();
        let r = anti.check_properties();
        assert!(r.i && r.star && !r.star_star);
    }

    #[test]
    fn lower_support_closed_forms() {
        let o2 = omega2();
        // inf of x over omega2 is 1
        assert!((o2.lower_support(vec2(1.0, 0.0)) - 1.0).abs() < 1e-12);
        // asymptote direction: infimum 0
        assert!(o2.lower_support(vec2(1.0, -1.0)).abs() < 1e-12);
        // unbounded below
        assert_eq!(o2.lower_support(vec2(0.0, 1.0)), f64::NEG_INFINITY);

        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        assert!((rs.lower_support(vec2(1.0, 0.0)) - 1.0).abs() < 1e-12);
        assert!((rs.lower_support(vec2(2.0, 1.0)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lower_support_matches_brute_force_on_alpha3() {
        let o3 = ConeBody::alpha_hyperbola(3.0).unwrap();
        let (lo, hi) = o3.cone_angles();
        for &w in &[vec2(1.0, 0.0), vec2(2.0, 0.7), vec2(1.5, -1.0)] {
            let analytic = o3.lower_support(w);
            let mut brute = f64::INFINITY;
            for k in 1..200000 {
                let a = lo + (hi - lo) * k as f64 / 200000.0;
                let p = o3.boundary_point(a);
                if p.norm() < 1e5 {
                    brute = brute.min(p.dot(w));
                }
            }
            assert!(
                (analytic - brute).abs() < 1e-5,
                "w = {w:?}: {analytic} vs {brute}"
            );
        }
    }

    #[test]
    fn radial_samples_build_a_chain() {
        // sample omega2 boundary and rebuild
        let o2 = omega2();
        let mut phi = Vec::new();
        let mut r = Vec::new();
        for k in 0..401 {
            let a = -0.75 + 1.5 * k as f64 / 400.0;
            phi.push(a);
            r.push(o2.radial(a));
        }
        let sampled = ConeBody::radial_samples(phi, r).unwrap();
        assert!((sampled.closest_point().norm() - 1.0).abs() < 1e-4);
        let p = vec2(2.0, 0.3);
        assert!((sampled.antinorm(p) - o2.antinorm(p)).abs() < 1e-4);
    }
}
