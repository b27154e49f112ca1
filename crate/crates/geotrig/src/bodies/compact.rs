//! Compact convex bodies with the origin in the interior.
//!
//! The boundary is a radial function R(phi) over the polar angle. Polygons
//! (and radially sampled bodies, which are normalized to polygons) carry
//! exact piecewise-linear geometry; ellipses and lp balls use closed forms.

use crate::error::{Error, Result};
use crate::vec2::{vec2, wrap_angle, Vec2};

const ANGLE_TOL: f64 = 1e-9;

/// How a compact body was described on input. Preserved for JSON round-trips
/// and for exact duality dispatch.
#[derive(Clone, Debug)]
pub enum CompactDescriptor {
    Polygon { vertices: Vec<Vec2> },
    Ellipse { a: f64, b: f64 },
    LpBall { p: f64 },
    RadialSamples { phi: Vec<f64>, r: Vec<f64> },
}

#[derive(Clone, Debug)]
pub(crate) enum CompactShape {
    Polygon(Polygon),
    Ellipse { a: f64, b: f64 },
    /// p > 1; p = 1 is normalized to the diamond polygon at construction.
    LpBall { p: f64 },
}

/// Convex compact set containing the origin in its interior.
#[derive(Clone, Debug)]
pub struct ConvexBody {
    descriptor: CompactDescriptor,
    pub(crate) shape: CompactShape,
}

/// The face of a body supported by a covector: a point or a segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Face {
    Point(Vec2),
    Segment(Vec2, Vec2),
}

impl Face {
    pub fn endpoints(&self) -> (Vec2, Vec2) {
        match *self {
            Face::Point(p) => (p, p),
            Face::Segment(a, b) => (a, b),
        }
    }
}

/// Exact polygon geometry: counterclockwise vertices, rotated so the vertex
/// angles are ascending in [0, 2*pi).
#[derive(Clone, Debug)]
pub(crate) struct Polygon {
    pub verts: Vec<Vec2>,
    /// Vertex angles in [0, 2*pi), ascending; angles[i] = verts[i].angle().
    pub angles: Vec<f64>,
    /// Unit outward edge normals, edge i joins verts[i] to verts[i+1 mod n].
    pub normals: Vec<Vec2>,
    /// Edge offsets: normals[i] . x = offsets[i] on edge i; all positive.
    pub offsets: Vec<f64>,
}

impl Polygon {
    fn build(mut verts: Vec<Vec2>) -> Result<Polygon> {
        if verts.len() < 3 {
            return Err(Error::InvalidBody("polygon needs at least 3 vertices".into()));
        }
        // enforce ccw orientation
        let doubled: f64 = verts
            .iter()
            .zip(verts.iter().cycle().skip(1))
            .map(|(a, b)| a.cross(*b))
            .sum();
        if doubled < 0.0 {
            verts.reverse();
        } else if doubled == 0.0 {
            return Err(Error::InvalidBody("degenerate polygon".into()));
        }
        // drop collinear vertices
        let n = verts.len();
        let mut kept = Vec::with_capacity(n);
        for i in 0..n {
            let prev = verts[(i + n - 1) % n];
            let next = verts[(i + 1) % n];
            let turn = (verts[i] - prev).cross(next - verts[i]);
            if turn > 1e-14 * (verts[i] - prev).norm() * (next - verts[i]).norm() {
                kept.push(verts[i]);
            } else if turn < 0.0 {
                return Err(Error::InvalidBody("polygon is not convex".into()));
            }
        }
        if kept.len() < 3 {
            return Err(Error::InvalidBody("degenerate polygon".into()));
        }
        // rotate so vertex angles ascend from the smallest
        let start = kept
            .iter()
            .enumerate()
            .min_by(|a, b| {
                wrap_angle(a.1.angle())
                    .partial_cmp(&wrap_angle(b.1.angle()))
                    .unwrap()
            })
            .unwrap()
            .0;
        kept.rotate_left(start);

        let angles: Vec<f64> = kept.iter().map(|v| wrap_angle(v.angle())).collect();
        for w in angles.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidBody(
                    "origin is not strictly inside the polygon".into(),
                ));
            }
        }
        let n = kept.len();
        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let e = kept[(i + 1) % n] - kept[i];
            let nrm = vec2(e.y, -e.x).normalize();
            let c = nrm.dot(kept[i]);
            if c <= 1e-12 {
                return Err(Error::InvalidBody(
                    "origin is not strictly inside the polygon".into(),
                ));
            }
            normals.push(nrm);
            offsets.push(c);
        }
        Ok(Polygon {
            verts: kept,
            angles,
            normals,
            offsets,
        })
    }

    /// Index of the edge whose angular wedge contains `phi`.
    pub fn edge_at(&self, phi: f64) -> usize {
        let a = wrap_angle(phi);
        let n = self.verts.len();
        match self
            .angles
            .binary_search_by(|v| v.partial_cmp(&a).unwrap())
        {
            Ok(i) => i,
            Err(0) => n - 1, // before the first vertex angle: wrapping edge
            Err(i) => i - 1,
        }
    }

    pub fn radial(&self, phi: f64) -> f64 {
        let i = self.edge_at(phi);
        let e = Vec2::unit(phi);
        self.offsets[i] / self.normals[i].dot(e)
    }

    /// Vertex index if `phi` hits a vertex within tolerance.
    pub fn vertex_at(&self, phi: f64) -> Option<usize> {
        let a = wrap_angle(phi);
        let n = self.verts.len();
        for (i, &va) in self.angles.iter().enumerate() {
            let mut d = (va - a).abs();
            d = d.min((d - std::f64::consts::TAU).abs());
            if d < ANGLE_TOL {
                return Some(i);
            }
        }
        let _ = n;
        None
    }
}

impl ConvexBody {
    pub fn polygon(vertices: Vec<Vec2>) -> Result<ConvexBody> {
        let poly = Polygon::build(vertices.clone())?;
        Ok(ConvexBody {
            descriptor: CompactDescriptor::Polygon { vertices },
            shape: CompactShape::Polygon(poly),
        })
    }

    pub fn ellipse(a: f64, b: f64) -> Result<ConvexBody> {
        if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidBody("ellipse semi-axes must be positive".into()));
        }
        Ok(ConvexBody {
            descriptor: CompactDescriptor::Ellipse { a, b },
            shape: CompactShape::Ellipse { a, b },
        })
    }

    pub fn unit_disc() -> ConvexBody {
        ConvexBody::ellipse(1.0, 1.0).unwrap()
    }

    /// The square [-1, 1] x [-1, 1].
    pub fn square() -> ConvexBody {
        ConvexBody::polygon(vec![
            vec2(1.0, -1.0),
            vec2(1.0, 1.0),
            vec2(-1.0, 1.0),
            vec2(-1.0, -1.0),
        ])
        .unwrap()
    }

    pub fn lp_ball(p: f64) -> Result<ConvexBody> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::InvalidBody("lp ball requires finite p >= 1".into()));
        }
        let shape = if p == 1.0 {
            CompactShape::Polygon(Polygon::build(vec![
                vec2(1.0, 0.0),
                vec2(0.0, 1.0),
                vec2(-1.0, 0.0),
                vec2(0.0, -1.0),
            ])?)
        } else {
            CompactShape::LpBall { p }
        };
        Ok(ConvexBody {
            descriptor: CompactDescriptor::LpBall { p },
            shape,
        })
    }

    /// Boundary samples (phi_i, r_i); interpolated as the polygon through the
    /// sample points, which keeps convexity checks and sector areas exact.
    pub fn radial_samples(phi: Vec<f64>, r: Vec<f64>) -> Result<ConvexBody> {
        if phi.len() != r.len() || phi.len() < 3 {
            return Err(Error::InvalidBody(
                "radial_samples needs matching phi/r arrays with >= 3 entries".into(),
            ));
        }
        if r.iter().any(|&ri| !(ri > 0.0) || !ri.is_finite()) {
            return Err(Error::InvalidBody("radial samples must be positive and finite".into()));
        }
        let verts: Vec<Vec2> = phi
            .iter()
            .zip(&r)
            .map(|(&p, &ri)| Vec2::unit(p) * ri)
            .collect();
        let poly = Polygon::build(verts)?;
        Ok(ConvexBody {
            descriptor: CompactDescriptor::RadialSamples { phi, r },
            shape: CompactShape::Polygon(poly),
        })
    }

    pub fn descriptor(&self) -> &CompactDescriptor {
        &self.descriptor
    }

    /// Radial function R(phi) > 0.
    pub fn radial(&self, phi: f64) -> f64 {
        match &self.shape {
            CompactShape::Polygon(p) => p.radial(phi),
            CompactShape::Ellipse { a, b } => {
                let (s, c) = phi.sin_cos();
                1.0 / ((c / a).powi(2) + (s / b).powi(2)).sqrt()
            }
            CompactShape::LpBall { p } => {
                let (s, c) = phi.sin_cos();
                (c.abs().powf(*p) + s.abs().powf(*p)).powf(-1.0 / *p)
            }
        }
    }

    /// Boundary point at polar angle phi.
    pub fn boundary_point(&self, phi: f64) -> Vec2 {
        Vec2::unit(phi) * self.radial(phi)
    }

    /// Support function h(d) = max over the body of d . x.
    pub fn support(&self, d: Vec2) -> f64 {
        match &self.shape {
            CompactShape::Polygon(p) => p
                .verts
                .iter()
                .map(|v| v.dot(d))
                .fold(f64::NEG_INFINITY, f64::max),
            CompactShape::Ellipse { a, b } => ((a * d.x).powi(2) + (b * d.y).powi(2)).sqrt(),
            CompactShape::LpBall { p } => {
                let q = *p / (*p - 1.0);
                (d.x.abs().powf(q) + d.y.abs().powf(q)).powf(1.0 / q)
            }
        }
    }

    /// The face where d . x attains its maximum over the body.
    pub fn support_face(&self, d: Vec2) -> Result<Face> {
        if d.norm() == 0.0 {
            return Err(Error::ZeroCovector);
        }
        let d = d.normalize();
        match &self.shape {
            CompactShape::Polygon(p) => {
                let n = p.verts.len();
                let vals: Vec<f64> = p.verts.iter().map(|v| v.dot(d)).collect();
                let best = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let scale = p.verts.iter().map(|v| v.norm()).fold(0.0, f64::max);
                let tol = 1e-12 * scale.max(1.0);
                let hits: Vec<usize> = (0..n).filter(|&i| vals[i] >= best - tol).collect();
                if hits.len() == 1 {
                    Ok(Face::Point(p.verts[hits[0]]))
                } else {
                    // adjacent vertices share an edge; pick the extremes
                    let mut a = hits[0];
                    let mut b = *hits.last().unwrap();
                    if hits.len() == 2 && (b + 1) % n == a {
                        std::mem::swap(&mut a, &mut b);
                    }
                    Ok(Face::Segment(p.verts[a], p.verts[b]))
                }
            }
            CompactShape::Ellipse { a, b } => {
                let h = self.support(d);
                Ok(Face::Point(vec2(a * a * d.x / h, b * b * d.y / h)))
            }
            CompactShape::LpBall { p } => {
                let q = *p / (*p - 1.0);
                let hq = d.x.abs().powf(q) + d.y.abs().powf(q);
                let s = hq.powf(1.0 / q);
                let comp = |di: f64| di.signum() * (di.abs() / s).powf(q - 1.0);
                Ok(Face::Point(vec2(comp(d.x), comp(d.y))))
            }
        }
    }

    /// Minkowski functional: inf of lambda > 0 with the point in lambda * body.
    pub fn minkowski(&self, point: Vec2) -> f64 {
        let r = point.norm();
        if r == 0.0 {
            return 0.0;
        }
        r / self.radial(point.angle())
    }

    pub fn contains(&self, point: Vec2, tol: f64) -> bool {
        self.minkowski(point) <= 1.0 + tol
    }

    /// One-sided outward unit normals (n_minus, n_plus) at the boundary point
    /// with polar angle phi. Equal at smooth points; at a corner they are the
    /// normals of the two adjacent edges, ordered counterclockwise.
    pub fn normal_cone(&self, phi: f64) -> (Vec2, Vec2) {
        match &self.shape {
            CompactShape::Polygon(p) => {
                if let Some(i) = p.vertex_at(phi) {
                    let n = p.verts.len();
                    (p.normals[(i + n - 1) % n], p.normals[i])
                } else {
                    let i = p.edge_at(phi);
                    (p.normals[i], p.normals[i])
                }
            }
            CompactShape::Ellipse { a, b } => {
                let pt = self.boundary_point(phi);
                let n = vec2(pt.x / (a * a), pt.y / (b * b)).normalize();
                (n, n)
            }
            CompactShape::LpBall { p } => {
                let pt = self.boundary_point(phi);
                let comp = |xi: f64| xi.signum() * xi.abs().powf(*p - 1.0);
                let n = vec2(comp(pt.x), comp(pt.y)).normalize();
                (n, n)
            }
        }
    }

    /// Area enclosed by the body.
    pub fn area(&self) -> f64 {
        match &self.shape {
            CompactShape::Polygon(p) => {
                0.5 * p
                    .verts
                    .iter()
                    .zip(p.verts.iter().cycle().skip(1))
                    .map(|(a, b)| a.cross(*b))
                    .sum::<f64>()
            }
            CompactShape::Ellipse { a, b } => std::f64::consts::PI * a * b,
            CompactShape::LpBall { .. } => {
                crate::num::adaptive_simpson(
                    &|phi| 0.5 * self.radial(phi).powi(2),
                    0.0,
                    std::f64::consts::TAU,
                    1e-13,
                )
            }
        }
    }

    /// Sampled chord check of convexity plus positivity of the radial
    /// function. Closed-form shapes are convex by construction; polygons were
    /// verified at build time, so this re-checks the representation.
    pub fn validate(&self, samples: usize) -> Result<()> {
        let mut min_r = f64::INFINITY;
        let mut max_r: f64 = 0.0;
        for i in 0..samples {
            let phi = std::f64::consts::TAU * i as f64 / samples as f64;
            let r = self.radial(phi);
            min_r = min_r.min(r);
            max_r = max_r.max(r);
        }
        if !(min_r > 0.0) {
            return Err(Error::InvalidBody("radial function must stay positive".into()));
        }
        if !max_r.is_finite() {
            return Err(Error::InvalidBody("body must be bounded".into()));
        }
        for i in 0..samples {
            let p1 = self.boundary_point(std::f64::consts::TAU * i as f64 / samples as f64);
            let p2 = self
                .boundary_point(std::f64::consts::TAU * ((i + 7) % samples) as f64 / samples as f64);
            let mid = (p1 + p2) * 0.5;
            if self.minkowski(mid) > 1.0 + 1e-9 {
                return Err(Error::InvalidBody("sampled chord leaves the body".into()));
            }
        }
        Ok(())
    }

    pub(crate) fn as_polygon(&self) -> Option<&Polygon> {
        match &self.shape {
            CompactShape::Polygon(p) => Some(p),
            _ => None,
        }
    }
}
