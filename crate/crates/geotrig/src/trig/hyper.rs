//! Area-parametrized boundary functions cosh_O, sinh_O for unbounded
//! antinorm balls, the antipolar angle correspondence, derivatives and
//! hyperbolic polar coordinates.
//!
//! The angle theta is twice the signed area of the contour swept along the
//! boundary from a base point omega0 (default: the point closest to the
//! origin), positive toward increasing polar angle. On the hyperbola
//! x^2 - y^2 = 1 this reproduces the classical cosh/sinh parametrization.
//!
//! The domain of theta is the whole line, a half line or a finite interval,
//! depending on whether the swept area stays finite toward each cone ray.
//! Bodies whose boundary contains a radial ray saturate: the area stops
//! growing there and the endpoint value is attained.

use crate::bodies::cone::ConeShape;
use crate::bodies::{duality, ConeBody};
use crate::error::{Error, Result};
use crate::num::{adaptive_simpson, newton_bisect};
use crate::vec2::{vec2, Vec2};

/// Maximal angle interval of a hyperbolic evaluator. Infinite ends use f64
/// infinities; `*_attained` marks saturated finite ends (boundary rays), the
/// only case where evaluation at the endpoint itself is defined.
#[derive(Clone, Copy, Debug)]
pub struct HyperDomain {
    pub min: f64,
    pub max: f64,
    pub min_attained: bool,
    pub max_attained: bool,
}

impl HyperDomain {
    pub fn contains(&self, theta: f64) -> bool {
        let above = theta > self.min || (self.min_attained && theta >= self.min - 1e-12);
        let below = theta < self.max || (self.max_attained && theta <= self.max + 1e-12);
        above && below
    }
}

/// Cumulative signed-area parametrization of a cone body boundary.
#[derive(Clone, Debug)]
pub(crate) enum ConeCurve {
    Alpha(AlphaCurve),
    Chain(ChainCurve),
}

/// Alpha-hyperbola boundary parametrized by the canonical-frame y-coordinate:
/// doubled area from y0 is F(y) - F(y0), dF/dy = (1 + |y|^alpha)^((1-alpha)/alpha).
#[derive(Clone, Debug)]
pub(crate) struct AlphaCurve {
    alpha: f64,
    rotation: f64,
    f0: f64,
    knots_y: Vec<f64>,
    knots_f: Vec<f64>,
    f_inf: f64,
}

#[derive(Clone, Debug)]
pub(crate) struct ChainCurve {
    nodes: Vec<Vec2>,
    node_theta: Vec<f64>,
    d_low: Vec2,
    d_high: Vec2,
    /// d theta per unit length outward along the rays; rate_low <= 0.
    rate_low: f64,
    rate_high: f64,
}

impl AlphaCurve {
    fn integrand(alpha: f64, y: f64) -> f64 {
        (1.0 + y.abs().powf(alpha)).powf((1.0 - alpha) / alpha)
    }

    fn build(alpha: f64, rotation: f64, base: Vec2) -> AlphaCurve {
        let y_cap: f64 = 1e7;
        let t_cap = y_cap.asinh();
        let n = 3000;
        let mut knots_y = Vec::with_capacity(n + 1);
        let mut knots_f = Vec::with_capacity(n + 1);
        knots_y.push(0.0);
        knots_f.push(0.0);
        let mut acc = 0.0;
        for k in 1..=n {
            let a = ((k - 1) as f64 * t_cap / n as f64).sinh();
            let b = (k as f64 * t_cap / n as f64).sinh();
            acc += adaptive_simpson(&|y| Self::integrand(alpha, y), a, b, 1e-14);
            knots_y.push(b);
            knots_f.push(acc);
        }
        // area to infinity: finite iff alpha > 2, via the tail expansion of
        // the integrand y^(1-alpha) (1 + y^-alpha)^((1-alpha)/alpha)
        let f_inf = if alpha > 2.0 {
            let p = (1.0 - alpha) / alpha;
            let tail = y_cap.powf(2.0 - alpha) / (alpha - 2.0)
                + p * y_cap.powf(2.0 - 2.0 * alpha) / (2.0 * alpha - 2.0);
            acc + tail
        } else {
            f64::INFINITY
        };
        let base_c = base.rotate(-rotation);
        let mut curve = AlphaCurve {
            alpha,
            rotation,
            f0: 0.0,
            knots_y,
            knots_f,
            f_inf,
        };
        curve.f0 = curve.f_of_y(base_c.y);
        curve
    }

    fn f_of_y(&self, y: f64) -> f64 {
        let ya = y.abs();
        let i = match self
            .knots_y
            .binary_search_by(|v| v.partial_cmp(&ya).unwrap())
        {
            Ok(i) => return y.signum() * self.knots_f[i],
            Err(i) => i - 1,
        };
        let f = self.knots_f[i]
            + adaptive_simpson(&|s| Self::integrand(self.alpha, s), self.knots_y[i], ya, 1e-14);
        if y < 0.0 {
            -f
        } else {
            f
        }
    }

    fn y_of_f(&self, f: f64) -> Result<f64> {
        let fa = f.abs();
        if fa >= self.f_inf {
            return Err(Error::Numeric("area beyond the asymptote".into()));
        }
        if fa > *self.knots_f.last().unwrap() {
            return Err(Error::Numeric("area beyond the tabulated horizon".into()));
        }
        let i = match self
            .knots_f
            .binary_search_by(|v| v.partial_cmp(&fa).unwrap())
        {
            Ok(i) => return Ok(f.signum() * self.knots_y[i]),
            Err(i) => i - 1,
        };
        let g = |y: f64| {
            self.knots_f[i]
                + adaptive_simpson(&|s| Self::integrand(self.alpha, s), self.knots_y[i], y, 1e-14)
                - fa
        };
        let dg = |y: f64| Self::integrand(self.alpha, y);
        let y = newton_bisect(&g, &dg, self.knots_y[i], self.knots_y[i + 1], 1e-15);
        Ok(f.signum() * y)
    }

    fn domain(&self) -> HyperDomain {
        HyperDomain {
            min: -self.f_inf - self.f0,
            max: self.f_inf - self.f0,
            min_attained: false,
            max_attained: false,
        }
    }

    fn point(&self, theta: f64) -> Result<Vec2> {
        let y = self.y_of_f(theta + self.f0)?;
        let x = (1.0 + y.abs().powf(self.alpha)).powf(1.0 / self.alpha);
        Ok(vec2(x, y).rotate(self.rotation))
    }

    fn theta_of_point(&self, p: Vec2) -> f64 {
        let yc = p.rotate(-self.rotation).y;
        self.f_of_y(yc) - self.f0
    }
}

impl ChainCurve {
    fn build(body: &ConeBody, base: Vec2) -> Result<ChainCurve> {
        let chain = body
            .as_chain()
            .expect("chain curve built from a chain body");
        let base_a = body.window_angle(base.angle());
        let mut nodes: Vec<Vec2> = Vec::with_capacity(chain.verts.len() + 1);
        for (i, &v) in chain.verts.iter().enumerate() {
            if chain.vert_angles[i] > base_a + 1e-12 && nodes.len() == i {
                nodes.push(base);
            }
            if (v - base).norm() > 1e-12 * v.norm().max(1.0) {
                nodes.push(v);
            } else {
                // base coincides with this vertex
                nodes.push(v);
            }
        }
        if nodes.len() == chain.verts.len() {
            // base lies past the last vertex (on the high ray) or equals one
            if base_a > *chain.vert_angles.last().unwrap() + 1e-12 {
                nodes.push(base);
            }
        }
        // dedup base if it slipped in next to an equal vertex
        nodes.dedup_by(|a, b| (*a - *b).norm() < 1e-12 * a.norm().max(1.0));
        let base_idx = nodes
            .iter()
            .position(|&n| (n - base).norm() < 1e-12 * base.norm().max(1.0))
            .ok_or_else(|| Error::InvalidBody("base point is not on the boundary".into()))?;
        let mut node_theta = vec![0.0; nodes.len()];
        for i in (0..base_idx).rev() {
            node_theta[i] = node_theta[i + 1] - nodes[i].cross(nodes[i + 1]);
        }
        for i in base_idx..nodes.len() - 1 {
            node_theta[i + 1] = node_theta[i] + nodes[i].cross(nodes[i + 1]);
        }
        Ok(ChainCurve {
            nodes,
            node_theta,
            d_low: chain.d_low,
            d_high: chain.d_high,
            rate_low: chain.verts[0].cross(chain.d_low),
            rate_high: chain.verts[chain.verts.len() - 1].cross(chain.d_high),
        })
    }

    fn domain(&self) -> HyperDomain {
        let saturated_low = self.rate_low.abs() < 1e-12;
        let saturated_high = self.rate_high.abs() < 1e-12;
        HyperDomain {
            min: if saturated_low {
                self.node_theta[0]
            } else {
                f64::NEG_INFINITY
            },
            max: if saturated_high {
                *self.node_theta.last().unwrap()
            } else {
                f64::INFINITY
            },
            min_attained: saturated_low,
            max_attained: saturated_high,
        }
    }

    fn point(&self, theta: f64) -> Result<Vec2> {
        let n = self.nodes.len();
        if theta < self.node_theta[0] {
            if self.rate_low.abs() < 1e-12 {
                return Ok(self.nodes[0]);
            }
            let t = (theta - self.node_theta[0]) / self.rate_low;
            return Ok(self.nodes[0] + self.d_low * t);
        }
        if theta > self.node_theta[n - 1] {
            if self.rate_high.abs() < 1e-12 {
                return Ok(self.nodes[n - 1]);
            }
            let t = (theta - self.node_theta[n - 1]) / self.rate_high;
            return Ok(self.nodes[n - 1] + self.d_high * t);
        }
        let i = match self
            .node_theta
            .binary_search_by(|v| v.partial_cmp(&theta).unwrap())
        {
            Ok(i) => return Ok(self.nodes[i]),
            Err(i) => i - 1,
        };
        let cross = self.nodes[i].cross(self.nodes[i + 1]);
        let t = (theta - self.node_theta[i]) / cross;
        Ok(self.nodes[i] + (self.nodes[i + 1] - self.nodes[i]) * t)
    }

    fn theta_of_point(&self, p: Vec2) -> f64 {
        // areas along straight pieces are plain cross products, so locating
        // the nearest node below p's angle is enough
        let n = self.nodes.len();
        let ang = |v: Vec2| v.angle();
        let pa = ang(p);
        let mut i = 0;
        while i + 1 < n && angle_le(ang(self.nodes[i + 1]), pa) {
            i += 1;
        }
        if i == 0 && !angle_le(ang(self.nodes[0]), pa) {
            // on the low ray
            return self.node_theta[0] + self.nodes[0].cross(p);
        }
        self.node_theta[i] + self.nodes[i].cross(p)
    }

    /// Angles of genuine corners (interior chain vertices).
    fn corner_thetas(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..self.nodes.len() {
            let prev = if i == 0 {
                -1.0 * self.d_low
            } else {
                (self.nodes[i] - self.nodes[i - 1]).normalize()
            };
            let next = if i + 1 == self.nodes.len() {
                self.d_high
            } else {
                (self.nodes[i + 1] - self.nodes[i]).normalize()
            };
            if prev.cross(next) < -1e-12 {
                out.push(self.node_theta[i]);
            }
        }
        out
    }
}

fn angle_le(a: f64, b: f64) -> bool {
    a <= b + 1e-14
}

impl ConeCurve {
    pub fn build(body: &ConeBody, base: Vec2) -> Result<ConeCurve> {
        match &body.shape {
            ConeShape::Alpha(h) => Ok(ConeCurve::Alpha(AlphaCurve::build(
                h.alpha, h.rotation, base,
            ))),
            ConeShape::Chain(_) => Ok(ConeCurve::Chain(ChainCurve::build(body, base)?)),
        }
    }

    pub fn domain(&self) -> HyperDomain {
        match self {
            ConeCurve::Alpha(c) => c.domain(),
            ConeCurve::Chain(c) => c.domain(),
        }
    }

    pub fn point(&self, theta: f64) -> Result<Vec2> {
        match self {
            ConeCurve::Alpha(c) => c.point(theta),
            ConeCurve::Chain(c) => c.point(theta),
        }
    }

    pub fn theta_of_point(&self, p: Vec2) -> f64 {
        match self {
            ConeCurve::Alpha(c) => c.theta_of_point(p),
            ConeCurve::Chain(c) => c.theta_of_point(p),
        }
    }

    pub fn corner_thetas(&self) -> Vec<f64> {
        match self {
            ConeCurve::Alpha(_) => Vec::new(),
            ConeCurve::Chain(c) => c.corner_thetas(),
        }
    }
}

/// Evaluator of (cosh_O, sinh_O) on a cone body and (cosh_O*, sinh_O*) on its
/// antipolar, with the angle correspondence between them.
#[derive(Clone, Debug)]
pub struct HyperTrig {
    body: ConeBody,
    dual: ConeBody,
    base: Vec2,
    dual_base: Vec2,
    curve: ConeCurve,
    dual_curve: ConeCurve,
}

impl HyperTrig {
    /// Build with the default base point: the point of the body closest to
    /// the origin; its perpendicular support line fixes the dual base.
    pub fn new(body: &ConeBody) -> Result<HyperTrig> {
        let base = body.closest_point();
        let dual_base = base.mirror() / base.norm_sq();
        Self::with_bases(body, base, dual_base)
    }

    /// Build with an explicit base point on the boundary. The dual base is
    /// the support point of the (mid-)normal at the base.
    pub fn with_base(body: &ConeBody, base: Vec2) -> Result<HyperTrig> {
        if (body.antinorm(base) - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidBody("base point must lie on the boundary".into()));
        }
        let (n_lo, n_hi) = body.normal_cone(base.angle());
        let n = (n_lo + n_hi).normalize();
        let dual_base = n.mirror() / n.dot(base);
        Self::with_bases(body, base, dual_base)
    }

    fn with_bases(body: &ConeBody, base: Vec2, dual_base: Vec2) -> Result<HyperTrig> {
        body.verify_shape(1024)?;
        let dual = duality::antipolar(body, 4096)?;
        let curve = ConeCurve::build(body, base)?;
        let dual_curve = ConeCurve::build(&dual, dual_base)?;
        Ok(HyperTrig {
            body: body.clone(),
            dual,
            base,
            dual_base,
            curve,
            dual_curve,
        })
    }

    pub fn body(&self) -> &ConeBody {
        &self.body
    }

    pub fn dual_body(&self) -> &ConeBody {
        &self.dual
    }

    pub fn base_point(&self) -> Vec2 {
        self.base
    }

    pub fn dual_base_point(&self) -> Vec2 {
        self.dual_base
    }

    /// Maximal angle interval of (cosh_O, sinh_O).
    pub fn domain(&self) -> HyperDomain {
        self.curve.domain()
    }

    pub fn dual_domain(&self) -> HyperDomain {
        self.dual_curve.domain()
    }

    /// (cosh_O theta, sinh_O theta).
    pub fn eval(&self, theta: f64) -> Result<Vec2> {
        let d = self.domain();
        if !d.contains(theta) {
            return Err(Error::OutOfDomain {
                theta,
                min: d.min,
                max: d.max,
            });
        }
        self.curve.point(theta)
    }

    /// (cosh_O* eta, sinh_O* eta) on the antipolar body.
    pub fn eval_dual(&self, eta: f64) -> Result<Vec2> {
        let d = self.dual_domain();
        if !d.contains(eta) {
            return Err(Error::OutOfDomain {
                theta: eta,
                min: d.min,
                max: d.max,
            });
        }
        self.dual_curve.point(eta)
    }

    /// Dual angles eta whose separating lines pass through eval(theta).
    /// Singleton at smooth points; a nondegenerate interval at corners, with
    /// infinite ends where the support line passes through the origin.
    pub fn correspondence(&self, theta: f64) -> Result<(f64, f64)> {
        let omega = self.eval(theta)?;
        let (u_lo, u_hi) = self.body.dual_points(omega.angle());
        let eta_of = |u: Option<Vec2>, low_side: bool| -> f64 {
            match u {
                Some(u) => self.dual_curve.theta_of_point(u),
                // support line through the origin: the dual boundary runs to
                // infinity on this side
                None if low_side => f64::NEG_INFINITY,
                None => f64::INFINITY,
            }
        };
        Ok((eta_of(u_lo, true), eta_of(u_hi, false)))
    }

    /// Body angles theta supported by the dual point at angle eta.
    pub fn co_correspondence(&self, eta: f64) -> Result<(f64, f64)> {
        let omega = self.eval_dual(eta)?;
        let (u_lo, u_hi) = self.dual.dual_points(omega.angle());
        let theta_of = |u: Option<Vec2>, low_side: bool| -> f64 {
            match u {
                Some(u) => self.curve.theta_of_point(u),
                None if low_side => f64::NEG_INFINITY,
                None => f64::INFINITY,
            }
        };
        Ok((theta_of(u_lo, true), theta_of(u_hi, false)))
    }

    /// (d/dtheta cosh_O, d/dtheta sinh_O) = (sinh_O* eta, cosh_O* eta) at the
    /// unique corresponding dual angle. At corners the error carries the
    /// interval whose endpoints give the one-sided derivatives.
    pub fn derivative(&self, theta: f64) -> Result<(f64, f64)> {
        let omega = self.eval(theta)?;
        match self.body.dual_points(omega.angle()) {
            (Some(a), Some(b)) if (a - b).norm() <= 1e-9 * a.norm().max(1.0) => {
                Ok((a.y, a.x))
            }
            _ => {
                let (lo, hi) = self.correspondence(theta)?;
                Err(Error::NonUniqueSupport(lo, hi))
            }
        }
    }

    /// Derivative on the dual side: (d/deta cosh_O*, d/deta sinh_O*) =
    /// (sinh_O theta, cosh_O theta) for theta corresponding to eta.
    pub fn dual_derivative(&self, eta: f64) -> Result<(f64, f64)> {
        let omega = self.eval_dual(eta)?;
        match self.dual.dual_points(omega.angle()) {
            (Some(a), Some(b)) if (a - b).norm() <= 1e-9 * a.norm().max(1.0) => {
                Ok((a.y, a.x))
            }
            _ => {
                let (lo, hi) = self.co_correspondence(eta)?;
                Err(Error::NonUniqueSupport(lo, hi))
            }
        }
    }

    /// Hyperbolic polar coordinates: point = R (cosh_O theta, sinh_O theta)
    /// with R the antinorm value.
    pub fn decompose(&self, point: Vec2) -> Result<(f64, f64)> {
        let r = self.body.antinorm(point);
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::OutsideCone(point.x, point.y));
        }
        let theta = self.curve.theta_of_point(point / r);
        Ok((r, theta))
    }

    /// Corner angles of the dual boundary (empty for smooth duals). The
    /// vertical-subsystem quadratures split integration intervals here.
    pub fn dual_corner_angles(&self) -> Vec<f64> {
        self.dual_curve.corner_thetas()
    }

    /// Dual angle of the dual boundary point in the direction phi, if the
    /// direction lies inside the dual cone.
    pub fn dual_angle_of_direction(&self, phi: f64) -> Option<f64> {
        let (lo, hi) = self.dual.cone_angles();
        let a = self.dual.window_angle(phi);
        if a <= lo + 1e-12 || a >= hi - 1e-12 {
            return None;
        }
        let p = self.dual.boundary_point(a);
        if !p.is_finite() {
            return None;
        }
        Some(self.dual_curve.theta_of_point(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::ConeBody;

    fn omega2() -> HyperTrig {
        HyperTrig::new(&ConeBody::alpha_hyperbola(2.0).unwrap()).unwrap()
    }

    #[test]
    fn classical_recovery_on_omega2() {
        let trig = omega2();
        let mut worst: f64 = 0.0;
        for k in 0..=600 {
            let theta = -3.0 + 6.0 * k as f64 / 600.0;
            let p = trig.eval(theta).unwrap();
            worst = worst
                .max((p.x - theta.cosh()).abs())
                .max((p.y - theta.sinh()).abs());
        }
        assert!(worst < 1e-8, "classical recovery error {worst}");
    }

    #[test]
    fn base_point_at_zero_angle() {
        let trig = omega2();
        let p = trig.eval(0.0).unwrap();
        assert!((p - vec2(1.0, 0.0)).norm() < 1e-12);

        let rs =
            HyperTrig::new(&ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap())
                .unwrap();
        assert!((rs.eval(0.0).unwrap() - vec2(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn domains_of_the_reference_bodies() {
        let d = omega2().domain();
        assert!(d.min == f64::NEG_INFINITY && d.max == f64::INFINITY);

        let o3 = HyperTrig::new(&ConeBody::alpha_hyperbola(3.0).unwrap()).unwrap();
        let d = o3.domain();
        assert!(d.min.is_finite() && d.max.is_finite());
        assert!((d.min + d.max).abs() < 1e-10, "symmetric interval");
        assert!(!d.min_attained && !d.max_attained);

        let rs =
            HyperTrig::new(&ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap())
                .unwrap();
        let d = rs.domain();
        assert!((d.min + 1.0).abs() < 1e-12 && (d.max - 1.0).abs() < 1e-12);
        assert!(d.min_attained && d.max_attained);
        // saturated endpoints evaluate to the segment corners
        assert!((rs.eval(1.0).unwrap() - vec2(1.0, 1.0)).norm() < 1e-12);
        assert!((rs.eval(-1.0).unwrap() - vec2(1.0, -1.0)).norm() < 1e-12);
        assert!(rs.eval(1.5).is_err());
    }

    #[test]
    fn alpha3_domain_endpoint_approaches_the_asymptote() {
        let o3 = HyperTrig::new(&ConeBody::alpha_hyperbola(3.0).unwrap()).unwrap();
        let d = o3.domain();
        let p = o3.eval(d.max - 1e-6).unwrap();
        assert!(p.y / p.x > 0.99, "slope {}", p.y / p.x);
    }

    #[test]
    fn self_correspondence_on_omega2() {
        let trig = omega2();
        for theta in [-2.0, -0.3, 0.0, 1.0, 2.5] {
            let (lo, hi) = trig.correspondence(theta).unwrap();
            assert!((lo - hi).abs() < 1e-9);
            assert!((lo - theta).abs() < 1e-8, "eta {lo} vs theta {theta}");
        }
    }

    #[test]
    fn duality_inequality_and_equality() {
        let bodies: Vec<ConeBody> = vec![
            ConeBody::alpha_hyperbola(2.0).unwrap(),
            ConeBody::alpha_hyperbola(3.0).unwrap(),
            ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap(),
        ];
        for body in &bodies {
            let trig = HyperTrig::new(body).unwrap();
            let d = trig.domain();
            let dd = trig.dual_domain();
            // keep a margin from finite domain ends: the pairing x*u.x - y*u.y
            // cancels catastrophically when boundary points run out along the
            // asymptotes, independently of evaluator accuracy
            let lo = if d.min.is_finite() { 0.9 * d.min } else { -2.0 };
            let hi = if d.max.is_finite() { 0.9 * d.max } else { 2.0 };
            let dlo = if dd.min.is_finite() { 0.9 * dd.min } else { -2.0 };
            let dhi = if dd.max.is_finite() { 0.9 * dd.max } else { 2.0 };
            for i in 0..=30 {
                let theta = lo + (hi - lo) * i as f64 / 30.0;
                let p = trig.eval(theta).unwrap();
                for j in 0..=30 {
                    let eta = dlo + (dhi - dlo) * j as f64 / 30.0;
                    let u = trig.eval_dual(eta).unwrap();
                    let pairing = p.x * u.x - p.y * u.y;
                    assert!(pairing >= 1.0 - 1e-9, "pairing {pairing}");
                }
                // equality on the correspondence
                let (elo, ehi) = trig.correspondence(theta).unwrap();
                for eta in [elo, ehi] {
                    if eta.is_finite() {
                        let u = trig.eval_dual(eta).unwrap();
                        let pairing = p.x * u.x - p.y * u.y;
                        assert!(
                            (pairing - 1.0).abs() < 1e-8,
                            "equality fails: {pairing} at theta {theta}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn derivatives_recover_classical_values() {
        let trig = omega2();
        let (dc, ds) = trig.derivative(0.0).unwrap();
        assert!(dc.abs() < 1e-10 && (ds - 1.0).abs() < 1e-10);
        // frozen classical values at theta = 1
        let (dc, ds) = trig.derivative(1.0).unwrap();
        assert!((dc - 1.1752011936438014).abs() < 1e-8);
        assert!((ds - 1.5430806348152437).abs() < 1e-8);
    }

    #[test]
    fn derivative_matches_finite_differences_on_alpha3() {
        let trig = HyperTrig::new(&ConeBody::alpha_hyperbola(3.0).unwrap()).unwrap();
        let d = trig.domain();
        for k in 0..20 {
            let theta = d.min * 0.8 + (d.max - d.min) * 0.8 * k as f64 / 19.0;
            let (dc, ds) = trig.derivative(theta).unwrap();
            let h = 1e-6;
            let p1 = trig.eval(theta - h).unwrap();
            let p2 = trig.eval(theta + h).unwrap();
            assert!((dc - (p2.x - p1.x) / (2.0 * h)).abs() < 1e-5);
            assert!((ds - (p2.y - p1.y) / (2.0 * h)).abs() < 1e-5);
        }
    }

    #[test]
    fn corner_derivative_reports_interval() {
        let rs =
            HyperTrig::new(&ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap())
                .unwrap();
        // interior of the segment is smooth with derivative (0, 1)
        let (dc, ds) = rs.derivative(0.3).unwrap();
        assert!(dc.abs() < 1e-12 && (ds - 1.0).abs() < 1e-12);
        // the corner at theta = 1 has an unbounded eta interval
        match rs.derivative(1.0) {
            Err(Error::NonUniqueSupport(lo, hi)) => {
                assert!((lo - 0.0).abs() < 1e-9 && hi == f64::INFINITY);
            }
            other => panic!("expected a corner, got {other:?}"),
        }
    }

    #[test]
    fn decompose_round_trip() {
        let trig = omega2();
        let (r, theta) = trig
            .decompose(vec2(2.0 * 1.0f64.cosh(), 2.0 * 1.0f64.sinh()))
            .unwrap();
        assert!((r - 2.0).abs() < 1e-9 && (theta - 1.0).abs() < 1e-9);
        let (r, theta) = trig.decompose(vec2(1.0, 0.0)).unwrap();
        assert!((r - 1.0).abs() < 1e-12 && theta.abs() < 1e-12);
        assert!(matches!(
            trig.decompose(vec2(0.0, 1.0)),
            Err(Error::OutsideCone(_, _))
        ));

        // random cone points round-trip through eval
        let o3 = HyperTrig::new(&ConeBody::alpha_hyperbola(1.5).unwrap()).unwrap();
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut rng = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..500 {
            let theta = -2.0 + 4.0 * rng();
            let r = 0.2 + 4.0 * rng();
            let p = o3.eval(theta).unwrap() * r;
            let (r2, t2) = o3.decompose(p).unwrap();
            let back = o3.eval(t2).unwrap() * r2;
            assert!((back - p).norm() < 1e-9 * p.norm().max(1.0));
        }
    }

    #[test]
    fn symmetric_bodies_have_even_cosh_odd_sinh() {
        for body in [
            ConeBody::alpha_hyperbola(2.0).unwrap(),
            ConeBody::alpha_hyperbola(3.0).unwrap(),
            ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap(),
        ] {
            let trig = HyperTrig::new(&body).unwrap();
            let d = trig.domain();
            let cap = d.max.min(2.5);
            for k in 1..20 {
                let theta = cap * k as f64 / 20.0;
                let p = trig.eval(theta).unwrap();
                let m = trig.eval(-theta).unwrap();
                assert!((p.x - m.x).abs() < 1e-9, "cosh not even");
                assert!((p.y + m.y).abs() < 1e-9, "sinh not odd");
            }
        }
    }

    #[test]
    fn monotone_area_along_the_boundary() {
        let trig = HyperTrig::new(&ConeBody::alpha_hyperbola(1.5).unwrap()).unwrap();
        let mut last = f64::NEG_INFINITY;
        for k in 0..=200 {
            let theta = -3.0 + 6.0 * k as f64 / 200.0;
            let p = trig.eval(theta).unwrap();
            let along = trig.decompose(p).unwrap().1;
            assert!(along > last);
            last = along;
        }
    }
}
