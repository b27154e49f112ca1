//! Area-parametrized boundary functions for compact convex bodies.
//!
//! The angle theta is twice the area of the sector swept from the positive
//! x-ray; the boundary point there has coordinates (cos_O theta, sin_O theta)
//! and the parametrization repeats with period 2 S(Omega). Sector areas are
//! exact for polygons (shoelace prefix sums) and ellipses (closed form), and
//! tabulated + Newton-refined for lp balls.

use crate::bodies::{duality, ConvexBody};
use crate::error::{Error, Result};
use crate::num::{adaptive_simpson, newton_bisect};
use crate::vec2::{vec2, wrap_angle, Vec2};

const TAU: f64 = std::f64::consts::TAU;

/// Monotone map between polar angle phi in [0, 2*pi) and doubled sector area
/// theta in [0, 2 S).
#[derive(Clone, Debug)]
pub(crate) struct CompactArea {
    kind: AreaKind,
    period: f64,
}

#[derive(Clone, Debug)]
enum AreaKind {
    /// Node chain: boundary points at ascending angles starting from the
    /// positive x-axis point, with prefix doubled areas. Consecutive nodes
    /// are joined by straight chords, so everything is exact cross products.
    Nodes { pts: Vec<Vec2>, prefix: Vec<f64> },
    Ellipse { a: f64, b: f64 },
    /// Dense monotone table refined per query by adaptive quadrature.
    Table {
        body: ConvexBody,
        phis: Vec<f64>,
        thetas: Vec<f64>,
    },
}

impl CompactArea {
    pub fn build(body: &ConvexBody) -> CompactArea {
        if let Some(poly) = body.as_polygon() {
            let start = body.boundary_point(0.0);
            let mut pts = vec![start];
            for &v in &poly.verts {
                if v.dist(start) > 1e-14 * v.norm().max(1.0) && wrap_angle(v.angle()) > 1e-15 {
                    pts.push(v);
                }
            }
            let mut prefix = vec![0.0];
            for w in pts.windows(2) {
                prefix.push(prefix.last().unwrap() + w[0].cross(w[1]));
            }
            let period = prefix.last().unwrap() + pts.last().unwrap().cross(start);
            return CompactArea {
                kind: AreaKind::Nodes { pts, prefix },
                period,
            };
        }
        match *body.descriptor() {
            crate::bodies::CompactDescriptor::Ellipse { a, b } => CompactArea {
                kind: AreaKind::Ellipse { a, b },
                period: TAU * a * b,
            },
            _ => {
                let n = 2048;
                let mut phis = Vec::with_capacity(n + 1);
                let mut thetas = Vec::with_capacity(n + 1);
                let mut acc = 0.0;
                phis.push(0.0);
                thetas.push(0.0);
                for k in 1..=n {
                    let a = TAU * (k - 1) as f64 / n as f64;
                    let b = TAU * k as f64 / n as f64;
                    acc += adaptive_simpson(&|p| body.radial(p).powi(2), a, b, 1e-13);
                    phis.push(b);
                    thetas.push(acc);
                }
                CompactArea {
                    kind: AreaKind::Table {
                        body: body.clone(),
                        phis,
                        thetas,
                    },
                    period: acc,
                }
            }
        }
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    /// Doubled sector area from the positive x-ray to the ray at angle phi.
    pub fn theta_of_phi(&self, phi: f64) -> f64 {
        let a = wrap_angle(phi);
        match &self.kind {
            AreaKind::Nodes { pts, prefix } => {
                let i = match pts
                    .binary_search_by(|p| wrap_angle(p.angle()).partial_cmp(&a).unwrap())
                {
                    Ok(i) => i,
                    Err(i) => i.saturating_sub(1),
                };
                // boundary point at angle a lies on the chord leaving node i
                let next = if i + 1 < pts.len() { pts[i + 1] } else { pts[0] };
                let p = chord_point_at_angle(pts[i], next, a);
                prefix[i] + pts[i].cross(p)
            }
            AreaKind::Ellipse { a: ea, b: eb } => {
                let (s, c) = a.sin_cos();
                let psi = wrap_angle((ea * s).atan2(eb * c));
                ea * eb * psi
            }
            AreaKind::Table { body, phis, thetas } => {
                let i = match phis.binary_search_by(|v| v.partial_cmp(&a).unwrap()) {
                    Ok(i) => return thetas[i],
                    Err(i) => i - 1,
                };
                thetas[i] + adaptive_simpson(&|p| body.radial(p).powi(2), phis[i], a, 1e-13)
            }
        }
    }

    /// Polar angle of the boundary point with doubled sector area theta
    /// (theta already reduced mod the period).
    pub fn phi_of_theta(&self, theta: f64) -> f64 {
        let th = reduce(theta, self.period);
        match &self.kind {
            AreaKind::Nodes { pts, prefix } => {
                let i = match prefix.binary_search_by(|v| v.partial_cmp(&th).unwrap()) {
                    Ok(i) => return wrap_angle(pts[i].angle()),
                    Err(i) => i - 1,
                };
                let next = if i + 1 < pts.len() { pts[i + 1] } else { pts[0] };
                let cross = pts[i].cross(next);
                let t = if cross > 0.0 { (th - prefix[i]) / cross } else { 0.0 };
                wrap_angle((pts[i] + (next - pts[i]) * t).angle())
            }
            AreaKind::Ellipse { a, b } => {
                let psi = th / (a * b);
                let (s, c) = psi.sin_cos();
                wrap_angle((b * s).atan2(a * c))
            }
            AreaKind::Table { body, phis, thetas } => {
                let i = match thetas.binary_search_by(|v| v.partial_cmp(&th).unwrap()) {
                    Ok(i) => return phis[i],
                    Err(i) => i - 1,
                };
                let f = |p: f64| {
                    thetas[i] + adaptive_simpson(&|q| body.radial(q).powi(2), phis[i], p, 1e-13)
                        - th
                };
                let df = |p: f64| body.radial(p).powi(2);
                newton_bisect(&f, &df, phis[i], phis[i + 1], 1e-14)
            }
        }
    }
}

fn chord_point_at_angle(a: Vec2, b: Vec2, phi: f64) -> Vec2 {
    let e = Vec2::unit(phi);
    let denom = e.cross(b - a);
    if denom.abs() < 1e-300 {
        return a;
    }
    let r = a.cross(b - a) / denom;
    e * r
}

fn reduce(theta: f64, period: f64) -> f64 {
    let mut t = theta % period;
    if t < 0.0 {
        t += period;
    }
    t
}

/// Evaluator of (cos_O, sin_O) for a compact body, the polar correspondence
/// theta <-> eta, and the polar change of variables.
#[derive(Clone, Debug)]
pub struct CompactTrig {
    body: ConvexBody,
    polar: ConvexBody,
    area: CompactArea,
    polar_area: CompactArea,
}

impl CompactTrig {
    pub fn new(body: &ConvexBody) -> Result<CompactTrig> {
        body.validate(512)?;
        let polar = duality::polar(body, 4096);
        let area = CompactArea::build(body);
        let polar_area = CompactArea::build(&polar);
        Ok(CompactTrig {
            body: body.clone(),
            polar,
            area,
            polar_area,
        })
    }

    pub fn body(&self) -> &ConvexBody {
        &self.body
    }

    pub fn polar_body(&self) -> &ConvexBody {
        &self.polar
    }

    /// Doubled body area 2 S(Omega): the period of the trig functions.
    pub fn period(&self) -> f64 {
        self.area.period()
    }

    pub fn dual_period(&self) -> f64 {
        self.polar_area.period()
    }

    /// (cos_O theta, sin_O theta): the boundary point at doubled sector area
    /// theta, extended periodically.
    pub fn eval(&self, theta: f64) -> Vec2 {
        self.body.boundary_point(self.area.phi_of_theta(theta))
    }

    /// (cos_O° eta, sin_O° eta) on the polar body.
    pub fn eval_dual(&self, eta: f64) -> Vec2 {
        self.polar.boundary_point(self.polar_area.phi_of_theta(eta))
    }

    /// The closed interval of dual angles eta whose support lines touch the
    /// body at eval(theta): a singleton at smooth points, a nondegenerate
    /// interval at corners.
    pub fn correspondence(&self, theta: f64) -> (f64, f64) {
        let phi = self.area.phi_of_theta(theta);
        let (n_lo, n_hi) = self.body.normal_cone(phi);
        let p = self.body.boundary_point(phi);
        let eta_of = |n: Vec2| self.polar_area.theta_of_phi(n.angle());
        let lo = eta_of(n_lo);
        let mut hi = eta_of(n_hi);
        if hi < lo - 1e-12 * self.dual_period() {
            hi += self.dual_period();
        }
        let _ = p;
        (lo, hi)
    }

    /// The reverse correspondence: body angles theta supported by the polar
    /// point at angle eta.
    pub fn co_correspondence(&self, eta: f64) -> (f64, f64) {
        let psi = self.polar_area.phi_of_theta(eta);
        let (n_lo, n_hi) = self.polar.normal_cone(psi);
        let theta_of = |n: Vec2| self.area.theta_of_phi(n.angle());
        let lo = theta_of(n_lo);
        let mut hi = theta_of(n_hi);
        if hi < lo - 1e-12 * self.period() {
            hi += self.period();
        }
        (lo, hi)
    }

    /// Derivative (cos_O'(theta), sin_O'(theta)) = (-sin_O° eta, cos_O° eta);
    /// errors with the eta interval at corner angles.
    pub fn derivative(&self, theta: f64) -> Result<Vec2> {
        let phi = self.area.phi_of_theta(theta);
        let (n_lo, n_hi) = self.body.normal_cone(phi);
        if n_lo.cross(n_hi).abs() > 1e-9 || n_lo.dot(n_hi) < 0.0 {
            let (lo, hi) = self.correspondence(theta);
            return Err(Error::NonUniqueSupport(lo, hi));
        }
        let p = self.body.boundary_point(phi);
        let u = n_lo / n_lo.dot(p);
        Ok(vec2(-u.y, u.x))
    }

    /// Polar change of variables: point = A (cos_O theta, sin_O theta) with
    /// A = Minkowski functional, theta in [0, 2 S).
    pub fn decompose(&self, point: Vec2) -> Result<(f64, f64)> {
        if point.norm() == 0.0 {
            return Err(Error::OriginPoint);
        }
        let a = self.body.minkowski(point);
        let theta = self.area.theta_of_phi(point.angle());
        Ok((a, theta))
    }

    /// Time derivatives of the polar coordinates along a moving point:
    /// returns (d theta, d A). Requires a unique support line at the point.
    pub fn theta_dot(&self, point: Vec2, velocity: Vec2) -> Result<(f64, f64)> {
        let (a, theta) = self.decompose(point)?;
        let phi = self.area.phi_of_theta(theta);
        let (n_lo, n_hi) = self.body.normal_cone(phi);
        if n_lo.cross(n_hi).abs() > 1e-9 || n_lo.dot(n_hi) < 0.0 {
            let (lo, hi) = self.correspondence(theta);
            return Err(Error::NonUniqueSupport(lo, hi));
        }
        let b = point / a;
        let dtheta = (velocity.y * b.x - velocity.x * b.y) / a;
        let p = self.body.boundary_point(phi);
        let u = n_lo / n_lo.dot(p);
        let da = velocity.dot(u);
        Ok((dtheta, da))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::ConvexBody;

    fn close(a: Vec2, b: Vec2, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn disc_recovers_classical_trig() {
        let trig = CompactTrig::new(&ConvexBody::unit_disc()).unwrap();
        assert!((trig.period() - TAU).abs() < 1e-12);
        let mut worst: f64 = 0.0;
        for k in 0..=1000 {
            let theta = TAU * k as f64 / 1000.0;
            let p = trig.eval(theta);
            worst = worst.max((p.x - theta.cos()).abs().max((p.y - theta.sin()).abs()));
        }
        assert!(worst < 1e-9, "classical recovery error {worst}");
        assert!(close(trig.eval(std::f64::consts::FRAC_PI_2), vec2(0.0, 1.0), 1e-12));
    }

    #[test]
    fn zero_angle_is_on_the_positive_x_axis() {
        for body in [
            ConvexBody::square(),
            ConvexBody::ellipse(2.0, 0.5).unwrap(),
            ConvexBody::lp_ball(3.0).unwrap(),
        ] {
            let trig = CompactTrig::new(&body).unwrap();
            let p = trig.eval(0.0);
            assert!(p.y.abs() < 1e-12 && p.x > 0.0);
        }
    }

    #[test]
    fn square_sector_area_oracle() {
        // shoelace oracle over the fine polyline gives theta = 1 at (1, 1):
        // doubled triangle area from (1,0) to (1,1) is exactly 1
        let trig = CompactTrig::new(&ConvexBody::square()).unwrap();
        assert!(close(trig.eval(1.0), vec2(1.0, 1.0), 1e-12));
        assert!((trig.period() - 8.0).abs() < 1e-12);
        // quarter way around: doubled area 2 lands on (0, 1)? sector from
        // (1,0) over the corner (1,1) to (0,1) has doubled area 1 + 1 = 2
        assert!(close(trig.eval(2.0), vec2(0.0, 1.0), 1e-12));
    }

    #[test]
    fn periodicity_is_exact() {
        let trig = CompactTrig::new(&ConvexBody::ellipse(2.0, 1.0).unwrap()).unwrap();
        for theta in [0.3, 1.7, 4.0] {
            let a = trig.eval(theta);
            let b = trig.eval(theta + trig.period());
            let c = trig.eval(theta - 3.0 * trig.period());
            assert!(close(a, b, 1e-10) && close(a, c, 1e-10));
        }
    }

    #[test]
    fn disc_correspondence_is_identity() {
        let trig = CompactTrig::new(&ConvexBody::unit_disc()).unwrap();
        for theta in [0.0, 0.5, 2.0, 5.0] {
            let (lo, hi) = trig.correspondence(theta);
            assert!((lo - hi).abs() < 1e-10);
            assert!((lo - theta).abs() < 1e-9, "eta {lo} vs theta {theta}");
        }
    }

    #[test]
    fn square_edge_and_corner_correspondence() {
        let trig = CompactTrig::new(&ConvexBody::square()).unwrap();
        // midpoint of the right edge: theta = 0, support line x = 1, the
        // dual vertex (1, 0) of the diamond at eta = 0
        let (lo, hi) = trig.correspondence(0.0);
        assert!((lo - hi).abs() < 1e-12);
        assert!(lo.abs() < 1e-12 || (lo - trig.dual_period()).abs() < 1e-12);
        // corner (1,1) at theta = 1: support normals sweep (1,0) -> (0,1),
        // dual edge of the diamond from eta = 0 to eta = 1 (dual area 2*1/2)
        let (lo, hi) = trig.correspondence(1.0);
        assert!(hi - lo > 0.5);
        assert!((lo - 0.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pythagorean_identity_on_correspondences() {
        for body in [
            ConvexBody::square(),
            ConvexBody::ellipse(2.0, 1.0).unwrap(),
            ConvexBody::lp_ball(1.5).unwrap(),
        ] {
            let trig = CompactTrig::new(&body).unwrap();
            for k in 0..50 {
                let theta = trig.period() * k as f64 / 50.0;
                let (lo, hi) = trig.correspondence(theta);
                let p = trig.eval(theta);
                for eta in [lo, 0.5 * (lo + hi), hi] {
                    let u = trig.eval_dual(eta);
                    let pairing = p.x * u.x + p.y * u.y;
                    assert!(
                        (pairing - 1.0).abs() < 1e-8,
                        "pairing {pairing} at theta {theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn duality_inequality_off_correspondence() {
        let trig = CompactTrig::new(&ConvexBody::lp_ball(3.0).unwrap()).unwrap();
        for i in 0..40 {
            for j in 0..40 {
                let theta = trig.period() * i as f64 / 40.0;
                let eta = trig.dual_period() * j as f64 / 40.0;
                let p = trig.eval(theta);
                let u = trig.eval_dual(eta);
                assert!(p.x * u.x + p.y * u.y <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let trig = CompactTrig::new(&ConvexBody::unit_disc()).unwrap();
        let (a, theta) = trig.decompose(vec2(3.0, 4.0)).unwrap();
        assert!((a - 5.0).abs() < 1e-12);
        assert!((theta - (4.0f64).atan2(3.0)).abs() < 1e-12);

        let sq = CompactTrig::new(&ConvexBody::square()).unwrap();
        let (a, theta) = sq.decompose(vec2(2.0, 2.0)).unwrap();
        assert!((a - 2.0).abs() < 1e-12);
        assert!((theta - 1.0).abs() < 1e-12, "corner angle theta = {theta}");
        // boundary points decompose with A = 1
        let (a, _) = sq.decompose(vec2(1.0, 0.3)).unwrap();
        assert!((a - 1.0).abs() < 1e-12);

        assert!(matches!(
            trig.decompose(Vec2::ZERO),
            Err(Error::OriginPoint)
        ));
        // round-trip
        let p = vec2(-1.3, 0.4);
        let (a, theta) = sq.decompose(p).unwrap();
        assert!(close(sq.eval(theta) * a, p, 1e-10));
    }

    #[test]
    fn theta_dot_rotation_and_dilation_on_the_disc() {
        let trig = CompactTrig::new(&ConvexBody::unit_disc()).unwrap();
        let (dt, da) = trig.theta_dot(vec2(1.0, 0.0), vec2(0.0, 1.0)).unwrap();
        assert!((dt - 1.0).abs() < 1e-10 && da.abs() < 1e-10);
        let (dt, da) = trig.theta_dot(vec2(1.0, 0.0), vec2(1.0, 0.0)).unwrap();
        assert!(dt.abs() < 1e-10 && (da - 1.0).abs() < 1e-10);
    }

    #[test]
    fn theta_dot_matches_finite_differences_on_an_edge() {
        let trig = CompactTrig::new(&ConvexBody::square()).unwrap();
        let p = vec2(2.0, 0.6); // on the ray through the right edge interior
        let v = vec2(0.3, -1.1);
        let (dt, da) = trig.theta_dot(p, v).unwrap();
        let h = 1e-6;
        let (a1, t1) = trig.decompose(p - v * h).unwrap();
        let (a2, t2) = trig.decompose(p + v * h).unwrap();
        assert!((dt - (t2 - t1) / (2.0 * h)).abs() < 1e-6);
        assert!((da - (a2 - a1) / (2.0 * h)).abs() < 1e-6);
    }

    #[test]
    fn corner_crossing_reports_non_unique_support() {
        let trig = CompactTrig::new(&ConvexBody::square()).unwrap();
        assert!(matches!(
            trig.theta_dot(vec2(1.0, 1.0), vec2(1.0, 0.0)),
            Err(Error::NonUniqueSupport(_, _))
        ));
    }

    #[test]
    fn derivative_matches_finite_differences_at_smooth_angles() {
        for body in [
            ConvexBody::ellipse(2.0, 1.0).unwrap(),
            ConvexBody::lp_ball(2.5).unwrap(),
        ] {
            let trig = CompactTrig::new(&body).unwrap();
            for k in 0..25 {
                let theta = trig.period() * (k as f64 + 0.37) / 25.0;
                let d = trig.derivative(theta).unwrap();
                let h = 1e-6;
                let fd = (trig.eval(theta + h) - trig.eval(theta - h)) / (2.0 * h);
                assert!((d - fd).norm() < 1e-5, "at theta {theta}: {d:?} vs {fd:?}");
            }
        }
    }
}
