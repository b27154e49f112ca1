//! Pointwise Hamiltonian maximization over the cone of an antinorm,
//! timelike/lightlike classification, and singular face detection.
//!
//! For H(h, u) = <h, u> + nu(u) on C = cl R+ Omega, the supremum is 0 exactly
//! when (-h1, h2) lies in the antipolar set, and +infinity otherwise. On the
//! boundary of the antipolar the maximizer is a ray of directions; strictly
//! inside it is the origin alone.

use crate::bodies::{ConvexBody, Face};
use crate::error::{Error, Result};
use crate::trig::HyperTrig;
use crate::vec2::{vec2, Vec2};

/// Membership tolerance band around the antipolar boundary: the
/// normal/abnormal dichotomy is exact in the math but needs a band in floats.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Outcome of sup H(h, u) over the cone: always 0 or +infinity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HamiltonianSup {
    /// Supremum 0; `attained_at_zero_only` when (-h1, h2) is interior to the
    /// antipolar, so u = 0 is the only maximizer.
    Zero { attained_at_zero_only: bool },
    Infinite,
}

/// The set of maximizers of H(h, .) over the cone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MaximizerSet {
    ZeroOnly,
    /// All nonnegative multiples of boundary directions with angles in the
    /// closed interval (infinite ends possible at saturated corners).
    Ray { theta_lo: f64, theta_hi: f64 },
}

/// PMP multiplier value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplier {
    /// lambda0 = -1.
    Normal,
    /// lambda0 = 0.
    Abnormal,
}

/// Classification of an extremal covector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalClass {
    TimelikeNormal,
    /// Lightlike; `ray_index` is the boundary ray of C carrying the control
    /// (0 = low-angle ray l0, 1 = high-angle ray l1).
    LightlikeAbnormal { ray_index: u8 },
}

/// Hamiltonian machinery bound to one antinorm ball and its antipolar.
#[derive(Clone, Debug)]
pub struct ExtremalSystem {
    trig: HyperTrig,
}

/// The covector pairing uses the antipolar sign convention: h acts on the
/// dual side as (-h1, h2).
pub fn covector_to_dual(h: Vec2) -> Vec2 {
    vec2(-h.x, h.y)
}

impl ExtremalSystem {
    pub fn new(trig: HyperTrig) -> ExtremalSystem {
        ExtremalSystem { trig }
    }

    pub fn trig(&self) -> &HyperTrig {
        &self.trig
    }

    /// Antinorm of (-h1, h2) with respect to the antipolar body; >= 1 inside.
    pub fn dual_membership(&self, h: Vec2) -> f64 {
        self.trig.dual_body().antinorm(covector_to_dual(h))
    }

    /// sup over u in C of <h, u> + nu(u).
    pub fn hamiltonian_sup(&self, h: Vec2) -> Result<HamiltonianSup> {
        if h.norm() == 0.0 {
            return Err(Error::ZeroCovector);
        }
        let m = self.dual_membership(h);
        if m >= 1.0 - MEMBERSHIP_TOL {
            Ok(HamiltonianSup::Zero {
                attained_at_zero_only: m > 1.0 + MEMBERSHIP_TOL,
            })
        } else {
            Ok(HamiltonianSup::Infinite)
        }
    }

    /// Argmax of H(h, .) over C, for h with (-h1, h2) in the antipolar.
    pub fn maximizer_set(&self, h: Vec2) -> Result<MaximizerSet> {
        if h.norm() == 0.0 {
            return Err(Error::ZeroCovector);
        }
        let m = self.dual_membership(h);
        if m < 1.0 - MEMBERSHIP_TOL {
            return Err(Error::NotSeparating);
        }
        if m > 1.0 + MEMBERSHIP_TOL {
            return Ok(MaximizerSet::ZeroOnly);
        }
        let eta = self.dual_angle_of(covector_to_dual(h));
        let (lo, hi) = self.trig.co_correspondence(eta)?;
        Ok(MaximizerSet::Ray {
            theta_lo: lo,
            theta_hi: hi,
        })
    }

    /// Dual-curve angle of the antipolar boundary point in the direction of
    /// `p`. On a radial boundary ray of the dual the angle saturates at the
    /// nearer domain end.
    fn dual_angle_of(&self, p: Vec2) -> f64 {
        self.trig
            .dual_angle_of_direction(p.angle())
            .unwrap_or_else(|| {
                let dual = self.trig.dual_body();
                let (phi0, phi1) = dual.cone_angles();
                let a = dual.window_angle(p.angle());
                let d = self.trig.dual_domain();
                if (a - phi0).abs() <= (a - phi1).abs() {
                    d.min
                } else {
                    d.max
                }
            })
    }

    /// Classify an extremal covector for the given multiplier.
    pub fn classify(&self, h: Vec2, lambda0: Multiplier) -> Result<ExtremalClass> {
        if h.norm() == 0.0 {
            return Err(Error::ZeroCovector);
        }
        match lambda0 {
            Multiplier::Normal => {
                let m = self.dual_membership(h);
                if m < 1.0 - MEMBERSHIP_TOL {
                    return Err(Error::Inconsistent(format!(
                        "normal multiplier with unbounded Hamiltonian: dual membership {m}"
                    )));
                }
                Ok(ExtremalClass::TimelikeNormal)
            }
            Multiplier::Abnormal => {
                let (phi0, phi1) = self.trig.body().cone_angles();
                let g0 = h.dot(Vec2::unit(phi0)) / h.norm();
                let g1 = h.dot(Vec2::unit(phi1)) / h.norm();
                let tol = MEMBERSHIP_TOL;
                if g0 > tol || g1 > tol {
                    return Err(Error::Inconsistent(
                        "abnormal covector outside the dual cone C*".into(),
                    ));
                }
                if g0.abs() <= tol {
                    Ok(ExtremalClass::LightlikeAbnormal { ray_index: 0 })
                } else if g1.abs() <= tol {
                    Ok(ExtremalClass::LightlikeAbnormal { ray_index: 1 })
                } else {
                    Err(Error::Inconsistent(
                        "abnormal covector interior to C*: maximum only at u = 0".into(),
                    ))
                }
            }
        }
    }
}

/// The face of a compact body where <h, u> attains its maximum: a point at
/// smooth support, a segment along flat edges (singular-extremal loci).
pub fn maximizing_face(body: &ConvexBody, h: Vec2) -> Result<Face> {
    body.support_face(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::ConeBody;

    fn omega2_system() -> ExtremalSystem {
        ExtremalSystem::new(HyperTrig::new(&ConeBody::alpha_hyperbola(2.0).unwrap()).unwrap())
    }

    #[test]
    fn hamiltonian_sup_cases_on_omega2() {
        let sys = omega2_system();
        // interior of the antipolar: sup 0, attained only at u = 0
        assert_eq!(
            sys.hamiltonian_sup(vec2(-2.0, 0.0)).unwrap(),
            HamiltonianSup::Zero {
                attained_at_zero_only: true
            }
        );
        // boundary: sup 0, attained on a ray
        assert_eq!(
            sys.hamiltonian_sup(vec2(-1.0, 0.0)).unwrap(),
            HamiltonianSup::Zero {
                attained_at_zero_only: false
            }
        );
        // outside: the ray u = lambda (1, 0) makes H arbitrarily large
        assert_eq!(
            sys.hamiltonian_sup(vec2(-0.5, 0.0)).unwrap(),
            HamiltonianSup::Infinite
        );
        assert!(matches!(
            sys.hamiltonian_sup(Vec2::ZERO),
            Err(Error::ZeroCovector)
        ));
    }

    #[test]
    fn hamiltonian_sup_against_sampled_brute_force() {
        let sys = omega2_system();
        let body = ConeBody::alpha_hyperbola(2.0).unwrap();
        for h in [vec2(-2.0, 0.0), vec2(-1.3, 0.4), vec2(-0.6, 0.1)] {
            let mut sup = 0.0f64;
            let (lo, hi) = body.cone_angles();
            for i in 1..400 {
                let a = lo + (hi - lo) * i as f64 / 400.0;
                for r in [0.5, 1.0, 2.0, 10.0, 100.0, 1e4] {
                    let u = Vec2::unit(a) * (r * body.radial(a));
                    let val = h.dot(u) + body.antinorm(u);
                    sup = sup.max(val);
                }
            }
            let expect_infinite = sup > 1.0;
            match sys.hamiltonian_sup(h).unwrap() {
                HamiltonianSup::Infinite => assert!(expect_infinite, "h = {h:?}"),
                HamiltonianSup::Zero { .. } => {
                    assert!(sup < 1e-6, "h = {h:?} sampled sup {sup}")
                }
            }
        }
    }

    #[test]
    fn maximizer_ray_at_the_boundary() {
        let sys = omega2_system();
        let h = vec2(-1.0f64.cosh(), 1.0f64.sinh());
        match sys.maximizer_set(h).unwrap() {
            MaximizerSet::Ray { theta_lo, theta_hi } => {
                assert!((theta_lo - 1.0).abs() < 1e-8, "theta_lo {theta_lo}");
                assert!((theta_hi - 1.0).abs() < 1e-8);
            }
            other => panic!("expected a ray, got {other:?}"),
        }
        assert_eq!(
            sys.maximizer_set(vec2(-2.0, 0.0)).unwrap(),
            MaximizerSet::ZeroOnly
        );
        assert!(matches!(
            sys.maximizer_set(vec2(-0.5, 0.0)),
            Err(Error::NotSeparating)
        ));
    }

    #[test]
    fn maximizer_face_at_a_dual_corner() {
        // the antipolar of the ray segment has a corner at (1, 0); covectors
        // supported there maximize along the whole segment of directions
        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        let sys = ExtremalSystem::new(HyperTrig::new(&rs).unwrap());
        match sys.maximizer_set(vec2(-1.0, 0.0)).unwrap() {
            MaximizerSet::Ray { theta_lo, theta_hi } => {
                assert!((theta_lo + 1.0).abs() < 1e-9 && (theta_hi - 1.0).abs() < 1e-9);
            }
            other => panic!("expected the singular face, got {other:?}"),
        }
    }

    #[test]
    fn classify_matches_the_dichotomy() {
        let sys = omega2_system();
        let eta = 0.8f64;
        let h = vec2(-eta.cosh(), eta.sinh());
        assert_eq!(
            sys.classify(h, Multiplier::Normal).unwrap(),
            ExtremalClass::TimelikeNormal
        );
        // abnormal covectors live on the boundary of C* = {h: <h,u> <= 0 on C}
        let h = vec2(-1.0, 1.0); // orthogonal to the ray direction (1, 1)
        match sys.classify(h, Multiplier::Abnormal).unwrap() {
            ExtremalClass::LightlikeAbnormal { ray_index } => assert_eq!(ray_index, 1),
            other => panic!("{other:?}"),
        }
        let h = vec2(-1.0, -1.0);
        match sys.classify(h, Multiplier::Abnormal).unwrap() {
            ExtremalClass::LightlikeAbnormal { ray_index } => assert_eq!(ray_index, 0),
            other => panic!("{other:?}"),
        }
        // interior of C*: inconsistent with u != 0
        assert!(sys.classify(vec2(-2.0, 0.0), Multiplier::Abnormal).is_err());
        // normal multiplier outside the antipolar: inconsistent
        assert!(sys.classify(vec2(-0.5, 0.0), Multiplier::Normal).is_err());
    }

    #[test]
    fn compact_maximizing_faces() {
        let disc = ConvexBody::unit_disc();
        match maximizing_face(&disc, vec2(1.0, 0.0)).unwrap() {
            Face::Point(p) => assert!((p - vec2(1.0, 0.0)).norm() < 1e-12),
            f => panic!("{f:?}"),
        }
        let sq = ConvexBody::square();
        match maximizing_face(&sq, vec2(1.0, 0.0)).unwrap() {
            Face::Segment(a, b) => {
                assert!((a.x - 1.0).abs() < 1e-12 && (b.x - 1.0).abs() < 1e-12)
            }
            f => panic!("{f:?}"),
        }
        match maximizing_face(&sq, vec2(1.0, 1.0)).unwrap() {
            Face::Point(p) => assert!((p - vec2(1.0, 1.0)).norm() < 1e-12),
            f => panic!("{f:?}"),
        }
    }
}
