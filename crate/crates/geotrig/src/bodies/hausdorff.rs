//! Hausdorff distances between convex bodies.
//!
//! Compact bodies compare through support functions (for convex compact sets
//! the Hausdorff distance is the sup-norm of the support difference). Cone
//! bodies are unbounded, so they compare on a truncated region only: boundary
//! samples of one body against the boundary of the other.

use super::compact::ConvexBody;
use super::cone::ConeBody;
use crate::vec2::Vec2;

/// Hausdorff distance between compact convex bodies, sampled over
/// `directions` support directions.
pub fn hausdorff_compact(a: &ConvexBody, b: &ConvexBody, directions: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..directions {
        let d = Vec2::unit(std::f64::consts::TAU * k as f64 / directions as f64);
        worst = worst.max((a.support(d) - b.support(d)).abs());
    }
    worst
}

/// Hausdorff distance between cone bodies restricted to radius <= `r_cut`,
/// estimated from `samples` boundary points per side.
pub fn hausdorff_cone(a: &ConeBody, b: &ConeBody, r_cut: f64, samples: usize) -> f64 {
    one_sided(a, b, r_cut, samples).max(one_sided(b, a, r_cut, samples))
}

fn one_sided(a: &ConeBody, b: &ConeBody, r_cut: f64, samples: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for p in boundary_samples(a, r_cut, samples) {
        if b.contains(p, 1e-12) {
            continue;
        }
        worst = worst.max(dist_to_boundary(b, p, r_cut));
    }
    worst
}

/// Boundary points of the body with radius below the cut, including the
/// radial-ray portions at saturated ends.
fn boundary_samples(body: &ConeBody, r_cut: f64, samples: usize) -> Vec<Vec2> {
    let (phi0, phi1) = body.cone_angles();
    let closest = body.closest_point();
    let mid = body.window_angle(closest.angle());
    // angular sub-range with R <= r_cut, found by bisection toward each end
    let lo = clip_angle(body, phi0, mid, r_cut);
    let hi = clip_angle(body, phi1, mid, r_cut);
    let mut pts = Vec::with_capacity(samples + 64);
    for k in 0..=samples {
        let a = lo + (hi - lo) * k as f64 / samples as f64;
        let p = body.boundary_point(a);
        if p.is_finite() && p.norm() <= r_cut * (1.0 + 1e-12) {
            pts.push(p);
        }
    }
    // radial boundary rays at ends where R is finite
    for end in [phi0, phi1] {
        let r_end = body.radial(end);
        if r_end.is_finite() && r_end < r_cut {
            let e = Vec2::unit(end);
            let n = 32;
            for k in 0..=n {
                let r = r_end + (r_cut - r_end) * k as f64 / n as f64;
                pts.push(e * r);
            }
        }
    }
    pts
}

/// Largest angular extent toward `end` with R(phi) <= r_cut.
fn clip_angle(body: &ConeBody, end: f64, mid: f64, r_cut: f64) -> f64 {
    if body.radial(end).is_finite() && body.radial(end) <= r_cut {
        return end;
    }
    let f = |a: f64| body.radial(a) - r_cut;
    // R is finite at mid and infinite (or > cut) at the end
    let mut inner = mid;
    let mut outer = end;
    if f(inner) > 0.0 {
        return mid;
    }
    for _ in 0..200 {
        let m = 0.5 * (inner + outer);
        if f(m) > 0.0 {
            outer = m;
        } else {
            inner = m;
        }
        if (outer - inner).abs() < 1e-14 {
            break;
        }
    }
    inner
}

/// Distance from a point to the boundary of the body within the truncation.
fn dist_to_boundary(body: &ConeBody, p: Vec2, r_cut: f64) -> f64 {
    let (phi0, phi1) = body.cone_angles();
    let closest = body.closest_point();
    let mid = body.window_angle(closest.angle());
    let lo = clip_angle(body, phi0, mid, 4.0 * r_cut);
    let hi = clip_angle(body, phi1, mid, 4.0 * r_cut);
    let d = |a: f64| {
        let q = body.boundary_point(a);
        if q.is_finite() {
            p.dist(q)
        } else {
            f64::INFINITY
        }
    };
    // coarse scan, then golden refine around the best wedge
    let n: usize = 256;
    let mut best_k: usize = 0;
    let mut best = f64::INFINITY;
    for k in 0..=n {
        let a = lo + (hi - lo) * k as f64 / n as f64;
        let v = d(a);
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let a_lo = lo + (hi - lo) * (best_k.saturating_sub(1)) as f64 / n as f64;
    let a_hi = lo + (hi - lo) * ((best_k + 1).min(n)) as f64 / n as f64;
    let (_, neg_best) = crate::num::golden_max(&|a| -d(a), a_lo, a_hi);
    let mut dist = (-neg_best).min(best);
    // radial rays at saturated ends are part of the boundary too
    for end in [phi0, phi1] {
        let r_end = body.radial(end);
        if r_end.is_finite() {
            let e = Vec2::unit(end);
            dist = dist.min(crate::vec2::dist_point_segment(
                p,
                e * r_end,
                e * (4.0 * r_cut),
            ));
        }
    }
    dist
}
