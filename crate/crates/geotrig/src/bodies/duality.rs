//! Polar and antipolar duality.
//!
//! Exact routes: polygon polar by vertex/edge swap, ellipse and lp closed
//! forms, chain antipolar by piece/vertex swap, alpha-hyperbola antipolar via
//! the conjugate exponent. Generic support-sampled routes are provided as
//! fallbacks and as an independent cross-check for tests.

use super::compact::{CompactDescriptor, ConvexBody};
use super::cone::{ConeBody, ConeShape};
use crate::error::{Error, Result};
use crate::vec2::{vec2, Vec2};

/// Polar set of a compact body: { p : p . x <= 1 on the body }.
///
/// Polygons (and sampled bodies, which are stored as polygons) dualize by the
/// exact vertex/edge swap; ellipse and lp descriptors use closed forms, so
/// `resolution` only matters for the sampled fallback of exotic inputs.
pub fn polar(body: &ConvexBody, resolution: usize) -> ConvexBody {
    match body.descriptor() {
        CompactDescriptor::Ellipse { a, b } => ConvexBody::ellipse(1.0 / a, 1.0 / b).unwrap(),
        CompactDescriptor::LpBall { p } => {
            if *p == 1.0 {
                ConvexBody::polygon(vec![
                    vec2(1.0, 1.0),
                    vec2(-1.0, 1.0),
                    vec2(-1.0, -1.0),
                    vec2(1.0, -1.0),
                ])
                .unwrap()
            } else {
                ConvexBody::lp_ball(*p / (*p - 1.0)).unwrap()
            }
        }
        CompactDescriptor::Polygon { .. } | CompactDescriptor::RadialSamples { .. } => {
            match body.as_polygon() {
                Some(poly) => {
                    let verts: Vec<Vec2> = poly
                        .normals
                        .iter()
                        .zip(&poly.offsets)
                        .map(|(n, c)| *n / *c)
                        .collect();
                    ConvexBody::polygon(verts).expect("polar of a valid polygon is valid")
                }
                None => polar_sampled(body, resolution),
            }
        }
    }
}

/// Support-function sampled polar: R(psi) = 1 / h(e(psi)) at `resolution`
/// directions. Independent of the closed-form dispatch above.
pub fn polar_sampled(body: &ConvexBody, resolution: usize) -> ConvexBody {
    let n = resolution.max(16);
    let mut phi = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for k in 0..n {
        let psi = std::f64::consts::TAU * k as f64 / n as f64;
        phi.push(psi);
        r.push(1.0 / body.support(Vec2::unit(psi)));
    }
    ConvexBody::radial_samples(phi, r).expect("sampled polar of a valid body is valid")
}

/// Antipolar set: { (p, q) : p x - q y >= 1 on the body }.
///
/// The minus-sign pairing makes the hyperbola self-dual in identical
/// coordinates. Chains dualize exactly (boundary pieces to vertices, radial
/// rays to asymptote directions); alpha-hyperbolas map to the conjugate
/// exponent with mirrored rotation.
pub fn antipolar(body: &ConeBody, resolution: usize) -> Result<ConeBody> {
    let dual = match &body.shape {
        ConeShape::Alpha(h) => {
            ConeBody::alpha_hyperbola_rotated(h.beta(), -h.rotation)?
        }
        ConeShape::Chain(chain) => {
            let mut verts = Vec::new();
            for (n, c) in chain.piece_normals.iter().zip(&chain.piece_offsets) {
                if *c > 1e-12 {
                    verts.push(n.mirror() / *c);
                }
            }
            if verts.is_empty() {
                return Err(Error::EmptyAntipolar);
            }
            let first = chain.piece_offsets[0];
            let last = *chain.piece_offsets.last().unwrap();
            // a radial primal ray dualizes to an asymptote direction; a
            // non-radial one leaves a radial ray through the first/last vertex
            let d_low = if first <= 1e-12 {
                chain.piece_normals[0].mirror()
            } else {
                verts[0]
            };
            let d_high = if last <= 1e-12 {
                chain.piece_normals.last().unwrap().mirror()
            } else {
                *verts.last().unwrap()
            };
            ConeBody::polyline(verts, d_low, d_high)
                .map_err(|_| Error::EmptyAntipolar)?
        }
    };
    let _ = resolution;
    Ok(dual.with_r_max(body.r_max()))
}

/// Sampled antipolar: radial function 1 / m(J e(psi)) over the dual cone,
/// where m is the lower support function. Used as the generic fallback and to
/// cross-check the exact routes.
pub fn antipolar_sampled(body: &ConeBody, resolution: usize) -> Result<ConeBody> {
    let (phi0, phi1) = body.cone_angles();
    // dual cone of the mirrored body: w . e(phi) >= 0 on [phi0, phi1]
    let psi0 = -phi0 - std::f64::consts::FRAC_PI_2;
    let psi1 = -phi1 + std::f64::consts::FRAC_PI_2;
    let n = resolution.max(16);
    let mut phi = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for k in 0..n {
        let psi = psi0 + (psi1 - psi0) * (k as f64 + 0.5) / n as f64;
        let m = body.lower_support(Vec2::unit(psi).mirror());
        if m > 0.0 && (1.0 / m) <= body.r_max() {
            phi.push(psi);
            r.push(1.0 / m);
        }
    }
    if phi.len() < 2 {
        return Err(Error::EmptyAntipolar);
    }
    Ok(ConeBody::radial_samples(phi, r)?.with_r_max(body.r_max()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::hausdorff::{hausdorff_compact, hausdorff_cone};

    #[test]
    fn disc_is_self_dual() {
        let disc = ConvexBody::unit_disc();
        let dual = polar(&disc, 64);
        assert!(hausdorff_compact(&disc, &dual, 512) < 1e-14);
    }

    #[test]
    fn square_polar_is_the_diamond() {
        let sq = ConvexBody::square();
        let dual = polar(&sq, 64);
        // frozen from the brute-force support minimization over vertices:
        // every direction's support plane of the square touches a diamond
        // vertex at (+-1, 0), (0, +-1)
        for target in [
            vec2(1.0, 0.0),
            vec2(0.0, 1.0),
            vec2(-1.0, 0.0),
            vec2(0.0, -1.0),
        ] {
            assert!((dual.minkowski(target) - 1.0).abs() < 1e-12);
        }
        assert!((dual.radial(std::f64::consts::FRAC_PI_4) - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn ellipse_bipolar_roundtrip() {
        let e = ConvexBody::ellipse(2.0, 1.0).unwrap();
        let back = polar(&polar(&e, 4096), 4096);
        assert!(hausdorff_compact(&e, &back, 4096) < 1e-9);
    }

    #[test]
    fn sampled_polar_agrees_with_exact_for_smooth_bodies() {
        let e = ConvexBody::ellipse(2.0, 1.0).unwrap();
        let exact = polar(&e, 16384);
        let sampled = polar_sampled(&e, 16384);
        // sampled dual is an inscribed polyline; the gap is the chord sagitta
        assert!(hausdorff_compact(&exact, &sampled, 4096) < 1e-6);
    }

    #[test]
    fn hyperbola_is_self_antipolar() {
        let o2 = ConeBody::alpha_hyperbola(2.0).unwrap();
        let dual = antipolar(&o2, 64).unwrap();
        assert!(hausdorff_cone(&o2, &dual, 20.0, 512) < 1e-12);
    }

    #[test]
    fn alpha3_antipolar_is_beta_hyperbola() {
        let o3 = ConeBody::alpha_hyperbola(3.0).unwrap();
        let dual = antipolar(&o3, 64).unwrap();
        let beta = ConeBody::alpha_hyperbola(1.5).unwrap();
        assert!(hausdorff_cone(&dual, &beta, 20.0, 512) < 1e-12);
        // numeric route: every sampled dual radius sits on the closed-form
        // boundary (chord interpolation error between samples is separate)
        let sampled = antipolar_sampled(&o3, 4096).unwrap();
        let (lo, hi) = sampled.cone_angles();
        if let crate::bodies::ConeDescriptor::RadialSamples { phi, r } = sampled.descriptor() {
            for (p, ri) in phi.iter().zip(r) {
                assert!((ri - beta.radial(*p)).abs() < 1e-9 * ri.max(1.0));
            }
        } else {
            panic!("sampled antipolar should carry radial samples");
        }
        assert!(lo < -0.7 && hi > 0.7);
        assert!(hausdorff_cone(&sampled, &beta, 10.0, 512) < 1e-5);
    }

    #[test]
    fn ray_segment_antipolar_matches_the_wedge() {
        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        let dual = antipolar(&rs, 64).unwrap();
        // |q| <= p - 1: vertex at (1, 0), rays parallel to (1, +-1)
        assert!((dual.closest_point() - vec2(1.0, 0.0)).norm() < 1e-12);
        for (p, q) in [(2.0, 0.999), (2.0, -0.999), (5.0, 3.9)] {
            assert!(dual.contains(vec2(p, q), 1e-9), "({p}, {q}) should be inside");
        }
        for (p, q) in [(2.0, 1.1), (0.9, 0.0)] {
            assert!(!dual.contains(vec2(p, q), 1e-9));
        }
    }

    #[test]
    fn biantipolar_restores_the_ray_segment() {
        let rs = ConeBody::ray_segment(vec2(1.0, 1.0), vec2(1.0, -1.0)).unwrap();
        let back = antipolar(&antipolar(&rs, 64).unwrap(), 64).unwrap();
        assert!(hausdorff_cone(&rs, &back, 20.0, 512) < 1e-12);
    }
}
