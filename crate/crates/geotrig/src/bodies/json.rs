//! JSON body-description format.
//!
//! ```json
//! {"kind": "compact", "descriptor": {"type": "polygon", "vertices": [[1,0], [0,1], [-1,-1]]}, "r_max": 1e6}
//! {"kind": "cone", "descriptor": {"type": "alpha_hyperbola", "alpha": 2.0}}
//! ```
//!
//! Descriptor types: `polygon`, `ellipse` (a, b), `lp_ball` (p),
//! `radial_samples` (phi, r), `alpha_hyperbola` (alpha, optional rotation),
//! `ray_segment` (p0, p1) and `polyline` (vertices, rays).

use super::compact::{CompactDescriptor, ConvexBody};
use super::cone::{ConeBody, ConeDescriptor, DEFAULT_R_MAX};
use crate::error::{Error, Result};
use crate::vec2::{vec2, Vec2};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BodyFile {
    pub kind: String,
    pub descriptor: DescriptorJson,
    #[serde(default = "default_r_max")]
    pub r_max: f64,
}

fn default_r_max() -> f64 {
    DEFAULT_R_MAX
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DescriptorJson {
    Polygon { vertices: Vec<[f64; 2]> },
    Ellipse { a: f64, b: f64 },
    LpBall { p: f64 },
    RadialSamples { phi: Vec<f64>, r: Vec<f64> },
    AlphaHyperbola {
        alpha: f64,
        #[serde(default)]
        rotation: f64,
    },
    RaySegment { p0: [f64; 2], p1: [f64; 2] },
    Polyline {
        vertices: Vec<[f64; 2]>,
        rays: [[f64; 2]; 2],
    },
}

/// A body of either kind, as loaded from a description file.
#[derive(Clone, Debug)]
pub enum Body {
    Compact(ConvexBody),
    Cone(ConeBody),
}

fn to_vec2(p: [f64; 2]) -> Vec2 {
    vec2(p[0], p[1])
}

pub fn body_from_file(file: &BodyFile) -> Result<Body> {
    match file.kind.as_str() {
        "compact" => {
            let body = match &file.descriptor {
                DescriptorJson::Polygon { vertices } => {
                    ConvexBody::polygon(vertices.iter().cloned().map(to_vec2).collect())?
                }
                DescriptorJson::Ellipse { a, b } => ConvexBody::ellipse(*a, *b)?,
                DescriptorJson::LpBall { p } => ConvexBody::lp_ball(*p)?,
                DescriptorJson::RadialSamples { phi, r } => {
                    ConvexBody::radial_samples(phi.clone(), r.clone())?
                }
                other => {
                    return Err(Error::InvalidBody(format!(
                        "descriptor {other:?} is not a compact body"
                    )))
                }
            };
            Ok(Body::Compact(body))
        }
        "cone" => {
            let body = match &file.descriptor {
                DescriptorJson::AlphaHyperbola { alpha, rotation } => {
                    ConeBody::alpha_hyperbola_rotated(*alpha, *rotation)?
                }
                DescriptorJson::RaySegment { p0, p1 } => {
                    ConeBody::ray_segment(to_vec2(*p0), to_vec2(*p1))?
                }
                DescriptorJson::RadialSamples { phi, r } => {
                    ConeBody::radial_samples(phi.clone(), r.clone())?
                }
                DescriptorJson::Polyline { vertices, rays } => ConeBody::polyline(
                    vertices.iter().cloned().map(to_vec2).collect(),
                    to_vec2(rays[0]),
                    to_vec2(rays[1]),
                )?,
                other => {
                    return Err(Error::InvalidBody(format!(
                        "descriptor {other:?} is not a cone body"
                    )))
                }
            };
            Ok(Body::Cone(body.with_r_max(file.r_max)))
        }
        other => Err(Error::InvalidBody(format!(
            "unknown body kind {other:?} (expected \"compact\" or \"cone\")"
        ))),
    }
}

pub fn body_from_json(text: &str) -> Result<Body> {
    let file: BodyFile = serde_json::from_str(text)?;
    body_from_file(&file)
}

pub fn body_to_file(body: &Body) -> BodyFile {
    match body {
        Body::Compact(b) => BodyFile {
            kind: "compact".into(),
            descriptor: match b.descriptor() {
                CompactDescriptor::Polygon { vertices } => DescriptorJson::Polygon {
                    vertices: vertices.iter().map(|v| [v.x, v.y]).collect(),
                },
                CompactDescriptor::Ellipse { a, b } => DescriptorJson::Ellipse { a: *a, b: *b },
                CompactDescriptor::LpBall { p } => DescriptorJson::LpBall { p: *p },
                CompactDescriptor::RadialSamples { phi, r } => DescriptorJson::RadialSamples {
                    phi: phi.clone(),
                    r: r.clone(),
                },
            },
            r_max: DEFAULT_R_MAX,
        },
        Body::Cone(b) => BodyFile {
            kind: "cone".into(),
            descriptor: match b.descriptor() {
                ConeDescriptor::AlphaHyperbola { alpha, rotation } => {
                    DescriptorJson::AlphaHyperbola {
                        alpha: *alpha,
                        rotation: *rotation,
                    }
                }
                ConeDescriptor::RaySegment { p0, p1 } => DescriptorJson::RaySegment {
                    p0: [p0.x, p0.y],
                    p1: [p1.x, p1.y],
                },
                ConeDescriptor::RadialSamples { phi, r } => DescriptorJson::RadialSamples {
                    phi: phi.clone(),
                    r: r.clone(),
                },
                ConeDescriptor::Polyline { vertices, rays } => DescriptorJson::Polyline {
                    vertices: vertices.iter().map(|v| [v.x, v.y]).collect(),
                    rays: [[rays.0.x, rays.0.y], [rays.1.x, rays.1.y]],
                },
            },
            r_max: b.r_max(),
        },
    }
}

pub fn body_to_json(body: &Body) -> String {
    serde_json::to_string_pretty(&body_to_file(body)).expect("body serialization cannot fail")
}
