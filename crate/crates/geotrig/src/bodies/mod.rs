//! Convex bodies: compact control sets, unbounded antinorm balls, their
//! duals and structural properties.

pub mod compact;
pub mod cone;
pub mod duality;
pub mod hausdorff;
pub mod json;

pub use compact::{CompactDescriptor, ConvexBody, Face};
pub use cone::{Antinorm, ConeBody, ConeDescriptor, ConeFace, PropertyReport, DEFAULT_R_MAX};
pub use duality::{antipolar, antipolar_sampled, polar, polar_sampled};
pub use hausdorff::{hausdorff_compact, hausdorff_cone};
pub use json::{body_from_json, body_to_json, Body, BodyFile, DescriptorJson};
