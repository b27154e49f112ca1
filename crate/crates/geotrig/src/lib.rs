//! Convex trigonometry for compact bodies and unbounded antinorm balls, and
//! geodesic generators built on it: Finsler extremals on the Heisenberg
//! group, Lorentz extremals on the Lobachevsky plane, and sub-Lorentzian
//! vertical flows on the three-dimensional unimodular Lie groups.

pub mod bodies;
pub mod error;
pub mod extremal;
pub mod heisenberg;
pub mod num;
pub mod traj;
pub mod trig;
pub mod vec2;

pub use bodies::{Antinorm, Body, ConeBody, ConvexBody};
pub use error::{Error, Result};
pub use trig::{CompactTrig, HyperTrig};
pub use vec2::{vec2, Vec2};
