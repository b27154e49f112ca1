//! Convex trigonometry: area-parametrized boundary functions for compact
//! bodies (cos_O, sin_O) and antinorm balls (cosh_O, sinh_O).

pub mod compact;
pub mod hyper;

pub use compact::CompactTrig;
pub use hyper::{HyperDomain, HyperTrig};
