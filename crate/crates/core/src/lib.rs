//! Extrinsic geometry of spacelike surfaces in 4-dimensional Lorentzian
//! manifolds and their umbilical-type classification.

pub mod classify;
pub mod error;
pub mod extrinsic;
pub mod frame;
pub mod geometry;
pub mod normal;
pub mod scan;
pub mod scenarios;
pub mod sym2;
pub mod tolerance;
pub mod verify;

pub use error::{GeometryError, Result};
