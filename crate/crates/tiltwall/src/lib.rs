//! Exact-arithmetic calculator for tilt stability on P3 and degree-d
//! hypersurfaces: Chern character algebra, numerical walls, discriminant
//! bounds, Riemann-Roch pushforwards, constrained wall enumeration, a
//! verification ledger, and a CLI.
//!
//! All core math runs over exact rationals; there is no floating point in
//! any computational path.

pub mod bounds;
pub mod chern;
pub mod cli;
pub mod error;
pub mod ledger;
pub mod scalar;
pub mod surface;
pub mod svg;
pub mod tilt;
pub mod walls;

pub use chern::{HChern, HilbertPolynomial, LatticeMode, Slope, Space};
pub use error::{Error, Result};
pub use scalar::{Rat, Rat128, Scalar};
pub use surface::SurfaceContext;
pub use tilt::{TiltPoint, Wall, WallKind};
