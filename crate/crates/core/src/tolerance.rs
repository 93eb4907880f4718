//! Numerical thresholds and finite-difference steps.
//!
//! Two presets exist: [`Tolerances::analytic`] for catalog models that ship
//! closed-form Christoffel symbols and surface derivatives, and
//! [`Tolerances::finite_difference`] for models differentiated numerically.

use serde::{Deserialize, Serialize};

/// Absolute threshold for the determinant of the ambient metric.
pub const DEGENERATE_METRIC_DET: f64 = 1e-12;

/// Minimum eigenvalue of the induced metric accepted as positive definite.
pub const POSITIVE_DEFINITE_MIN: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Ambient curvature identities (symmetries, Weyl traces).
    pub geo: f64,
    /// Frame orthonormality and completeness.
    pub frame: f64,
    /// Extrinsic identities (reconstruction, traces, dual routes).
    pub ext: f64,
    /// Drift allowed under boost gauge changes.
    pub gauge: f64,
    /// Classification: every "= 0" becomes `norm < cls * scale`.
    pub cls: f64,
    /// Verification of identities that need no frame derivatives.
    pub ver: f64,
    /// Verification of identities involving the normal connection `ds`,
    /// which always goes through a nested stencil.
    pub ver_stencil: f64,
    /// Central-difference step for metric derivatives.
    pub metric_step: f64,
    /// Step of the sixth-order stencil differentiating Christoffel symbols.
    pub curvature_step: f64,
    /// Central-difference step for surface Jacobians.
    pub surface_step: f64,
    /// Step (before one Richardson level) for surface Hessians.
    pub hessian_step: f64,
    /// Step of the fourth-order stencil differentiating the normal frame.
    pub frame_step: f64,
    /// Outer step differentiating the connection one-form into `ds`.
    pub connection_step: f64,
    /// Step of the sixth-order stencil on the induced metric for K(S).
    pub intrinsic_step: f64,
}

impl Tolerances {
    pub const fn analytic() -> Self {
        Self {
            geo: 1e-9,
            frame: 1e-8,
            ext: 1e-8,
            gauge: 1e-7,
            cls: 1e-7,
            ver: 1e-8,
            ver_stencil: 1e-4,
            metric_step: 1e-5,
            curvature_step: 1e-3,
            surface_step: 1e-5,
            hessian_step: 1e-3,
            frame_step: 1e-3,
            connection_step: 1e-3,
            intrinsic_step: 7e-3,
        }
    }

    pub const fn finite_difference() -> Self {
        Self {
            geo: 1e-4,
            frame: 1e-4,
            ext: 1e-4,
            gauge: 1e-3,
            cls: 1e-3,
            ver: 1e-4,
            ver_stencil: 1e-4,
            ..Self::analytic()
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::analytic()
    }
}
