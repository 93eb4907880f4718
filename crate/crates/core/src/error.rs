use thiserror::Error;

/// Failures raised while evaluating ambient or extrinsic geometry at a point.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeometryError {
    #[error("point {coords:?} lies outside the chart domain")]
    OutOfChart { coords: [f64; 4] },
    #[error("metric is degenerate (det = {det:e})")]
    DegenerateMetric { det: f64 },
    #[error("metric does not have signature (-,+,+,+): {negative} negative eigenvalues")]
    NotLorentzian { negative: usize },
    #[error("finite-difference stencil leaves the domain around {coords:?}")]
    StencilOutOfDomain { coords: [f64; 4] },
    #[error("surface parameters ({u}, {v}) lie outside the parameter domain")]
    OutOfParameterDomain { u: f64, v: f64 },
    #[error("induced metric is not positive definite (min eigenvalue {min_eigenvalue:e})")]
    NotSpacelike { min_eigenvalue: f64 },
    #[error("induced metric is degenerate (det = {det:e})")]
    DegenerateInducedMetric { det: f64 },
    #[error("normal frame construction lost rank: {0}")]
    FrameDegeneracy(&'static str),
    #[error("vector has tangential component {residual:e} and is not normal to the surface")]
    NotNormal { residual: f64 },
    #[error("canonical frame is discontinuous across the stencil (overlap {overlap:e})")]
    FrameBranchCut { overlap: f64 },
    #[error("point is not ortho-umbilical")]
    NotOrthoUmbilical,
    #[error("spacetime claimed conformally flat but max |C_abcd| = {max_weyl:e}")]
    NotConformallyFlat { max_weyl: f64 },
    #[error("surface is not orthogonal to the conformal Killing vector (|g(xi, e_i)| = {residual:e})")]
    SurfaceNotOrthogonal { residual: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
