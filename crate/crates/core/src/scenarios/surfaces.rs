//! Closed-form immersions with analytic Jacobians and Hessians.

use std::f64::consts::{PI, TAU};

use crate::frame::Immersion;
use crate::geometry::{SpacetimePoint, Vec4};

fn point(t: f64, x: f64, y: f64, z: f64) -> SpacetimePoint {
    SpacetimePoint::new([t, x, y, z])
}

/// Coordinate plane `(t0, u, v, z0)`.
#[derive(Debug, Clone, Copy)]
pub struct Plane {
    pub t0: f64,
    pub z0: f64,
}

impl Plane {
    pub fn new(t0: f64, z0: f64) -> Self {
        Self { t0, z0 }
    }
}

impl Immersion for Plane {
    fn name(&self) -> String {
        format!("plane:t0={},z0={}", self.t0, self.z0)
    }
    fn position(&self, u: f64, v: f64) -> SpacetimePoint {
        point(self.t0, u, v, self.z0)
    }
    fn jacobian(&self, _u: f64, _v: f64) -> Option<[Vec4; 2]> {
        Some([Vec4::new(0.0, 1.0, 0.0, 0.0), Vec4::new(0.0, 0.0, 1.0, 0.0)])
    }
    fn hessian(&self, _u: f64, _v: f64) -> Option<[Vec4; 3]> {
        Some([Vec4::zeros(); 3])
    }
}

/// Round sphere of coordinate radius `r` in the slice `t = t0`,
/// parametrised by `(θ, φ)`.
#[derive(Debug, Clone, Copy)]
pub struct Sphere {
    pub r: f64,
    pub t0: f64,
}

impl Sphere {
    pub fn new(r: f64, t0: f64) -> Self {
        Self { r, t0 }
    }

    fn spatial(&self, th: f64, ph: f64) -> ([Vec4; 1], [Vec4; 2], [Vec4; 3]) {
        let r = self.r;
        let (st, ct) = th.sin_cos();
        let (sp, cp) = ph.sin_cos();
        let x = Vec4::new(self.t0, r * st * cp, r * st * sp, r * ct);
        let j = [
            Vec4::new(0.0, r * ct * cp, r * ct * sp, -r * st),
            Vec4::new(0.0, -r * st * sp, r * st * cp, 0.0),
        ];
        let h = [
            Vec4::new(0.0, -r * st * cp, -r * st * sp, -r * ct),
            Vec4::new(0.0, -r * ct * sp, r * ct * cp, 0.0),
            Vec4::new(0.0, -r * st * cp, -r * st * sp, 0.0),
        ];
        ([x], j, h)
    }
}

impl Immersion for Sphere {
    fn name(&self) -> String {
        format!("sphere:r={},t0={}", self.r, self.t0)
    }
    fn position(&self, u: f64, v: f64) -> SpacetimePoint {
        SpacetimePoint(self.spatial(u, v).0[0])
    }
    fn in_domain(&self, u: f64, _v: f64) -> bool {
        u > 0.0 && u < PI
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.0, PI], [0.0, TAU])
    }
    fn jacobian(&self, u: f64, v: f64) -> Option<[Vec4; 2]> {
        Some(self.spatial(u, v).1)
    }
    fn hessian(&self, u: f64, v: f64) -> Option<[Vec4; 3]> {
        Some(self.spatial(u, v).2)
    }
}

/// Torus of radii `R > a` in the slice `t = t0`, parametrised by `(φ, θ)`
/// so that the oriented normal points outward.
#[derive(Debug, Clone, Copy)]
pub struct Torus {
    pub big: f64,
    pub small: f64,
    pub t0: f64,
}

impl Torus {
    pub fn new(big: f64, small: f64, t0: f64) -> Self {
        Self { big, small, t0 }
    }

    /// Euclidean principal curvatures `(1/a, cos θ / (R + a cos θ))`.
    pub fn principal_curvatures(&self, theta: f64) -> (f64, f64) {
        let c = theta.cos();
        (1.0 / self.small, c / (self.big + self.small * c))
    }
}

impl Immersion for Torus {
    fn name(&self) -> String {
        format!("torus:R={},a={},t0={}", self.big, self.small, self.t0)
    }
    fn position(&self, ph: f64, th: f64) -> SpacetimePoint {
        let rho = self.big + self.small * th.cos();
        point(self.t0, rho * ph.cos(), rho * ph.sin(), self.small * th.sin())
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.0, TAU], [0.0, TAU])
    }
    fn jacobian(&self, ph: f64, th: f64) -> Option<[Vec4; 2]> {
        let a = self.small;
        let rho = self.big + a * th.cos();
        let (sp, cp) = ph.sin_cos();
        let (st, ct) = th.sin_cos();
        Some([
            Vec4::new(0.0, -rho * sp, rho * cp, 0.0),
            Vec4::new(0.0, -a * st * cp, -a * st * sp, a * ct),
        ])
    }
    fn hessian(&self, ph: f64, th: f64) -> Option<[Vec4; 3]> {
        let a = self.small;
        let rho = self.big + a * th.cos();
        let (sp, cp) = ph.sin_cos();
        let (st, ct) = th.sin_cos();
        Some([
            Vec4::new(0.0, -rho * cp, -rho * sp, 0.0),
            Vec4::new(0.0, a * st * sp, -a * st * cp, 0.0),
            Vec4::new(0.0, -a * ct * cp, -a * ct * sp, -a * st),
        ])
    }
}

/// Sphere of radius `r` at rest in a frame moving with rapidity `χ` along `x`.
#[derive(Debug, Clone, Copy)]
pub struct BoostedSphere {
    pub sphere: Sphere,
    pub rapidity: f64,
}

impl BoostedSphere {
    pub fn new(r: f64, rapidity: f64) -> Self {
        Self {
            sphere: Sphere::new(r, 0.0),
            rapidity,
        }
    }

    fn boost(&self, w: Vec4) -> Vec4 {
        let (s, c) = (self.rapidity.sinh(), self.rapidity.cosh());
        Vec4::new(c * w[0] + s * w[1], s * w[0] + c * w[1], w[2], w[3])
    }
}

impl Immersion for BoostedSphere {
    fn name(&self) -> String {
        format!("boosted-sphere:r={},rapidity={}", self.sphere.r, self.rapidity)
    }
    fn position(&self, u: f64, v: f64) -> SpacetimePoint {
        SpacetimePoint(self.boost(self.sphere.position(u, v).0))
    }
    fn in_domain(&self, u: f64, v: f64) -> bool {
        self.sphere.in_domain(u, v)
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        self.sphere.parameter_range()
    }
    fn jacobian(&self, u: f64, v: f64) -> Option<[Vec4; 2]> {
        self.sphere.jacobian(u, v).map(|j| j.map(|w| self.boost(w)))
    }
    fn hessian(&self, u: f64, v: f64) -> Option<[Vec4; 3]> {
        self.sphere.hessian(u, v).map(|h| h.map(|w| self.boost(w)))
    }
}

/// Graph `(a x², x, y, b x y)` whose null Weingarten operators do not commute.
#[derive(Debug, Clone, Copy)]
pub struct NoncommutingGraph {
    pub a: f64,
    pub b: f64,
}

impl Default for NoncommutingGraph {
    fn default() -> Self {
        Self { a: 0.1, b: 0.1 }
    }
}

impl Immersion for NoncommutingGraph {
    fn name(&self) -> String {
        format!("graph-noncommuting:a={},b={}", self.a, self.b)
    }
    fn position(&self, x: f64, y: f64) -> SpacetimePoint {
        point(self.a * x * x, x, y, self.b * x * y)
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.2, 0.4], [0.3, 0.5])
    }
    fn jacobian(&self, x: f64, y: f64) -> Option<[Vec4; 2]> {
        Some([
            Vec4::new(2.0 * self.a * x, 1.0, 0.0, self.b * y),
            Vec4::new(0.0, 0.0, 1.0, self.b * x),
        ])
    }
    fn hessian(&self, _x: f64, _y: f64) -> Option<[Vec4; 3]> {
        Some([
            Vec4::new(2.0 * self.a, 0.0, 0.0, 0.0),
            Vec4::new(0.0, 0.0, 0.0, self.b),
            Vec4::zeros(),
        ])
    }
}

/// `(f, x, y, f)` with `f = p x² + q y²`; every second derivative is along
/// the null vector `∂_t + ∂_z`.
#[derive(Debug, Clone, Copy)]
pub struct NullGraph {
    pub p: f64,
    pub q: f64,
}

impl NullGraph {
    pub fn new(p: f64, q: f64) -> Self {
        Self { p, q }
    }
}

impl Immersion for NullGraph {
    fn name(&self) -> String {
        format!("null-graph:p={},q={}", self.p, self.q)
    }
    fn position(&self, x: f64, y: f64) -> SpacetimePoint {
        let f = self.p * x * x + self.q * y * y;
        point(f, x, y, f)
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([-0.5, 0.5], [-0.5, 0.5])
    }
    fn jacobian(&self, x: f64, y: f64) -> Option<[Vec4; 2]> {
        let fx = 2.0 * self.p * x;
        let fy = 2.0 * self.q * y;
        Some([Vec4::new(fx, 1.0, 0.0, fx), Vec4::new(fy, 0.0, 1.0, fy)])
    }
    fn hessian(&self, _x: f64, _y: f64) -> Option<[Vec4; 3]> {
        let (p, q) = (2.0 * self.p, 2.0 * self.q);
        Some([Vec4::new(p, 0.0, 0.0, p), Vec4::zeros(), Vec4::new(q, 0.0, 0.0, q)])
    }
}

/// Helicoid `(t0, u cos v, u sin v, c v)`.
#[derive(Debug, Clone, Copy)]
pub struct Helicoid {
    pub c: f64,
    pub t0: f64,
}

impl Helicoid {
    pub fn new(c: f64, t0: f64) -> Self {
        Self { c, t0 }
    }

    pub fn gaussian_curvature(&self, u: f64) -> f64 {
        let d = u * u + self.c * self.c;
        -self.c * self.c / (d * d)
    }
}

impl Immersion for Helicoid {
    fn name(&self) -> String {
        format!("helicoid:c={},t0={}", self.c, self.t0)
    }
    fn position(&self, u: f64, v: f64) -> SpacetimePoint {
        point(self.t0, u * v.cos(), u * v.sin(), self.c * v)
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([-1.0, 1.0], [0.0, TAU])
    }
    fn jacobian(&self, u: f64, v: f64) -> Option<[Vec4; 2]> {
        let (s, c) = v.sin_cos();
        Some([Vec4::new(0.0, c, s, 0.0), Vec4::new(0.0, -u * s, u * c, self.c)])
    }
    fn hessian(&self, u: f64, v: f64) -> Option<[Vec4; 3]> {
        let (s, c) = v.sin_cos();
        Some([
            Vec4::zeros(),
            Vec4::new(0.0, -s, c, 0.0),
            Vec4::new(0.0, -u * c, -u * s, 0.0),
        ])
    }
}

/// Coordinate sphere `(t0, r, θ, φ)` in a spherical chart.
#[derive(Debug, Clone, Copy)]
pub struct RSphere {
    pub r: f64,
    pub t0: f64,
}

impl RSphere {
    pub fn new(r: f64) -> Self {
        Self { r, t0: 0.0 }
    }

    pub fn at_time(r: f64, t0: f64) -> Self {
        Self { r, t0 }
    }
}

impl Immersion for RSphere {
    fn name(&self) -> String {
        format!("rsphere:r={},t0={}", self.r, self.t0)
    }
    fn position(&self, th: f64, ph: f64) -> SpacetimePoint {
        point(self.t0, self.r, th, ph)
    }
    fn in_domain(&self, th: f64, _ph: f64) -> bool {
        th > 0.0 && th < PI
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.0, PI], [0.0, TAU])
    }
    fn jacobian(&self, _th: f64, _ph: f64) -> Option<[Vec4; 2]> {
        Some([Vec4::new(0.0, 0.0, 1.0, 0.0), Vec4::new(0.0, 0.0, 0.0, 1.0)])
    }
    fn hessian(&self, _th: f64, _ph: f64) -> Option<[Vec4; 3]> {
        Some([Vec4::zeros(); 3])
    }
}

/// `(ε r cos θ, r, θ, φ)`: a coordinate sphere tilted out of the static slice.
#[derive(Debug, Clone, Copy)]
pub struct TiltedRSphere {
    pub r: f64,
    pub eps: f64,
}

impl TiltedRSphere {
    pub fn new(r: f64, eps: f64) -> Self {
        Self { r, eps }
    }
}

impl Immersion for TiltedRSphere {
    fn name(&self) -> String {
        format!("tilted-rsphere:r={},eps={}", self.r, self.eps)
    }
    fn position(&self, th: f64, ph: f64) -> SpacetimePoint {
        point(self.eps * self.r * th.cos(), self.r, th, ph)
    }
    fn in_domain(&self, th: f64, _ph: f64) -> bool {
        th > 0.0 && th < PI
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.0, PI], [0.0, TAU])
    }
    fn jacobian(&self, th: f64, _ph: f64) -> Option<[Vec4; 2]> {
        Some([
            Vec4::new(-self.eps * self.r * th.sin(), 0.0, 1.0, 0.0),
            Vec4::new(0.0, 0.0, 0.0, 1.0),
        ])
    }
    fn hessian(&self, th: f64, _ph: f64) -> Option<[Vec4; 3]> {
        Some([
            Vec4::new(-self.eps * self.r * th.cos(), 0.0, 0.0, 0.0),
            Vec4::zeros(),
            Vec4::zeros(),
        ])
    }
}

/// Spatial graph `(t0, u, v, z0 + a u² + b u v + c v²)`.
#[derive(Debug, Clone, Copy)]
pub struct SliceGraph {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z0: f64,
    pub t0: f64,
}

impl Default for SliceGraph {
    fn default() -> Self {
        Self {
            a: 0.3,
            b: 0.1,
            c: 0.2,
            z0: 0.5,
            t0: 0.0,
        }
    }
}

impl Immersion for SliceGraph {
    fn name(&self) -> String {
        format!(
            "slice-graph:a={},b={},c={},z0={},t0={}",
            self.a, self.b, self.c, self.z0, self.t0
        )
    }
    fn position(&self, u: f64, v: f64) -> SpacetimePoint {
        point(
            self.t0,
            u,
            v,
            self.z0 + self.a * u * u + self.b * u * v + self.c * v * v,
        )
    }
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([0.2, 0.6], [0.2, 0.6])
    }
    fn jacobian(&self, u: f64, v: f64) -> Option<[Vec4; 2]> {
        Some([
            Vec4::new(0.0, 1.0, 0.0, 2.0 * self.a * u + self.b * v),
            Vec4::new(0.0, 0.0, 1.0, self.b * u + 2.0 * self.c * v),
        ])
    }
    fn hessian(&self, _u: f64, _v: f64) -> Option<[Vec4; 3]> {
        Some([
            Vec4::new(0.0, 0.0, 0.0, 2.0 * self.a),
            Vec4::new(0.0, 0.0, 0.0, self.b),
            Vec4::new(0.0, 0.0, 0.0, 2.0 * self.c),
        ])
    }
}
