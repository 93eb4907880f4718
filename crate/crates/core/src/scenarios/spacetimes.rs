//! Closed-form spacetimes with analytic Christoffel symbols.

use crate::geometry::{Christoffel, ConformalKilling, Covector, Mat4, Spacetime, SpacetimePoint, Vec4};

const ETA: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

fn eta() -> Mat4 {
    Mat4::from_diagonal(&Vec4::from(ETA))
}

fn dt() -> Covector {
    Covector(Vec4::new(1.0, 0.0, 0.0, 0.0))
}

/// `Γ` of `e^{2ω} η` given the covariant gradient `ω_c`.
fn conformally_flat_christoffel(grad: &Vec4) -> Christoffel {
    let mut out = Christoffel::zero();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let mut v = 0.0;
                if a == b {
                    v += grad[c];
                }
                if a == c {
                    v += grad[b];
                }
                if b == c {
                    v -= ETA[b] * ETA[a] * grad[a];
                }
                out.0[a][b][c] = v;
            }
        }
    }
    out
}

/// Flat space in Cartesian coordinates `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Minkowski;

impl Spacetime for Minkowski {
    fn name(&self) -> String {
        "minkowski".into()
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        x.0.iter().all(|c| c.is_finite())
    }

    fn metric_components(&self, _x: &SpacetimePoint) -> Mat4 {
        eta()
    }

    fn christoffel(&self, _x: &SpacetimePoint) -> Option<Christoffel> {
        Some(Christoffel::zero())
    }

    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        dt()
    }

    fn constant_curvature(&self) -> Option<f64> {
        Some(0.0)
    }

    fn conformally_flat(&self) -> bool {
        true
    }

    fn conformal_killing(&self, _x: &SpacetimePoint) -> Option<ConformalKilling> {
        Some(ConformalKilling {
            xi: Vec4::new(1.0, 0.0, 0.0, 0.0),
            phi: 0.0,
        })
    }
}

/// Exterior Schwarzschild in static coordinates `(t, r, θ, φ)`.
///
/// The chart admits `r >= 2M`; the metric itself degenerates at `r = 2M`.
#[derive(Debug, Clone, Copy)]
pub struct Schwarzschild {
    pub mass: f64,
}

impl Schwarzschild {
    pub fn new(mass: f64) -> Self {
        Self { mass }
    }

    fn lapse2(&self, r: f64) -> f64 {
        1.0 - 2.0 * self.mass / r
    }
}

impl Spacetime for Schwarzschild {
    fn name(&self) -> String {
        format!("schwarzschild:M={}", self.mass)
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        let r = x.0[1];
        let th = x.0[2];
        x.0.iter().all(|c| c.is_finite()) && r >= 2.0 * self.mass && th > 0.0 && th < std::f64::consts::PI
    }

    fn metric_components(&self, x: &SpacetimePoint) -> Mat4 {
        let r = x.0[1];
        let s = x.0[2].sin();
        let f = self.lapse2(r);
        Mat4::from_diagonal(&Vec4::new(-f, 1.0 / f, r * r, r * r * s * s))
    }

    fn christoffel(&self, x: &SpacetimePoint) -> Option<Christoffel> {
        let m = self.mass;
        let r = x.0[1];
        let (s, c) = x.0[2].sin_cos();
        let f = self.lapse2(r);
        let mut g = Christoffel::zero();
        g.set_sym(0, 0, 1, m / (r * r * f));
        g.set_sym(1, 0, 0, m * f / (r * r));
        g.set_sym(1, 1, 1, -m / (r * r * f));
        g.set_sym(1, 2, 2, -r * f);
        g.set_sym(1, 3, 3, -r * f * s * s);
        g.set_sym(2, 1, 2, 1.0 / r);
        g.set_sym(2, 3, 3, -s * c);
        g.set_sym(3, 1, 3, 1.0 / r);
        g.set_sym(3, 2, 3, c / s);
        Some(g)
    }

    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        dt()
    }

    /// `∂_t` is a hypersurface-orthogonal Killing vector.
    fn conformal_killing(&self, _x: &SpacetimePoint) -> Option<ConformalKilling> {
        Some(ConformalKilling {
            xi: Vec4::new(1.0, 0.0, 0.0, 0.0),
            phi: 0.0,
        })
    }
}

/// Schwarzschild in ingoing Eddington–Finkelstein coordinates `(v, r, θ, φ)`,
/// regular across the horizon.
#[derive(Debug, Clone, Copy)]
pub struct SchwarzschildIngoing {
    pub mass: f64,
}

impl SchwarzschildIngoing {
    pub fn new(mass: f64) -> Self {
        Self { mass }
    }
}

impl Spacetime for SchwarzschildIngoing {
    fn name(&self) -> String {
        format!("schwarzschild-ef:M={}", self.mass)
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        let r = x.0[1];
        let th = x.0[2];
        x.0.iter().all(|c| c.is_finite()) && r > 0.0 && th > 0.0 && th < std::f64::consts::PI
    }

    fn metric_components(&self, x: &SpacetimePoint) -> Mat4 {
        let r = x.0[1];
        let s = x.0[2].sin();
        let f = 1.0 - 2.0 * self.mass / r;
        let mut g = Mat4::zeros();
        g[(0, 0)] = -f;
        g[(0, 1)] = 1.0;
        g[(1, 0)] = 1.0;
        g[(2, 2)] = r * r;
        g[(3, 3)] = r * r * s * s;
        g
    }

    fn christoffel(&self, x: &SpacetimePoint) -> Option<Christoffel> {
        let m = self.mass;
        let r = x.0[1];
        let (s, c) = x.0[2].sin_cos();
        let f = 1.0 - 2.0 * m / r;
        let mut g = Christoffel::zero();
        g.set_sym(0, 0, 0, m / (r * r));
        g.set_sym(0, 2, 2, -r);
        g.set_sym(0, 3, 3, -r * s * s);
        g.set_sym(1, 0, 0, f * m / (r * r));
        g.set_sym(1, 0, 1, -m / (r * r));
        g.set_sym(1, 2, 2, -r * f);
        g.set_sym(1, 3, 3, -r * f * s * s);
        g.set_sym(2, 1, 2, 1.0 / r);
        g.set_sym(2, 3, 3, -s * c);
        g.set_sym(3, 1, 3, 1.0 / r);
        g.set_sym(3, 2, 3, c / s);
        Some(g)
    }

    /// `d(v - r)`, timelike everywhere on the chart.
    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        Covector(Vec4::new(1.0, -1.0, 0.0, 0.0))
    }
}

/// Constant curvature `K` in the conformally flat chart
/// `g = η / (1 + K η(x,x)/4)^2`. Positive `K` is de Sitter.
#[derive(Debug, Clone, Copy)]
pub struct DeSitter {
    pub curvature: f64,
}

impl DeSitter {
    pub fn new(curvature: f64) -> Self {
        Self { curvature }
    }

    fn denominator(&self, x: &Vec4) -> f64 {
        let sigma = -x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
        1.0 + 0.25 * self.curvature * sigma
    }
}

impl Spacetime for DeSitter {
    fn name(&self) -> String {
        format!("de-sitter:K={}", self.curvature)
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        x.0.iter().all(|c| c.is_finite()) && self.denominator(&x.0) > 1e-3
    }

    fn metric_components(&self, x: &SpacetimePoint) -> Mat4 {
        let d = self.denominator(&x.0);
        eta() / (d * d)
    }

    fn christoffel(&self, x: &SpacetimePoint) -> Option<Christoffel> {
        let d = self.denominator(&x.0);
        let lowered = Vec4::new(-x.0[0], x.0[1], x.0[2], x.0[3]);
        let grad = lowered * (-0.5 * self.curvature / d);
        Some(conformally_flat_christoffel(&grad))
    }

    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        dt()
    }

    fn constant_curvature(&self) -> Option<f64> {
        Some(self.curvature)
    }

    fn conformally_flat(&self) -> bool {
        true
    }
}

/// Spatially flat FLRW in conformal time, `g = a(η)^2 η` with `a = η^p`, `η > 0`.
#[derive(Debug, Clone, Copy)]
pub struct Flrw {
    pub power: f64,
}

impl Flrw {
    pub fn new(power: f64) -> Self {
        Self { power }
    }

    pub fn scale_factor(&self, eta: f64) -> f64 {
        eta.powf(self.power)
    }
}

impl Spacetime for Flrw {
    fn name(&self) -> String {
        format!("flrw:p={}", self.power)
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        x.0.iter().all(|c| c.is_finite()) && x.0[0] > 0.0
    }

    fn metric_components(&self, x: &SpacetimePoint) -> Mat4 {
        let a = self.scale_factor(x.0[0]);
        eta() * (a * a)
    }

    fn christoffel(&self, x: &SpacetimePoint) -> Option<Christoffel> {
        let grad = Vec4::new(self.power / x.0[0], 0.0, 0.0, 0.0);
        Some(conformally_flat_christoffel(&grad))
    }

    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        dt()
    }

    fn conformally_flat(&self) -> bool {
        true
    }

    /// `ξ = ∂_η` with `L_ξ g = 2 (a'/a) g`.
    fn conformal_killing(&self, x: &SpacetimePoint) -> Option<ConformalKilling> {
        Some(ConformalKilling {
            xi: Vec4::new(1.0, 0.0, 0.0, 0.0),
            phi: self.power / x.0[0],
        })
    }
}

/// Static product `ℝ × Σ`, `g = -dt^2 + e^{2w} δ` with
/// `w = α (x^2 + 2y^2 + 3z^2) / 2`.
#[derive(Debug, Clone, Copy)]
pub struct StaticProduct {
    pub alpha: f64,
}

impl StaticProduct {
    pub fn new(alpha: f64) -> Self {
        Self { alpha }
    }

    fn w(&self, x: &Vec4) -> f64 {
        0.5 * self.alpha * (x[1] * x[1] + 2.0 * x[2] * x[2] + 3.0 * x[3] * x[3])
    }
}

impl Spacetime for StaticProduct {
    fn name(&self) -> String {
        format!("static-product:alpha={}", self.alpha)
    }

    fn in_chart(&self, x: &SpacetimePoint) -> bool {
        x.0.iter().all(|c| c.is_finite())
    }

    fn metric_components(&self, x: &SpacetimePoint) -> Mat4 {
        let e = (2.0 * self.w(&x.0)).exp();
        Mat4::from_diagonal(&Vec4::new(-1.0, e, e, e))
    }

    fn christoffel(&self, x: &SpacetimePoint) -> Option<Christoffel> {
        let grad = [
            0.0,
            self.alpha * x.0[1],
            2.0 * self.alpha * x.0[2],
            3.0 * self.alpha * x.0[3],
        ];
        let mut out = Christoffel::zero();
        for i in 1..4 {
            for j in 1..4 {
                for k in 1..4 {
                    let mut v = 0.0;
                    if i == j {
                        v += grad[k];
                    }
                    if i == k {
                        v += grad[j];
                    }
                    if j == k {
                        v -= grad[i];
                    }
                    out.0[i][j][k] = v;
                }
            }
        }
        Some(out)
    }

    fn future_covector(&self, _x: &SpacetimePoint) -> Covector {
        dt()
    }

    fn conformal_killing(&self, _x: &SpacetimePoint) -> Option<ConformalKilling> {
        Some(ConformalKilling {
            xi: Vec4::new(1.0, 0.0, 0.0, 0.0),
            phi: 0.0,
        })
    }
}
