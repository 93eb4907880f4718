//! Induced geometry of an immersed spacelike surface: tangent frame, first
//! fundamental form, orthonormal and null normal frames, `⋆⊥` and boosts.

use std::fmt;
use std::sync::Arc;

use nalgebra::{Matrix2, SymmetricEigen};

use crate::error::{GeometryError, Result};
use crate::geometry::{Covector, Metric4, SpacetimeModel, SpacetimePoint, Vec4};
use crate::normal::NullCoords;
use crate::tolerance::POSITIVE_DEFINITE_MIN;

/// A closed-form immersion `Φ(u, v)` into a spacetime chart.
pub trait Immersion: Send + Sync + fmt::Debug {
    fn name(&self) -> String;

    fn position(&self, u: f64, v: f64) -> SpacetimePoint;

    fn in_domain(&self, _u: f64, _v: f64) -> bool {
        true
    }

    /// Default sampling rectangle `([u0, u1], [v0, v1])`.
    fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        ([-1.0, 1.0], [-1.0, 1.0])
    }

    /// `[∂_u Φ, ∂_v Φ]`.
    fn jacobian(&self, _u: f64, _v: f64) -> Option<[Vec4; 2]> {
        None
    }

    /// `[∂_uu Φ, ∂_uv Φ, ∂_vv Φ]`.
    fn hessian(&self, _u: f64, _v: f64) -> Option<[Vec4; 3]> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceDifferentiation {
    /// Closed-form derivatives when the immersion provides them.
    Analytic,
    /// Central differences: `step` for the Jacobian and `hessian_step`
    /// (with one Richardson level) for the Hessian.
    FiniteDifference { step: f64, hessian_step: f64 },
}

#[derive(Clone)]
pub struct SurfaceModel {
    immersion: Arc<dyn Immersion>,
    diff: SurfaceDifferentiation,
}

impl fmt::Debug for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfaceModel")
            .field("immersion", &self.immersion)
            .field("diff", &self.diff)
            .finish()
    }
}

impl SurfaceModel {
    pub fn new<I: Immersion + 'static>(immersion: I) -> Self {
        Self::from_arc(Arc::new(immersion))
    }

    pub fn from_arc(immersion: Arc<dyn Immersion>) -> Self {
        Self {
            immersion,
            diff: SurfaceDifferentiation::Analytic,
        }
    }

    pub fn with_differentiation(mut self, diff: SurfaceDifferentiation) -> Self {
        self.diff = diff;
        self
    }

    pub fn differentiation(&self) -> SurfaceDifferentiation {
        self.diff
    }

    pub fn name(&self) -> String {
        self.immersion.name()
    }

    pub fn in_domain(&self, u: f64, v: f64) -> bool {
        self.immersion.in_domain(u, v)
    }

    pub fn parameter_range(&self) -> ([f64; 2], [f64; 2]) {
        self.immersion.parameter_range()
    }

    pub fn immersion(&self) -> &dyn Immersion {
        self.immersion.as_ref()
    }

    pub fn is_analytic(&self, u: f64, v: f64) -> bool {
        matches!(self.diff, SurfaceDifferentiation::Analytic)
            && self.immersion.jacobian(u, v).is_some()
            && self.immersion.hessian(u, v).is_some()
    }

    pub fn position(&self, u: f64, v: f64) -> Result<SpacetimePoint> {
        if !self.immersion.in_domain(u, v) {
            return Err(GeometryError::OutOfParameterDomain { u, v });
        }
        Ok(self.immersion.position(u, v))
    }

    fn steps(&self) -> (f64, f64) {
        match self.diff {
            SurfaceDifferentiation::Analytic => (1e-5, 1e-3),
            SurfaceDifferentiation::FiniteDifference { step, hessian_step } => (step, hessian_step),
        }
    }

    fn sample(&self, u: f64, v: f64) -> Result<Vec4> {
        if !self.immersion.in_domain(u, v) {
            return Err(GeometryError::StencilOutOfDomain {
                coords: self.immersion.position(u, v).coords(),
            });
        }
        Ok(self.immersion.position(u, v).0)
    }

    pub fn jacobian(&self, u: f64, v: f64) -> Result<[Vec4; 2]> {
        self.position(u, v)?;
        if matches!(self.diff, SurfaceDifferentiation::Analytic) {
            if let Some(j) = self.immersion.jacobian(u, v) {
                return Ok(j);
            }
        }
        let (h, _) = self.steps();
        let du = (self.sample(u + h, v)? - self.sample(u - h, v)?) / (2.0 * h);
        let dv = (self.sample(u, v + h)? - self.sample(u, v - h)?) / (2.0 * h);
        Ok([du, dv])
    }

    pub fn hessian(&self, u: f64, v: f64) -> Result<[Vec4; 3]> {
        self.position(u, v)?;
        if matches!(self.diff, SurfaceDifferentiation::Analytic) {
            if let Some(h) = self.immersion.hessian(u, v) {
                return Ok(h);
            }
        }
        let (_, h) = self.steps();
        let coarse = self.hessian_fd(u, v, h)?;
        let fine = self.hessian_fd(u, v, 0.5 * h)?;
        Ok([0, 1, 2].map(|i| (4.0 * fine[i] - coarse[i]) / 3.0))
    }

    fn hessian_fd(&self, u: f64, v: f64, h: f64) -> Result<[Vec4; 3]> {
        let c = self.sample(u, v)?;
        let uu = (self.sample(u + h, v)? - 2.0 * c + self.sample(u - h, v)?) / (h * h);
        let vv = (self.sample(u, v + h)? - 2.0 * c + self.sample(u, v - h)?) / (h * h);
        let uv = (self.sample(u + h, v + h)? - self.sample(u + h, v - h)? - self.sample(u - h, v + h)?
            + self.sample(u - h, v - h)?)
            / (4.0 * h * h);
        Ok([uu, uv, vv])
    }
}

/// Tangent data at a surface point.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentFrame {
    /// `∂_u Φ, ∂_v Φ`.
    pub raw: [Vec4; 2],
    /// Gram–Schmidt orthonormalisation of `raw`, in that order.
    pub e: [Vec4; 2],
    /// First fundamental form in the `(u, v)` basis.
    pub gbar: Matrix2<f64>,
    /// Upper-triangular `J` with `∂_i = Σ_a J[(a, i)] e_a`.
    pub to_orthonormal: Matrix2<f64>,
}

impl TangentFrame {
    pub fn new(metric: &Metric4, raw: [Vec4; 2]) -> Result<Self> {
        let guu = metric.dot(&raw[0], &raw[0]);
        let guv = metric.dot(&raw[0], &raw[1]);
        let gvv = metric.dot(&raw[1], &raw[1]);
        let gbar = Matrix2::new(guu, guv, guv, gvv);
        let min_eigenvalue = SymmetricEigen::new(gbar).eigenvalues.min();
        if !(min_eigenvalue >= POSITIVE_DEFINITE_MIN) {
            return Err(GeometryError::NotSpacelike { min_eigenvalue });
        }
        let n1 = guu.sqrt();
        let e1 = raw[0] / n1;
        let proj = metric.dot(&raw[1], &e1);
        let rest = raw[1] - e1 * proj;
        let n2 = metric.norm2(&rest).sqrt();
        let e2 = rest / n2;
        Ok(Self {
            raw,
            e: [e1, e2],
            gbar,
            to_orthonormal: Matrix2::new(n1, proj, 0.0, n2),
        })
    }

    /// `sqrt(det ḡ)`.
    pub fn area_element(&self) -> f64 {
        self.to_orthonormal[(0, 0)] * self.to_orthonormal[(1, 1)]
    }

    /// Tangent vector with components `c` in the `e1, e2` basis.
    pub fn vector(&self, c: [f64; 2]) -> Vec4 {
        self.e[0] * c[0] + self.e[1] * c[1]
    }

    /// Removes the tangential part of `w`.
    pub fn normal_part(&self, metric: &Metric4, w: &Vec4) -> Vec4 {
        w - self.e[0] * metric.dot(w, &self.e[0]) - self.e[1] * metric.dot(w, &self.e[1])
    }

    pub fn tangential_residual(&self, metric: &Metric4, w: &Vec4) -> f64 {
        metric.dot(w, &self.e[0]).abs().max(metric.dot(w, &self.e[1]).abs())
    }
}

/// Orthonormal and null normal frames in a fixed boost gauge.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFrame {
    /// Unit timelike, future-pointing.
    pub u: Vec4,
    /// Unit spacelike with `⋆⊥u = n`.
    pub n: Vec4,
    /// `(u + n)/√2`.
    pub ell: Vec4,
    /// `(u - n)/√2`.
    pub k: Vec4,
    /// Boost parameter relative to the canonical frame.
    pub beta: f64,
    /// `ε(u, n, e1, e2)`; `+1` up to roundoff.
    pub orientation: f64,
}

impl NormalFrame {
    /// Canonical frame (`β = 0`) boosted by `beta`.
    ///
    /// `u` is the normalised normal projection of the future reference
    /// vector `-τ♯`; `n` completes an oriented orthonormal basis with
    /// `ε(u, n, e1, e2) > 0`.
    pub fn build(metric: &Metric4, tangent: &TangentFrame, future: &Covector, beta: f64) -> Result<Self> {
        let reference = -metric.sharp(future);
        let projected = tangent.normal_part(metric, &reference);
        let norm2 = metric.norm2(&projected);
        if !(norm2 < -1e-14) {
            return Err(GeometryError::FrameDegeneracy(
                "future reference has no timelike normal part",
            ));
        }
        let u0 = projected / (-norm2).sqrt();

        let mut best: Option<(f64, Vec4)> = None;
        for axis in 0..4 {
            let mut c = Vec4::zeros();
            c[axis] = 1.0;
            let w = tangent.normal_part(metric, &c) + u0 * metric.dot(&c, &u0);
            let w2 = metric.norm2(&w);
            if best.is_none_or(|(b, _)| w2 > b) {
                best = Some((w2, w));
            }
        }
        let (w2, w) = best.expect("four candidate axes");
        if !(w2 > 1e-14) {
            return Err(GeometryError::FrameDegeneracy("no spacelike normal direction"));
        }
        let mut n0 = w / w2.sqrt();
        let mut orientation = metric.volume(&u0, &n0, &tangent.e[0], &tangent.e[1]);
        if orientation.abs() < 1e-8 {
            return Err(GeometryError::FrameDegeneracy("normal frame is not transverse"));
        }
        if orientation < 0.0 {
            n0 = -n0;
            orientation = -orientation;
        }
        let (sh, ch) = (beta.sinh(), beta.cosh());
        let u = u0 * ch + n0 * sh;
        let n = u0 * sh + n0 * ch;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Ok(Self {
            u,
            n,
            ell: (u + n) * s,
            k: (u - n) * s,
            beta,
            orientation,
        })
    }

    /// Applies a further boost `ℓ → e^β ℓ`, `k → e^{-β} k`.
    pub fn boosted(&self, beta: f64) -> Self {
        let ell = self.ell * beta.exp();
        let k = self.k * (-beta).exp();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            u: (ell + k) * s,
            n: (ell - k) * s,
            ell,
            k,
            beta: self.beta + beta,
            orientation: self.orientation,
        }
    }

    pub fn vector(&self, c: NullCoords) -> Vec4 {
        self.ell * c.ell + self.k * c.k
    }

    /// Null-basis coefficients of a normal vector: `N = -g(N,k) ℓ - g(N,ℓ) k`.
    pub fn coords(&self, metric: &Metric4, w: &Vec4) -> NullCoords {
        NullCoords::new(-metric.dot(w, &self.k), -metric.dot(w, &self.ell))
    }

    /// Coefficients of `N` on the boost-independent canonical frame.
    pub fn canonical_coords(&self, metric: &Metric4, w: &Vec4) -> NullCoords {
        self.coords(metric, w).to_reference(self.beta)
    }
}

/// `⋆⊥N` through the orientation table of the frame.
pub fn hodge_perp(metric: &Metric4, tangent: &TangentFrame, frame: &NormalFrame, w: &Vec4, tol: f64) -> Result<Vec4> {
    let residual = tangent.tangential_residual(metric, w);
    let scale = 1.0 + w.amax();
    if residual > tol * scale {
        return Err(GeometryError::NotNormal { residual });
    }
    Ok(frame.vector(frame.coords(metric, w).star()))
}

/// `⋆⊥N = (i_N ε⊥)♯` with `ε⊥(N, V) = ε(N, V, e1, e2)`, evaluated through the
/// Levi-Civita symbol rather than the frame.
pub fn hodge_perp_volume(metric: &Metric4, tangent: &TangentFrame, w: &Vec4) -> Vec4 {
    let mut cov = Vec4::zeros();
    for mu in 0..4 {
        let mut basis = Vec4::zeros();
        basis[mu] = 1.0;
        cov[mu] = metric.volume(w, &basis, &tangent.e[0], &tangent.e[1]);
    }
    metric.sharp(&Covector(cov))
}

/// Boost gauge `β(u, v)` applied to the canonical frame.
#[derive(Clone)]
pub enum Gauge {
    Constant(f64),
    Field(Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gauge::Constant(b) => write!(f, "Gauge::Constant({b})"),
            Gauge::Field(_) => write!(f, "Gauge::Field(..)"),
        }
    }
}

impl Default for Gauge {
    fn default() -> Self {
        Gauge::Constant(0.0)
    }
}

impl Gauge {
    pub fn field<F: Fn(f64, f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        Gauge::Field(Arc::new(f))
    }

    pub fn beta(&self, u: f64, v: f64) -> f64 {
        match self {
            Gauge::Constant(b) => *b,
            Gauge::Field(f) => f(u, v),
        }
    }
}

/// Metric, tangent and normal frames at one surface point.
#[derive(Debug, Clone)]
pub struct SurfacePoint {
    pub uv: (f64, f64),
    pub point: SpacetimePoint,
    pub metric: Metric4,
    pub tangent: TangentFrame,
    pub normal: NormalFrame,
}

pub fn tangent_frame_at(surface: &SurfaceModel, spacetime: &SpacetimeModel, uv: (f64, f64)) -> Result<TangentFrame> {
    let x = surface.position(uv.0, uv.1)?;
    let metric = spacetime.metric_at(&x)?;
    TangentFrame::new(&metric, surface.jacobian(uv.0, uv.1)?)
}

pub fn normal_frame_at(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    beta: f64,
) -> Result<NormalFrame> {
    Ok(surface_point(surface, spacetime, uv, beta)?.normal)
}

pub fn surface_point(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    beta: f64,
) -> Result<SurfacePoint> {
    let point = surface.position(uv.0, uv.1)?;
    let metric = spacetime.metric_at(&point)?;
    let tangent = TangentFrame::new(&metric, surface.jacobian(uv.0, uv.1)?)?;
    let normal = NormalFrame::build(&metric, &tangent, &spacetime.future_covector(&point), beta)?;
    Ok(SurfacePoint {
        uv,
        point,
        metric,
        tangent,
        normal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::wedge_norm;
    use crate::scenarios::spacetimes::{Minkowski, Schwarzschild};
    use crate::scenarios::surfaces::{Plane, RSphere, Sphere};

    fn minkowski() -> SpacetimeModel {
        SpacetimeModel::new(Minkowski)
    }

    #[test]
    fn sphere_induced_metric() {
        let s = SurfaceModel::new(Sphere::new(2.0, 0.0));
        let t = tangent_frame_at(&s, &minkowski(), (0.7, 0.3)).unwrap();
        let expected = Matrix2::new(4.0, 0.0, 0.0, 4.0 * 0.7f64.sin().powi(2));
        assert!((t.gbar - expected).abs().max() < 1e-14);
    }

    #[derive(Debug)]
    struct NullTangent;
    impl Immersion for NullTangent {
        fn name(&self) -> String {
            "null-tangent".into()
        }
        fn position(&self, u: f64, v: f64) -> SpacetimePoint {
            SpacetimePoint::new([u, u, v, 0.0])
        }
    }

    #[test]
    fn null_tangent_is_not_spacelike() {
        let s = SurfaceModel::new(NullTangent);
        let r = tangent_frame_at(&s, &minkowski(), (0.1, 0.2));
        assert!(matches!(r, Err(GeometryError::NotSpacelike { .. })));
    }

    #[test]
    fn schwarzschild_rsphere_frame() {
        let st = SpacetimeModel::new(Schwarzschild::new(1.0));
        let s = SurfaceModel::new(RSphere::new(4.0));
        let p = surface_point(&s, &st, (1.0, 0.5), 0.0).unwrap();
        assert!(
            (p.tangent.gbar - Matrix2::new(16.0, 0.0, 0.0, 16.0 * 1.0f64.sin().powi(2)))
                .abs()
                .max()
                < 1e-12
        );
        let f: f64 = 0.5;
        assert!((p.normal.u - Vec4::new(f.powf(-0.5), 0.0, 0.0, 0.0)).amax() < 1e-14);
        assert!((p.normal.n - Vec4::new(0.0, f.sqrt(), 0.0, 0.0)).amax() < 1e-14);
    }

    #[test]
    fn minkowski_sphere_frame_points_outward() {
        let s = SurfaceModel::new(Sphere::new(1.5, 0.0));
        let (th, ph) = (1.1, 2.3);
        let p = surface_point(&s, &minkowski(), (th, ph), 0.0).unwrap();
        let radial = Vec4::new(0.0, th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos());
        assert!((p.normal.u - Vec4::new(1.0, 0.0, 0.0, 0.0)).amax() < 1e-14);
        assert!((p.normal.n - radial).amax() < 1e-14);
        let r2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.normal.ell - (Vec4::new(1.0, 0.0, 0.0, 0.0) + radial) * r2).amax() < 1e-14);
    }

    #[test]
    fn frame_invariants_and_completeness() {
        let st = SpacetimeModel::new(Schwarzschild::new(1.0));
        let s = SurfaceModel::new(RSphere::new(3.0));
        let p = surface_point(&s, &st, (0.9, 0.4), 0.7).unwrap();
        let g = &p.metric;
        let nf = &p.normal;
        assert!((g.norm2(&nf.n) - 1.0).abs() < 1e-12);
        assert!((g.norm2(&nf.u) + 1.0).abs() < 1e-12);
        assert!(g.dot(&nf.u, &nf.n).abs() < 1e-12);
        assert!(g.norm2(&nf.ell).abs() < 1e-12 && g.norm2(&nf.k).abs() < 1e-12);
        assert!((g.dot(&nf.ell, &nf.k) + 1.0).abs() < 1e-12);
        for e in &p.tangent.e {
            for w in [&nf.u, &nf.n, &nf.ell, &nf.k] {
                assert!(g.dot(e, w).abs() < 1e-12);
            }
        }
        // g = -u♭u♭ + n♭n♭ + e1♭e1♭ + e2♭e2♭
        let flat = |v: &Vec4| g.flat(v).0;
        let rebuilt = -flat(&nf.u) * flat(&nf.u).transpose()
            + flat(&nf.n) * flat(&nf.n).transpose()
            + flat(&p.tangent.e[0]) * flat(&p.tangent.e[0]).transpose()
            + flat(&p.tangent.e[1]) * flat(&p.tangent.e[1]).transpose();
        assert!((rebuilt - g.components()).amax() < 1e-10);
        assert!(st.spacetime().future_covector(&p.point).0.dot(&nf.u) > 0.0);
    }

    #[test]
    fn boost_round_trip_and_null_directions() {
        let s = SurfaceModel::new(Sphere::new(1.0, 0.0));
        let p = surface_point(&s, &minkowski(), (0.8, 0.1), 0.0).unwrap();
        let back = p.normal.boosted(1.3).boosted(-1.3);
        assert!((back.ell - p.normal.ell).amax() < 1e-12);
        assert!((back.u - p.normal.u).amax() < 1e-12);
        for beta in [-2.0, -0.5, 1.0, 2.0] {
            let b = surface_point(&s, &minkowski(), (0.8, 0.1), beta).unwrap();
            assert!(wedge_norm(&b.normal.ell, &p.normal.ell) < 1e-12);
            assert!(wedge_norm(&b.normal.k, &p.normal.k) < 1e-12);
            assert!((b.normal.ell - p.normal.ell * beta.exp()).amax() < 1e-12);
        }
    }

    #[test]
    fn hodge_table_matches_volume_form() {
        let st = SpacetimeModel::new(Schwarzschild::new(1.0));
        let s = SurfaceModel::new(RSphere::new(5.0));
        let p = surface_point(&s, &st, (1.2, 0.3), -0.4).unwrap();
        let nf = &p.normal;
        let star = |w: &Vec4| hodge_perp(&p.metric, &p.tangent, nf, w, 1e-10).unwrap();
        assert!((star(&nf.u) - nf.n).amax() < 1e-12);
        assert!((star(&nf.n) - nf.u).amax() < 1e-12);
        assert!((star(&nf.ell) - nf.ell).amax() < 1e-12);
        assert!((star(&nf.k) + nf.k).amax() < 1e-12);
        for w in [nf.u, nf.n, nf.ell, nf.k, nf.u * 0.3 - nf.n * 2.0] {
            let via_volume = hodge_perp_volume(&p.metric, &p.tangent, &w);
            assert!((via_volume - star(&w)).amax() < 1e-10);
            assert!((star(&star(&w)) - w).amax() < 1e-12);
        }
        let (a, b) = (0.7, -1.9);
        assert!((star(&(nf.u * a + nf.n * b)) - (nf.n * a + nf.u * b)).amax() < 1e-12);
    }

    #[test]
    fn hodge_rejects_tangent_vectors() {
        let s = SurfaceModel::new(Plane::new(0.0, 0.0));
        let p = surface_point(&s, &minkowski(), (0.0, 0.0), 0.0).unwrap();
        let r = hodge_perp(&p.metric, &p.tangent, &p.normal, &p.tangent.e[0], 1e-8);
        assert!(matches!(r, Err(GeometryError::NotNormal { .. })));
    }

    #[test]
    fn finite_difference_surface_matches_analytic() {
        let analytic = SurfaceModel::new(Sphere::new(1.3, 0.2));
        let fd =
            SurfaceModel::new(Sphere::new(1.3, 0.2)).with_differentiation(SurfaceDifferentiation::FiniteDifference {
                step: 1e-5,
                hessian_step: 1e-3,
            });
        let (u, v) = (0.9, 2.0);
        let ja = analytic.jacobian(u, v).unwrap();
        let jf = fd.jacobian(u, v).unwrap();
        let ha = analytic.hessian(u, v).unwrap();
        let hf = fd.hessian(u, v).unwrap();
        for i in 0..2 {
            assert!((ja[i] - jf[i]).amax() < 1e-9);
        }
        for i in 0..3 {
            assert!((ha[i] - hf[i]).amax() < 1e-8, "{i}: {}", (ha[i] - hf[i]).amax());
        }
    }
}
