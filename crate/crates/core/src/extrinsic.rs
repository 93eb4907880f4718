//! Shape tensor, Weingarten operators and everything derived from them.
//!
//! All 2x2 operators are expressed in the orthonormal tangent basis `e1, e2`,
//! where the Weingarten operator `A_N` and the second fundamental form `K_N`
//! have the same matrix.

use nalgebra::Matrix2;

use crate::error::{GeometryError, Result};
use crate::frame::{surface_point, Gauge, NormalFrame, SurfaceModel, SurfacePoint};
use crate::geometry::{Christoffel, SpacetimeModel, Vec4};
use crate::normal::NullCoords;
use crate::sym2::{anticommutator, shear_squared, SymEigen2};
use crate::tolerance::Tolerances;

/// Second fundamental forms along the null normals plus the raw `II` values.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeTensor {
    /// `K_ℓ(e_a, e_b)`.
    pub k_ell: Matrix2<f64>,
    /// `K_k(e_a, e_b)`.
    pub k_k: Matrix2<f64>,
    /// `II(e1,e1), II(e1,e2), II(e2,e2)` as spacetime vectors.
    pub ii: [Vec4; 3],
    /// `K_ℓ, K_k` in the coordinate basis `∂_u, ∂_v`.
    pub coordinate: [Matrix2<f64>; 2],
}

impl ShapeTensor {
    /// Builds `II(∂_i,∂_j) = -(∂_ij Φ + Γ(∂_i Φ, ∂_j Φ))⊥` and projects it on
    /// the null frame.
    pub fn from_hessian(point: &SurfacePoint, hessian: &[Vec4; 3], gamma: &Christoffel) -> Self {
        let g = &point.metric;
        let t = &point.tangent;
        let raw = &t.raw;
        let ii_coord = |i: usize, j: usize, h: &Vec4| -> Vec4 {
            let cov = h + gamma.apply(&raw[i], &raw[j]);
            -t.normal_part(g, &cov)
        };
        let uu = ii_coord(0, 0, &hessian[0]);
        let uv = ii_coord(0, 1, &hessian[1]);
        let vv = ii_coord(1, 1, &hessian[2]);
        let jinv = t
            .to_orthonormal
            .try_inverse()
            .expect("orthonormalisation matrix is invertible for spacelike tangents");
        // II(e_a, e_b) = Σ jinv[i,a] jinv[j,b] II(∂_i, ∂_j)
        let coord = [[uu, uv], [uv, vv]];
        let on = |a: usize, b: usize| -> Vec4 {
            let mut out = Vec4::zeros();
            for (i, row) in coord.iter().enumerate() {
                for (j, val) in row.iter().enumerate() {
                    out += val * (jinv[(i, a)] * jinv[(j, b)]);
                }
            }
            out
        };
        let ii = [on(0, 0), on(0, 1), on(1, 1)];
        let nf = &point.normal;
        let project = |n: &Vec4, vals: &[Vec4; 3]| {
            let (a, b, c) = (g.dot(n, &vals[0]), g.dot(n, &vals[1]), g.dot(n, &vals[2]));
            Matrix2::new(a, b, b, c)
        };
        let coord_vals = [uu, uv, vv];
        Self {
            k_ell: project(&nf.ell, &ii),
            k_k: project(&nf.k, &ii),
            ii,
            coordinate: [project(&nf.ell, &coord_vals), project(&nf.k, &coord_vals)],
        }
    }

    /// `II(X, Y)` for tangent components `x, y` through the null
    /// decomposition `II = -K_k ℓ - K_ℓ k`.
    pub fn eval_null(&self, frame: &NormalFrame, x: [f64; 2], y: [f64; 2]) -> Vec4 {
        let bil = |m: &Matrix2<f64>| {
            let xv = nalgebra::Vector2::new(x[0], x[1]);
            let yv = nalgebra::Vector2::new(y[0], y[1]);
            xv.dot(&(m * yv))
        };
        -frame.ell * bil(&self.k_k) - frame.k * bil(&self.k_ell)
    }

    /// `II(X, Y)` through the orthonormal decomposition `II = -K_u u + K_n n`.
    pub fn eval_orthonormal(&self, frame: &NormalFrame, x: [f64; 2], y: [f64; 2]) -> Vec4 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let k_u = (self.k_ell + self.k_k) * s;
        let k_n = (self.k_ell - self.k_k) * s;
        let xv = nalgebra::Vector2::new(x[0], x[1]);
        let yv = nalgebra::Vector2::new(y[0], y[1]);
        -frame.u * xv.dot(&(k_u * yv)) + frame.n * xv.dot(&(k_n * yv))
    }

    /// `II(e_a, e_b)` from the stored raw values.
    pub fn raw(&self, a: usize, b: usize) -> Vec4 {
        match (a, b) {
            (0, 0) => self.ii[0],
            (1, 1) => self.ii[2],
            _ => self.ii[1],
        }
    }
}

/// Second fundamental form along the null normals at a surface point.
pub fn shape_at(surface: &SurfaceModel, spacetime: &SpacetimeModel, uv: (f64, f64)) -> Result<ShapeTensor> {
    let p = surface_point(surface, spacetime, uv, 0.0)?;
    let hess = surface.hessian(uv.0, uv.1)?;
    let gamma = spacetime.christoffel_at(&p.point)?;
    Ok(ShapeTensor::from_hessian(&p, &hess, &gamma))
}

/// `A_ℓ, A_k` in the orthonormal tangent basis for a frame with boost `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeingartenPair {
    pub a_ell: Matrix2<f64>,
    pub a_k: Matrix2<f64>,
    /// Boost of the null frame relative to the canonical one.
    pub beta: f64,
}

impl WeingartenPair {
    pub fn new(a_ell: Matrix2<f64>, a_k: Matrix2<f64>) -> Self {
        Self { a_ell, a_k, beta: 0.0 }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    /// `A_N` for `N = a ℓ + b k` in the pair's own frame.
    pub fn along(&self, n: NullCoords) -> Matrix2<f64> {
        self.a_ell * n.ell + self.a_k * n.k
    }

    /// Operators of the canonical frame: `A_ℓ0 = e^{-β} A_ℓ`, `A_k0 = e^{β} A_k`.
    pub fn canonical(&self) -> Self {
        Self {
            a_ell: self.a_ell * (-self.beta).exp(),
            a_k: self.a_k * self.beta.exp(),
            beta: 0.0,
        }
    }

    /// Re-expresses the pair in a frame boosted by a further `beta`.
    pub fn boosted(&self, beta: f64) -> Self {
        Self {
            a_ell: self.a_ell * beta.exp(),
            a_k: self.a_k * (-beta).exp(),
            beta: self.beta + beta,
        }
    }

    /// `A_N` for `N` given in canonical-frame coordinates.
    pub fn along_reference(&self, n: NullCoords) -> Matrix2<f64> {
        self.canonical().along(n)
    }

    /// `1 + ‖A_ℓ0‖ + ‖A_k0‖`, the boost-independent operator scale.
    pub fn scale(&self) -> f64 {
        let c = self.canonical();
        1.0 + c.a_ell.norm() + c.a_k.norm()
    }

    /// Eigen-decompositions of `(A_ℓ, A_k)`.
    pub fn eigens(&self) -> (SymEigen2, SymEigen2) {
        (SymEigen2::new(&self.a_ell), SymEigen2::new(&self.a_k))
    }

    pub fn a_u(&self) -> Matrix2<f64> {
        (self.a_ell + self.a_k) * std::f64::consts::FRAC_1_SQRT_2
    }

    pub fn a_n(&self) -> Matrix2<f64> {
        (self.a_ell - self.a_k) * std::f64::consts::FRAC_1_SQRT_2
    }
}

pub fn weingarten_at(shape: &ShapeTensor, beta: f64) -> WeingartenPair {
    WeingartenPair::new(shape.k_ell, shape.k_k).with_beta(beta)
}

/// `A = ḡ^{-1} K` in the coordinate basis.
pub fn weingarten_coordinate(k: &Matrix2<f64>, gbar: &Matrix2<f64>) -> Result<Matrix2<f64>> {
    let det = gbar.determinant();
    if !(det.abs() >= 1e-12) {
        return Err(GeometryError::DegenerateInducedMetric { det });
    }
    let inv = gbar
        .try_inverse()
        .ok_or(GeometryError::DegenerateInducedMetric { det })?;
    Ok(inv * k)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanCurvatureData {
    /// `H = -(trA_k) ℓ - (trA_ℓ) k`.
    pub h: NullCoords,
    pub star_h: NullCoords,
    pub h_vec: Vec4,
    pub star_h_vec: Vec4,
    pub tr_ell: f64,
    pub tr_k: f64,
    pub tr_u: f64,
    pub tr_n: f64,
    /// `g(H, H)`.
    pub norm2: f64,
}

pub fn mean_curvature_at(pair: &WeingartenPair, frame: &NormalFrame) -> MeanCurvatureData {
    let tr_ell = pair.a_ell.trace();
    let tr_k = pair.a_k.trace();
    let h = NullCoords::new(-tr_k, -tr_ell);
    MeanCurvatureData {
        h,
        star_h: h.star(),
        h_vec: frame.vector(h),
        star_h_vec: frame.vector(h.star()),
        tr_ell,
        tr_k,
        tr_u: pair.a_u().trace(),
        tr_n: pair.a_n().trace(),
        norm2: h.norm2(),
    }
}

/// `H` from the orthonormal expansions, `H = -(trA_u) u + (trA_n) n`.
pub fn mean_curvature_orthonormal(mean: &MeanCurvatureData, frame: &NormalFrame) -> Vec4 {
    -frame.u * mean.tr_u + frame.n * mean.tr_n
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GData {
    pub sigma2_ell: f64,
    pub sigma2_k: f64,
    pub sigma2_u: f64,
    pub sigma2_n: f64,
    /// `G = σ_k ℓ + σ_ℓ k` with nonnegative roots.
    pub g: NullCoords,
    pub star_g: NullCoords,
    pub g_vec: Vec4,
    pub star_g_vec: Vec4,
}

fn shear(m: &Matrix2<f64>) -> f64 {
    shear_squared(m).max(0.0)
}

pub fn g_field_at(pair: &WeingartenPair, frame: &NormalFrame) -> GData {
    let sigma2_ell = shear(&pair.a_ell);
    let sigma2_k = shear(&pair.a_k);
    let g = NullCoords::new(sigma2_k.sqrt(), sigma2_ell.sqrt());
    GData {
        sigma2_ell,
        sigma2_k,
        sigma2_u: shear(&pair.a_u()),
        sigma2_n: shear(&pair.a_n()),
        g,
        star_g: g.star(),
        g_vec: frame.vector(g),
        star_g_vec: frame.vector(g.star()),
    }
}

/// Distance from `σ_u u - σ_n n` to the nearest of `±G`, `±⋆⊥G` over the
/// sign choices of the roots, in null coordinates.
pub fn g_orthonormal_gap(data: &GData) -> f64 {
    let (su, sn) = (data.sigma2_u.sqrt(), data.sigma2_n.sqrt());
    let mut best = f64::INFINITY;
    for a in [su, -su] {
        for b in [sn, -sn] {
            let cand = NullCoords::from_orthonormal(a, -b);
            for target in [data.g, -data.g, data.star_g, -data.star_g] {
                best = best.min((cand - target).coordinate_norm());
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasoratiData {
    /// `B = -{A_k, A_ℓ}`.
    pub b: Matrix2<f64>,
    pub tr: f64,
    pub det: f64,
    /// `𝕁(e_a, e_b) = Σ_i g(II(e_i,e_a), II(e_i,e_b))`.
    pub j: Matrix2<f64>,
    /// `g(II, II) = Σ_ab g(II(e_a,e_b), II(e_a,e_b))`.
    pub ii_norm2: f64,
}

pub fn casorati_at(pair: &WeingartenPair, shape: &ShapeTensor, point: &SurfacePoint) -> CasoratiData {
    let b = -anticommutator(&pair.a_k, &pair.a_ell);
    let g = &point.metric;
    let mut j = Matrix2::zeros();
    let mut ii_norm2 = 0.0;
    for a in 0..2 {
        for c in 0..2 {
            j[(a, c)] = (0..2).map(|i| g.dot(&shape.raw(i, a), &shape.raw(i, c))).sum();
            ii_norm2 += g.norm2(&shape.raw(a, c));
        }
    }
    CasoratiData {
        b,
        tr: b.trace(),
        det: b.determinant(),
        j,
        ii_norm2,
    }
}

/// Normal connection one-form and its curvature in a given gauge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalConnectionData {
    /// `s(∂_u), s(∂_v)` with `s(X) = -g(k, D_X ℓ)`.
    pub s: [f64; 2],
    /// `ds(∂_u, ∂_v)`.
    pub ds_uv: f64,
    /// `ds(e1, e2)`.
    pub ds: f64,
    /// Gauge `β` at the evaluation point.
    pub beta: f64,
}

fn frame_sample(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    gauge: &Gauge,
) -> Result<SurfacePoint> {
    surface_point(surface, spacetime, uv, gauge.beta(uv.0, uv.1)).map_err(|e| match e {
        GeometryError::OutOfChart { coords } => GeometryError::StencilOutOfDomain { coords },
        GeometryError::OutOfParameterDomain { .. } => GeometryError::StencilOutOfDomain {
            coords: surface.immersion().position(uv.0, uv.1).coords(),
        },
        other => other,
    })
}

/// `s(∂_u), s(∂_v)` by fourth-order central differences of `ℓ` with step `h`.
pub fn connection_one_form(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    gauge: &Gauge,
    h: f64,
) -> Result<[f64; 2]> {
    let centre = frame_sample(surface, spacetime, uv, gauge)?;
    let gamma = spacetime.christoffel_at(&centre.point)?;
    let g = &centre.metric;
    let mut s = [0.0; 2];
    for (i, slot) in s.iter_mut().enumerate() {
        let (du, dv) = if i == 0 { (h, 0.0) } else { (0.0, h) };
        let mut d_ell = Vec4::zeros();
        for (o, w) in [(2.0, -1.0), (1.0, 8.0), (-1.0, -8.0), (-2.0, 1.0)] {
            let nb = frame_sample(surface, spacetime, (uv.0 + o * du, uv.1 + o * dv), gauge)?;
            let overlap = g.dot(&nb.normal.ell, &centre.normal.k);
            if !(overlap < -0.5) {
                return Err(GeometryError::FrameBranchCut { overlap });
            }
            d_ell += nb.normal.ell * (w / (12.0 * h));
        }
        let cov = d_ell + gamma.apply(&centre.tangent.raw[i], &centre.normal.ell);
        *slot = -g.dot(&centre.normal.k, &cov);
    }
    Ok(s)
}

pub fn normal_connection_at(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    gauge: &Gauge,
    tol: &Tolerances,
) -> Result<NormalConnectionData> {
    let centre = frame_sample(surface, spacetime, uv, gauge)?;
    let inner = tol.frame_step;
    let s = connection_one_form(surface, spacetime, uv, gauge, inner)?;
    let h = tol.connection_step;
    let w = [-1.0, 8.0, -8.0, 1.0];
    let offsets = [2.0, 1.0, -1.0, -2.0];
    let mut du_sv = 0.0;
    let mut dv_su = 0.0;
    for (wi, oi) in w.iter().zip(offsets) {
        du_sv += wi * connection_one_form(surface, spacetime, (uv.0 + oi * h, uv.1), gauge, inner)?[1];
        dv_su += wi * connection_one_form(surface, spacetime, (uv.0, uv.1 + oi * h), gauge, inner)?[0];
    }
    let ds_uv = (du_sv - dv_su) / (12.0 * h);
    Ok(NormalConnectionData {
        s,
        ds_uv,
        ds: ds_uv / centre.tangent.area_element(),
        beta: centre.normal.beta,
    })
}

/// Every point-wise extrinsic quantity at one surface point and gauge.
#[derive(Debug, Clone)]
pub struct ExtrinsicState {
    pub point: SurfacePoint,
    pub shape: ShapeTensor,
    pub pair: WeingartenPair,
    pub mean: MeanCurvatureData,
    pub g_field: GData,
    pub casorati: CasoratiData,
    pub connection: Option<NormalConnectionData>,
}

impl ExtrinsicState {
    /// Evaluates the point-wise quantities; `with_connection` adds `s` and
    /// `ds`, which need a stencil of frames around the point.
    pub fn compute(
        surface: &SurfaceModel,
        spacetime: &SpacetimeModel,
        uv: (f64, f64),
        gauge: &Gauge,
        tol: &Tolerances,
        with_connection: bool,
    ) -> Result<Self> {
        let beta = gauge.beta(uv.0, uv.1);
        let point = surface_point(surface, spacetime, uv, beta)?;
        let hess = surface.hessian(uv.0, uv.1)?;
        let gamma = spacetime.christoffel_at(&point.point)?;
        let shape = ShapeTensor::from_hessian(&point, &hess, &gamma);
        let pair = weingarten_at(&shape, beta);
        let mean = mean_curvature_at(&pair, &point.normal);
        let g_field = g_field_at(&pair, &point.normal);
        let casorati = casorati_at(&pair, &shape, &point);
        let connection = if with_connection {
            Some(normal_connection_at(surface, spacetime, uv, gauge, tol)?)
        } else {
            None
        };
        Ok(Self {
            point,
            shape,
            pair,
            mean,
            g_field,
            casorati,
            connection,
        })
    }

    pub fn scale(&self) -> f64 {
        self.pair.scale()
    }

    /// Canonical-frame coordinates of a normal vector given in this frame.
    pub fn reference(&self, n: NullCoords) -> NullCoords {
        n.to_reference(self.pair.beta)
    }

    pub fn ds(&self) -> Option<f64> {
        self.connection.map(|c| c.ds)
    }
}
