//! Residuals of the curvature identities relating extrinsic data to the
//! ambient Riemann tensor.
//!
//! Every residual is `|LHS - RHS|` evaluated on the unit orthonormal and null
//! frames of the point.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_point, ortho_kappa, PointClassification};
use crate::error::{GeometryError, Result};
use crate::extrinsic::ExtrinsicState;
use crate::frame::{tangent_frame_at, Gauge, SurfaceModel};
use crate::geometry::{CurvatureBundle, SpacetimeModel, Vec4};
use crate::normal::NullCoords;
use crate::sym2::{commutator, trace_free_norm};
use crate::tolerance::Tolerances;

/// A measured residual and the threshold it is judged against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `value < tolerance`.
    pub fn below(value: f64, tolerance: f64) -> Self {
        Self {
            value,
            tolerance,
            pass: value < tolerance,
        }
    }
}

/// Gaussian curvature of `ḡ` alone, by the Brioschi formula with
/// sixth-order central differences of step `h` in the surface parameters.
pub fn gaussian_curvature_intrinsic(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    h: f64,
) -> Result<f64> {
    let efg = |du: f64, dv: f64| -> Result<[f64; 3]> {
        let p = (uv.0 + du * h, uv.1 + dv * h);
        if !surface.in_domain(p.0, p.1) {
            return Err(stencil_error(surface, uv));
        }
        let t = tangent_frame_at(surface, spacetime, p).map_err(|e| match e {
            GeometryError::OutOfChart { .. } | GeometryError::OutOfParameterDomain { .. } => stencil_error(surface, uv),
            other => other,
        })?;
        Ok([t.gbar[(0, 0)], t.gbar[(0, 1)], t.gbar[(1, 1)]])
    };
    let w1 = [
        (3.0, 1.0),
        (2.0, -9.0),
        (1.0, 45.0),
        (-1.0, -45.0),
        (-2.0, 9.0),
        (-3.0, -1.0),
    ];
    let w2 = [
        (3.0, 2.0),
        (2.0, -27.0),
        (1.0, 270.0),
        (0.0, -490.0),
        (-1.0, 270.0),
        (-2.0, -27.0),
        (-3.0, 2.0),
    ];

    let centre = efg(0.0, 0.0)?;
    let mut d_u = [0.0; 3];
    let mut d_v = [0.0; 3];
    for (o, w) in w1 {
        let a = efg(o, 0.0)?;
        let b = efg(0.0, o)?;
        for i in 0..3 {
            d_u[i] += w * a[i] / (60.0 * h);
            d_v[i] += w * b[i] / (60.0 * h);
        }
    }
    let mut e_vv = 0.0;
    let mut g_uu = 0.0;
    for (o, w) in w2 {
        let (a, b) = if o == 0.0 {
            (centre, centre)
        } else {
            (efg(0.0, o)?, efg(o, 0.0)?)
        };
        e_vv += w * a[0] / (180.0 * h * h);
        g_uu += w * b[2] / (180.0 * h * h);
    }
    let mut f_uv = 0.0;
    for (ou, wu) in w1 {
        for (ov, wv) in w1 {
            f_uv += wu * wv * efg(ou, ov)?[1] / (3600.0 * h * h);
        }
    }
    let [e, f, g] = centre;
    let [e_u, f_u, g_u] = d_u;
    let [e_v, f_v, g_v] = d_v;
    let m1 = nalgebra::Matrix3::new(
        -0.5 * e_vv + f_uv - 0.5 * g_uu,
        0.5 * e_u,
        f_u - 0.5 * e_v,
        f_v - 0.5 * g_u,
        e,
        f,
        0.5 * g_v,
        f,
        g,
    );
    let m2 = nalgebra::Matrix3::new(0.0, 0.5 * e_v, 0.5 * g_u, 0.5 * e_v, e, f, 0.5 * g_u, f, g);
    let det = e * g - f * f;
    Ok((m1.determinant() - m2.determinant()) / (det * det))
}

fn stencil_error(surface: &SurfaceModel, uv: (f64, f64)) -> GeometryError {
    GeometryError::StencilOutOfDomain {
        coords: surface.immersion().position(uv.0, uv.1).coords(),
    }
}

/// `𝒮 + 4 Ric(ℓ,k) - 2 R(ℓ,k,ℓ,k)`, which equals `2 R(e1,e2,e1,e2)`.
pub fn ambient_gauss_term(state: &ExtrinsicState, curvature: &CurvatureBundle) -> f64 {
    let nf = &state.point.normal;
    curvature.scalar + 4.0 * curvature.ricci_form(&nf.ell, &nf.k)
        - 2.0 * curvature.riemann.contract(&nf.ell, &nf.k, &nf.ell, &nf.k)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussCheck {
    /// `2 K(S)`.
    pub lhs: f64,
    pub ambient: f64,
    pub h_norm2: f64,
    pub tr_b: f64,
    pub residual: f64,
}

/// `2K(S) = 𝒮 + 4 Ric(ℓ,k) - 2 R(ℓ,k,ℓ,k) + g(H,H) - trB`.
pub fn check_gauss(state: &ExtrinsicState, curvature: &CurvatureBundle, k_s: f64) -> GaussCheck {
    let ambient = ambient_gauss_term(state, curvature);
    let h_norm2 = state.mean.norm2;
    let tr_b = state.casorati.tr;
    let lhs = 2.0 * k_s;
    GaussCheck {
        lhs,
        ambient,
        h_norm2,
        tr_b,
        residual: (lhs - (ambient + h_norm2 - tr_b)).abs(),
    }
}

/// Labels of the normal frame vectors used by the Ricci-type checks.
pub const NORMAL_LABELS: [&str; 4] = ["l", "k", "u", "n"];

fn normal_basis() -> [NullCoords; 4] {
    [
        NullCoords::new(1.0, 0.0),
        NullCoords::new(0.0, 1.0),
        NullCoords::from_orthonormal(1.0, 0.0),
        NullCoords::from_orthonormal(0.0, 1.0),
    ]
}

/// One evaluation of the Ricci equation terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RicciTerms {
    pub m: usize,
    pub n: usize,
    pub x: usize,
    pub y: usize,
    /// `R(M,N,X,Y)`.
    pub riemann: f64,
    /// `g([A_M,A_N] Y, X)`.
    pub commutator: f64,
    /// `ds(X,Y) g(⋆⊥N, M)`.
    pub normal: f64,
}

impl RicciTerms {
    pub fn label(&self) -> String {
        format!(
            "M={},N={},X=e{},Y=e{}",
            NORMAL_LABELS[self.m],
            NORMAL_LABELS[self.n],
            self.x + 1,
            self.y + 1
        )
    }

    /// `R(M,N,X,Y) - g([A_N,A_M]Y,X) - ds(X,Y) g(⋆⊥N,M)`.
    pub fn ricci_residual(&self) -> f64 {
        (self.riemann + self.commutator - self.normal).abs()
    }

    /// `R(M,N,X,Y) - ds(X,Y) g(⋆⊥N,M)`.
    pub fn criterion_residual(&self) -> f64 {
        (self.riemann - self.normal).abs()
    }
}

/// All terms for `M, N ∈ {ℓ,k,u,n}` and `X, Y ∈ {e1,e2}`.
pub fn ricci_terms(state: &ExtrinsicState, curvature: &CurvatureBundle, ds: f64) -> Vec<RicciTerms> {
    let basis = normal_basis();
    let nf = &state.point.normal;
    let e = &state.point.tangent.e;
    let unit = |i: usize| if i == 0 { [1.0, 0.0] } else { [0.0, 1.0] };
    let mut out = Vec::with_capacity(64);
    for (m, cm) in basis.iter().enumerate() {
        for (n, cn) in basis.iter().enumerate() {
            let mv = nf.vector(*cm);
            let nv = nf.vector(*cn);
            let comm: Matrix2<f64> = commutator(&state.pair.along(*cm), &state.pair.along(*cn));
            let star = cn.star().dot(*cm);
            for x in 0..2 {
                for y in 0..2 {
                    let (xc, yc) = (unit(x), unit(y));
                    let ds_xy = ds * (xc[0] * yc[1] - xc[1] * yc[0]);
                    out.push(RicciTerms {
                        m,
                        n,
                        x,
                        y,
                        riemann: curvature.riemann.contract(&mv, &nv, &e[x], &e[y]),
                        commutator: comm[(x, y)],
                        normal: ds_xy * star,
                    });
                }
            }
        }
    }
    out
}

fn require_ds(state: &ExtrinsicState) -> Result<f64> {
    state
        .ds()
        .ok_or_else(|| GeometryError::Precondition("normal connection was not evaluated at this point".into()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RicciCheck {
    pub max_residual: f64,
    /// Frame choice attaining the maximum.
    pub worst: String,
}

/// `R(M,N,X,Y) = g([A_N,A_M]Y,X) + ds(X,Y) g(⋆⊥N,M)`, maximised over the frame.
pub fn check_ricci(state: &ExtrinsicState, curvature: &CurvatureBundle) -> Result<RicciCheck> {
    let ds = require_ds(state)?;
    let terms = ricci_terms(state, curvature, ds);
    let worst = terms
        .iter()
        .max_by(|a, b| a.ricci_residual().total_cmp(&b.ricci_residual()))
        .expect("frame list is not empty");
    Ok(RicciCheck {
        max_residual: worst.ricci_residual(),
        worst: worst.label(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UmbilicCriterionCheck {
    /// `max |R(M,N,X,Y) - ds(X,Y) g(⋆⊥N,M)|`.
    pub residual_max: f64,
    /// `max |g([A_M,A_N]Y,X)|`.
    pub commutator_max: f64,
    /// Frame choice attaining `residual_max`.
    pub worst: String,
    pub umbilical: bool,
    /// The residual is small exactly when an umbilical direction exists.
    pub consistent: bool,
}

/// Umbilical along some normal ⇔ `R(M,N,X,Y) = ds(X,Y) g(⋆⊥N,M)`.
///
/// At umbilical points the residual must stay below `tol.ver_stencil`; at
/// non-umbilical points it must exceed ten times that.
pub fn check_umbilic_criterion(
    state: &ExtrinsicState,
    curvature: &CurvatureBundle,
    tol: &Tolerances,
) -> Result<UmbilicCriterionCheck> {
    let ds = require_ds(state)?;
    let terms = ricci_terms(state, curvature, ds);
    let worst = terms
        .iter()
        .max_by(|a, b| a.criterion_residual().total_cmp(&b.criterion_residual()))
        .expect("frame list is not empty");
    let commutator_max = terms.iter().map(|t| t.commutator.abs()).fold(0.0, f64::max);
    let umbilical = classify_point(state, tol.cls).umbilical.has_direction();
    let residual_max = worst.criterion_residual();
    let consistent = if umbilical {
        residual_max < tol.ver_stencil
    } else {
        residual_max > 10.0 * tol.ver_stencil
    };
    Ok(UmbilicCriterionCheck {
        residual_max,
        commutator_max,
        worst: worst.label(),
        umbilical,
        consistent,
    })
}

/// `max |R(M,N,X,Y) - C(M,N,X,Y)|` over normal `M,N` and tangent `X,Y`.
pub fn normal_weyl_residual(state: &ExtrinsicState, curvature: &CurvatureBundle) -> f64 {
    let nf = &state.point.normal;
    let e = &state.point.tangent.e;
    let normals = [nf.ell, nf.k, nf.u, nf.n];
    let mut worst: f64 = 0.0;
    for m in &normals {
        for n in &normals {
            for x in e {
                for y in e {
                    let r = curvature.riemann.contract(m, n, x, y);
                    let c = curvature.weyl.contract(m, n, x, y);
                    worst = worst.max((r - c).abs());
                }
            }
        }
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlatNormalCheck {
    pub weyl_max: f64,
    /// `max |(R(X,Y)N)⊥ - (C(X,Y)N)⊥|` in frame components.
    pub normal_weyl_residual: f64,
    pub ds: f64,
    pub umbilical: bool,
    /// Umbilical direction exists ⇔ `|ds| < tol.ver_stencil`.
    pub consistent: bool,
}

/// Conformally flat ambient: umbilical along some normal ⇔ `ds = 0`.
///
/// Fails with `NotConformallyFlat` when the Weyl tensor at the point exceeds
/// `tol.geo`, whether the flatness was claimed by the model or not.
pub fn check_flat_normal_criterion(
    state: &ExtrinsicState,
    curvature: &CurvatureBundle,
    tol: &Tolerances,
) -> Result<FlatNormalCheck> {
    let weyl_max = curvature.weyl.max_abs();
    if !(weyl_max < tol.geo) {
        return Err(GeometryError::NotConformallyFlat { max_weyl: weyl_max });
    }
    let ds = require_ds(state)?;
    let umbilical = classify_point(state, tol.cls).umbilical.has_direction();
    let flat_normal = ds.abs() < tol.ver_stencil;
    Ok(FlatNormalCheck {
        weyl_max,
        normal_weyl_residual: normal_weyl_residual(state, curvature),
        ds,
        umbilical,
        consistent: umbilical == flat_normal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceFormCheck {
    pub k_s: f64,
    pub det_kappa: f64,
    /// `|K(S) - 𝒦 - g(H,H) det κ̃|`.
    pub residual: f64,
    /// `|2K(S) - (𝒮 + 4Ric(ℓ,k) - 2R(ℓ,k,ℓ,k)) - 2 g(H,H) det κ̃|`.
    pub ortho_gauss_residual: f64,
    /// `|2𝒦 - (𝒮 + 4Ric(ℓ,k) - 2R(ℓ,k,ℓ,k))|`.
    pub ambient_residual: f64,
    /// `|ds|` when the connection was evaluated.
    pub ds: Option<f64>,
}

/// `K(S) = 𝒦 + g(H,H) det κ̃` for ortho-umbilical points of a space form.
pub fn check_space_form(
    state: &ExtrinsicState,
    curvature: &CurvatureBundle,
    k_s: f64,
    constant_curvature: f64,
    tol: &Tolerances,
) -> Result<SpaceFormCheck> {
    let cls = classify_point(state, tol.cls);
    if cls.minimal {
        return Err(GeometryError::Precondition(
            "space-form relation needs a non-minimal point".into(),
        ));
    }
    let kappa = ortho_kappa(&state.pair, tol.cls)?;
    let h2 = state.mean.norm2;
    let ambient = ambient_gauss_term(state, curvature);
    Ok(SpaceFormCheck {
        k_s,
        det_kappa: kappa.det,
        residual: (k_s - constant_curvature - h2 * kappa.det).abs(),
        ortho_gauss_residual: (2.0 * k_s - ambient - 2.0 * h2 * kappa.det).abs(),
        ambient_residual: (2.0 * constant_curvature - ambient).abs(),
        ds: state.ds().map(f64::abs),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CkvCheck {
    pub phi: f64,
    /// Frame coordinates of `ξ`.
    pub xi: NullCoords,
    /// `‖A_ξ - φ 𝟙‖`.
    pub residual: f64,
    /// `‖A_ξ + φ 𝟙‖`.
    pub literal_residual: f64,
    /// `max_i |g(ξ, e_i)|`.
    pub orthogonality: f64,
    /// `A_ξ` proportional to the identity under the classification threshold.
    pub umbilical_along_xi: bool,
}

/// Surface inside a hypersurface orthogonal to a conformal Killing vector
/// `ξ` with `L_ξ g = 2φ g` is umbilical along `ξ`, with `A_ξ = φ 𝟙`.
pub fn check_ckv_construction(
    spacetime: &SpacetimeModel,
    state: &ExtrinsicState,
    tol: &Tolerances,
) -> Result<CkvCheck> {
    let ckv = spacetime
        .spacetime()
        .conformal_killing(&state.point.point)
        .ok_or_else(|| {
            GeometryError::Precondition(format!("{} declares no conformal Killing vector", spacetime.name()))
        })?;
    let metric = &state.point.metric;
    let tangent = &state.point.tangent;
    let xi: Vec4 = ckv.xi;
    let orthogonality = tangent.tangential_residual(metric, &xi);
    let xi_scale = metric.norm2(&xi).abs().sqrt();
    if !(xi_scale > tol.frame) {
        return Err(GeometryError::Precondition(
            "conformal Killing vector vanishes on the surface".into(),
        ));
    }
    if orthogonality > tol.frame * (1.0 + xi_scale) {
        return Err(GeometryError::SurfaceNotOrthogonal {
            residual: orthogonality,
        });
    }
    let coords = state.point.normal.coords(metric, &xi);
    let a_xi = state.pair.along(coords);
    let id = Matrix2::identity() * ckv.phi;
    Ok(CkvCheck {
        phi: ckv.phi,
        xi: coords,
        residual: (a_xi - id).norm(),
        literal_residual: (a_xi + id).norm(),
        orthogonality,
        umbilical_along_xi: trace_free_norm(&a_xi) < tol.cls * state.scale(),
    })
}

/// Largest drift of gauge-invariant data between two gauges at one point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GaugeDrift {
    pub h: f64,
    pub g: f64,
    pub b: f64,
    pub ds: f64,
    /// Some classification verdict changed.
    pub verdict_changed: bool,
}

impl GaugeDrift {
    pub fn max(&self) -> f64 {
        self.h.max(self.g).max(self.b).max(self.ds)
    }

    pub fn merge(self, other: Self) -> Self {
        Self {
            h: self.h.max(other.h),
            g: self.g.max(other.g),
            b: self.b.max(other.b),
            ds: self.ds.max(other.ds),
            verdict_changed: self.verdict_changed || other.verdict_changed,
        }
    }
}

/// Verdicts that must not depend on the gauge.
pub fn verdict_key(cls: &PointClassification) -> impl PartialEq + std::fmt::Debug {
    (
        (cls.minimal, cls.totally_geodesic, cls.totally_umbilical),
        (
            cls.pseudo_umbilical,
            cls.pseudo_invariant,
            cls.ortho_umbilical,
            cls.h_subgeodesic,
        ),
        cls.dim_first_normal_space,
        cls.h_causal,
        cls.h_orientation,
        cls.expansion_signs,
        cls.tags,
        (cls.umbilical.status, cls.umbilical.causal, cls.joint),
    )
}

/// Compares the gauge-invariant quantities of two states of the same point.
pub fn gauge_drift(a: &ExtrinsicState, b: &ExtrinsicState, tau: f64) -> GaugeDrift {
    let ds = match (a.ds(), b.ds()) {
        (Some(x), Some(y)) => (x - y).abs(),
        _ => 0.0,
    };
    let ca = classify_point(a, tau);
    let cb = classify_point(b, tau);
    GaugeDrift {
        h: (a.mean.h_vec - b.mean.h_vec)
            .amax()
            .max((a.mean.star_h_vec - b.mean.star_h_vec).amax()),
        g: (a.g_field.g_vec - b.g_field.g_vec)
            .amax()
            .max((a.g_field.star_g_vec - b.g_field.star_g_vec).amax()),
        b: (a.casorati.b - b.casorati.b).amax(),
        ds,
        verdict_changed: verdict_key(&ca) != verdict_key(&cb),
    }
}

/// Which identity checks to run at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub connection: bool,
    pub boosts: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            connection: true,
            boosts: 2,
            seed: 0,
        }
    }
}

/// Point, gauge and steps a report was produced with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportContext {
    pub uv: (f64, f64),
    pub coords: [f64; 4],
    pub beta: f64,
    pub tolerances: Tolerances,
}

/// Residuals of every identity applicable at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub gauss: Option<Check>,
    pub ricci: Option<Check>,
    /// Passes when the biconditional holds; `value` is the residual maximum.
    pub umbilic_criterion: Option<Check>,
    /// Frame choice attaining the `umbilic_criterion` maximum.
    pub umbilic_criterion_pair: Option<String>,
    /// `(R(X,Y)N)⊥ = (C(X,Y)N)⊥`.
    pub normal_curvature: Option<Check>,
    pub weyl_flat: Option<Check>,
    /// Passes when umbilical-direction-exists ⇔ `|ds|` small.
    pub flat_normal: Option<Check>,
    pub space_form: Option<Check>,
    pub casorati_ortho: Option<Check>,
    pub ckv: Option<Check>,
    pub ckv_literal: Option<f64>,
    pub boost_invariance: Option<Check>,
    pub gaussian_curvature: Option<f64>,
    pub context: ReportContext,
}

impl ResidualReport {
    pub fn checks(&self) -> [(&'static str, Option<Check>); 10] {
        [
            ("gauss", self.gauss),
            ("ricci", self.ricci),
            ("umbilic_criterion", self.umbilic_criterion),
            ("normal_curvature", self.normal_curvature),
            ("weyl_flat", self.weyl_flat),
            ("flat_normal", self.flat_normal),
            ("space_form", self.space_form),
            ("casorati_ortho", self.casorati_ortho),
            ("ckv", self.ckv),
            ("boost_invariance", self.boost_invariance),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.is_none_or(|c| c.pass))
    }
}

/// Everything computed at one point: state, classification and residuals.
#[derive(Debug, Clone)]
pub struct PointVerification {
    pub state: ExtrinsicState,
    pub classification: PointClassification,
    pub report: ResidualReport,
}

/// Runs every applicable identity check at `uv`.
pub fn verify_point(
    surface: &SurfaceModel,
    spacetime: &SpacetimeModel,
    uv: (f64, f64),
    gauge: &Gauge,
    tol: &Tolerances,
    options: &VerifyOptions,
) -> Result<PointVerification> {
    let state = ExtrinsicState::compute(surface, spacetime, uv, gauge, tol, options.connection)?;
    let classification = classify_point(&state, tol.cls);
    let curvature = spacetime.curvature_at(&state.point.point)?;
    let k_s = gaussian_curvature_intrinsic(surface, spacetime, uv, tol.intrinsic_step)?;

    let gauss = check_gauss(&state, &curvature, k_s);
    let mut report = ResidualReport {
        gauss: Some(Check::below(gauss.residual, tol.ver)),
        ricci: None,
        umbilic_criterion: None,
        umbilic_criterion_pair: None,
        normal_curvature: Some(Check::below(normal_weyl_residual(&state, &curvature), tol.ver)),
        weyl_flat: None,
        flat_normal: None,
        space_form: None,
        casorati_ortho: None,
        ckv: None,
        ckv_literal: None,
        boost_invariance: None,
        gaussian_curvature: Some(k_s),
        context: ReportContext {
            uv,
            coords: state.point.point.coords(),
            beta: state.pair.beta,
            tolerances: *tol,
        },
    };

    if state.connection.is_some() {
        let ricci = check_ricci(&state, &curvature)?;
        report.ricci = Some(Check::below(ricci.max_residual, tol.ver_stencil));
        let t2 = check_umbilic_criterion(&state, &curvature, tol)?;
        report.umbilic_criterion = Some(Check {
            value: t2.residual_max,
            tolerance: tol.ver_stencil,
            pass: t2.consistent,
        });
        report.umbilic_criterion_pair = Some(t2.worst);
    }

    let st = spacetime.spacetime();
    if st.conformally_flat() {
        report.weyl_flat = Some(Check::below(curvature.weyl.max_abs(), tol.geo));
        if state.connection.is_some() {
            report.flat_normal = Some(match check_flat_normal_criterion(&state, &curvature, tol) {
                Ok(c) => Check {
                    value: c.ds.abs(),
                    tolerance: tol.ver_stencil,
                    pass: c.consistent,
                },
                Err(GeometryError::NotConformallyFlat { max_weyl }) => Check {
                    value: max_weyl,
                    tolerance: tol.geo,
                    pass: false,
                },
                Err(e) => return Err(e),
            });
        }
    }

    if classification.ortho_umbilical == Some(true) {
        if let Ok(kappa) = ortho_kappa(&state.pair, tol.cls) {
            report.casorati_ortho = Some(Check::below(kappa.casorati_residual, tol.ver));
        }
        if let Some(k) = st.constant_curvature() {
            let sf = check_space_form(&state, &curvature, k_s, k, tol)?;
            report.space_form = Some(Check::below(sf.residual, tol.ver));
        }
    }

    if st.conformal_killing(&state.point.point).is_some() {
        match check_ckv_construction(spacetime, &state, tol) {
            Ok(c) => {
                report.ckv = Some(Check::below(c.residual, tol.ver));
                report.ckv_literal = Some(c.literal_residual);
            }
            Err(GeometryError::SurfaceNotOrthogonal { .. }) | Err(GeometryError::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }

    if options.boosts > 0 {
        use rand::{Rng, SeedableRng};
        let mix = (uv.0.to_bits().rotate_left(17)) ^ uv.1.to_bits() ^ options.seed;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(mix);
        let mut drift = GaugeDrift::default();
        for _ in 0..options.boosts {
            let beta = rng.random_range(-2.0..2.0);
            let shifted = match gauge {
                Gauge::Constant(b) => Gauge::Constant(b + beta),
                Gauge::Field(f) => {
                    let f = f.clone();
                    Gauge::field(move |u, v| f(u, v) + beta)
                }
            };
            let other = ExtrinsicState::compute(surface, spacetime, uv, &shifted, tol, options.connection)?;
            drift = drift.merge(gauge_drift(&state, &other, tol.cls));
        }
        let value = drift.max();
        report.boost_invariance = Some(Check {
            value,
            tolerance: tol.gauge,
            pass: value < tol.gauge && !drift.verdict_changed,
        });
    }

    Ok(PointVerification {
        state,
        classification,
        report,
    })
}
