//! Point-wise ambient geometry: metric, connection and curvature.
//!
//! Index conventions, fixed once for the whole crate:
//!
//! * `Christoffel::get(a, b, c)` is `Γ^a_{bc}`.
//! * `R^a_{bcd} = ∂_c Γ^a_{db} - ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} - Γ^a_{de} Γ^e_{cb}`,
//!   so that `R(∂_c, ∂_d) ∂_b = R^a_{bcd} ∂_a` for the curvature operator
//!   `R(X,Y) = ∇_X ∇_Y - ∇_Y ∇_X - ∇_[X,Y]`.
//! * `R_{abcd} = g_{ae} R^e_{bcd}`, i.e. `R(W,Z,X,Y) = g(W, R(X,Y) Z)` with
//!   `(W,Z,X,Y) = (∂_a,∂_b,∂_c,∂_d)`. A space of constant curvature `K` has
//!   `R_{abcd} = K (g_{ac} g_{bd} - g_{ad} g_{bc})`.
//! * `Ric_{bd} = g^{ac} R_{abcd}` and `S = g^{bd} Ric_{bd}`.

use std::fmt;
use std::sync::Arc;

use nalgebra::{Matrix4, SymmetricEigen, Vector4};

use crate::error::{GeometryError, Result};
use crate::tolerance::DEGENERATE_METRIC_DET;

pub type Vec4 = Vector4<f64>;
pub type Mat4 = Matrix4<f64>;

/// Chart coordinates of a spacetime event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint(pub Vec4);

impl SpacetimePoint {
    pub fn new(coords: [f64; 4]) -> Self {
        Self(Vec4::from(coords))
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    pub fn shifted(&self, axis: usize, h: f64) -> Self {
        let mut c = self.0;
        c[axis] += h;
        Self(c)
    }
}

/// A one-form, stored by its covariant components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Covector(pub Vec4);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    /// `(-,+,+,+)`
    Lorentzian,
}

/// Lorentzian metric at a point together with its inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct Metric4 {
    g: Mat4,
    inv: Mat4,
    det: f64,
    signature: Signature,
}

impl Metric4 {
    pub fn new(raw: Mat4) -> Result<Self> {
        if raw.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::DegenerateMetric { det: f64::NAN });
        }
        let g = 0.5 * (raw + raw.transpose());
        let det = g.determinant();
        if det.abs() < DEGENERATE_METRIC_DET {
            return Err(GeometryError::DegenerateMetric { det });
        }
        let negative = SymmetricEigen::new(g).eigenvalues.iter().filter(|&&l| l < 0.0).count();
        if negative != 1 {
            return Err(GeometryError::NotLorentzian { negative });
        }
        let inv = g.try_inverse().ok_or(GeometryError::DegenerateMetric { det })?;
        Ok(Self {
            g,
            inv,
            det,
            signature: Signature::Lorentzian,
        })
    }

    pub fn components(&self) -> &Mat4 {
        &self.g
    }

    pub fn inverse(&self) -> &Mat4 {
        &self.inv
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn dot(&self, a: &Vec4, b: &Vec4) -> f64 {
        a.dot(&(self.g * b))
    }

    pub fn norm2(&self, a: &Vec4) -> f64 {
        self.dot(a, a)
    }

    pub fn flat(&self, v: &Vec4) -> Covector {
        Covector(self.g * v)
    }

    pub fn sharp(&self, w: &Covector) -> Vec4 {
        self.inv * w.0
    }

    /// Metric volume form `ε(a,b,c,d)` of the chart orientation.
    pub fn volume(&self, a: &Vec4, b: &Vec4, c: &Vec4, d: &Vec4) -> f64 {
        let m = Mat4::from_columns(&[*a, *b, *c, *d]);
        self.det.abs().sqrt() * m.determinant()
    }
}

pub fn flat(v: &Vec4, g: &Metric4) -> Covector {
    g.flat(v)
}

pub fn sharp(w: &Covector, g: &Metric4) -> Vec4 {
    g.sharp(w)
}

/// Frobenius norm of the bivector `a ∧ b` in chart components.
pub fn wedge_norm(a: &Vec4, b: &Vec4) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            let w = a[i] * b[j] - a[j] * b[i];
            sum += 2.0 * w * w;
        }
    }
    sum.sqrt()
}

/// Christoffel symbols of the second kind, `Γ^a_{bc}` at `[a][b][c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Christoffel(pub [[[f64; 4]; 4]; 4]);

impl Christoffel {
    pub fn zero() -> Self {
        Self([[[0.0; 4]; 4]; 4])
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.0[a][b][c]
    }

    /// Sets `Γ^a_{bc}` and `Γ^a_{cb}` together.
    pub fn set_sym(&mut self, a: usize, b: usize, c: usize, value: f64) {
        self.0[a][b][c] = value;
        self.0[a][c][b] = value;
    }

    /// `Γ^a_{bc} x^b y^c`.
    pub fn apply(&self, x: &Vec4, y: &Vec4) -> Vec4 {
        let mut out = Vec4::zeros();
        for a in 0..4 {
            let mut s = 0.0;
            for b in 0..4 {
                for c in 0..4 {
                    s += self.0[a][b][c] * x[b] * y[c];
                }
            }
            out[a] = s;
        }
        out
    }

    /// Levi-Civita connection from `∂_c g` stored as `dg[c]`.
    pub fn from_metric_derivatives(inv: &Mat4, dg: &[Mat4; 4]) -> Self {
        let mut first = [[[0.0; 4]; 4]; 4];
        for d in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    first[d][b][c] = 0.5 * (dg[b][(d, c)] + dg[c][(d, b)] - dg[d][(b, c)]);
                }
            }
        }
        let mut out = Self::zero();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    out.0[a][b][c] = (0..4).map(|d| inv[(a, d)] * first[d][b][c]).sum();
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    m = m.max((self.0[a][b][c] - other.0[a][b][c]).abs());
                }
            }
        }
        m
    }

    pub fn lower_symmetry_residual(&self) -> f64 {
        let mut m: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    m = m.max((self.0[a][b][c] - self.0[a][c][b]).abs());
                }
            }
        }
        m
    }

    fn combine(terms: &[(f64, &Christoffel)]) -> Self {
        let mut out = Self::zero();
        for (w, g) in terms {
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        out.0[a][b][c] += w * g.0[a][b][c];
                    }
                }
            }
        }
        out
    }
}

/// Rank-4 array of components, row-major in `(a,b,c,d)`.
#[derive(Clone, PartialEq)]
pub struct Tensor4(Box<[f64; 256]>);

impl fmt::Debug for Tensor4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor4 {{ max_abs: {:e} }}", self.max_abs())
    }
}

impl Tensor4 {
    pub fn zero() -> Self {
        Self(Box::new([0.0; 256]))
    }

    #[inline]
    fn idx(a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * 4 + b) * 4 + c) * 4 + d
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> f64 {
        self.0[Self::idx(a, b, c, d)]
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, value: f64) {
        self.0[Self::idx(a, b, c, d)] = value;
    }

    /// `T(w, z, x, y) = T_{abcd} w^a z^b x^c y^d`.
    pub fn contract(&self, w: &Vec4, z: &Vec4, x: &Vec4, y: &Vec4) -> f64 {
        let mut s = 0.0;
        for a in 0..4 {
            if w[a] == 0.0 {
                continue;
            }
            for b in 0..4 {
                let wz = w[a] * z[b];
                if wz == 0.0 {
                    continue;
                }
                for c in 0..4 {
                    let wzx = wz * x[c];
                    if wzx == 0.0 {
                        continue;
                    }
                    for d in 0..4 {
                        s += wzx * y[d] * self.get(a, b, c, d);
                    }
                }
            }
        }
        s
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// All curvature data of the ambient metric at one point.
#[derive(Debug, Clone)]
pub struct CurvatureBundle {
    pub christoffel: Christoffel,
    pub riemann: Tensor4,
    pub ricci: Mat4,
    pub scalar: f64,
    pub weyl: Tensor4,
}

impl CurvatureBundle {
    /// Builds Riemann, Ricci, scalar and Weyl from `Γ` and `∂_c Γ` (`dgamma[c]`).
    pub fn from_connection(metric: &Metric4, gamma: Christoffel, dgamma: &[Christoffel; 4]) -> Self {
        let g = metric.components();
        let inv = metric.inverse();
        let mut mixed = Tensor4::zero();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let mut v = dgamma[c].get(a, d, b) - dgamma[d].get(a, c, b);
                        for e in 0..4 {
                            v += gamma.get(a, c, e) * gamma.get(e, d, b) - gamma.get(a, d, e) * gamma.get(e, c, b);
                        }
                        mixed.set(a, b, c, d, v);
                    }
                }
            }
        }
        let mut riemann = Tensor4::zero();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = (0..4).map(|e| g[(a, e)] * mixed.get(e, b, c, d)).sum();
                        riemann.set(a, b, c, d, v);
                    }
                }
            }
        }
        let mut ricci = Mat4::zeros();
        for b in 0..4 {
            for d in 0..4 {
                let mut v = 0.0;
                for a in 0..4 {
                    for c in 0..4 {
                        v += inv[(a, c)] * riemann.get(a, b, c, d);
                    }
                }
                ricci[(b, d)] = v;
            }
        }
        let scalar = (0..4)
            .flat_map(|b| (0..4).map(move |d| (b, d)))
            .map(|(b, d)| inv[(b, d)] * ricci[(b, d)])
            .sum::<f64>();
        let weyl = weyl_tensor(g, &riemann, &ricci, scalar);
        Self {
            christoffel: gamma,
            riemann,
            ricci,
            scalar,
            weyl,
        }
    }

    pub fn ricci_form(&self, x: &Vec4, y: &Vec4) -> f64 {
        x.dot(&(self.ricci * y))
    }

    /// Largest violation of `R_abcd = -R_bacd = -R_abdc = R_cdab`.
    pub fn pair_symmetry_residual(&self) -> f64 {
        let r = &self.riemann;
        let mut m: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = r.get(a, b, c, d);
                        m = m
                            .max((v + r.get(b, a, c, d)).abs())
                            .max((v + r.get(a, b, d, c)).abs())
                            .max((v - r.get(c, d, a, b)).abs());
                    }
                }
            }
        }
        m
    }

    /// Largest `|R_abcd + R_acdb + R_adbc|`.
    pub fn bianchi_residual(&self) -> f64 {
        let r = &self.riemann;
        let mut m: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = r.get(a, b, c, d) + r.get(a, c, d, b) + r.get(a, d, b, c);
                        m = m.max(v.abs());
                    }
                }
            }
        }
        m
    }

    /// Largest contraction of the Weyl tensor with the inverse metric.
    pub fn weyl_trace_residual(&self, metric: &Metric4) -> f64 {
        let inv = metric.inverse();
        let w = &self.weyl;
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let mut ac = 0.0;
                let mut ad = 0.0;
                let mut ab = 0.0;
                for p in 0..4 {
                    for q in 0..4 {
                        let h = inv[(p, q)];
                        ac += h * w.get(p, i, q, j);
                        ad += h * w.get(p, i, j, q);
                        ab += h * w.get(p, q, i, j);
                    }
                }
                m = m.max(ac.abs()).max(ad.abs()).max(ab.abs());
            }
        }
        m
    }
}

/// `C(v,w,y,z) = R(v,w,y,z) + S/6 (g_vy g_wz - g_vz g_wy)
///   - 1/2 [Ric_vy g_wz - Ric_vz g_wy - Ric_wy g_vz + Ric_wz g_vy]`.
fn weyl_tensor(g: &Mat4, riemann: &Tensor4, ricci: &Mat4, scalar: f64) -> Tensor4 {
    let mut c = Tensor4::zero();
    for v in 0..4 {
        for w in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    let val = riemann.get(v, w, y, z) + scalar / 6.0 * (g[(v, y)] * g[(w, z)] - g[(v, z)] * g[(w, y)])
                        - 0.5
                            * (ricci[(v, y)] * g[(w, z)] - ricci[(v, z)] * g[(w, y)] - ricci[(w, y)] * g[(v, z)]
                                + ricci[(w, z)] * g[(v, y)]);
                    c.set(v, w, y, z, val);
                }
            }
        }
    }
    c
}

/// Conformal Killing data `L_ξ g = 2 φ g` at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalKilling {
    pub xi: Vec4,
    pub phi: f64,
}

/// A closed-form Lorentzian metric on a single chart.
pub trait Spacetime: Send + Sync + fmt::Debug {
    fn name(&self) -> String;

    fn in_chart(&self, x: &SpacetimePoint) -> bool;

    /// Raw metric components; only called on points inside the chart.
    fn metric_components(&self, x: &SpacetimePoint) -> Mat4;

    /// Closed-form `Γ^a_{bc}`, when the model ships them.
    fn christoffel(&self, _x: &SpacetimePoint) -> Option<Christoffel> {
        None
    }

    /// A covector `τ` with `τ(V) > 0` for every future-pointing timelike `V`.
    fn future_covector(&self, x: &SpacetimePoint) -> Covector;

    fn constant_curvature(&self) -> Option<f64> {
        None
    }

    fn conformally_flat(&self) -> bool {
        false
    }

    /// Integrable conformal Killing vector and its factor, if the model has one.
    fn conformal_killing(&self, _x: &SpacetimePoint) -> Option<ConformalKilling> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Differentiation {
    /// Closed-form Christoffel symbols, falling back to finite differences
    /// when the model has none.
    Analytic,
    /// Second-order central differences of the metric.
    FiniteDifference { step: f64 },
}

/// An immutable spacetime together with its differentiation strategy.
#[derive(Clone)]
pub struct SpacetimeModel {
    inner: Arc<dyn Spacetime>,
    diff: Differentiation,
    fd_step: f64,
    curvature_step: f64,
}

impl fmt::Debug for SpacetimeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpacetimeModel")
            .field("spacetime", &self.inner)
            .field("diff", &self.diff)
            .finish()
    }
}

impl SpacetimeModel {
    pub fn new<S: Spacetime + 'static>(spacetime: S) -> Self {
        Self::from_arc(Arc::new(spacetime))
    }

    pub fn from_arc(inner: Arc<dyn Spacetime>) -> Self {
        Self {
            inner,
            diff: Differentiation::Analytic,
            fd_step: 1e-5,
            curvature_step: 1e-3,
        }
    }

    pub fn with_differentiation(mut self, diff: Differentiation) -> Self {
        if let Differentiation::FiniteDifference { step } = diff {
            self.fd_step = step;
        }
        self.diff = diff;
        self
    }

    pub fn with_curvature_step(mut self, step: f64) -> Self {
        self.curvature_step = step;
        self
    }

    pub fn differentiation(&self) -> Differentiation {
        self.diff
    }

    /// True when Christoffel symbols come from closed forms.
    pub fn is_analytic(&self, x: &SpacetimePoint) -> bool {
        matches!(self.diff, Differentiation::Analytic) && self.inner.christoffel(x).is_some()
    }

    pub fn spacetime(&self) -> &dyn Spacetime {
        self.inner.as_ref()
    }

    pub fn name(&self) -> String {
        self.inner.name()
    }

    pub fn in_chart(&self, x: &SpacetimePoint) -> bool {
        self.inner.in_chart(x)
    }

    pub fn metric_at(&self, x: &SpacetimePoint) -> Result<Metric4> {
        if !self.inner.in_chart(x) {
            return Err(GeometryError::OutOfChart { coords: x.coords() });
        }
        Metric4::new(self.inner.metric_components(x))
    }

    pub fn future_covector(&self, x: &SpacetimePoint) -> Covector {
        self.inner.future_covector(x)
    }

    pub fn christoffel_at(&self, x: &SpacetimePoint) -> Result<Christoffel> {
        let metric = self.metric_at(x)?;
        if matches!(self.diff, Differentiation::Analytic) {
            if let Some(c) = self.inner.christoffel(x) {
                return Ok(c);
            }
        }
        self.christoffel_fd(x, &metric)
    }

    /// Central-difference Christoffel symbols regardless of the strategy.
    pub fn christoffel_fd_at(&self, x: &SpacetimePoint) -> Result<Christoffel> {
        let metric = self.metric_at(x)?;
        self.christoffel_fd(x, &metric)
    }

    fn christoffel_fd(&self, x: &SpacetimePoint, metric: &Metric4) -> Result<Christoffel> {
        let h = self.fd_step;
        let mut dg = [Mat4::zeros(); 4];
        for (c, slot) in dg.iter_mut().enumerate() {
            let plus = x.shifted(c, h);
            let minus = x.shifted(c, -h);
            if !self.inner.in_chart(&plus) || !self.inner.in_chart(&minus) {
                return Err(GeometryError::StencilOutOfDomain { coords: x.coords() });
            }
            let gp = self.inner.metric_components(&plus);
            let gm = self.inner.metric_components(&minus);
            *slot = (gp - gm) / (2.0 * h);
        }
        Ok(Christoffel::from_metric_derivatives(metric.inverse(), &dg))
    }

    /// Curvature from `Γ` and a sixth-order central stencil on `Γ`.
    pub fn curvature_at(&self, x: &SpacetimePoint) -> Result<CurvatureBundle> {
        let metric = self.metric_at(x)?;
        let gamma = self.christoffel_at(x)?;
        let h = self.curvature_step;
        let at = |p: SpacetimePoint| {
            self.christoffel_at(&p).map_err(|e| match e {
                GeometryError::OutOfChart { .. } | GeometryError::StencilOutOfDomain { .. } => {
                    GeometryError::StencilOutOfDomain { coords: x.coords() }
                }
                other => other,
            })
        };
        let mut dgamma = [
            Christoffel::zero(),
            Christoffel::zero(),
            Christoffel::zero(),
            Christoffel::zero(),
        ];
        let w = 1.0 / (60.0 * h);
        for (c, slot) in dgamma.iter_mut().enumerate() {
            let mut terms = Vec::with_capacity(6);
            for (o, wt) in [
                (3.0, 1.0),
                (2.0, -9.0),
                (1.0, 45.0),
                (-1.0, -45.0),
                (-2.0, 9.0),
                (-3.0, -1.0),
            ] {
                terms.push((wt * w, at(x.shifted(c, o * h))?));
            }
            let refs: Vec<(f64, &Christoffel)> = terms.iter().map(|(w, g)| (*w, g)).collect();
            *slot = Christoffel::combine(&refs);
        }
        Ok(CurvatureBundle::from_connection(&metric, gamma, &dgamma))
    }
}
