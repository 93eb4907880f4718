//! Catalog of closed-form spacetimes and surfaces with known ground truth.

pub mod spacetimes;
pub mod surfaces;

use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::Matrix2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{CausalCharacter, JointCase, UmbilicalStatus};
use crate::extrinsic::WeingartenPair;
use crate::frame::SurfaceModel;
use crate::geometry::SpacetimeModel;
use crate::sym2::rotation;

use spacetimes::{DeSitter, Flrw, Minkowski, Schwarzschild, SchwarzschildIngoing, StaticProduct};
use surfaces::{
    BoostedSphere, Helicoid, NoncommutingGraph, NullGraph, Plane, RSphere, SliceGraph, Sphere, TiltedRSphere, Torus,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown spacetime `{0}`")]
    UnknownSpacetime(String),
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error("`{name}` has no parameter `{key}`")]
    UnknownParameter { name: String, key: String },
    #[error("parameter `{key}` of `{name}` is not a number: `{value}`")]
    BadValue { name: String, key: String, value: String },
    #[error("malformed parameter list `{0}`, expected key=value pairs")]
    Malformed(String),
    #[error("parameter `{key}` of `{name}` is outside its admissible range")]
    OutOfRange { name: String, key: String },
}

/// A `name:key=val,key=val` token.
struct Token {
    name: String,
    params: BTreeMap<String, f64>,
}

impl Token {
    fn parse(
        token: &str,
        allowed: impl Fn(&str) -> Option<&'static [&'static str]>,
        unknown: fn(String) -> CatalogError,
    ) -> Result<Self, CatalogError> {
        let (name, rest) = match token.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (token.trim(), None),
        };
        let keys = allowed(name).ok_or_else(|| unknown(name.to_string()))?;
        let mut params = BTreeMap::new();
        if let Some(rest) = rest.filter(|r| !r.trim().is_empty()) {
            for pair in rest.split(',') {
                let (k, v) = pair
                    .split_once('=')
                    .ok_or_else(|| CatalogError::Malformed(rest.to_string()))?;
                let (k, v) = (k.trim(), v.trim());
                if !keys.contains(&k) {
                    return Err(CatalogError::UnknownParameter {
                        name: name.to_string(),
                        key: k.to_string(),
                    });
                }
                let value: f64 = v.parse().map_err(|_| CatalogError::BadValue {
                    name: name.to_string(),
                    key: k.to_string(),
                    value: v.to_string(),
                })?;
                if !value.is_finite() {
                    return Err(CatalogError::BadValue {
                        name: name.to_string(),
                        key: k.to_string(),
                        value: v.to_string(),
                    });
                }
                params.insert(k.to_string(), value);
            }
        }
        Ok(Self {
            name: name.to_string(),
            params,
        })
    }

    fn get(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    fn positive(&self, key: &str, default: f64) -> Result<f64, CatalogError> {
        let v = self.get(key, default);
        if v > 0.0 {
            Ok(v)
        } else {
            Err(CatalogError::OutOfRange {
                name: self.name.clone(),
                key: key.to_string(),
            })
        }
    }
}

fn spacetime_keys(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "minkowski" => &[],
        "schwarzschild" | "schwarzschild-ef" => &["M"],
        "de-sitter" => &["K"],
        "flrw" => &["p"],
        "static-product" => &["alpha"],
        _ => return None,
    })
}

fn surface_keys(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "plane" => &["t0", "z0"],
        "sphere" => &["r", "t0"],
        "torus" => &["R", "a", "t0"],
        "boosted-sphere" => &["r", "rapidity"],
        "graph-noncommuting" => &["a", "b"],
        "null-graph" => &["p", "q"],
        "helicoid" => &["c", "t0"],
        "rsphere" => &["r", "t0"],
        "tilted-rsphere" => &["r", "eps"],
        "slice-graph" => &["a", "b", "c", "z0", "t0"],
        _ => return None,
    })
}

pub const SPACETIME_NAMES: &[&str] = &[
    "minkowski",
    "schwarzschild:M",
    "schwarzschild-ef:M",
    "de-sitter:K",
    "flrw:p",
    "static-product:alpha",
];

pub const SURFACE_NAMES: &[&str] = &[
    "plane:t0,z0",
    "sphere:r,t0",
    "torus:R,a,t0",
    "boosted-sphere:r,rapidity",
    "graph-noncommuting:a,b",
    "null-graph:p,q",
    "helicoid:c,t0",
    "rsphere:r,t0",
    "tilted-rsphere:r,eps",
    "slice-graph:a,b,c,z0,t0",
];

/// Builds a catalog spacetime from a `name:key=val` token.
pub fn spacetime_by_name(token: &str) -> Result<SpacetimeModel, CatalogError> {
    let t = Token::parse(token, spacetime_keys, CatalogError::UnknownSpacetime)?;
    Ok(match t.name.as_str() {
        "minkowski" => SpacetimeModel::new(Minkowski),
        "schwarzschild" => SpacetimeModel::new(Schwarzschild::new(t.positive("M", 1.0)?)),
        "schwarzschild-ef" => SpacetimeModel::new(SchwarzschildIngoing::new(t.positive("M", 1.0)?)),
        "de-sitter" => SpacetimeModel::new(DeSitter::new(t.get("K", 1.0))),
        "flrw" => SpacetimeModel::new(Flrw::new(t.get("p", 2.0))),
        "static-product" => SpacetimeModel::new(StaticProduct::new(t.get("alpha", 0.3))),
        _ => unreachable!("names are validated by the key table"),
    })
}

/// Builds a catalog surface from a `name:key=val` token.
pub fn surface_by_name(token: &str) -> Result<SurfaceModel, CatalogError> {
    let t = Token::parse(token, surface_keys, CatalogError::UnknownSurface)?;
    Ok(match t.name.as_str() {
        "plane" => SurfaceModel::new(Plane::new(t.get("t0", 0.0), t.get("z0", 0.0))),
        "sphere" => SurfaceModel::new(Sphere::new(t.positive("r", 1.0)?, t.get("t0", 0.0))),
        "torus" => {
            let big = t.positive("R", 2.0)?;
            let small = t.positive("a", 0.5)?;
            if small >= big {
                return Err(CatalogError::OutOfRange {
                    name: t.name.clone(),
                    key: "a".into(),
                });
            }
            SurfaceModel::new(Torus::new(big, small, t.get("t0", 0.0)))
        }
        "boosted-sphere" => SurfaceModel::new(BoostedSphere::new(t.positive("r", 1.0)?, t.get("rapidity", 0.5))),
        "graph-noncommuting" => SurfaceModel::new(NoncommutingGraph {
            a: t.get("a", 0.1),
            b: t.get("b", 0.1),
        }),
        "null-graph" => SurfaceModel::new(NullGraph::new(t.get("p", 0.5), t.get("q", 0.2))),
        "helicoid" => SurfaceModel::new(Helicoid::new(t.positive("c", 0.7)?, t.get("t0", 0.0))),
        "rsphere" => SurfaceModel::new(RSphere::at_time(t.positive("r", 4.0)?, t.get("t0", 0.0))),
        "tilted-rsphere" => SurfaceModel::new(TiltedRSphere::new(t.positive("r", 4.0)?, t.get("eps", 0.1))),
        "slice-graph" => {
            let d = SliceGraph::default();
            SurfaceModel::new(SliceGraph {
                a: t.get("a", d.a),
                b: t.get("b", d.b),
                c: t.get("c", d.c),
                z0: t.get("z0", d.z0),
                t0: t.get("t0", d.t0),
            })
        }
        _ => unreachable!("names are validated by the key table"),
    })
}

/// Closed-form scalar on the parameter domain.
pub type ClosedForm = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UmbilicalExpectation {
    Status(UmbilicalStatus, Option<CausalCharacter>),
    /// Some umbilical direction exists (commuting operators).
    Exists,
}

/// Expected classification of a fixture at every sampled point.
#[derive(Clone, Default)]
pub struct Expectation {
    pub umbilical: Option<UmbilicalExpectation>,
    pub minimal: Option<bool>,
    pub totally_umbilical: Option<bool>,
    /// `Some(None)` expects the not-applicable verdict of minimal points.
    pub ortho: Option<Option<bool>>,
    pub pseudo: Option<Option<bool>>,
    pub joint: Option<JointCase>,
    pub mots: Option<bool>,
    pub gaussian_curvature: Option<ClosedForm>,
    /// How each expected value was obtained.
    pub provenance: &'static str,
}

impl fmt::Debug for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Expectation")
            .field("umbilical", &self.umbilical)
            .field("minimal", &self.minimal)
            .field("totally_umbilical", &self.totally_umbilical)
            .field("ortho", &self.ortho)
            .field("pseudo", &self.pseudo)
            .field("joint", &self.joint)
            .field("mots", &self.mots)
            .field("gaussian_curvature", &self.gaussian_curvature.is_some())
            .field("provenance", &self.provenance)
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct SurfaceFixture {
    /// CLI token reproducing the surface.
    pub token: String,
    pub surface: SurfaceModel,
    pub expectation: Expectation,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// CLI token reproducing the spacetime.
    pub name: String,
    pub spacetime: SpacetimeModel,
    pub constant_curvature: Option<f64>,
    pub conformally_flat: bool,
    /// The model declares an integrable conformal Killing vector and every
    /// fixture lies in one of its orthogonal hypersurfaces.
    pub ckv_fixtures: bool,
    pub surfaces: Vec<SurfaceFixture>,
}

fn fixture(token: &str, expectation: Expectation) -> SurfaceFixture {
    SurfaceFixture {
        token: token.to_string(),
        surface: surface_by_name(token).expect("catalog tokens are valid"),
        expectation,
    }
}

fn totally_umbilical(k: ClosedForm, provenance: &'static str) -> Expectation {
    Expectation {
        umbilical: Some(UmbilicalExpectation::Status(UmbilicalStatus::TotallyUmbilical, None)),
        minimal: Some(false),
        totally_umbilical: Some(true),
        ortho: Some(Some(true)),
        pseudo: Some(Some(true)),
        joint: Some(JointCase::TotallyUmbilicalCase),
        gaussian_curvature: Some(k),
        provenance,
        ..Default::default()
    }
}

fn constant(k: f64) -> ClosedForm {
    Arc::new(move |_, _| k)
}

/// Every catalog spacetime with its surface fixtures.
pub fn catalog() -> Vec<CatalogEntry> {
    let timelike = Some(UmbilicalExpectation::Status(
        UmbilicalStatus::UniqueDirection,
        Some(CausalCharacter::Timelike),
    ));
    let torus = Torus::new(2.0, 0.5, 0.0);
    let helicoid = Helicoid::new(0.7, 0.0);
    let flrw = Flrw::new(2.0);
    let eta0 = 1.5;
    let a0 = flrw.scale_factor(eta0);
    let ds_k = |r: f64, t0: f64| {
        let d: f64 = 1.0 + 0.25 * (r * r - t0 * t0);
        d * d / (r * r)
    };

    vec![
        CatalogEntry {
            name: "minkowski".into(),
            spacetime: SpacetimeModel::new(Minkowski),
            constant_curvature: Some(0.0),
            conformally_flat: true,
            ckv_fixtures: false,
            surfaces: vec![
                fixture(
                    "plane:t0=0,z0=0",
                    Expectation {
                        umbilical: Some(UmbilicalExpectation::Status(UmbilicalStatus::TotallyUmbilical, None)),
                        minimal: Some(true),
                        totally_umbilical: Some(true),
                        ortho: Some(None),
                        pseudo: Some(None),
                        gaussian_curvature: Some(constant(0.0)),
                        provenance: "flat plane: II = 0",
                        ..Default::default()
                    },
                ),
                fixture(
                    "sphere:r=2,t0=0",
                    totally_umbilical(constant(0.25), "Euclidean sphere: A_n = 𝟙/r, A_u = 0, K = 1/r²"),
                ),
                fixture(
                    "torus:R=2,a=0.5,t0=0",
                    Expectation {
                        umbilical: timelike,
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        ortho: Some(Some(true)),
                        pseudo: Some(Some(false)),
                        joint: Some(JointCase::NotBoth),
                        gaussian_curvature: Some(Arc::new(move |_, th| {
                            let (k1, k2) = torus.principal_curvatures(th);
                            k1 * k2
                        })),
                        provenance: "Euclidean torus: A_ℓ = -A_k = A_n/√2, κ₁ ≠ κ₂, K = κ₁κ₂",
                        ..Default::default()
                    },
                ),
                fixture(
                    "boosted-sphere:r=1,rapidity=0.5",
                    totally_umbilical(constant(1.0), "unit sphere of a boosted inertial frame"),
                ),
                fixture(
                    "graph-noncommuting:a=0.1,b=0.1",
                    Expectation {
                        umbilical: Some(UmbilicalExpectation::Status(UmbilicalStatus::None, None)),
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        provenance: "normal-circle scan finds no umbilical direction",
                        ..Default::default()
                    },
                ),
                fixture(
                    "null-graph:p=0.5,q=0.2",
                    Expectation {
                        umbilical: Some(UmbilicalExpectation::Status(
                            UmbilicalStatus::UniqueDirection,
                            Some(CausalCharacter::Null),
                        )),
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        ortho: Some(Some(true)),
                        pseudo: Some(Some(true)),
                        joint: Some(JointCase::NullHSubgeodesicMOTSCase),
                        mots: Some(true),
                        gaussian_curvature: Some(constant(0.0)),
                        provenance: "II along the null vector ∂t+∂z: one null operator vanishes, H null, B = 0, ḡ flat",
                    },
                ),
                fixture(
                    "helicoid:c=0.7,t0=0",
                    Expectation {
                        umbilical: timelike,
                        minimal: Some(true),
                        totally_umbilical: Some(false),
                        ortho: Some(None),
                        pseudo: Some(None),
                        gaussian_curvature: Some(Arc::new(move |u, _| helicoid.gaussian_curvature(u))),
                        provenance: "Euclidean minimal helicoid, A_u = 0, K = -c²/(u²+c²)²",
                        ..Default::default()
                    },
                ),
            ],
        },
        CatalogEntry {
            name: "schwarzschild:M=1".into(),
            spacetime: SpacetimeModel::new(Schwarzschild::new(1.0)),
            constant_curvature: None,
            conformally_flat: false,
            ckv_fixtures: false,
            surfaces: [2.5, 3.0, 4.0, 6.0]
                .into_iter()
                .map(|r| {
                    fixture(
                        &format!("rsphere:r={r},t0=0"),
                        totally_umbilical(constant(1.0 / (r * r)), "spherical symmetry; ḡ = r² dΩ²"),
                    )
                })
                .chain(std::iter::once(fixture(
                    "tilted-rsphere:r=4,eps=0.1",
                    Expectation {
                        provenance: "identity checks only",
                        ..Default::default()
                    },
                )))
                .collect(),
        },
        CatalogEntry {
            name: "schwarzschild-ef:M=1".into(),
            spacetime: SpacetimeModel::new(SchwarzschildIngoing::new(1.0)),
            constant_curvature: None,
            conformally_flat: false,
            ckv_fixtures: false,
            surfaces: vec![
                fixture(
                    "rsphere:r=2,t0=0",
                    Expectation {
                        mots: Some(true),
                        ..totally_umbilical(constant(0.25), "horizon cross-section: outgoing expansion vanishes")
                    },
                ),
                fixture(
                    "rsphere:r=3,t0=0",
                    Expectation {
                        mots: Some(false),
                        ..totally_umbilical(constant(1.0 / 9.0), "spherical symmetry; ḡ = r² dΩ²")
                    },
                ),
            ],
        },
        CatalogEntry {
            name: "de-sitter:K=1".into(),
            spacetime: SpacetimeModel::new(DeSitter::new(1.0)),
            constant_curvature: Some(1.0),
            conformally_flat: true,
            ckv_fixtures: false,
            surfaces: vec![
                fixture(
                    "sphere:r=0.8,t0=0",
                    totally_umbilical(constant(ds_k(0.8, 0.0)), "ḡ = (r/D)² dΩ² with constant D"),
                ),
                fixture(
                    "sphere:r=0.8,t0=0.3",
                    totally_umbilical(constant(ds_k(0.8, 0.3)), "ḡ = (r/D)² dΩ² with constant D"),
                ),
                fixture(
                    "torus:R=2,a=0.5,t0=0",
                    Expectation {
                        umbilical: timelike,
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        ortho: Some(Some(true)),
                        pseudo: Some(Some(false)),
                        provenance: "t = 0 is totally geodesic by time reflection, A_u = 0",
                        ..Default::default()
                    },
                ),
                fixture(
                    "torus:R=2,a=0.5,t0=0.3",
                    Expectation {
                        umbilical: timelike,
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        provenance: "umbilic slice: A_u ∝ 𝟙 commutes with A_n",
                        ..Default::default()
                    },
                ),
            ],
        },
        CatalogEntry {
            name: "flrw:p=2".into(),
            spacetime: SpacetimeModel::new(flrw),
            constant_curvature: None,
            conformally_flat: true,
            ckv_fixtures: true,
            surfaces: vec![
                fixture(
                    &format!("sphere:r=1,t0={eta0}"),
                    totally_umbilical(constant(1.0 / (a0 * a0)), "ḡ = a² r² dΩ²"),
                ),
                fixture(
                    &format!("torus:R=2,a=0.5,t0={eta0}"),
                    Expectation {
                        umbilical: timelike,
                        minimal: Some(false),
                        totally_umbilical: Some(false),
                        ortho: Some(Some(false)),
                        pseudo: Some(Some(false)),
                        gaussian_curvature: Some(Arc::new(move |_, th| {
                            let (k1, k2) = torus.principal_curvatures(th);
                            k1 * k2 / (a0 * a0)
                        })),
                        provenance: "η-slice is umbilic, A_u ∝ 𝟙; ḡ = a² times the Euclidean torus",
                        ..Default::default()
                    },
                ),
            ],
        },
        CatalogEntry {
            name: "static-product:alpha=0.3".into(),
            spacetime: SpacetimeModel::new(StaticProduct::new(0.3)),
            constant_curvature: None,
            conformally_flat: false,
            ckv_fixtures: true,
            surfaces: [
                "slice-graph:a=0.3,b=0.1,c=0.2,z0=0.5,t0=0",
                "sphere:r=1,t0=0",
                "torus:R=2,a=0.5,t0=0",
            ]
            .into_iter()
            .map(|token| {
                let sphere = token.starts_with("sphere");
                fixture(
                    token,
                    Expectation {
                        umbilical: Some(if sphere {
                            UmbilicalExpectation::Status(UmbilicalStatus::TotallyUmbilical, None)
                        } else {
                            UmbilicalExpectation::Exists
                        }),
                        minimal: Some(false),
                        totally_umbilical: Some(sphere),
                        ortho: Some(Some(true)),
                        provenance: if sphere {
                            "round sphere in the conformally flat slice e^{2w}δ: umbilicity is conformally invariant"
                        } else {
                            "surface in a Σ-slice of ℝ × Σ: ortho-umbilical"
                        },
                        ..Default::default()
                    },
                )
            })
            .collect(),
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SyntheticMode {
    /// Conjugates of two diagonal matrices by one rotation.
    Commuting,
    /// Trace-free parts at a bounded-below angle.
    Noncommuting,
    /// Trace-free, non-commuting, with `B ∝ 𝟙`.
    MinimalNoncommutingB,
    /// `A_ℓ = 0`, `A_k` with nonzero trace and shear: `H` null, `B = 0`.
    NullHB0,
    /// `A_ℓ = a κ`, `A_k = b κ`.
    OrthoUmbilical,
}

impl SyntheticMode {
    pub const ALL: [SyntheticMode; 5] = [
        SyntheticMode::Commuting,
        SyntheticMode::Noncommuting,
        SyntheticMode::MinimalNoncommutingB,
        SyntheticMode::NullHB0,
        SyntheticMode::OrthoUmbilical,
    ];
}

impl FromStr for SyntheticMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "commuting" => Self::Commuting,
            "noncommuting" => Self::Noncommuting,
            "minimal-noncommuting" => Self::MinimalNoncommutingB,
            "nullH-B0" => Self::NullHB0,
            "ortho-umbilical" => Self::OrthoUmbilical,
            _ => return Err(format!("unknown synthetic mode `{s}`")),
        })
    }
}

fn trace_free(r: f64, angle: f64) -> Matrix2<f64> {
    let (s, c) = angle.sin_cos();
    Matrix2::new(r * c, r * s, r * s, -r * c)
}

fn conjugate(angle: f64, d: (f64, f64)) -> Matrix2<f64> {
    let r = rotation(angle);
    r * Matrix2::new(d.0, 0.0, 0.0, d.1) * r.transpose()
}

/// Operator-level Weingarten pair with the defining property of `mode`.
pub fn synthetic_weingarten(seed: u64, mode: SyntheticMode) -> WeingartenPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((mode as u64) << 56));
    let pi = std::f64::consts::PI;
    match mode {
        SyntheticMode::Commuting => {
            let angle = rng.random_range(0.0..pi);
            let mut d = || (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            let (a, b) = (d(), d());
            WeingartenPair::new(conjugate(angle, a), conjugate(angle, b))
        }
        SyntheticMode::Noncommuting | SyntheticMode::MinimalNoncommutingB => {
            let alpha = rng.random_range(0.0..2.0 * pi);
            let offset = rng.random_range(0.2..(pi - 0.2));
            let r1 = rng.random_range(0.5..2.0);
            let r2 = rng.random_range(0.5..2.0);
            let p = trace_free(r1, alpha);
            let q = trace_free(r2, alpha + offset);
            if mode == SyntheticMode::MinimalNoncommutingB {
                WeingartenPair::new(p, q)
            } else {
                let t1 = rng.random_range(-2.0..2.0);
                let t2 = rng.random_range(-2.0..2.0);
                WeingartenPair::new(p + Matrix2::identity() * t1, q + Matrix2::identity() * t2)
            }
        }
        SyntheticMode::NullHB0 => {
            let angle = rng.random_range(0.0..pi);
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            let a1: f64 = rng.random_range(0.5..2.0);
            let a2 = a1 + rng.random_range(0.3..1.5);
            WeingartenPair::new(Matrix2::zeros(), conjugate(angle, (sign * a1, sign * a2)))
        }
        SyntheticMode::OrthoUmbilical => {
            let angle = rng.random_range(0.0..pi);
            let k1 = rng.random_range(0.2..2.0);
            let k2 = rng.random_range(-0.15..2.0);
            let kappa = conjugate(angle, (k1, k2));
            let a: f64 = rng.random_range(-2.0..2.0);
            let b: f64 = rng.random_range(-2.0..2.0);
            let b = if (a.abs() + b.abs()) < 0.3 { b + 1.0 } else { b };
            WeingartenPair::new(kappa * a, kappa * b)
        }
    }
}

/// `(A_ℓ, A_k)` of a Euclidean-slice surface with principal curvatures
/// `k1, k2`: `A_ℓ = -A_k = A_n/√2`.
pub fn slice_pair(k1: f64, k2: f64, angle: f64) -> WeingartenPair {
    let a_n = conjugate(angle, (k1, k2));
    WeingartenPair::new(a_n / SQRT_2, -a_n / SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym2::{anticommutator, commutator};

    #[test]
    fn parses_tokens() {
        let s = surface_by_name("sphere:r=2").unwrap();
        assert_eq!(s.name(), "sphere:r=2,t0=0");
        let st = spacetime_by_name("schwarzschild:M=1").unwrap();
        assert_eq!(st.name(), "schwarzschild:M=1");
        assert!(matches!(surface_by_name("cube"), Err(CatalogError::UnknownSurface(_))));
        assert!(matches!(
            surface_by_name("sphere:q=1"),
            Err(CatalogError::UnknownParameter { .. })
        ));
        assert!(matches!(
            surface_by_name("sphere:r=abc"),
            Err(CatalogError::BadValue { .. })
        ));
        assert!(matches!(surface_by_name("sphere:r"), Err(CatalogError::Malformed(_))));
        assert!(matches!(
            surface_by_name("sphere:r=-1"),
            Err(CatalogError::OutOfRange { .. })
        ));
        assert!(matches!(
            spacetime_by_name("kerr"),
            Err(CatalogError::UnknownSpacetime(_))
        ));
    }

    #[test]
    fn catalog_tokens_round_trip() {
        for entry in catalog() {
            assert_eq!(spacetime_by_name(&entry.name).unwrap().name(), entry.spacetime.name());
            for f in &entry.surfaces {
                assert_eq!(surface_by_name(&f.token).unwrap().name(), f.surface.name());
                assert!(!f.expectation.provenance.is_empty());
            }
        }
    }

    #[test]
    fn synthetic_modes_hold_by_construction() {
        for seed in 0..200 {
            let c = synthetic_weingarten(seed, SyntheticMode::Commuting);
            assert!(commutator(&c.a_ell, &c.a_k).norm() < 1e-14);
            let n = synthetic_weingarten(seed, SyntheticMode::Noncommuting);
            assert!(commutator(&n.a_ell, &n.a_k).norm() > 0.1);
            let m = synthetic_weingarten(seed, SyntheticMode::MinimalNoncommutingB);
            assert!(m.a_ell.trace().abs() < 1e-15 && m.a_k.trace().abs() < 1e-15);
            assert!(commutator(&m.a_ell, &m.a_k).norm() > 0.1);
            let b = anticommutator(&m.a_k, &m.a_ell);
            assert!((b[(0, 1)]).abs() < 1e-14 && (b[(0, 0)] - b[(1, 1)]).abs() < 1e-14);
            let z = synthetic_weingarten(seed, SyntheticMode::NullHB0);
            assert_eq!(z.a_ell, Matrix2::zeros());
            assert!(z.a_k.trace().abs() > 0.1);
            assert!(crate::sym2::shear_squared(&z.a_k) > 0.01);
        }
    }

    #[test]
    fn synthetic_is_deterministic() {
        for mode in SyntheticMode::ALL {
            assert_eq!(synthetic_weingarten(42, mode), synthetic_weingarten(42, mode));
        }
    }
}
