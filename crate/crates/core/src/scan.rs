//! Grid sweeps over a surface: per-point rows, summary and report encoding.

use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify_point, PointClassification, UmbilicalStatus};
use crate::error::GeometryError;
use crate::extrinsic::ExtrinsicState;
use crate::frame::{Gauge, SurfaceDifferentiation, SurfaceModel};
use crate::geometry::{Differentiation, SpacetimeModel};
use crate::scenarios::{catalog, spacetime_by_name, surface_by_name, CatalogError, Expectation, UmbilicalExpectation};
use crate::tolerance::Tolerances;
use crate::verify::{verify_point, ResidualReport, VerifyOptions};

pub const SCHEMA: &str = "umbilic-scan/1";

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "UMBILIC_SCAN_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classify,
    Verify,
    Full,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "classify" => Ok(Mode::Classify),
            "verify" => Ok(Mode::Verify),
            "full" => Ok(Mode::Full),
            _ => Err(format!("unknown mode `{s}` (expected classify, verify or full)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Classify => "classify",
            Mode::Verify => "verify",
            Mode::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected json or csv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub spacetime: String,
    pub surface: String,
    /// Cell counts along `u` and `v`.
    pub grid: (usize, usize),
    /// Parameter ranges; the surface's own range when absent.
    pub u_range: Option<[f64; 2]>,
    pub v_range: Option<[f64; 2]>,
    pub gauge: f64,
    pub tol_cls: Option<f64>,
    pub tol_ver: Option<f64>,
    /// Switches both models to finite differences with this step.
    pub fd_step: Option<f64>,
    pub mode: Mode,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            spacetime: "minkowski".into(),
            surface: "sphere".into(),
            grid: (16, 16),
            u_range: None,
            v_range: None,
            gauge: 0.0,
            tol_cls: None,
            tol_ver: None,
            fd_step: None,
            mode: Mode::Classify,
            format: Format::Json,
            seed: 0,
        }
    }
}

/// Errors that stop a run before or while sampling (exit code 2).
#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("at (u, v) = ({u}, {v}): {source}")]
    Domain {
        u: f64,
        v: f64,
        #[source]
        source: GeometryError,
    },
    #[error("cannot build thread pool: {0}")]
    Threads(String),
}

/// One sampled grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub i: usize,
    pub j: usize,
    pub u: f64,
    pub v: f64,
    pub x: [f64; 4],
    pub beta: f64,
    /// `H` on the canonical null frame, `H = a ℓ0 + b k0`.
    pub h_ell: f64,
    pub h_k: f64,
    pub h_norm2: f64,
    pub tr_ell: f64,
    pub tr_k: f64,
    /// `G` on the canonical null frame.
    pub g_ell: f64,
    pub g_k: f64,
    pub tr_b: f64,
    pub commutator_norm: f64,
    pub umbilical_status: String,
    /// `N_umb` on the canonical null frame.
    pub n_umb_ell: Option<f64>,
    pub n_umb_k: Option<f64>,
    pub causal: Option<String>,
    pub discriminant: f64,
    pub minimal: bool,
    pub totally_geodesic: bool,
    pub totally_umbilical: bool,
    pub pseudo_umbilical: Option<bool>,
    pub ortho_umbilical: Option<bool>,
    pub h_subgeodesic: Option<bool>,
    pub dim_first_normal_space: u8,
    pub h_causal: String,
    pub h_orientation: String,
    pub mots: bool,
    pub weakly_trapped: bool,
    pub trapped: bool,
    pub null_star: bool,
    pub joint: String,
    /// `s(∂_u), s(∂_v)` in the gauge `beta`.
    pub s_u: Option<f64>,
    pub s_v: Option<f64>,
    pub ds: Option<f64>,
    pub gaussian_curvature: Option<f64>,
    pub gauss: Option<f64>,
    pub ricci: Option<f64>,
    pub umbilic_criterion: Option<f64>,
    /// Normal and tangent pair attaining `umbilic_criterion`.
    pub umbilic_criterion_pair: Option<String>,
    pub normal_curvature: Option<f64>,
    pub weyl: Option<f64>,
    pub space_form: Option<f64>,
    pub casorati_ortho: Option<f64>,
    pub ckv: Option<f64>,
    pub boost_drift: Option<f64>,
    /// Names of the failed checks and expectations at this point.
    pub failures: Vec<String>,
}

fn debug_name<T: fmt::Debug>(t: &T) -> String {
    format!("{t:?}")
}

fn make_row(
    (i, j, u, v): (usize, usize, f64, f64),
    state: &ExtrinsicState,
    cls: &PointClassification,
    report: Option<&ResidualReport>,
    expectation: Option<&Expectation>,
    tol: &Tolerances,
) -> Row {
    let beta = state.pair.beta;
    let h = state.reference(state.mean.h);
    let g = state.reference(state.g_field.g);
    let n_umb = cls.umbilical.n_umb.map(|n| state.reference(n));
    let value = |f: fn(&ResidualReport) -> Option<crate::verify::Check>| report.and_then(f).map(|c| c.value);
    let mut failures = Vec::new();
    if let Some(r) = report {
        for (name, check) in r.checks() {
            if check.is_some_and(|c| !c.pass) {
                failures.push(name.to_string());
            }
        }
    }
    if let Some(e) = expectation {
        failures.extend(expectation_failures(e, (u, v), cls, report, tol));
    }
    Row {
        i,
        j,
        u,
        v,
        x: state.point.point.coords(),
        beta,
        h_ell: h.ell,
        h_k: h.k,
        h_norm2: state.mean.norm2,
        tr_ell: state.mean.tr_ell,
        tr_k: state.mean.tr_k,
        g_ell: g.ell,
        g_k: g.k,
        tr_b: state.casorati.tr,
        commutator_norm: cls.umbilical.commutator_norm,
        umbilical_status: debug_name(&cls.umbilical.status),
        n_umb_ell: n_umb.map(|n| n.ell),
        n_umb_k: n_umb.map(|n| n.k),
        causal: cls.umbilical.causal.as_ref().map(debug_name),
        discriminant: cls.umbilical.discriminant,
        minimal: cls.minimal,
        totally_geodesic: cls.totally_geodesic,
        totally_umbilical: cls.totally_umbilical,
        pseudo_umbilical: cls.pseudo_umbilical,
        ortho_umbilical: cls.ortho_umbilical,
        h_subgeodesic: cls.h_subgeodesic,
        dim_first_normal_space: cls.dim_first_normal_space,
        h_causal: debug_name(&cls.h_causal),
        h_orientation: debug_name(&cls.h_orientation),
        mots: cls.tags.mots,
        weakly_trapped: cls.tags.weakly_trapped,
        trapped: cls.tags.trapped,
        null_star: cls.tags.null_star,
        joint: debug_name(&cls.joint),
        s_u: state.connection.map(|c| c.s[0]),
        s_v: state.connection.map(|c| c.s[1]),
        ds: state.ds(),
        gaussian_curvature: report.and_then(|r| r.gaussian_curvature),
        gauss: value(|r| r.gauss),
        ricci: value(|r| r.ricci),
        umbilic_criterion: value(|r| r.umbilic_criterion),
        umbilic_criterion_pair: report.and_then(|r| r.umbilic_criterion_pair.clone()),
        normal_curvature: value(|r| r.normal_curvature),
        weyl: value(|r| r.weyl_flat),
        space_form: value(|r| r.space_form),
        casorati_ortho: value(|r| r.casorati_ortho),
        ckv: value(|r| r.ckv),
        boost_drift: value(|r| r.boost_invariance),
        failures,
    }
}

/// Names of the catalog expectations violated at a point.
pub fn expectation_failures(
    e: &Expectation,
    uv: (f64, f64),
    cls: &PointClassification,
    report: Option<&ResidualReport>,
    tol: &Tolerances,
) -> Vec<String> {
    let mut out = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            out.push(format!("expect:{name}"));
        }
    };
    match e.umbilical {
        Some(UmbilicalExpectation::Status(status, causal)) => {
            expect("umbilical", cls.umbilical.status == status);
            if causal.is_some() {
                expect("causal", cls.umbilical.causal == causal);
            }
        }
        Some(UmbilicalExpectation::Exists) => expect("umbilical", cls.umbilical.status != UmbilicalStatus::None),
        None => {}
    }
    if let Some(m) = e.minimal {
        expect("minimal", cls.minimal == m);
    }
    if let Some(t) = e.totally_umbilical {
        expect("totally_umbilical", cls.totally_umbilical == t);
    }
    if let Some(o) = e.ortho {
        expect("ortho_umbilical", cls.ortho_umbilical == o);
    }
    if let Some(p) = e.pseudo {
        expect("pseudo_umbilical", cls.pseudo_umbilical == p);
    }
    if let Some(j) = e.joint {
        expect("joint", cls.joint == j);
    }
    if let Some(m) = e.mots {
        expect("mots", cls.tags.mots == m);
    }
    if let (Some(k), Some(measured)) = (&e.gaussian_curvature, report.and_then(|r| r.gaussian_curvature)) {
        expect("gaussian_curvature", (k(uv.0, uv.1) - measured).abs() < tol.ver_stencil);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub evaluated: usize,
    pub failed: usize,
    pub max: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub points: usize,
    /// Flag name to number of points where it holds.
    pub counts: BTreeMap<String, usize>,
    pub identities: BTreeMap<String, IdentitySummary>,
    /// Expectation name to number of violating points.
    pub expectation_failures: BTreeMap<String, usize>,
    /// Catalog fixture whose expectations were checked.
    pub fixture: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub schema: String,
    pub config: RunConfig,
    pub spacetime: String,
    pub surface: String,
    pub u_range: [f64; 2],
    pub v_range: [f64; 2],
    pub tolerances: Tolerances,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl GridReport {
    /// 0 when every enabled check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.pass {
            0
        } else {
            1
        }
    }
}

fn summarize(rows: &[Row], fixture: Option<String>, tol: &Tolerances) -> Summary {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut bump = |name: &str, on: bool| {
        *counts.entry(name.to_string()).or_default() += on as usize;
    };
    for r in rows {
        bump("minimal", r.minimal);
        bump("totally_geodesic", r.totally_geodesic);
        bump("totally_umbilical", r.totally_umbilical);
        bump("pseudo_umbilical", r.pseudo_umbilical == Some(true));
        bump("ortho_umbilical", r.ortho_umbilical == Some(true));
        bump("h_subgeodesic", r.h_subgeodesic == Some(true));
        bump(
            "umbilical_status:TotallyUmbilical",
            r.umbilical_status == "TotallyUmbilical",
        );
        bump(
            "umbilical_status:UniqueDirection",
            r.umbilical_status == "UniqueDirection",
        );
        bump("umbilical_status:None", r.umbilical_status == "None");
        bump("mots", r.mots);
        bump("weakly_trapped", r.weakly_trapped);
        bump("trapped", r.trapped);
        bump("null_star", r.null_star);
    }
    let mut identities = BTreeMap::new();
    let columns: [(&str, fn(&Row) -> Option<f64>, f64); 10] = [
        ("gauss", |r| r.gauss, tol.ver),
        ("ricci", |r| r.ricci, tol.ver_stencil),
        ("umbilic_criterion", |r| r.umbilic_criterion, tol.ver_stencil),
        ("normal_curvature", |r| r.normal_curvature, tol.ver),
        ("weyl_flat", |r| r.weyl, tol.geo),
        (
            "flat_normal",
            |r| r.ds.filter(|_| r.weyl.is_some()).map(f64::abs),
            tol.ver_stencil,
        ),
        ("space_form", |r| r.space_form, tol.ver),
        ("casorati_ortho", |r| r.casorati_ortho, tol.ver),
        ("ckv", |r| r.ckv, tol.ver),
        ("boost_invariance", |r| r.boost_drift, tol.gauge),
    ];
    for (name, get, tolerance) in columns {
        let values: Vec<f64> = rows.iter().filter_map(get).collect();
        if values.is_empty() {
            continue;
        }
        let failed = rows.iter().filter(|r| r.failures.iter().any(|f| f == name)).count();
        identities.insert(
            name.to_string(),
            IdentitySummary {
                evaluated: values.len(),
                failed,
                max: values.iter().copied().fold(0.0, f64::max),
                tolerance,
                pass: failed == 0,
            },
        );
    }
    let mut expectation_failures: BTreeMap<String, usize> = BTreeMap::new();
    for r in rows {
        for f in r.failures.iter().filter_map(|f| f.strip_prefix("expect:")) {
            *expectation_failures.entry(f.to_string()).or_default() += 1;
        }
    }
    let pass = rows.iter().all(|r| r.failures.is_empty());
    Summary {
        points: rows.len(),
        counts,
        identities,
        expectation_failures,
        fixture,
        pass,
    }
}

/// Cell-centred samples `lo + (i + ½)(hi - lo)/n`.
pub fn cell_centres(range: [f64; 2], n: usize) -> Vec<f64> {
    let step = (range[1] - range[0]) / n as f64;
    (0..n).map(|i| range[0] + (i as f64 + 0.5) * step).collect()
}

/// Models and tolerances selected by a configuration.
pub struct Resolved {
    pub spacetime: SpacetimeModel,
    pub surface: SurfaceModel,
    pub tolerances: Tolerances,
    pub expectation: Option<(String, Expectation)>,
}

pub fn resolve(config: &RunConfig) -> Result<Resolved, RunError> {
    let mut spacetime = spacetime_by_name(&config.spacetime)?;
    let mut surface = surface_by_name(&config.surface)?;
    let mut tol = Tolerances::analytic();
    if let Some(h) = config.fd_step {
        if !(h > 0.0 && h < 0.1) {
            return Err(RunError::Config(format!("--fd-step must lie in (0, 0.1), got {h}")));
        }
        tol = Tolerances::finite_difference();
        tol.metric_step = h;
        tol.surface_step = h;
        spacetime = spacetime.with_differentiation(Differentiation::FiniteDifference { step: h });
        surface = surface.with_differentiation(SurfaceDifferentiation::FiniteDifference {
            step: h,
            hessian_step: tol.hessian_step,
        });
    }
    if let Some(t) = config.tol_cls {
        if !(t > 0.0) {
            return Err(RunError::Config(format!("--tol-cls must be positive, got {t}")));
        }
        tol.cls = t;
    }
    if let Some(t) = config.tol_ver {
        if !(t > 0.0) {
            return Err(RunError::Config(format!("--tol-ver must be positive, got {t}")));
        }
        tol.ver = t;
        tol.ver_stencil = tol.ver_stencil.max(t);
    }
    spacetime = spacetime.with_curvature_step(tol.curvature_step);
    let (nu, nv) = config.grid;
    if nu == 0 || nv == 0 {
        return Err(RunError::Config("grid counts must be positive".into()));
    }
    if config.mode != Mode::Classify && (nu < 2 || nv < 2) {
        return Err(RunError::Config(
            "verify and full modes need at least 2 cells per direction".into(),
        ));
    }
    if !config.gauge.is_finite() {
        return Err(RunError::Config("gauge must be finite".into()));
    }
    let expectation = catalog().into_iter().find_map(|entry| {
        (entry.spacetime.name() == spacetime.name())
            .then(|| {
                entry
                    .surfaces
                    .into_iter()
                    .find(|f| f.surface.name() == surface.name())
                    .map(|f| (format!("{} / {}", entry.name, f.token), f.expectation))
            })
            .flatten()
    });
    Ok(Resolved {
        spacetime,
        surface,
        tolerances: tol,
        expectation,
    })
}

fn thread_pool() -> Result<rayon::ThreadPool, RunError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| RunError::Config(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(RunError::Config(format!("{THREADS_ENV} must be positive")));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| RunError::Threads(e.to_string()))
}

/// Samples the grid and runs the pipeline selected by `config.mode`.
pub fn run(config: &RunConfig) -> Result<GridReport, RunError> {
    let resolved = resolve(config)?;
    let Resolved {
        spacetime,
        surface,
        tolerances: tol,
        expectation,
    } = resolved;
    let (default_u, default_v) = surface.parameter_range();
    let u_range = config.u_range.unwrap_or(default_u);
    let v_range = config.v_range.unwrap_or(default_v);
    for (name, r, d) in [("u", u_range, default_u), ("v", v_range, default_v)] {
        if !(r[0] < r[1]) || r[0] < d[0] || r[1] > d[1] {
            return Err(RunError::Config(format!(
                "{name}-range [{}, {}] must be increasing and inside [{}, {}]",
                r[0], r[1], d[0], d[1]
            )));
        }
    }
    let us = cell_centres(u_range, config.grid.0);
    let vs = cell_centres(v_range, config.grid.1);
    let points: Vec<(usize, usize, f64, f64)> = us
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| vs.iter().enumerate().map(move |(j, &v)| (i, j, u, v)))
        .collect();

    let gauge = Gauge::Constant(config.gauge);
    let options = VerifyOptions {
        connection: true,
        boosts: if config.mode == Mode::Full { 2 } else { 0 },
        seed: config.seed,
    };
    let exp = expectation.as_ref().map(|(_, e)| e);
    let eval = |&(i, j, u, v): &(usize, usize, f64, f64)| -> Result<Row, RunError> {
        let wrap = |source| RunError::Domain { u, v, source };
        match config.mode {
            Mode::Classify => {
                let state = ExtrinsicState::compute(&surface, &spacetime, (u, v), &gauge, &tol, false).map_err(wrap)?;
                let cls = classify_point(&state, tol.cls);
                Ok(make_row((i, j, u, v), &state, &cls, None, exp, &tol))
            }
            Mode::Verify | Mode::Full => {
                let pv = verify_point(&surface, &spacetime, (u, v), &gauge, &tol, &options).map_err(wrap)?;
                Ok(make_row(
                    (i, j, u, v),
                    &pv.state,
                    &pv.classification,
                    Some(&pv.report),
                    exp,
                    &tol,
                ))
            }
        }
    };
    let pool = thread_pool()?;
    let rows = pool.install(|| points.par_iter().map(eval).collect::<Result<Vec<_>, _>>())?;
    let summary = summarize(&rows, expectation.map(|(n, _)| n), &tol);
    Ok(GridReport {
        schema: SCHEMA.into(),
        config: config.clone(),
        spacetime: spacetime.name(),
        surface: surface.name(),
        u_range,
        v_range,
        tolerances: tol,
        rows,
        summary,
    })
}

/// JSON formatter printing every float with 17 significant digits.
struct FixedFloats(serde_json::ser::PrettyFormatter<'static>);

impl serde_json::ser::Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", fmt_float(value))
    }
    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// `{:.16e}`, the shortest fixed-width form carrying 17 significant digits.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_json<W: io::Write>(report: &GridReport, writer: W) -> io::Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(writer, FixedFloats(serde_json::ser::PrettyFormatter::new()));
    report.serialize(&mut ser).map_err(io::Error::other)
}

pub fn to_json(report: &GridReport) -> String {
    let mut buf = Vec::new();
    write_json(report, &mut buf).expect("writing to a Vec cannot fail");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub const CSV_HEADER: [&str; 54] = [
    "i",
    "j",
    "u",
    "v",
    "x0",
    "x1",
    "x2",
    "x3",
    "beta",
    "h_ell",
    "h_k",
    "h_norm2",
    "tr_ell",
    "tr_k",
    "g_ell",
    "g_k",
    "tr_b",
    "commutator_norm",
    "umbilical_status",
    "n_umb_ell",
    "n_umb_k",
    "causal",
    "discriminant",
    "minimal",
    "totally_geodesic",
    "totally_umbilical",
    "pseudo_umbilical",
    "ortho_umbilical",
    "h_subgeodesic",
    "dim_first_normal_space",
    "h_causal",
    "h_orientation",
    "mots",
    "weakly_trapped",
    "trapped",
    "null_star",
    "joint",
    "s_u",
    "s_v",
    "ds",
    "gaussian_curvature",
    "gauss",
    "ricci",
    "umbilic_criterion",
    "umbilic_criterion_pair",
    "normal_curvature",
    "weyl",
    "space_form",
    "casorati_ortho",
    "ckv",
    "boost_drift",
    "failures",
    "spacetime",
    "surface",
];

fn opt_f(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

fn opt_b(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

impl Row {
    pub fn csv_record(&self, spacetime: &str, surface: &str) -> Vec<String> {
        let f = fmt_float;
        vec![
            self.i.to_string(),
            self.j.to_string(),
            f(self.u),
            f(self.v),
            f(self.x[0]),
            f(self.x[1]),
            f(self.x[2]),
            f(self.x[3]),
            f(self.beta),
            f(self.h_ell),
            f(self.h_k),
            f(self.h_norm2),
            f(self.tr_ell),
            f(self.tr_k),
            f(self.g_ell),
            f(self.g_k),
            f(self.tr_b),
            f(self.commutator_norm),
            self.umbilical_status.clone(),
            opt_f(self.n_umb_ell),
            opt_f(self.n_umb_k),
            self.causal.clone().unwrap_or_default(),
            f(self.discriminant),
            self.minimal.to_string(),
            self.totally_geodesic.to_string(),
            self.totally_umbilical.to_string(),
            opt_b(self.pseudo_umbilical),
            opt_b(self.ortho_umbilical),
            opt_b(self.h_subgeodesic),
            self.dim_first_normal_space.to_string(),
            self.h_causal.clone(),
            self.h_orientation.clone(),
            self.mots.to_string(),
            self.weakly_trapped.to_string(),
            self.trapped.to_string(),
            self.null_star.to_string(),
            self.joint.clone(),
            opt_f(self.s_u),
            opt_f(self.s_v),
            opt_f(self.ds),
            opt_f(self.gaussian_curvature),
            opt_f(self.gauss),
            opt_f(self.ricci),
            opt_f(self.umbilic_criterion),
            self.umbilic_criterion_pair.clone().unwrap_or_default(),
            opt_f(self.normal_curvature),
            opt_f(self.weyl),
            opt_f(self.space_form),
            opt_f(self.casorati_ortho),
            opt_f(self.ckv),
            opt_f(self.boost_drift),
            self.failures.join(";"),
            spacetime.to_string(),
            surface.to_string(),
        ]
    }
}

pub fn write_csv<W: io::Write>(report: &GridReport, writer: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CSV_HEADER).map_err(io::Error::other)?;
    for row in &report.rows {
        w.write_record(row.csv_record(&report.spacetime, &report.surface))
            .map_err(io::Error::other)?;
    }
    w.flush()
}

pub fn to_csv(report: &GridReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv output is UTF-8")
}
