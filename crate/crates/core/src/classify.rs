//! Umbilical-type classification of surface points.
//!
//! Every "= 0" test is `‖·‖ < τ·scale^p` where `scale = 1 + ‖A_ℓ0‖ + ‖A_k0‖`
//! is taken from the canonical-gauge null operators and `p` is the degree of
//! the tested quantity in the shape tensor. Normal vectors are compared in
//! canonical-frame null coordinates, so verdicts do not depend on the boost.

use nalgebra::{Matrix2, Matrix2x3, Vector2};
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::extrinsic::{ExtrinsicState, WeingartenPair};
use crate::normal::NullCoords;
use crate::sym2::{self, SymEigen2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UmbilicalStatus {
    TotallyUmbilical,
    UniqueDirection,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalCharacter {
    Timelike,
    Spacelike,
    Null,
}

/// Eigenvalues of `A_k` (`λ`) and `A_ℓ` (`ν`) evaluated on a shared basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenRecord {
    pub lambda: [f64; 2],
    pub nu: [f64; 2],
    /// Common eigenbasis, when the operators commute.
    pub basis: Option<[Vector2<f64>; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UmbilicalResult {
    pub status: UmbilicalStatus,
    /// `(λ₁-λ₂) ℓ - (ν₁-ν₂) k` in the pair's own frame.
    pub n_umb: Option<NullCoords>,
    pub commutator_norm: f64,
    pub causal: Option<CausalCharacter>,
    /// `g(H,H) - 2 trB`.
    pub discriminant: f64,
    pub eigen: EigenRecord,
    /// `‖A_N̂ - ½ g(H,N̂) 𝟙‖` for the unit (canonical coordinates) `N_umb`.
    pub residual: f64,
    pub scale: f64,
}

impl UmbilicalResult {
    pub fn has_direction(&self) -> bool {
        self.status != UmbilicalStatus::None
    }
}

/// `[A_ℓ, A_k]` and its Frobenius norm.
pub fn commutator(pair: &WeingartenPair) -> (Matrix2<f64>, f64) {
    let c = sym2::commutator(&pair.a_ell, &pair.a_k);
    (c, c.norm())
}

/// `A_N - ½ tr(A_N) 𝟙`, whose norm is the umbilical residual of `N`;
/// `tr A_N = g(H, N)`.
pub fn umbilical_residual(pair: &WeingartenPair, n: NullCoords) -> f64 {
    sym2::trace_free_norm(&pair.along(n))
}

/// `g(H,H) - 2 trB` from the operators.
pub fn causal_discriminant(pair: &WeingartenPair) -> f64 {
    let b = -sym2::anticommutator(&pair.a_k, &pair.a_ell);
    let tr_k = pair.a_k.trace();
    let tr_l = pair.a_ell.trace();
    let h2 = -2.0 * tr_k * tr_l;
    h2 - 2.0 * b.trace()
}

/// Constructive umbilical direction with its causal character.
pub fn umbilical_direction(pair: &WeingartenPair, tau: f64) -> UmbilicalResult {
    let scale = pair.scale();
    let canon = pair.canonical();
    let (_, comm) = commutator(&canon);
    let discriminant = causal_discriminant(pair);

    let shear_l = sym2::shear_squared(&canon.a_ell);
    let shear_k = sym2::shear_squared(&canon.a_k);
    let reference = if shear_l >= shear_k { &pair.a_ell } else { &pair.a_k };
    let basis = SymEigen2::new(reference).vectors;
    let rq = |m: &Matrix2<f64>, v: &Vector2<f64>| v.dot(&(m * v));
    let lambda = [rq(&pair.a_k, &basis[0]), rq(&pair.a_k, &basis[1])];
    let nu = [rq(&pair.a_ell, &basis[0]), rq(&pair.a_ell, &basis[1])];

    let mut result = UmbilicalResult {
        status: UmbilicalStatus::None,
        n_umb: None,
        commutator_norm: comm,
        causal: None,
        discriminant,
        eigen: EigenRecord {
            lambda,
            nu,
            basis: None,
        },
        residual: f64::NAN,
        scale,
    };
    if comm >= tau * scale * scale {
        return result;
    }
    result.eigen.basis = Some(basis);
    let n = NullCoords::new(lambda[0] - lambda[1], -(nu[0] - nu[1]));
    let n_ref = n.to_reference(pair.beta);
    if n_ref.coordinate_norm() < tau * scale {
        result.status = UmbilicalStatus::TotallyUmbilical;
        result.residual = sym2::trace_free_norm(&canon.a_ell).max(sym2::trace_free_norm(&canon.a_k));
        return result;
    }
    result.status = UmbilicalStatus::UniqueDirection;
    result.n_umb = Some(n);
    result.residual = umbilical_residual(&canon, n_ref.normalized());
    let threshold = tau * scale * scale;
    result.causal = Some(if discriminant.abs() < threshold {
        CausalCharacter::Null
    } else if discriminant < 0.0 {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Spacelike
    });
    result
}

/// Outcome of the exhaustive scan of the projective normal circle.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    /// Refined directions `cos θ ℓ0 + sin θ k0` whose residual passes.
    pub passing: Vec<NullCoords>,
    pub min_residual: f64,
    pub samples: usize,
}

/// Scans `N(θ) = cos θ ℓ0 + sin θ k0`, `θ ∈ [0, π)`, for directions with
/// `‖A_N - ½ tr(A_N) 𝟙‖ < threshold`, refining every discrete local minimum
/// by golden-section search.
pub fn normal_circle_scan(pair: &WeingartenPair, samples: usize, threshold: f64) -> ScanResult {
    let canon = pair.canonical();
    let pi = std::f64::consts::PI;
    let f = |theta: f64| umbilical_residual(&canon, NullCoords::new(theta.cos(), theta.sin()));
    let step = pi / samples as f64;
    let values: Vec<f64> = (0..samples).map(|i| f(i as f64 * step)).collect();
    let mut passing: Vec<NullCoords> = Vec::new();
    let mut min_residual = f64::INFINITY;
    for i in 0..samples {
        let prev = values[(i + samples - 1) % samples];
        let next = values[(i + 1) % samples];
        let here = values[i];
        if !(here <= prev && here <= next) {
            continue;
        }
        let centre = i as f64 * step;
        let (theta, value) = golden_section(&f, centre - step, centre + step);
        min_residual = min_residual.min(value);
        if value < threshold {
            let dir = NullCoords::new(theta.cos(), theta.sin());
            if passing.iter().all(|d| d.direction_gap(dir) > 1e-6) {
                passing.push(dir);
            }
        }
    }
    ScanResult {
        passing,
        min_residual,
        samples,
    }
}

fn golden_section(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() < 1e-15 {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HCausalClass {
    Zero,
    Timelike,
    Null,
    Spacelike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TimeOrientation {
    Future,
    Past,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of(x: f64, threshold: f64) -> Self {
        if x.abs() < threshold {
            Sign::Zero
        } else if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SurfaceTags {
    pub mots: bool,
    pub marginally_trapped: bool,
    pub weakly_trapped: bool,
    pub trapped: bool,
    pub null_star: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum JointCase {
    TotallyUmbilicalCase,
    NullHSubgeodesicMOTSCase,
    NotBoth,
}

/// Every point-wise flag of the surface taxonomy.
#[derive(Debug, Clone, PartialEq)]
pub struct PointClassification {
    pub minimal: bool,
    pub totally_geodesic: bool,
    pub totally_umbilical: bool,
    /// `None` at minimal points.
    pub pseudo_umbilical: Option<bool>,
    /// `|(trB)² - 4 detB|` below threshold, at non-minimal points.
    pub pseudo_invariant: Option<bool>,
    /// `A_{⋆⊥H} = 0`, `None` at minimal points.
    pub ortho_umbilical: Option<bool>,
    /// `II♭ ∧ H♭ = 0`, `None` at minimal points.
    pub h_subgeodesic: Option<bool>,
    /// Direction spanning the first normal space when it is a line,
    /// in canonical null coordinates.
    pub subgeodesic_along: Option<NullCoords>,
    pub dim_first_normal_space: u8,
    pub h_causal: HCausalClass,
    pub h_orientation: TimeOrientation,
    /// Signs of `(trA_ℓ, trA_k)`.
    pub expansion_signs: [Sign; 2],
    pub tags: SurfaceTags,
    pub umbilical: UmbilicalResult,
    pub joint: JointCase,
    pub scale: f64,
}

/// Classifies a Weingarten pair; every flag is boost invariant.
pub fn classify_pair(pair: &WeingartenPair, tau: f64) -> PointClassification {
    let scale = pair.scale();
    let lin = tau * scale;
    let quad = tau * scale * scale;
    let c = pair.canonical();

    let h = NullCoords::new(-c.a_k.trace(), -c.a_ell.trace());
    let minimal = h.coordinate_norm() < lin;
    let totally_geodesic = c.a_ell.norm().max(c.a_k.norm()) < lin;
    let g = NullCoords::new(
        sym2::shear_squared(&c.a_k).max(0.0).sqrt(),
        sym2::shear_squared(&c.a_ell).max(0.0).sqrt(),
    );
    let totally_umbilical = g.coordinate_norm() < lin;

    let b = -sym2::anticommutator(&c.a_k, &c.a_ell);
    let pseudo_tf = sym2::trace_free_norm(&b);
    let invariant = b.trace() * b.trace() - 4.0 * b.determinant();

    let h_hat = h.normalized();
    let ortho_res = c.along(h_hat.star()).norm();
    let ii = [(0, 0), (0, 1), (1, 1)].map(|(i, j)| NullCoords::new(-c.a_k[(i, j)], -c.a_ell[(i, j)]));
    let wedge_res = ii.iter().map(|v| v.wedge(h_hat).abs()).fold(0.0, f64::max);

    let (dim, along) = first_normal_space(&ii, lin);

    let h2 = h.norm2();
    let h_causal = if minimal {
        HCausalClass::Zero
    } else if h2.abs() < quad {
        HCausalClass::Null
    } else if h2 < 0.0 {
        HCausalClass::Timelike
    } else {
        HCausalClass::Spacelike
    };
    let h_orientation = match h_causal {
        HCausalClass::Timelike | HCausalClass::Null => {
            if h.ell > -lin && h.k > -lin {
                TimeOrientation::Future
            } else if h.ell < lin && h.k < lin {
                TimeOrientation::Past
            } else {
                TimeOrientation::NotApplicable
            }
        }
        _ => TimeOrientation::NotApplicable,
    };
    let expansion_signs = [Sign::of(c.a_ell.trace(), lin), Sign::of(c.a_k.trace(), lin)];
    let one_zero = (expansion_signs[0] == Sign::Zero) != (expansion_signs[1] == Sign::Zero);
    let mots = one_zero && !minimal;
    let causal_nonzero = matches!(h_causal, HCausalClass::Timelike | HCausalClass::Null);
    let tags = SurfaceTags {
        mots,
        marginally_trapped: mots,
        weakly_trapped: causal_nonzero && h_orientation != TimeOrientation::NotApplicable,
        trapped: h_causal == HCausalClass::Timelike && h_orientation != TimeOrientation::NotApplicable,
        null_star: h_causal == HCausalClass::Null,
    };

    let pseudo = (!minimal).then_some(pseudo_tf < quad);
    let ortho = (!minimal).then_some(ortho_res < lin);
    let mut out = PointClassification {
        minimal,
        totally_geodesic,
        totally_umbilical,
        pseudo_umbilical: pseudo,
        pseudo_invariant: (!minimal).then_some(invariant.abs() < 2.0 * quad * quad),
        ortho_umbilical: ortho,
        h_subgeodesic: (!minimal).then_some(wedge_res < lin),
        subgeodesic_along: along,
        dim_first_normal_space: dim,
        h_causal,
        h_orientation,
        expansion_signs,
        tags,
        umbilical: umbilical_direction(pair, tau),
        joint: JointCase::NotBoth,
        scale,
    };
    out.joint = joint_case(pair, &out, tau);
    out
}

pub fn classify_point(state: &ExtrinsicState, tau: f64) -> PointClassification {
    classify_pair(&state.pair, tau)
}

/// Rank of `span{II(e_i,e_j)}` by singular values of the orthonormal
/// components `[II₁₁, √2 II₁₂, II₂₂]`.
fn first_normal_space(ii: &[NullCoords; 3], threshold: f64) -> (u8, Option<NullCoords>) {
    let on = ii.map(|v| v.to_orthonormal());
    let r2 = std::f64::consts::SQRT_2;
    let m = Matrix2x3::new(on[0].0, r2 * on[1].0, on[2].0, on[0].1, r2 * on[1].1, on[2].1);
    let svd = m.svd(true, false);
    let mut sv = [(svd.singular_values[0], 0usize), (svd.singular_values[1], 1usize)];
    sv.sort_by(|a, b| b.0.total_cmp(&a.0));
    let dim = sv.iter().filter(|(s, _)| *s >= threshold).count() as u8;
    let along = if dim == 1 {
        let u = svd
            .u
            .expect("left singular vectors requested")
            .column(sv[0].1)
            .into_owned();
        Some(NullCoords::from_orthonormal(u[0], u[1]))
    } else {
        None
    };
    (dim, along)
}

/// Splits simultaneously pseudo- and ortho-umbilical points into the
/// totally umbilical case and the null-`H`, `B = 0` case.
pub fn pseudo_ortho_joint_check(state: &ExtrinsicState, tau: f64) -> JointCase {
    let cls = classify_point(state, tau);
    cls.joint
}

fn joint_case(pair: &WeingartenPair, cls: &PointClassification, tau: f64) -> JointCase {
    if cls.pseudo_umbilical != Some(true) || cls.ortho_umbilical != Some(true) {
        return JointCase::NotBoth;
    }
    let scale = cls.scale;
    let c = pair.canonical();
    let a = if c.a_ell.trace().abs() >= c.a_k.trace().abs() {
        c.a_ell
    } else {
        c.a_k
    };
    let umbilic = (a * 2.0 - Matrix2::identity() * a.trace()).norm();
    if umbilic < tau * scale {
        return JointCase::TotallyUmbilicalCase;
    }
    let h = NullCoords::new(-c.a_k.trace(), -c.a_ell.trace());
    let b = -sym2::anticommutator(&c.a_k, &c.a_ell);
    let quad = tau * scale * scale;
    if h.norm2().abs() < quad && b.norm() < quad {
        JointCase::NullHSubgeodesicMOTSCase
    } else {
        JointCase::NotBoth
    }
}

/// Unit-trace Weingarten shape `κ̃` of an ortho-umbilical point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoKappa {
    pub kappa: Matrix2<f64>,
    pub det: f64,
    /// `|tr κ̃ - 1|`.
    pub trace_residual: f64,
    /// `|trB - g(H,H)(1 - 2 det κ̃)|`.
    pub casorati_residual: f64,
}

pub fn ortho_kappa(pair: &WeingartenPair, tau: f64) -> Result<OrthoKappa> {
    let cls = classify_pair(pair, tau);
    if cls.ortho_umbilical != Some(true) {
        return Err(GeometryError::NotOrthoUmbilical);
    }
    let c = pair.canonical();
    let a = if c.a_ell.trace().abs() >= c.a_k.trace().abs() {
        c.a_ell
    } else {
        c.a_k
    };
    let kappa = a / a.trace();
    let det = kappa.determinant();
    let h2 = -2.0 * c.a_k.trace() * c.a_ell.trace();
    let tr_b = -sym2::anticommutator(&c.a_k, &c.a_ell).trace();
    Ok(OrthoKappa {
        kappa,
        det,
        trace_residual: (kappa.trace() - 1.0).abs(),
        casorati_residual: (tr_b - h2 * (1.0 - 2.0 * det)).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::{synthetic_weingarten, SyntheticMode};
    use crate::sym2::rotation;
    use proptest::prelude::*;

    fn diag(a: f64, b: f64) -> Matrix2<f64> {
        Matrix2::new(a, 0.0, 0.0, b)
    }

    #[test]
    fn diagonal_pair_commutes() {
        let p = WeingartenPair::new(diag(1.0, 2.0), diag(3.0, 5.0));
        assert_eq!(commutator(&p).1, 0.0);
        let r = umbilical_direction(&p, 1e-7);
        assert_eq!(r.status, UmbilicalStatus::UniqueDirection);
        let n = r.n_umb.unwrap();
        assert_eq!(n, NullCoords::new(2.0, -1.0));
        assert!(r.residual < 1e-12);
    }

    #[test]
    fn sphere_like_pair_is_totally_umbilical() {
        let c = 0.35;
        let p = WeingartenPair::new(Matrix2::identity() * c, -Matrix2::identity() * c);
        let cls = classify_pair(&p, 1e-7);
        assert_eq!(cls.umbilical.status, UmbilicalStatus::TotallyUmbilical);
        assert!(cls.totally_umbilical);
        assert_eq!(cls.pseudo_umbilical, Some(true));
        assert_eq!(cls.ortho_umbilical, Some(true));
        assert_eq!(cls.joint, JointCase::TotallyUmbilicalCase);
        assert_eq!(cls.h_causal, HCausalClass::Spacelike);
        let k = ortho_kappa(&p, 1e-7).unwrap();
        assert!((k.kappa - Matrix2::identity() * 0.5).norm() < 1e-14);
        assert!((k.det - 0.25).abs() < 1e-14);
    }

    #[test]
    fn torus_like_pair_is_timelike_umbilical_along_u() {
        let (k1, k2) = (2.0, 0.3);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let a_n = rotation(0.4) * diag(k1, k2) * rotation(0.4).transpose();
        let p = WeingartenPair::new(a_n * s, -a_n * s);
        let r = umbilical_direction(&p, 1e-7);
        assert_eq!(r.status, UmbilicalStatus::UniqueDirection);
        assert_eq!(r.causal, Some(CausalCharacter::Timelike));
        assert!((r.discriminant + (k1 - k2) * (k1 - k2)).abs() < 1e-12);
        let n = r.n_umb.unwrap();
        let u = NullCoords::from_orthonormal(1.0, 0.0);
        assert!(n.direction_gap(u) < 1e-12);
        assert!((n.ell.abs() - (k1 - k2) / std::f64::consts::SQRT_2).abs() < 1e-12);
        let cls = classify_pair(&p, 1e-7);
        assert_eq!(cls.ortho_umbilical, Some(true));
        assert_eq!(cls.pseudo_umbilical, Some(false));
        assert_eq!(cls.joint, JointCase::NotBoth);
        let kap = ortho_kappa(&p, 1e-7).unwrap();
        assert!((kap.det - k1 * k2 / ((k1 + k2) * (k1 + k2))).abs() < 1e-12);
        assert!(kap.casorati_residual < 1e-12);
    }

    #[test]
    fn non_ortho_pair_has_no_kappa() {
        let p = synthetic_weingarten(3, SyntheticMode::Noncommuting);
        assert!(matches!(ortho_kappa(&p, 1e-7), Err(GeometryError::NotOrthoUmbilical)));
    }

    #[test]
    fn minimal_flags_are_not_applicable() {
        let p = synthetic_weingarten(5, SyntheticMode::MinimalNoncommutingB);
        let cls = classify_pair(&p, 1e-7);
        assert!(cls.minimal);
        assert_eq!(cls.pseudo_umbilical, None);
        assert_eq!(cls.ortho_umbilical, None);
        assert_eq!(cls.umbilical.status, UmbilicalStatus::None);
        assert_eq!(cls.h_causal, HCausalClass::Zero);
        let b = -sym2::anticommutator(&p.a_k, &p.a_ell);
        assert!(sym2::trace_free_norm(&b) < 1e-12);
    }

    #[test]
    fn null_h_with_vanishing_casorati() {
        let p = synthetic_weingarten(9, SyntheticMode::NullHB0);
        let cls = classify_pair(&p, 1e-7);
        assert_eq!(cls.h_causal, HCausalClass::Null);
        assert!(cls.tags.null_star && cls.tags.mots);
        assert_eq!(cls.joint, JointCase::NullHSubgeodesicMOTSCase);
        assert_eq!(cls.umbilical.causal, Some(CausalCharacter::Null));
        assert_eq!(cls.dim_first_normal_space, 1);
    }

    #[test]
    fn scan_rejects_noncommuting_and_finds_unique_direction() {
        let p = synthetic_weingarten(11, SyntheticMode::Noncommuting);
        let s = normal_circle_scan(&p, 10_000, 1e-6 * p.scale());
        assert!(s.passing.is_empty());
        let q = synthetic_weingarten(11, SyntheticMode::Commuting);
        let s = normal_circle_scan(&q, 10_000, 1e-6 * q.scale());
        assert_eq!(s.passing.len(), 1);
        let n = umbilical_direction(&q, 1e-7).n_umb.unwrap();
        assert!(n.direction_gap(s.passing[0]) < 1e-8);
    }

    proptest! {
        #[test]
        fn causal_identity(a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64,
                           d in -2.0..2.0f64, e in -2.0..2.0f64, f in -2.0..2.0f64) {
            let p = WeingartenPair::new(Matrix2::new(a, b, b, c), Matrix2::new(d, e, e, f));
            let lhs = 4.0 * (p.a_k * p.a_ell).trace() - 2.0 * p.a_k.trace() * p.a_ell.trace();
            prop_assert!((lhs - causal_discriminant(&p)).abs() < 1e-12);
        }

        #[test]
        fn classification_is_boost_invariant(seed in 0u64..500, beta in -2.0..2.0f64) {
            for mode in [SyntheticMode::Commuting, SyntheticMode::Noncommuting, SyntheticMode::NullHB0] {
                let p = synthetic_weingarten(seed, mode);
                let a = classify_pair(&p, 1e-7);
                let b = classify_pair(&p.boosted(beta), 1e-7);
                prop_assert_eq!(a.umbilical.status, b.umbilical.status);
                prop_assert_eq!(a.umbilical.causal, b.umbilical.causal);
                prop_assert_eq!(a.ortho_umbilical, b.ortho_umbilical);
                prop_assert_eq!(a.pseudo_umbilical, b.pseudo_umbilical);
                prop_assert_eq!(a.h_causal, b.h_causal);
                prop_assert_eq!(a.tags, b.tags);
                prop_assert_eq!(a.joint, b.joint);
            }
        }

        #[test]
        fn ordered_basis_sign_matches_causal_character(seed in 0u64..2000) {
            let p = synthetic_weingarten(seed, SyntheticMode::Commuting);
            let r = umbilical_direction(&p, 1e-7);
            prop_assume!(r.status == UmbilicalStatus::UniqueDirection);
            let e = r.eigen;
            let prod = (e.lambda[0] - e.lambda[1]) * (e.nu[0] - e.nu[1]);
            let expected = if prod.abs() < 1e-7 * r.scale * r.scale {
                CausalCharacter::Null
            } else if prod > 0.0 {
                CausalCharacter::Spacelike
            } else {
                CausalCharacter::Timelike
            };
            prop_assert_eq!(r.causal, Some(expected));
        }

        #[test]
        fn ortho_umbilical_routes_agree(seed in 0u64..2000) {
            for mode in [SyntheticMode::Commuting, SyntheticMode::Noncommuting, SyntheticMode::NullHB0, SyntheticMode::OrthoUmbilical] {
                let p = synthetic_weingarten(seed, mode);
                let c = classify_pair(&p, 1e-7);
                if !c.minimal {
                    let sub = c.dim_first_normal_space <= 1;
                    prop_assert_eq!(c.ortho_umbilical, Some(sub));
                    prop_assert_eq!(c.h_subgeodesic, Some(sub));
                }
                if c.totally_geodesic {
                    prop_assert!(c.totally_umbilical);
                }
            }
        }
    }
}
