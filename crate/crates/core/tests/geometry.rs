use proptest::prelude::*;

use umbilic::geometry::{SpacetimeModel, SpacetimePoint};
use umbilic::scan::cell_centres;
use umbilic::scenarios::catalog;
use umbilic::scenarios::spacetimes::{DeSitter, Schwarzschild, StaticProduct};
use umbilic::tolerance::Tolerances;

/// Every catalog spacetime with the points its fixtures sample on a 4x4 grid.
fn catalog_points() -> Vec<(String, SpacetimeModel, Option<f64>, bool, Vec<SpacetimePoint>)> {
    catalog()
        .into_iter()
        .map(|entry| {
            let mut points = Vec::new();
            for f in &entry.surfaces {
                let (ur, vr) = f.surface.parameter_range();
                for u in cell_centres(ur, 4) {
                    for v in cell_centres(vr, 4) {
                        points.push(f.surface.position(u, v).expect("fixture point"));
                    }
                }
            }
            (
                entry.name,
                entry.spacetime,
                entry.constant_curvature,
                entry.conformally_flat,
                points,
            )
        })
        .collect()
}

#[test]
fn riemann_symmetries_and_weyl_traces() {
    let tol = Tolerances::analytic();
    for (name, model, _, _, points) in catalog_points() {
        for x in &points {
            let c = model.curvature_at(x).unwrap();
            let metric = model.metric_at(x).unwrap();
            assert!(c.pair_symmetry_residual() < tol.geo, "{name} {:?}", x.coords());
            assert!(
                c.bianchi_residual() < tol.geo,
                "{name} {:?}: {:e}",
                x.coords(),
                c.bianchi_residual()
            );
            assert!(c.weyl_trace_residual(&metric) < tol.geo, "{name} {:?}", x.coords());
        }
    }
}

#[test]
fn weyl_vanishes_on_conformally_flat_models() {
    for (name, model, _, flat, points) in catalog_points() {
        if !flat {
            continue;
        }
        for x in &points {
            let w = model.curvature_at(x).unwrap().weyl.max_abs();
            assert!(w < 1e-8, "{name} {:?}: {w:e}", x.coords());
        }
    }
}

#[test]
fn constant_curvature_componentwise() {
    for (name, model, k, _, points) in catalog_points() {
        let Some(k) = k else { continue };
        for x in &points {
            let c = model.curvature_at(x).unwrap();
            let g = *model.metric_at(x).unwrap().components();
            for a in 0..4 {
                for b in 0..4 {
                    for cc in 0..4 {
                        for d in 0..4 {
                            let expected = k * (g[(a, cc)] * g[(b, d)] - g[(a, d)] * g[(b, cc)]);
                            let got = c.riemann.get(a, b, cc, d);
                            assert!(
                                (got - expected).abs() < 1e-8,
                                "{name} R_{a}{b}{cc}{d} = {got} vs {expected}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn analytic_and_difference_christoffels_agree() {
    for (name, model, _, _, points) in catalog_points() {
        for x in &points {
            let analytic = model.christoffel_at(x).unwrap();
            let fd = model.christoffel_fd_at(x).unwrap();
            let diff = analytic.max_abs_diff(&fd);
            assert!(diff < 1e-6, "{name} {:?}: {diff:e}", x.coords());
        }
    }
}

#[test]
fn schwarzschild_is_vacuum_with_weyl_equal_to_riemann() {
    let model = SpacetimeModel::new(Schwarzschild::new(1.0));
    let x = SpacetimePoint::new([0.0, 4.0, 1.1, 0.3]);
    let c = model.curvature_at(&x).unwrap();
    assert!(c.ricci.amax() < 1e-6);
    assert!(c.scalar.abs() < 1e-6);
    let gamma = model.christoffel_at(&x).unwrap();
    assert!((gamma.get(1, 0, 0) - 1.0 / 32.0).abs() < 1e-12);
    let mut worst: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            for cc in 0..4 {
                for d in 0..4 {
                    worst = worst.max((c.weyl.get(a, b, cc, d) - c.riemann.get(a, b, cc, d)).abs());
                }
            }
        }
    }
    assert!(worst < 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn de_sitter_has_constant_sectional_curvature(
        k in 0.2f64..2.0,
        t in -0.4f64..0.4,
        x in -0.5f64..0.5,
        y in -0.5f64..0.5,
        z in -0.5f64..0.5,
    ) {
        let model = SpacetimeModel::new(DeSitter::new(k));
        let p = SpacetimePoint::new([t, x, y, z]);
        prop_assume!(model.in_chart(&p));
        let c = model.curvature_at(&p).unwrap();
        let g = *model.metric_at(&p).unwrap().components();
        // R_0101 = K (g_00 g_11 - g_01²)
        let expected = k * (g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(0, 1)]);
        prop_assert!((c.riemann.get(0, 1, 0, 1) - expected).abs() < 1e-8);
        prop_assert!(c.weyl.max_abs() < 1e-8);
        prop_assert!((c.scalar - 12.0 * k).abs() < 1e-7);
    }

    #[test]
    fn static_product_difference_christoffels_converge(
        x in -1.0f64..1.0,
        y in -1.0f64..1.0,
        z in -1.0f64..1.0,
        alpha in 0.05f64..0.5,
    ) {
        let model = SpacetimeModel::new(StaticProduct::new(alpha));
        let p = SpacetimePoint::new([0.0, x, y, z]);
        let diff = model.christoffel_at(&p).unwrap().max_abs_diff(&model.christoffel_fd_at(&p).unwrap());
        prop_assert!(diff < 1e-6);
        let c = model.curvature_at(&p).unwrap();
        prop_assert!(c.pair_symmetry_residual() < 1e-9);
        prop_assert!(c.bianchi_residual() < 1e-9);
    }
}
