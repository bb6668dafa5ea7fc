use num_complex::Complex64;
use proptest::prelude::*;

use plasma_sheet::casimir::lifshitz_energy_per_area;
use plasma_sheet::numerics::riccati_bessel;
use plasma_sheet::polder::{f_te, f_tm, g_3, g_te, g_tm, h_3};
use plasma_sheet::sheet::{
    gamma_complex, gamma_minkowski, polarization_basis, reflection, reflection_te_at, reflection_te_euclidean,
    reflection_tm_at, reflection_tm_euclidean, tm_dispersion_residual, tm_plasmon_root, EuclideanMomentum,
    MinkowskiMomentum, Polarization, SheetParameters,
};
use plasma_sheet::sphere::{jost_evaluation, SphericalShell};
use plasma_sheet::sweep::{Cell, Column, Metadata, Row, Table};

fn sheet(omega: f64) -> SheetParameters {
    SheetParameters::single(omega).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_branch(k0 in -10.0..10.0f64, kpar in 0.0..10.0f64, im in 0.0..5.0f64) {
        let g = gamma_minkowski(&MinkowskiMomentum::from_kpar(k0, kpar));
        prop_assert!(g.im >= 0.0);
        prop_assert!(gamma_complex(Complex64::new(k0, im), kpar).im >= 0.0);
    }

    #[test]
    fn passive_above_light_cone(kpar in 0.01..5.0f64, excess in 1.001..10.0f64, omega in 0.0..20.0f64) {
        let k = MinkowskiMomentum::from_kpar(kpar * excess, kpar);
        for pol in Polarization::ALL {
            let r = reflection(&k, &sheet(omega), pol).unwrap();
            prop_assert!(r.norm() <= 1.0 + 1e-15, "{:?}: {}", pol, r);
        }
    }

    #[test]
    fn wick_rotation(k4 in 0.001..10.0f64, kpar in 0.0..10.0f64, omega in 0.01..10.0f64) {
        prop_assume!(k4.hypot(kpar) > 1e-3);
        let s = sheet(omega);
        let e = EuclideanMomentum::new(k4, kpar).unwrap();
        let z = Complex64::new(0.0, k4);
        prop_assert!((reflection_te_at(z, kpar, &s).unwrap() - reflection_te_euclidean(&e, &s).unwrap()).norm() < 1e-12);
        prop_assert!((reflection_tm_at(z, kpar, &s).unwrap() - reflection_tm_euclidean(&e, &s).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn euclidean_coefficients_in_unit_interval(k4 in 0.0..10.0f64, kpar in 0.0..10.0f64, omega in 0.0..10.0f64) {
        prop_assume!(k4.hypot(kpar) > 1e-3 && k4 > 1e-6);
        let s = sheet(omega);
        let e = EuclideanMomentum::new(k4, kpar).unwrap();
        for r in [reflection_te_euclidean(&e, &s).unwrap(), reflection_tm_euclidean(&e, &s).unwrap()] {
            prop_assert!((0.0..=1.0).contains(&r));
        }
    }

    #[test]
    fn basis_completeness(k1 in -3.0..3.0f64, k2 in -3.0..3.0f64, k0 in -6.0..6.0f64) {
        let kpar = k1.hypot(k2);
        prop_assume!(kpar > 1e-2 && (k0.abs() - kpar).abs() > 1e-2);
        let b = polarization_basis(&MinkowskiMomentum::new(k0, k1, k2)).unwrap();
        prop_assert!(b.completeness_error() < 1e-11);
        prop_assert!(b.gram_error() < 1e-11);
    }

    #[test]
    fn plasmon_root_contract(kpar in 1e-3..1e3f64, omega in 1e-2..1e2f64) {
        let s = sheet(omega);
        let k0 = tm_plasmon_root(kpar, &s).unwrap();
        prop_assert!(k0 > 0.0 && k0 < kpar);
        prop_assert!((tm_dispersion_residual(k0, kpar, &s) / (kpar * kpar)).abs() <= 1e-10);
    }

    #[test]
    fn reduction_functions_monotone(x in 1e-3..1e3f64, step in 1.01..10.0f64) {
        let y = x * step;
        for f in [f_te, f_tm, g_te, g_tm, g_3] {
            prop_assert!(f(x).unwrap() < f(y).unwrap());
        }
        prop_assert!(h_3(x).unwrap() > h_3(y).unwrap());
    }

    #[test]
    fn wronskian(l in 1usize..=30, z in 0.05..60.0f64) {
        let w = riccati_bessel(l, Complex64::new(z, 0.0)).unwrap().wronskian();
        prop_assert!((w - Complex64::i()).norm() < 1e-10, "l = {}, z = {}: {}", l, z, w);
    }

    #[test]
    fn transparent_shell(l in 1usize..=20, k0 in 0.01..30.0f64, radius in 0.1..10.0f64) {
        let j = jost_evaluation(l, k0, &SphericalShell::new(radius, 0.0).unwrap()).unwrap();
        prop_assert_eq!(j.g_te, Complex64::new(1.0, 0.0));
        prop_assert_eq!(j.g_tm, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn table_json_round_trip(values in prop::collection::vec((any::<f64>(), -1e300..1e300f64, any::<bool>()), 1..20)) {
        let rows = values
            .iter()
            .map(|(a, b, failed)| Row {
                cells: vec![Cell::Real(*a), Cell::Complex(Complex64::new(*b, -*b))],
                error: failed.then(|| "failed, \"quoted\"".to_string()),
            })
            .map(|mut r| {
                if let Cell::Real(v) = r.cells[0] {
                    if v.is_infinite() {
                        r.cells[0] = Cell::Real(f64::NAN);
                    }
                }
                r
            })
            .collect();
        let table = Table {
            metadata: Metadata {
                tool: "plasma-sheet".into(),
                version: "0".into(),
                command: "functions".into(),
                tolerance: 1e-8,
                config: serde_json::Map::new(),
            },
            columns: vec![Column::real("a"), Column::complex("b")],
            rows,
        };
        let text = table.to_json_string();
        let back = Table::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert!(back.same_values(&table));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn casimir_depends_on_omega_a_only(omega_a in 0.05..50.0f64, a in 0.2..5.0f64) {
        let scaled = |d: f64| {
            let r = lifshitz_energy_per_area(d, &SheetParameters::pair(omega_a / d, d).unwrap()).unwrap();
            (r.energy_per_area * d.powi(3), r.pressure * d.powi(4))
        };
        let (e1, p1) = scaled(1.0);
        let (e2, p2) = scaled(a);
        prop_assert!(((e1 - e2) / e1).abs() < 1e-7);
        prop_assert!(((p1 - p2) / p1).abs() < 1e-7);
    }

    #[test]
    fn casimir_monotone_in_omega(omega_a in 0.05..100.0f64, step in 1.05..5.0f64) {
        let e = |x: f64| lifshitz_energy_per_area(1.0, &SheetParameters::pair(x, 1.0).unwrap()).unwrap().energy_per_area;
        let (lo, hi) = (e(omega_a), e(omega_a * step));
        prop_assert!(hi < lo && lo < 0.0);
    }
}
