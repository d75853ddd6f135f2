mod common;

use std::f64::consts::PI;

use awroots::bounds::{root_bounds, ParameterSet};
use awroots::iteration::{iterate, DEFAULT_STEP_TOL};
use awroots::oracle::{
    jacobian, morse_value, newton_solve, product_residual, spectral_norm_check, system_residual,
    DEFAULT_MORSE_TOL, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL,
};
use common::{contracting_sets, max_abs, parameter_sets, table1};
use proptest::collection::vec;
use proptest::prelude::*;

fn solve(p: &ParameterSet) -> Vec<f64> {
    newton_solve(p, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)
        .unwrap()
        .into_inner()
}

fn with_angles(
    degrees: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (ParameterSet, Vec<f64>)> {
    parameter_sets(0.8, 0.6, degrees).prop_flat_map(|p| {
        let n = p.n();
        (Just(p), vec(-1.0..4.0f64, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn newton_agrees_with_iteration(p in contracting_sets(1..=12)) {
        let trace = iterate(&p, 500, DEFAULT_STEP_TOL).unwrap();
        let theta = solve(&p);
        prop_assert!(trace.last().max_distance(&theta) < 1e-10);
    }

    #[test]
    fn newton_roots_ordered_and_bracketed(p in parameter_sets(0.95, 0.9, 1..=15)) {
        let theta = newton_solve(&p, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS).unwrap();
        prop_assert!(theta.is_strictly_increasing());
        prop_assert!(theta.is_inside());
        let b = root_bounds(&p);
        for j in 0..p.n() {
            prop_assert!(b.lower[j] - 1e-12 <= theta[j] && theta[j] <= b.upper[j] + 1e-12);
        }
        prop_assert!(max_abs(&product_residual(&p, &theta)) < 1e-10);
    }

    #[test]
    fn jacobian_is_symmetric_difference_quotient((p, theta) in with_angles(1..=8)) {
        let h = 1e-6;
        let jac = jacobian(&p, &theta);
        prop_assert!((&jac - jac.transpose()).amax() < 1e-13);
        for k in 0..p.n() {
            let mut plus = theta.clone();
            let mut minus = theta.clone();
            plus[k] += h;
            minus[k] -= h;
            let (gp, gm) = (system_residual(&p, &plus), system_residual(&p, &minus));
            for j in 0..p.n() {
                let fd = (gp[j] - gm[j]) / (2.0 * h);
                prop_assert!((fd - jac[(j, k)]).abs() < 1e-6, "({j},{k}): {fd} vs {}", jac[(j, k)]);
            }
        }
    }

    #[test]
    fn morse_gradient_is_residual((p, theta) in with_angles(1..=6)) {
        let h = 1e-5;
        let g = system_residual(&p, &theta);
        for j in 0..p.n() {
            let mut plus = theta.clone();
            let mut minus = theta.clone();
            plus[j] += h;
            minus[j] -= h;
            let fd = (morse_value(&p, &plus, DEFAULT_MORSE_TOL)
                - morse_value(&p, &minus, DEFAULT_MORSE_TOL)) / (2.0 * h);
            prop_assert!((fd - g[j]).abs() < 1e-6, "j = {j}: {fd} vs {}", g[j]);
        }
    }

    #[test]
    fn du_eigenvalues_obey_uniform_bounds(
        p in parameter_sets(0.9, 0.8, 1..=10),
        seeds in vec(vec(0.0..PI, 10), 50),
    ) {
        for s in &seeds {
            let check = spectral_norm_check(&p, &s[..p.n()]);
            prop_assert!(check.lambda_min >= check.lambda_min_bound - 1e-12);
            prop_assert!(check.lambda_max <= check.lambda_max_bound + 1e-12);
            prop_assert!(check.rho_bound_ok);
        }
    }

    #[test]
    fn oracle_roots_minimize_morse(
        p in parameter_sets(0.8, 0.6, 1..=8),
        dirs in vec(vec(-1.0..1.0f64, 8), 100),
    ) {
        let theta = solve(&p);
        let v0 = morse_value(&p, &theta, DEFAULT_MORSE_TOL);
        for d in &dirs {
            let d = &d[..p.n()];
            let len = d.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assume!(len > 1e-3);
            let moved: Vec<f64> = theta.iter().zip(d).map(|(t, x)| t + 0.1 * x / len).collect();
            prop_assert!(morse_value(&p, &moved, DEFAULT_MORSE_TOL) > v0);
        }
    }
}

#[test]
fn reference_roots_minimize_morse() {
    let p = table1(5);
    let theta = solve(&p);
    let v0 = morse_value(&p, &theta, DEFAULT_MORSE_TOL);
    for k in 0..100 {
        let d: Vec<f64> = (0..5).map(|j| ((k * 7 + j * 13) as f64).sin()).collect();
        let len = d.iter().map(|x| x * x).sum::<f64>().sqrt();
        let moved: Vec<f64> = theta
            .iter()
            .zip(&d)
            .map(|(t, x)| t + 0.1 * x / len)
            .collect();
        assert!(morse_value(&p, &moved, DEFAULT_MORSE_TOL) > v0);
    }
}

#[test]
fn chebyshev_morse_minimum_at_half_pi() {
    let p = ParameterSet::real([0.0; 4], 0.0, 1).unwrap();
    let grid = (1..3000).map(|i| i as f64 * PI / 3000.0);
    let best = grid
        .min_by(|a, b| {
            morse_value(&p, &[*a], DEFAULT_MORSE_TOL).total_cmp(&morse_value(
                &p,
                &[*b],
                DEFAULT_MORSE_TOL,
            ))
        })
        .unwrap();
    assert!((best - PI / 2.0).abs() < 1e-12);
}
