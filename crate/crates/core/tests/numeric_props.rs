use hyperladder::numeric::solve_theta_levels;
use hyperladder::rational::to_f64;
use hyperladder::{bound_spectrum, solve_theta, solve_xi, EigenResult, GridSpec, ParamPoint};
use proptest::prelude::*;

fn ladder_alpha(l0: f64, l1: f64, n: usize) -> f64 {
    (1.0 + l0 + l1 + 2.0 * n as f64).powi(2)
}

fn residuals_are_small(r: &EigenResult) -> bool {
    r.eigenvalues
        .iter()
        .zip(&r.residual_norms)
        .all(|(e, res)| *res <= 1e-6 * e.abs() + 1e-8)
}

fn slope(err_coarse: f64, err_fine: f64) -> f64 {
    (err_coarse / err_fine).log2()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn theta_levels_follow_the_ladder(l0 in -0.5f64..3.0, l1 in -0.5f64..3.0) {
        let r = solve_theta(l0, l1, &GridSpec::theta(4000)).unwrap();
        prop_assert!(residuals_are_small(&r));
        for k in 0..3 {
            let want = ladder_alpha(l0, l1, k);
            let rel = (r.eigenvalues[k] - want).abs() / want;
            prop_assert!(rel < 1e-4, "level {k}: {} vs {want}", r.eigenvalues[k]);
        }
    }
}

#[test]
fn theta_convergence_is_second_order() {
    let (l0, l1) = (0.7, 1.3);
    let want = ladder_alpha(l0, l1, 1);
    let err = |n| (solve_theta_levels(l0, l1, &GridSpec::theta(n), 2).unwrap().eigenvalues[1] - want).abs();
    let s = slope(err(400), err(800));
    assert!(s >= 1.9, "slope {s}");
}

#[test]
fn xi_convergence_is_second_order() {
    let err = |n| (solve_xi(-5.0, 1.0, &GridSpec::xi(n, 25.0)).unwrap().eigenvalues[0] + 8.75).abs();
    let s = slope(err(500), err(1000));
    assert!(s >= 1.9, "slope {s}");
}

#[test]
fn xi_residuals_are_small() {
    let r = solve_xi(-5.0, 1.0, &GridSpec::xi(2000, 25.0)).unwrap();
    assert!(residuals_are_small(&r));
    assert!(r.warnings.is_empty());
}

#[test]
fn separated_spectrum_reproduces_the_algebraic_levels() {
    // α runs over the θ eigenvalues (1 + 2k)² of l0 = l1 = 0
    let target = ParamPoint::ints(0, 0, -5);
    let mut numeric: Vec<f64> = Vec::new();
    for alpha in [1.0, 9.0, 25.0] {
        let r = solve_xi(-5.0, alpha, &GridSpec::xi(2000, 25.0)).unwrap();
        for e in r.eigenvalues {
            if !numeric.iter().any(|x| (x - e).abs() < 1e-2) {
                numeric.push(e);
            }
        }
    }
    numeric.sort_by(f64::total_cmp);
    let exact: Vec<f64> = bound_spectrum(&target)
        .unwrap()
        .levels
        .iter()
        .map(|l| to_f64(&l.energy))
        .collect();
    assert_eq!(numeric.len(), exact.len(), "{numeric:?} vs {exact:?}");
    for (a, b) in numeric.iter().zip(&exact) {
        assert!((a - b).abs() < 1e-3, "{a} vs {b}");
    }
}

#[test]
fn eigen_result_round_trips_through_json() {
    let r = solve_theta(0.0, 0.0, &GridSpec::theta(64)).unwrap();
    let back: EigenResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back.eigenvalues, r.eigenvalues);
    assert_eq!(back.grid, r.grid);
}
