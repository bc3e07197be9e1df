use num_complex::Complex64;

use orthofourier::helmholtz::{global_relation_residual, solve, solve_with, BoundaryData, RayRule, SolverConfig};

#[test]
fn global_relation_holds_off_the_collocation_points() {
    let (expansion, report) = solve(20, 40).unwrap();
    let data = BoundaryData::default();
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let lambda = Complex64::new(1.1 + 3.8 * (k as f64 + 0.5) / 50.0, 0.0);
        worst = worst.max(global_relation_residual(&expansion, lambda, &data).unwrap());
    }
    assert!(
        worst <= 10.0 * report.residual_norm,
        "{worst:e} vs {:e}",
        report.residual_norm
    );
}

#[test]
fn error_decreases_with_basis_size() {
    let errors: Vec<f64> = [4, 8, 12, 16]
        .iter()
        .map(|&n| solve(n, 2 * n).unwrap().1.e_inf)
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    assert!(errors[2] < 1e-6);
}

#[test]
fn under_determined_case_runs_but_is_worse() {
    let (_, half) = solve(16, 8).unwrap();
    let (_, double) = solve(16, 32).unwrap();
    assert!(half.e_inf > double.e_inf);
    assert!(half.cond > double.cond);
}

#[test]
fn odd_modes_vanish() {
    // The trace is even, so odd Legendre coefficients are a free consistency check.
    let (expansion, report) = solve(20, 40).unwrap();
    for (l, c) in expansion.coefficients.iter().enumerate().filter(|(l, _)| l % 2 == 1) {
        assert!(c.abs() < 1e-10, "c_{l} = {c:e}");
    }
    assert!(report.max_imag < 1e-8);
}

#[test]
fn complex_rays_also_converge() {
    let config = SolverConfig {
        rays: RayRule {
            angles: vec![0.0, 0.3, -0.3],
            ..RayRule::for_basis(16)
        },
        ..SolverConfig::new(16, 32)
    };
    let (_, report) = solve_with(&config).unwrap();
    assert!(report.e_inf < 1e-8, "{report:?}");
}
