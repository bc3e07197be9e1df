//! Invariant sweep over degrees `0..=max_m`, shared by the `verify` command.
//!
//! Every check uses the same tolerance; errors are measured as
//!
//! * oracle agreement: `|value - quadrature| / (1 + |quadrature|)`;
//! * identities and route equivalences: `|lhs - rhs| / max(|terms|)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::bessel::{bessel_half, legendre_hat_via_bessel};
use crate::coeffs::Family;
use crate::complex::{rel_diff, I};
use crate::error::Result;
use crate::oracle::quad_transform;
use crate::transforms::{
    chebyshev_hat, chebyshev_hat_via_k, k_function, legendre_hat, select_path, transform, zero_lambda_exact, EvalPath,
};

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub evaluated: usize,
    pub worst: f64,
    /// `(m, λ)` descriptions of failing cases.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            evaluated: 0,
            worst: 0.0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, err: f64, tol: f64, case: impl FnOnce() -> String) {
        self.evaluated += 1;
        if err.is_nan() || err > self.worst {
            self.worst = if err.is_nan() { f64::INFINITY } else { err };
        }
        if err.is_nan() || err > tol {
            self.failures.push(format!("{} (error {err:.3e})", case()));
        }
    }

    fn record_error(&mut self, case: String, e: crate::Error) {
        self.evaluated += 1;
        self.worst = f64::INFINITY;
        self.failures.push(format!("{case}: {e}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub max_m: usize,
    pub tolerance: f64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Sample points for degree `m`: real, imaginary and generic complex values,
/// with moduli from `1e-6` up to `m + 5`.
pub fn lambda_grid(m: usize) -> Vec<Complex64> {
    let c = Complex64::new;
    let mf = m as f64;
    let mut grid = Vec::new();
    for r in [0.5, 1.0, 2.0, mf + 1.0, mf + 5.0] {
        grid.push(c(r, 0.0));
        grid.push(c(-r, 0.0));
    }
    grid.extend([I, -I, 2.0 * I, c(1.0, 1.0), c(3.0, -2.0), c(1e-3, 0.0), c(1e-6, 1e-6)]);
    grid
}

/// Points at which the closed form is the selected path for degrees
/// `m - 1`, `m` and `m + 1` of both families.
pub fn closed_form_grid(m: usize) -> Vec<Complex64> {
    let mf = m as f64;
    let mut grid = Vec::new();
    for r in [mf.max(1.0) + 1.0, mf + 5.0, 2.0 * mf + 3.0] {
        for theta in [0.0, PI, 0.4, -1.1, 2.3, PI / 2.0, -PI / 2.0] {
            grid.push(Complex64::from_polar(r, theta));
        }
    }
    grid.retain(|&lambda| {
        (m.saturating_sub(1)..=m + 1).all(|d| {
            [Family::Chebyshev, Family::Legendre]
                .iter()
                .all(|&f| select_path(f, d, lambda) == EvalPath::ClosedForm)
        })
    });
    grid
}

fn describe(m: usize, lambda: Complex64) -> String {
    format!("m={m}, λ={lambda}")
}

/// Runs every check for `m = 0..=max_m`.
pub fn run_verification(max_m: usize, tol: f64) -> VerifyReport {
    let checks = vec![
        check_zero_lambda(max_m, tol),
        check_oracle(max_m, tol),
        check_legendre_recurrence(max_m, tol),
        check_k_recurrence(max_m, tol),
        check_route_k(max_m, tol),
        check_route_bessel(max_m, tol),
        check_parity(max_m, tol),
        check_conjugation(max_m, tol),
        check_realness(max_m, tol),
        check_bessel_recurrence(max_m, tol),
    ];
    VerifyReport {
        max_m,
        tolerance: tol,
        checks,
    }
}

fn check_zero_lambda(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("zero-argument values");
    let zero = Complex64::new(0.0, 0.0);
    for family in [Family::Chebyshev, Family::Legendre] {
        for m in 0..=max_m {
            let exact = zero_lambda_exact(family, m).to_f64().unwrap_or(f64::NAN);
            match quad_transform(family, m, zero) {
                Ok(q) => out.record((q - exact).norm() / (1.0 + q.norm()), tol, || format!("{family} m={m}")),
                Err(e) => out.record_error(format!("{family} m={m}"), e),
            }
        }
    }
    out
}

fn check_oracle(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("quadrature agreement");
    for family in [Family::Chebyshev, Family::Legendre] {
        for m in 0..=max_m {
            for lambda in lambda_grid(m) {
                let pair = transform(family, m, lambda).and_then(|t| Ok((t.value, quad_transform(family, m, lambda)?)));
                match pair {
                    Ok((v, q)) => out.record((v - q).norm() / (1.0 + q.norm()), tol, || {
                        format!("{family} {}", describe(m, lambda))
                    }),
                    Err(e) => out.record_error(format!("{family} {}", describe(m, lambda)), e),
                }
            }
        }
    }
    out
}

fn max_norm(values: &[Complex64]) -> f64 {
    values.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `P̂_{m+1} + (i/λ)(2m+1) P̂_m - P̂_{m-1} = 0`.
pub fn legendre_recurrence_residual(m: usize, lambda: Complex64) -> Result<f64> {
    let next = legendre_hat(m + 1, lambda)?.value;
    let mid = I / lambda * (2 * m + 1) as f64 * legendre_hat(m, lambda)?.value;
    let prev = legendre_hat(m - 1, lambda)?.value;
    Ok((next + mid - prev).norm() / max_norm(&[next, mid, prev]))
}

/// `K_{m+1} + (2m/z) K_m - K_{m-1} - (2/z)(e^z + (-1)^{m-1} e^{-z}) = 0`.
pub fn k_recurrence_residual(m: usize, z: Complex64) -> Result<f64> {
    let next = k_function(m + 1, z)?;
    let mid = 2.0 * m as f64 / z * k_function(m, z)?;
    let prev = k_function(m - 1, z)?;
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let forcing = 2.0 / z * (z.exp() + sign * (-z).exp());
    Ok((next + mid - prev - forcing).norm() / max_norm(&[next, mid, prev, forcing]))
}

fn check_legendre_recurrence(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("Legendre transform recurrence");
    for m in 1..=max_m {
        for lambda in closed_form_grid(m) {
            match legendre_recurrence_residual(m, lambda) {
                Ok(r) => out.record(r, tol, || describe(m, lambda)),
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}

fn check_k_recurrence(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("K_m recurrence");
    for m in 1..=max_m {
        for lambda in closed_form_grid(m) {
            let z = -I * lambda;
            match k_recurrence_residual(m, z) {
                Ok(r) => out.record(r, tol, || format!("m={m}, z={z}")),
                Err(e) => out.record_error(format!("m={m}, z={z}"), e),
            }
        }
    }
    out
}

fn check_route_k(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("Chebyshev route through K_m");
    for m in 0..=max_m {
        for lambda in closed_form_grid(m) {
            let pair = chebyshev_hat(m, lambda).and_then(|t| Ok((t.value, chebyshev_hat_via_k(m, lambda)?)));
            match pair {
                Ok((a, b)) => out.record(rel_diff(a, b), tol, || describe(m, lambda)),
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}

fn check_route_bessel(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("Legendre route through J_{m+1/2}");
    for m in 0..=max_m {
        for lambda in closed_form_grid(m) {
            let pair = legendre_hat(m, lambda).and_then(|t| Ok((t.value, legendre_hat_via_bessel(m, lambda)?)));
            match pair {
                Ok((a, b)) => out.record(rel_diff(a, b), tol, || describe(m, lambda)),
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}

fn check_parity(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("parity p̂_m(-λ) = (-1)^m p̂_m(λ)");
    for family in [Family::Chebyshev, Family::Legendre] {
        for m in 0..=max_m {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            for lambda in lambda_grid(m) {
                let pair =
                    transform(family, m, lambda).and_then(|a| Ok((a.value, transform(family, m, -lambda)?.value)));
                match pair {
                    Ok((a, b)) => out.record(rel_diff(b, a * sign), tol, || {
                        format!("{family} {}", describe(m, lambda))
                    }),
                    Err(e) => out.record_error(format!("{family} {}", describe(m, lambda)), e),
                }
            }
        }
    }
    out
}

fn real_points(m: usize) -> Vec<f64> {
    let mf = m as f64;
    vec![1e-6, 1e-3, 0.5, 1.0, 2.0, mf + 1.0, mf + 5.0, 2.0 * mf + 3.0]
}

fn check_conjugation(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("conjugation for real λ");
    for m in 0..=max_m {
        for x in real_points(m) {
            let lambda = Complex64::new(x, 0.0);
            let pair = legendre_hat(m, lambda).and_then(|a| Ok((a.value, legendre_hat(m, -lambda)?.value)));
            match pair {
                Ok((a, b)) => out.record(rel_diff(a.conj(), b), tol, || describe(m, lambda)),
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}

fn check_realness(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("realness of i^m P̂_m(λ)");
    for m in 0..=max_m {
        for x in real_points(m) {
            let lambda = Complex64::new(x, 0.0);
            match legendre_hat(m, lambda) {
                Ok(t) => {
                    let rotated = crate::complex::i_pow(m as i64) * t.value;
                    let err = if t.value.norm() == 0.0 {
                        0.0
                    } else {
                        rotated.im.abs() / t.value.norm()
                    };
                    out.record(err, tol, || describe(m, lambda))
                }
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}

/// `J_{m+3/2} - ((2m+1)/λ) J_{m+1/2} + J_{m-1/2} = 0`, relative to the largest term.
pub fn bessel_recurrence_residual(m: usize, lambda: Complex64) -> Result<f64> {
    let next = bessel_half(m + 1, lambda)?;
    let mid = (2 * m + 1) as f64 / lambda * bessel_half(m, lambda)?;
    let prev = bessel_half(m - 1, lambda)?;
    Ok((next - mid + prev).norm() / max_norm(&[next, mid, prev]))
}

fn check_bessel_recurrence(max_m: usize, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new("half-order Bessel recurrence");
    for m in 1..max_m {
        let r = m as f64 + 2.0;
        for lambda in [
            Complex64::new(r, 0.0),
            Complex64::new(r + 7.0, 0.0),
            Complex64::from_polar(r, 0.6),
            Complex64::from_polar(r + 3.0, -1.2),
        ] {
            match bessel_recurrence_residual(m, lambda) {
                Ok(res) => out.record(res, tol, || describe(m, lambda)),
                Err(e) => out.record_error(describe(m, lambda), e),
            }
        }
    }
    out
}
