//! Least-squares solution of the scaled collocation system and error reporting.

use std::io::Write;
use std::time::Instant;

use nalgebra::{DMatrix, DVector, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::helmholtz::boundary::{exact_neumann, BoundaryData};
use crate::helmholtz::system::{assemble_system, relation_row, scale_system, CollocationSystem, RayRule, Relation};

/// Points in the uniform grid on which `E_∞` is measured.
pub const ERROR_GRID: usize = 1001;

/// Legendre expansion `Σ c_l P_l(y)` of the Neumann trace on side `S_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct NeumannExpansion {
    pub coefficients: Vec<f64>,
}

impl NeumannExpansion {
    pub fn new(coefficients: Vec<f64>) -> Self {
        Self { coefficients }
    }

    pub fn basis_size(&self) -> usize {
        self.coefficients.len()
    }

    /// Evaluates the expansion at `y ∈ [-1, 1]` by running the Legendre recurrence once.
    pub fn eval(&self, y: f64) -> f64 {
        let mut total = 0.0;
        let (mut p_prev, mut p) = (0.0, 1.0);
        for (l, c) in self.coefficients.iter().enumerate() {
            total += c * p;
            let lf = l as f64;
            let next = ((2.0 * lf + 1.0) * y * p - lf * p_prev) / (lf + 1.0);
            p_prev = p;
            p = next;
        }
        total
    }
}

/// Sup-norm error of `expansion` against the exact Neumann trace on a uniform
/// grid, relative to the sup-norm of the exact trace.
pub fn relative_error_einf(expansion: &NeumannExpansion) -> f64 {
    let (mut num, mut den): (f64, f64) = (0.0, 0.0);
    for k in 0..ERROR_GRID {
        let y = -1.0 + 2.0 * k as f64 / (ERROR_GRID - 1) as f64;
        let exact = exact_neumann(y);
        num = num.max((expansion.eval(y) - exact).abs());
        den = den.max(exact.abs());
    }
    num / den
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub basis: usize,
    pub points: usize,
    pub e_inf: f64,
    /// Ratio of extreme singular values of the scaled matrix (infinite when singular).
    pub cond: f64,
    /// 2-norm of the scaled least-squares residual.
    pub residual_norm: f64,
    /// Largest imaginary part of the complex least-squares coefficients before
    /// the real part is taken.
    pub max_imag: f64,
    pub seconds: f64,
}

pub const REPORT_CSV_HEADER: &str = "N,M,E_inf,cond,residual,seconds";

impl SolveReport {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.5e},{:.5e},{:.5e},{:.5e}",
            self.basis, self.points, self.e_inf, self.cond, self.residual_norm, self.seconds
        )
    }
}

pub fn write_reports<W: Write + ?Sized>(out: &mut W, reports: &[SolveReport]) -> std::io::Result<()> {
    writeln!(out, "{REPORT_CSV_HEADER}")?;
    for r in reports {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

/// Inputs of one solve.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub basis: usize,
    pub points: usize,
    pub rays: RayRule,
    pub data: BoundaryData,
}

impl SolverConfig {
    /// `N` Legendre modes, `M` points under [`RayRule::for_basis`], the default data.
    pub fn new(basis: usize, points: usize) -> Self {
        Self {
            basis,
            points,
            rays: RayRule::for_basis(basis),
            data: BoundaryData::default(),
        }
    }
}

/// Solves with `N` basis functions and `M` collocation points (`2M` equations).
pub fn solve(basis: usize, points: usize) -> Result<(NeumannExpansion, SolveReport)> {
    solve_with(&SolverConfig::new(basis, points))
}

pub fn solve_with(config: &SolverConfig) -> Result<(NeumannExpansion, SolveReport)> {
    let started = Instant::now();
    let (n, m) = (config.basis, config.points);
    if n == 0 || m < n.div_ceil(2).max(1) {
        return Err(Error::Domain(format!(
            "need N >= 1 and M >= max(1, ceil(N/2)), got N={n}, M={m}"
        )));
    }
    let system = scale_system(assemble_system(n, &config.rays.points(m), &config.data)?)?;
    let solution = least_squares(&system)?;
    let expansion = NeumannExpansion::new(solution.coefficients);
    let report = SolveReport {
        basis: n,
        points: m,
        e_inf: relative_error_einf(&expansion),
        cond: solution.cond,
        residual_norm: solution.residual_norm,
        max_imag: solution.max_imag,
        seconds: started.elapsed().as_secs_f64(),
    };
    Ok((expansion, report))
}

/// Real coefficients and diagnostics from the SVD of a scaled system.
#[derive(Clone, Debug)]
pub struct LeastSquares {
    pub coefficients: Vec<f64>,
    pub cond: f64,
    pub residual_norm: f64,
    pub max_imag: f64,
}

/// Minimum-norm least-squares solve by singular value decomposition;
/// singular values below `max(2M, N) · ε · σ_max` are treated as zero.
pub fn least_squares(system: &CollocationSystem) -> Result<LeastSquares> {
    let a: &DMatrix<Complex64> = &system.matrix;
    let svd = SVD::new(a.clone(), true, true);
    let sigma = &svd.singular_values;
    let smax = sigma.iter().cloned().fold(0.0, f64::max);
    let smin = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(smax > 0.0 && smax.is_finite()) {
        return Err(Error::Degenerate("scaled matrix has no positive singular value".into()));
    }
    let cutoff = a.nrows().max(a.ncols()) as f64 * f64::EPSILON * smax;
    let y: DVector<Complex64> = svd
        .solve(&system.rhs, cutoff)
        .map_err(|e| Error::Degenerate(e.to_string()))?;
    let residual_norm = (a * &y - &system.rhs).norm();
    let coefficients: Vec<Complex64> = y.iter().zip(&system.col_scale).map(|(v, s)| v / *s).collect();
    let max_imag = coefficients.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    Ok(LeastSquares {
        coefficients: coefficients.iter().map(|z| z.re).collect(),
        cond: if smin > 0.0 { smax / smin } else { f64::INFINITY },
        residual_norm,
        max_imag,
    })
}

/// `|row · c - rhs| / ‖row‖_1` of the first global relation at `λ`: the same
/// normalisation as one entry of the row-scaled least-squares residual.
pub fn global_relation_residual(expansion: &NeumannExpansion, lambda: Complex64, data: &BoundaryData) -> Result<f64> {
    let (row, rhs) = relation_row(expansion.basis_size(), lambda, Relation::First, data)?;
    let lhs: Complex64 = row.iter().zip(&expansion.coefficients).map(|(a, c)| a * *c).sum();
    let norm: f64 = row.iter().map(|z| z.norm()).sum();
    Ok((lhs - rhs).norm() / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{eval_legendre, gauss_rule};

    #[test]
    fn zero_expansion_has_unit_error() {
        assert_eq!(relative_error_einf(&NeumannExpansion::new(vec![0.0; 5])), 1.0);
    }

    #[test]
    fn truncated_projection_is_accurate() {
        // c_l = (2l+1)/2 ∫ f P_l.
        let rule = gauss_rule(80);
        let coeffs = (0..20)
            .map(|l| (2.0 * l as f64 + 1.0) / 2.0 * rule.integrate(|y| exact_neumann(y) * eval_legendre(l, y).unwrap()))
            .collect();
        assert!(relative_error_einf(&NeumannExpansion::new(coeffs)) < 1e-10);
    }

    #[test]
    fn expansion_eval_matches_recurrence() {
        let e = NeumannExpansion::new(vec![0.5, -1.0, 2.0, 0.25]);
        for y in [-1.0, -0.3, 0.0, 0.8, 1.0] {
            let direct: f64 = (0..4).map(|l| e.coefficients[l] * eval_legendre(l, y).unwrap()).sum();
            assert!((e.eval(y) - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn small_solve() {
        let (expansion, report) = solve(4, 8).unwrap();
        assert_eq!(expansion.basis_size(), 4);
        assert!(report.e_inf > 0.0 && report.e_inf < 1e-1, "{report:?}");
        assert!(report.cond >= 1.0);
        assert!(report.max_imag <= 1e-8);
    }

    #[test]
    fn precondition_on_point_count() {
        assert!(matches!(solve(8, 3), Err(Error::Domain(_))));
        assert!(matches!(solve(0, 3), Err(Error::Domain(_))));
        assert!(solve(8, 4).is_ok());
    }

    #[test]
    fn csv_row_format() {
        let r = SolveReport {
            basis: 20,
            points: 40,
            e_inf: 7.123456789e-12,
            cond: 6.4,
            residual_norm: 1.0e-15,
            max_imag: 0.0,
            seconds: 0.0123,
        };
        assert_eq!(r.csv_row(), "20,40,7.12346e-12,6.40000e0,1.00000e-15,1.23000e-2");
    }
}
