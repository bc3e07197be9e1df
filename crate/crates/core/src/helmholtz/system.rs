//! Collocation of the two global relations for the unknown Neumann trace.
//!
//! With `N̂_1(λ) = ∫ e^{(λ+1/λ)y} u_x^{(1)}(y) dy` and `μ = ∓iλ`, each point
//! contributes the rows
//!
//! ```text
//! cos(λ-1/λ) N̂_1(λ) + cos(iλ-1/(iλ)) N̂_1(μ)
//!     = (λ-1/λ) sin(λ-1/λ) D̂_1(λ) + (iλ-1/(iλ)) sin(iλ-1/(iλ)) D̂_1(μ).
//! ```
//!
//! Expanding `u_x^{(1)} = Σ c_l P_l` turns `N̂_1` into Legendre transforms at
//! `i(λ + 1/λ)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::complex::I;
use crate::error::{Error, Result};
use crate::helmholtz::boundary::BoundaryData;
use crate::transforms::legendre_hat;

/// Placement of collocation points on rays from the origin.
///
/// Point `k` (0-based) sits at modulus `min_modulus + k h`, `h = (max - min)/M`,
/// on ray `angles[k mod angles.len()]` (radians).
#[derive(Clone, Debug, PartialEq)]
pub struct RayRule {
    pub angles: Vec<f64>,
    pub min_modulus: f64,
    pub max_modulus: f64,
}

impl Default for RayRule {
    /// Positive real axis, `|λ| ∈ [1, 5)`.
    fn default() -> Self {
        Self {
            angles: vec![0.0],
            min_modulus: 1.0,
            max_modulus: 5.0,
        }
    }
}

impl RayRule {
    /// Positive real axis, `|λ| ∈ [1, max(5, 2N))`.
    ///
    /// Resolving `N` Legendre modes needs transform arguments of size about
    /// `N`; a fixed range leaves the high modes indistinguishable.
    pub fn for_basis(n: usize) -> Self {
        Self {
            max_modulus: (2.0 * n as f64).max(5.0),
            ..Self::default()
        }
    }

    pub fn points(&self, m: usize) -> Vec<Complex64> {
        collocation_points(m, self)
    }
}

/// `M` collocation points under `rule`.
pub fn collocation_points(m: usize, rule: &RayRule) -> Vec<Complex64> {
    assert!(!rule.angles.is_empty(), "ray rule needs at least one angle");
    let h = (rule.max_modulus - rule.min_modulus) / m as f64;
    (0..m)
        .map(|k| {
            let theta = rule.angles[k % rule.angles.len()];
            Complex64::from_polar(rule.min_modulus + k as f64 * h, theta)
        })
        .collect()
}

/// Contribution of `P_l` to `N̂_1(λ)`: `P̂_l(i(λ + 1/λ))`.
pub fn neumann_hat_column(l: usize, lambda: Complex64) -> Result<Complex64> {
    if lambda.is_zero() {
        return Err(Error::Domain("N̂_1(λ) requires λ ≠ 0".into()));
    }
    Ok(legendre_hat(l, I * (lambda + 1.0 / lambda))?.value)
}

/// Which companion argument a row pairs with `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `μ = -iλ`.
    First,
    /// `μ = iλ`, the Schwarz conjugate of the first.
    Second,
}

impl Relation {
    fn companion(self, lambda: Complex64) -> Complex64 {
        match self {
            Relation::First => -I * lambda,
            Relation::Second => I * lambda,
        }
    }
}

/// Unscaled matrix row and right-hand side of one global relation at `λ`.
pub fn relation_row(
    n: usize,
    lambda: Complex64,
    relation: Relation,
    data: &BoundaryData,
) -> Result<(Vec<Complex64>, Complex64)> {
    if lambda.is_zero() {
        return Err(Error::Domain("collocation point λ = 0".into()));
    }
    let mu = relation.companion(lambda);
    let first = lambda - 1.0 / lambda;
    let second = I * lambda - 1.0 / (I * lambda);
    let (cos1, cos2) = (first.cos(), second.cos());
    let row = (0..n)
        .map(|l| Ok(cos1 * neumann_hat_column(l, lambda)? + cos2 * neumann_hat_column(l, mu)?))
        .collect::<Result<Vec<_>>>()?;
    let rhs = first * first.sin() * data.dirichlet_hat(lambda)? + second * second.sin() * data.dirichlet_hat(mu)?;
    Ok((row, rhs))
}

/// Collocation matrix (`2M × N`), right-hand side and the scaling applied so far.
#[derive(Clone, Debug)]
pub struct CollocationSystem {
    pub points: Vec<Complex64>,
    pub matrix: DMatrix<Complex64>,
    pub rhs: DVector<Complex64>,
    /// Divisor applied to each row (1 before scaling).
    pub row_scale: Vec<f64>,
    /// Divisor applied to each column (1 before scaling).
    pub col_scale: Vec<f64>,
}

impl CollocationSystem {
    pub fn row_l1_norms(&self) -> Vec<f64> {
        self.matrix
            .row_iter()
            .map(|r| r.iter().map(|z| z.norm()).sum())
            .collect()
    }

    pub fn col_l1_norms(&self) -> Vec<f64> {
        self.matrix
            .column_iter()
            .map(|c| c.iter().map(|z| z.norm()).sum())
            .collect()
    }
}

/// Two rows per point: the first relation at row `2k`, the second at `2k + 1`.
pub fn assemble_system(n: usize, points: &[Complex64], data: &BoundaryData) -> Result<CollocationSystem> {
    if n == 0 {
        return Err(Error::Domain("basis size must be positive".into()));
    }
    if points.is_empty() {
        return Err(Error::Domain("at least one collocation point is required".into()));
    }
    if let Some(bad) = points.iter().position(|p| p.is_zero()) {
        return Err(Error::Domain(format!("collocation point {bad} is λ = 0")));
    }
    let rows = points
        .par_iter()
        .flat_map_iter(|&lambda| {
            [Relation::First, Relation::Second]
                .into_iter()
                .map(move |rel| relation_row(n, lambda, rel, data))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = DMatrix::from_fn(rows.len(), n, |r, c| rows[r].0[c]);
    let rhs = DVector::from_iterator(rows.len(), rows.iter().map(|(_, b)| *b));
    Ok(CollocationSystem {
        points: points.to_vec(),
        row_scale: vec![1.0; rows.len()],
        col_scale: vec![1.0; n],
        matrix,
        rhs,
    })
}

/// Divides every row (and its right-hand side) by the row's l1-norm.
pub fn scale_rows(mut system: CollocationSystem) -> Result<CollocationSystem> {
    for (r, norm) in system.row_l1_norms().into_iter().enumerate() {
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Degenerate(format!("row {r} has l1-norm {norm}")));
        }
        system.matrix.row_mut(r).iter_mut().for_each(|z| *z /= norm);
        system.rhs[r] /= norm;
        system.row_scale[r] *= norm;
    }
    Ok(system)
}

/// Divides every column by its l1-norm.
pub fn scale_columns(mut system: CollocationSystem) -> Result<CollocationSystem> {
    for (c, norm) in system.col_l1_norms().into_iter().enumerate() {
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Degenerate(format!("column {c} has l1-norm {norm}")));
        }
        system.matrix.column_mut(c).iter_mut().for_each(|z| *z /= norm);
        system.col_scale[c] *= norm;
    }
    Ok(system)
}

/// Row pass, then column pass. The solution of the scaled system must be
/// divided by `col_scale` to recover the original unknowns.
pub fn scale_system(system: CollocationSystem) -> Result<CollocationSystem> {
    scale_columns(scale_rows(system)?)
}
