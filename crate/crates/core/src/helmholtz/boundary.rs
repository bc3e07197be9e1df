//! Dirichlet data of the symmetric problem on the square `[-1, 1]^2` and its
//! transform along side `S_1` (`x = -1`).

use num_complex::Complex64;
use num_traits::Zero;

use crate::complex::ensure_finite;
use crate::error::{Error, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Dirichlet trace shared by all four sides, as a sum of `A_j cosh(b_j s)`.
///
/// The symmetry `u(x, y) = u(-x, y) = u(x, -y) = u(y, x)` lets one side carry
/// the whole problem; the data is even in the side coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryData {
    modes: Vec<(f64, f64)>,
}

impl Default for BoundaryData {
    /// `cosh(1) cosh(√3 s) + cosh(√3) cosh(s)`, the trace of
    /// `u = cosh x cosh √3y + cosh √3x cosh y`.
    fn default() -> Self {
        Self {
            modes: vec![(1f64.cosh(), SQRT3), (SQRT3.cosh(), 1.0)],
        }
    }
}

impl BoundaryData {
    /// Trace `Σ A_j cosh(b_j s)`.
    pub fn from_modes(modes: Vec<(f64, f64)>) -> Self {
        Self { modes }
    }

    /// Identically zero data.
    pub fn homogeneous() -> Self {
        Self { modes: Vec::new() }
    }

    pub fn modes(&self) -> &[(f64, f64)] {
        &self.modes
    }

    /// `u^{(1)}(y)`.
    pub fn value(&self, s: f64) -> f64 {
        self.modes.iter().map(|&(a, b)| a * (b * s).cosh()).sum()
    }

    /// `D̂_1(λ) = ∫_{-1}^{1} e^{(λ+1/λ) y} u^{(1)}(y) dy` in closed form.
    ///
    /// With `a = λ + 1/λ`, each mode contributes
    /// `A (sinh(a+b)/(a+b) + sinh(a-b)/(a-b))`.
    pub fn dirichlet_hat(&self, lambda: Complex64) -> Result<Complex64> {
        if lambda.is_zero() {
            return Err(Error::Domain("D̂_1(λ) requires λ ≠ 0".into()));
        }
        let a = lambda + 1.0 / lambda;
        if a.re.abs() > 700.0 {
            return Err(Error::Range(format!("|Re(λ + 1/λ)| = {} overflows", a.re.abs())));
        }
        let total = self
            .modes
            .iter()
            .map(|&(amp, b)| (sinhc(a + b) + sinhc(a - b)) * amp)
            .sum();
        ensure_finite(total, "D̂_1(λ)")
    }
}

/// `sinh(z)/z` with its removable singularity filled in.
fn sinhc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        1.0 + z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sinh() / z
    }
}

/// `u(x, y) = cosh x cosh √3y + cosh √3x cosh y`, which satisfies
/// `Δu = 4u` and matches [`BoundaryData::default`] on every side.
pub fn exact_solution(x: f64, y: f64) -> f64 {
    x.cosh() * (SQRT3 * y).cosh() + (SQRT3 * x).cosh() * y.cosh()
}

/// `u_x(-1, y) = -(sinh 1 cosh √3y + √3 sinh √3 cosh y)`.
pub fn exact_neumann(y: f64) -> f64 {
    -(1f64.sinh() * (SQRT3 * y).cosh() + SQRT3 * SQRT3.sinh() * y.cosh())
}

/// Largest `|Δu - 4u|` of [`exact_solution`] over the interior points of a
/// uniform `grid × grid` lattice on the square, using a fourth-order
/// (Richardson-extrapolated) five-point Laplacian with step `h`.
pub fn pde_residual(grid: usize, h: f64) -> f64 {
    let lap = |x: f64, y: f64, h: f64| {
        (exact_solution(x + h, y) + exact_solution(x - h, y) + exact_solution(x, y + h) + exact_solution(x, y - h)
            - 4.0 * exact_solution(x, y))
            / (h * h)
    };
    let step = 2.0 / (grid - 1) as f64;
    let mut worst: f64 = 0.0;
    for i in 1..grid - 1 {
        for j in 1..grid - 1 {
            let x = -1.0 + i as f64 * step;
            let y = -1.0 + j as f64 * step;
            let fourth_order = (4.0 * lap(x, y, h / 2.0) - lap(x, y, h)) / 3.0;
            worst = worst.max((fourth_order - 4.0 * exact_solution(x, y)).abs());
        }
    }
    worst
}
