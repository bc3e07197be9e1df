//! Closed-form finite Fourier transforms of Chebyshev and Legendre polynomials.
//!
//! * [`coeffs`]: exact integer coefficient tables `α_n^m`, `β_n^m`;
//! * [`transforms`]: `T̂_m(λ)` and `P̂_m(λ)` for complex `λ`, plus the `K_m` route;
//! * [`bessel`]: half-order Bessel functions `J_{m+1/2}` from the Legendre table;
//! * [`oracle`]: recurrence evaluation and Gauss–Legendre quadrature used as references;
//! * [`helmholtz`]: a global-relation collocation solver for the modified
//!   Helmholtz equation on a square, built on `P̂_m`;
//! * [`verify`]: the invariant sweep behind the `verify` command;
//! * [`cli`]: the command-line front end.
//!
//! ```
//! use num_complex::Complex64;
//! use orthofourier::transforms::legendre_hat;
//!
//! let r = legendre_hat(1, Complex64::new(1.0, 0.0)).unwrap();
//! let expected = 2.0 * (1f64.cos() - 1f64.sin());
//! assert!((r.value.im - expected).abs() < 1e-14);
//! ```

pub mod bessel;
pub mod cli;
pub mod coeffs;
pub mod complex;
pub mod error;
pub mod helmholtz;
pub mod moments;
pub mod oracle;
pub mod transforms;
pub mod verify;

pub use coeffs::{CoefficientTable, Family};
pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use transforms::{EvalPath, TransformResult};
