//! Half-order Bessel functions `J_{m+1/2}(λ)` from the Legendre coefficient table:
//!
//! ```text
//! J_{m+1/2}(λ) = (2π)^{-1/2} Σ_{n=1}^{m+1} β_n^m [e^{iλ} + (-1)^{n+m} e^{-iλ}] / (i^{n-m} λ^{n-1/2})
//! ```
//!
//! `λ^{n-1/2}` is taken as `λ^n / √λ` with the principal square root, so the
//! identity `P̂_m(λ) = i^{-m} √(2π) λ^{-1/2} J_{m+1/2}(λ)` holds on the whole
//! plane, including the negative real axis.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use crate::coeffs::{coefficients, Family};
use crate::complex::{ensure_finite, exp_pair, i_pow};
use crate::error::{Error, Result};
use crate::transforms::{legendre_hat, EvalPath};

/// `J_{m+1/2}(λ)`; zero at `λ = 0`.
///
/// Where the Legendre transform selects its series path the value is taken
/// from that series instead of the closed-form sum.
pub fn bessel_half(m: usize, lambda: Complex64) -> Result<Complex64> {
    if lambda.is_zero() {
        return Ok(Complex64::zero());
    }
    let hat = legendre_hat(m, lambda)?;
    let root = lambda.sqrt();
    if hat.path == EvalPath::SmallLambdaSeries {
        return ensure_finite(i_pow(m as i64) * hat.value * root / (2.0 * PI).sqrt(), "J_{m+1/2}");
    }
    let table = coefficients(Family::Legendre, m);
    let (ep, em) = exp_pair(lambda)?;
    let inv = 1.0 / lambda;
    let mut power = root; // λ^{1/2} / λ^n, advanced before use
    let mut sum = Complex64::zero();
    for (idx, beta) in table.values.iter().enumerate() {
        let n = idx + 1;
        power *= inv;
        let bracket = if (n + m).is_multiple_of(2) { ep + em } else { ep - em };
        sum += bracket * power * i_pow(m as i64 - n as i64) * *beta;
    }
    ensure_finite(sum / (2.0 * PI).sqrt(), "J_{m+1/2}")
}

/// `P̂_m(λ)` recovered from the half-order Bessel function.
pub fn legendre_hat_via_bessel(m: usize, lambda: Complex64) -> Result<Complex64> {
    if lambda.is_zero() {
        return Err(Error::Domain("the Bessel route requires λ ≠ 0".into()));
    }
    let j = bessel_half(m, lambda)?;
    ensure_finite(i_pow(-(m as i64)) * (2.0 * PI).sqrt() / lambda.sqrt() * j, "P̂_m via J")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn vanishes_at_origin() {
        for m in 0..5 {
            assert_eq!(bessel_half(m, Complex64::zero()).unwrap(), Complex64::zero());
        }
    }

    #[test]
    fn order_half_at_half_pi() {
        let v = bessel_half(0, real(PI / 2.0)).unwrap();
        assert!((v.re - 2.0 / PI).abs() < 1e-15 && v.im.abs() < 1e-15, "{v}");
    }

    #[test]
    fn order_three_halves_at_one() {
        let expected = (2.0 / PI).sqrt() * (1f64.sin() - 1f64.cos());
        let v = bessel_half(1, real(1.0)).unwrap();
        assert!((v.re - expected).abs() < 1e-14 && v.im.abs() < 1e-15, "{v}");
        assert!((v.re - 0.240298).abs() < 1e-6);
    }

    #[test]
    fn bessel_route_low_degree() {
        let v = legendre_hat_via_bessel(0, real(1.0)).unwrap();
        assert!((v - real(2.0 * 1f64.sin())).norm() < 1e-14);
        assert!(matches!(
            legendre_hat_via_bessel(2, Complex64::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn negative_axis_uses_principal_branch() {
        let a = legendre_hat_via_bessel(1, real(-2.0)).unwrap();
        let b = legendre_hat(1, real(-2.0)).unwrap().value;
        assert!((a - b).norm() <= 1e-11 * b.norm(), "{a} vs {b}");
    }
}
