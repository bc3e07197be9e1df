//! Finite Fourier transforms `p̂_m(λ) = ∫_{-1}^{1} e^{-iλx} p_m(x) dx` of
//! Chebyshev and Legendre polynomials.
//!
//! Three evaluation paths:
//!
//! * `ZeroLambda`: the exact value at `λ = 0`;
//! * `ClosedForm`: the finite sum `Σ c_n [e^{iλ} + (-1)^{n+m} e^{-iλ}] / (iλ)^n`;
//! * `SmallLambdaSeries`: the Taylor series `Σ_k (-iλ)^k / k! · μ_{k,m}` with exact moments.
//!
//! Both sums are exact in real arithmetic but cancel in floating point: the
//! closed form when `|λ|` is small against `m` or `λ` leans toward the
//! imaginary axis, the series when `|λ|` is large and `λ` is close to the real
//! axis. For every `λ ≠ 0` the path with the smaller summation condition
//! `Σ |term|` is taken; both bounds are cheap to compute up front.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coeffs::{binom_clamped, coefficients, Family};
use crate::complex::{ensure_finite, exp_pair, I};
use crate::error::{Error, Result};
use crate::moments::{moments, MAX_MOMENTS};

/// Truncation target of the series, relative to the partial sum.
pub const SERIES_TOLERANCE: f64 = 1e-17;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalPath {
    ClosedForm,
    ZeroLambda,
    SmallLambdaSeries,
}

impl fmt::Display for EvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalPath::ClosedForm => "ClosedForm",
            EvalPath::ZeroLambda => "ZeroLambda",
            EvalPath::SmallLambdaSeries => "SmallLambdaSeries",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformResult {
    pub value: Complex64,
    pub path: EvalPath,
    pub degree: usize,
    pub family: Family,
}

/// `T̂_m(λ)`.
pub fn chebyshev_hat(m: usize, lambda: Complex64) -> Result<TransformResult> {
    transform(Family::Chebyshev, m, lambda)
}

/// `P̂_m(λ)`.
pub fn legendre_hat(m: usize, lambda: Complex64) -> Result<TransformResult> {
    transform(Family::Legendre, m, lambda)
}

/// Transform of `p_m` at `λ` on the automatically selected path.
pub fn transform(family: Family, m: usize, lambda: Complex64) -> Result<TransformResult> {
    let finish = |value, path| TransformResult {
        value,
        path,
        degree: m,
        family,
    };
    if lambda.is_zero() {
        let value = zero_lambda_exact(family, m).to_f64().unwrap_or(f64::NAN);
        return Ok(finish(Complex64::new(value, 0.0), EvalPath::ZeroLambda));
    }
    if !(lambda.re.is_finite() && lambda.im.is_finite()) {
        return Err(Error::Domain(format!("λ = {lambda} is not finite")));
    }
    let budget = closed_form_condition(family, m, lambda);
    if let Some(value) = series_within(family, m, lambda, budget)? {
        return Ok(finish(value, EvalPath::SmallLambdaSeries));
    }
    Ok(finish(closed_form(family, m, lambda)?, EvalPath::ClosedForm))
}

/// Path [`transform`] would take at `λ`.
pub fn select_path(family: Family, m: usize, lambda: Complex64) -> EvalPath {
    if lambda.is_zero() {
        return EvalPath::ZeroLambda;
    }
    let budget = closed_form_condition(family, m, lambda);
    match series_within(family, m, lambda, budget) {
        Ok(Some(_)) => EvalPath::SmallLambdaSeries,
        _ => EvalPath::ClosedForm,
    }
}

/// Exact value at `λ = 0`: `((-1)^{m+1} - 1)/(m^2 - 1)` (zero at `m = 1`) for
/// Chebyshev, `2δ_{m0}` for Legendre.
pub fn zero_lambda_exact(family: Family, m: usize) -> BigRational {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    match family {
        Family::Legendre if m == 0 => int(2),
        Family::Legendre => int(0),
        Family::Chebyshev if m == 1 => int(0),
        Family::Chebyshev => {
            let mi = m as i64;
            let numer = if m.is_multiple_of(2) { -2 } else { 0 };
            BigRational::new(BigInt::from(numer), BigInt::from(mi * mi - 1))
        }
    }
}

/// `Σ |c_n| |iλ|^{-n} · 2e^{|Im λ|}`: an upper bound on the magnitude of the
/// closed-form terms, infinite when a coefficient does not fit a double.
fn closed_form_condition(family: Family, m: usize, lambda: Complex64) -> f64 {
    let table = coefficients(family, m);
    let inv = 1.0 / lambda.norm();
    let mut power = 1.0;
    let mut total = 0.0;
    for c in &table.values {
        power *= inv;
        total += c.abs() * power;
    }
    2.0 * lambda.im.abs().exp() * total
}

/// The closed-form sum. Requires `λ ≠ 0`.
pub fn closed_form(family: Family, m: usize, lambda: Complex64) -> Result<Complex64> {
    if lambda.is_zero() {
        return Err(Error::Domain("closed form is undefined at λ = 0".into()));
    }
    let table = coefficients(family, m);
    let (ep, em) = exp_pair(lambda)?;
    let w = 1.0 / (I * lambda);
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::zero();
    for (idx, c) in table.values.iter().enumerate() {
        let n = idx + 1;
        power *= w;
        let bracket = if (n + m).is_multiple_of(2) { ep + em } else { ep - em };
        sum += bracket * power * *c;
    }
    ensure_finite(sum, "closed-form transform")
}

/// Taylor series in `λ` with exact moments, summed to [`SERIES_TOLERANCE`].
/// Valid for any `λ`; accurate where `Σ |term|` stays close to `|p̂_m(λ)|`.
pub fn small_lambda_series(family: Family, m: usize, lambda: Complex64) -> Result<Complex64> {
    match series_within(family, m, lambda, f64::INFINITY)? {
        Some(v) => ensure_finite(v, "series transform"),
        None => Err(Error::Range(format!("series for degree {m} overflows at λ = {lambda}"))),
    }
}

/// Sums the series unless its running `Σ |term|` exceeds `budget`, in which
/// case `None` is returned early.
fn series_within(family: Family, m: usize, lambda: Complex64, budget: f64) -> Result<Option<Complex64>> {
    let z = -I * lambda;
    let r = lambda.norm();
    // Terms peak near k = |λ|; the tail is geometric once k exceeds e|λ|.
    let wanted = (m + (3.0 * r) as usize + 48).min(MAX_MOMENTS);
    let mut mu = moments(family, m, wanted);
    let mut term = Complex64::new(1.0, 0.0); // z^k / k!
    let mut term_abs = 1.0; // |λ|^k / k!
    let mut sum = Complex64::zero();
    let mut abs_sum = 0.0;
    let mut k = 0usize;
    loop {
        if k >= mu.len() {
            if mu.len() >= MAX_MOMENTS {
                return Err(Error::Accuracy(format!(
                    "series for degree {m} did not converge within {MAX_MOMENTS} terms at λ = {lambda}"
                )));
            }
            mu = moments(family, m, 2 * mu.len());
        }
        let moment = mu[k];
        if moment != 0.0 {
            sum += term * moment;
            abs_sum += term_abs * moment.abs();
            if abs_sum.is_nan() || abs_sum > budget {
                return Ok(None);
            }
        }
        // |μ_j| <= 2 for every j, so 2|λ|^k/k! bounds the remaining terms once k > |λ|.
        if k > m && (k as f64) > 2.0 * r && 2.0 * term_abs <= SERIES_TOLERANCE * sum.norm() {
            return Ok(Some(sum));
        }
        if k > m && term_abs == 0.0 {
            return Ok(Some(sum));
        }
        k += 1;
        term = term * z / k as f64;
        term_abs *= r / k as f64;
    }
}

/// `K_m(z) = ∫_0^π e^{z cos w} sin(mw) dw` through its closed form
///
/// ```text
/// K_m(z) = (m/z)(e^z + (-1)^m e^{-z})
///        + (1/z) Σ_{n=1}^{m-1} (2/z)^n ((-1)^n e^z + (-1)^m e^{-z}) S_{m,n},
/// S_{m,n} = Σ_{k=1}^{m-n} C(n+k-1, k-1) Π_{j=k}^{n+k-1} (m - j).
/// ```
pub fn k_function(m: usize, z: Complex64) -> Result<Complex64> {
    if z.is_zero() {
        return Err(Error::Domain("K_m(z) requires z ≠ 0".into()));
    }
    if z.re.abs() > 700.0 {
        return Err(Error::Range(format!("|Re z| = {} overflows e^(±z)", z.re.abs())));
    }
    let mi = m as i64;
    let ep = z.exp();
    let em = (-z).exp();
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut total = (ep + em * sign_m) * (m as f64) / z;
    let ratio = 2.0 / z;
    let mut power = Complex64::new(1.0, 0.0);
    for n in 1..mi {
        power *= ratio;
        let inner = (1..=mi - n).fold(BigInt::zero(), |acc, k| {
            let prod = (k..=n + k - 1).fold(BigInt::from(1), |p, j| p * BigInt::from(mi - j));
            acc + binom_clamped((n + k - 1) as u64, k - 1) * prod
        });
        let sign_n = if n % 2 == 0 { 1.0 } else { -1.0 };
        let s = inner.to_f64().unwrap_or(f64::INFINITY);
        total += power * (ep * sign_n + em * sign_m) * s / z;
    }
    ensure_finite(total, "K_m(z)")
}

/// `T̂_m(λ) = (1/(iλ)) [(-1)^m e^{iλ} - e^{-iλ} + m K_m(-iλ)]`, an evaluation
/// route independent of the `α` table.
pub fn chebyshev_hat_via_k(m: usize, lambda: Complex64) -> Result<Complex64> {
    if lambda.is_zero() {
        return Err(Error::Domain("the K_m route requires λ ≠ 0".into()));
    }
    let (ep, em) = exp_pair(lambda)?;
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let k = if m == 0 {
        Complex64::zero()
    } else {
        k_function(m, -I * lambda)?
    };
    ensure_finite((ep * sign_m - em + k * m as f64) / (I * lambda), "T̂_m via K_m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn zero_lambda_values() {
        let r = chebyshev_hat(0, c(0.0, 0.0)).unwrap();
        assert_eq!(r.value, c(2.0, 0.0));
        assert_eq!(r.path, EvalPath::ZeroLambda);
        assert_eq!(chebyshev_hat(1, c(0.0, 0.0)).unwrap().value, c(0.0, 0.0));
        assert_eq!(chebyshev_hat(2, c(0.0, 0.0)).unwrap().value, c(-2.0 / 3.0, 0.0));
        assert_eq!(legendre_hat(0, c(0.0, 0.0)).unwrap().value, c(2.0, 0.0));
        assert_eq!(legendre_hat(5, c(0.0, 0.0)).unwrap().value, c(0.0, 0.0));
    }

    #[test]
    fn chebyshev_zero_degree_at_pi() {
        let r = chebyshev_hat(0, c(PI, 0.0)).unwrap();
        assert!(r.value.norm() < 1e-15, "{}", r.value);
    }

    #[test]
    fn legendre_degree_one_at_one() {
        let expected = c(0.0, 2.0 * (1f64.cos() - 1f64.sin()));
        let r = legendre_hat(1, c(1.0, 0.0)).unwrap();
        assert!(close(r.value, expected, 1e-14), "{}", r.value);
        assert!((r.value.im + 0.60233).abs() < 1e-5);
    }

    #[test]
    fn tiny_lambda_takes_series() {
        assert_eq!(
            select_path(Family::Legendre, 5, c(1e-3, 0.0)),
            EvalPath::SmallLambdaSeries
        );
        assert_eq!(
            select_path(Family::Chebyshev, 0, c(1e-6, 1e-6)),
            EvalPath::SmallLambdaSeries
        );
        assert_eq!(select_path(Family::Legendre, 3, c(40.0, 0.0)), EvalPath::ClosedForm);
    }

    #[test]
    fn series_leading_term_degree_two() {
        // P̂_2(λ) = -(λ^2/2)(4/15) + O(λ^4).
        let lam = 1e-3;
        let v = small_lambda_series(Family::Legendre, 2, c(lam, 0.0)).unwrap();
        let lead = -lam * lam * (4.0 / 15.0) / 2.0;
        assert!((v.re - lead).abs() <= 1e-6 * lead.abs());
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn series_and_closed_form_agree_in_overlap() {
        for m in 0..8 {
            for lam in [c(2.5, 0.0), c(1.0, 2.0), c(0.0, 3.0), c(-3.0, 0.5)] {
                let a = small_lambda_series(Family::Legendre, m, lam).unwrap();
                let b = closed_form(Family::Legendre, m, lam).unwrap();
                assert!(close(a, b, 1e-12), "m={m} λ={lam}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn k_examples() {
        assert_eq!(k_function(0, c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let k1 = k_function(1, c(1.0, 0.0)).unwrap();
        assert!((k1.re - (E - 1.0 / E)).abs() < 1e-14 && k1.im == 0.0);
        // K_2 = -(2/z)K_1 + K_0 + (2/z)(e^z - e^{-z}) at z = 1.
        let k2 = k_function(2, c(1.0, 0.0)).unwrap();
        let expected = 2.0 * (E + 1.0 / E) - 2.0 * (E - 1.0 / E);
        assert!((k2.re - expected).abs() < 1e-13, "{k2}");
        assert!((k2.re - 1.471517764685769).abs() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(k_function(3, c(0.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(chebyshev_hat_via_k(3, c(0.0, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(
            closed_form(Family::Legendre, 3, c(0.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn overflow_is_a_range_error() {
        assert!(matches!(
            closed_form(Family::Legendre, 2, c(1.0, 800.0)),
            Err(Error::Range(_))
        ));
        assert!(matches!(k_function(2, c(900.0, 0.0)), Err(Error::Range(_))));
    }

    #[test]
    fn route_through_k_low_degrees() {
        let v = chebyshev_hat_via_k(0, c(1.0, 0.0)).unwrap();
        assert!(close(v, c(2.0 * 1f64.sin(), 0.0), 1e-15));
        let a = chebyshev_hat_via_k(1, c(1.0, 0.0)).unwrap();
        let b = chebyshev_hat(1, c(1.0, 0.0)).unwrap().value;
        assert!((a - b).norm() <= 1e-12);
    }
}
