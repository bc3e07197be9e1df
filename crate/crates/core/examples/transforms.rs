//! Evaluating T̂_m(λ) and P̂_m(λ) across the complex plane, and the path each point takes.

use num_complex::Complex64;
use orthofourier::coeffs::Family;
use orthofourier::oracle::quad_transform;
use orthofourier::transforms::{chebyshev_hat, chebyshev_hat_via_k, transform};
use orthofourier::ComplexValue;

fn main() {
    let m = 12;
    let points = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1e-3, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(-15.0, 0.0),
        Complex64::new(0.0, 8.0),
        Complex64::new(20.0, -3.0),
    ];
    println!(
        "{:<10} {:<12} {:<18} {:<46} |value - quad|",
        "family", "λ", "path", "value"
    );
    for family in [Family::Chebyshev, Family::Legendre] {
        for &lambda in &points {
            let r = transform(family, m, lambda).unwrap();
            let q = quad_transform(family, m, lambda).unwrap();
            println!(
                "{:<10} {:<12} {:<18} {:<46} {:.1e}",
                family.to_string(),
                ComplexValue(lambda).to_string(),
                r.path.to_string(),
                ComplexValue(r.value).to_string(),
                (r.value - q).norm()
            );
        }
    }

    // An independent route through K_m(z).
    let lambda = Complex64::new(0.5, -2.0);
    let direct = chebyshev_hat(4, lambda).unwrap().value;
    let via_k = chebyshev_hat_via_k(4, lambda).unwrap();
    println!(
        "\nT̂_4({}) = {} (direct), {} (via K_4)",
        ComplexValue(lambda),
        ComplexValue(direct),
        ComplexValue(via_k)
    );
}
