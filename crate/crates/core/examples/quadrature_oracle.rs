//! Gauss–Legendre rules and the brute-force reference transform.

use num_complex::Complex64;
use orthofourier::coeffs::Family;
use orthofourier::oracle::{gauss_rule, quad_transform, QuadratureRule};
use orthofourier::transforms::legendre_hat;

fn main() {
    let rule = QuadratureRule::gauss_legendre(5);
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        println!("x = {x:>22.17}  w = {w:.17}");
    }

    // Exact for polynomials up to degree 2n - 1.
    let rule = gauss_rule(32);
    println!(
        "\n∫ x^62 = {:.17} (exact {:.17})",
        rule.integrate(|x| x.powi(62)),
        2.0 / 63.0
    );

    // The oracle never touches the coefficient tables, so it checks them.
    for m in [5, 20, 40] {
        let lambda = Complex64::new(m as f64 + 3.0, 1.5);
        let closed = legendre_hat(m, lambda).unwrap().value;
        let quad = quad_transform(Family::Legendre, m, lambda).unwrap();
        println!(
            "m={m:<3} closed form {closed:.6e}  quadrature {quad:.6e}  diff {:.1e}",
            (closed - quad).norm()
        );
    }
}
