//! Half-order Bessel functions J_{m+1/2}(λ) against their elementary forms.

use std::f64::consts::PI;

use num_complex::Complex64;
use orthofourier::bessel::bessel_half;

fn main() {
    println!("{:>6} {:>22} {:>22} {:>22}", "x", "J_{1/2}", "J_{3/2}", "J_{21/2}");
    for x in [0.5, 1.0, 2.0, 5.0, 10.0, 30.0] {
        let z = Complex64::new(x, 0.0);
        let j = |m| bessel_half(m, z).unwrap().re;
        println!("{x:>6} {:>22.15e} {:>22.15e} {:>22.15e}", j(0), j(1), j(10));
        let elementary = (2.0 / (PI * x)).sqrt() * x.sin();
        assert!((j(0) - elementary).abs() <= 1e-14 * elementary.abs().max(1e-300) + 1e-16);
    }

    // Complex arguments use the principal branch of √λ.
    let z = Complex64::new(-2.0, 1.0);
    println!("\nJ_{{5/2}}({z}) = {}", bessel_half(2, z).unwrap());
    println!("J_{{m+1/2}}(0) = {}", bessel_half(3, Complex64::new(0.0, 0.0)).unwrap());
}
