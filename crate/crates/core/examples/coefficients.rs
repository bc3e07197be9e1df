//! Exact coefficient tables of the closed-form transforms.
//!
//! `cargo run --example coefficients -- 6`

use orthofourier::coeffs::{build_coeffs, Family, CSV_HEADER};

fn main() {
    let m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for family in [Family::Chebyshev, Family::Legendre] {
        let table = build_coeffs(family, m);
        let terms: Vec<String> = table.coeffs().iter().map(|c| c.to_string()).collect();
        println!("{family} m={m}: [{}]", terms.join(", "));
    }

    // Entries grow like (2m-1)!!, far past u64 by m = 40.
    let big = build_coeffs(Family::Legendre, 40);
    println!("legendre m=40, last coefficient = {}", big.get(41).unwrap());

    println!();
    println!("{CSV_HEADER}");
    build_coeffs(Family::Chebyshev, 3)
        .write_csv_rows(&mut std::io::stdout())
        .unwrap();
}
