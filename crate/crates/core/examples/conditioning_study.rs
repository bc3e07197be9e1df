//! Error and conditioning against basis size and over-determination factor,
//! written as CSV for plotting.

use orthofourier::helmholtz::{solve, write_reports};

fn main() {
    let mut reports = Vec::new();
    for n in [4, 8, 12, 16, 20, 24] {
        for factor in [0.5, 1.0, 1.5, 2.0] {
            let m = (factor * n as f64).round() as usize;
            reports.push(solve(n, m).unwrap().1);
        }
    }
    write_reports(&mut std::io::stdout(), &reports).unwrap();

    // M = N/2 gives a square system whose two relations coincide at λ = 1,
    // so it is singular; any over-determination repairs it.
    let worst = reports
        .iter()
        .filter(|r| 2 * r.points >= 2 * r.basis)
        .map(|r| r.cond)
        .fold(0.0, f64::max);
    eprintln!("largest condition number with M >= N: {worst:.2}");
}
