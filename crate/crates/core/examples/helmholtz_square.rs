//! Dirichlet problem for Δu - 4u = 0 on [-1, 1]^2, solved for the Neumann trace
//! through the global relation.

use orthofourier::helmholtz::{exact_neumann, pde_residual, solve};

fn main() {
    println!("oracle check: max |Δu - 4u| = {:.1e}", pde_residual(101, 0.01));

    let (expansion, report) = solve(20, 40).unwrap();
    println!(
        "N={} M={}  E_inf={:.2e}  cond={:.2}  residual={:.1e}  {:.1} ms",
        report.basis,
        report.points,
        report.e_inf,
        report.cond,
        report.residual_norm,
        report.seconds * 1e3
    );

    println!("\n{:>6} {:>20} {:>20}", "y", "computed u_x(-1,y)", "exact");
    for k in 0..=8 {
        let y = -1.0 + 0.25 * k as f64;
        println!("{y:>6.2} {:>20.14} {:>20.14}", expansion.eval(y), exact_neumann(y));
    }

    println!("\nLegendre coefficients (odd ones should vanish):");
    for (l, c) in expansion.coefficients.iter().enumerate() {
        println!("  c_{l:<2} = {c:>23.15e}");
    }
}
