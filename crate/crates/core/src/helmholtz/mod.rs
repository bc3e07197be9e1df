//! Global-relation collocation for the symmetric Dirichlet problem
//! `u_xx + u_yy - 4u = 0` on the square `[-1, 1]^2`.
//!
//! The unknown is the Neumann trace `u_x` on the side `x = -1`, expanded in
//! Legendre polynomials; symmetry reduces the four sides to this one.

pub mod boundary;
pub mod solver;
pub mod system;

pub use boundary::{exact_neumann, exact_solution, pde_residual, BoundaryData};
pub use solver::{
    global_relation_residual, least_squares, relative_error_einf, solve, solve_with, write_reports, NeumannExpansion,
    SolveReport, SolverConfig, REPORT_CSV_HEADER,
};
pub use system::{
    assemble_system, collocation_points, neumann_hat_column, scale_columns, scale_rows, scale_system,
    CollocationSystem, RayRule, Relation,
};
