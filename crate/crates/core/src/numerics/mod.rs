//! Grid, quadrature, discrete calculus, eigensolvers, and Newton iteration.
//!
//! Everything here is a pure function of its inputs; serial execution is
//! bitwise deterministic.

pub mod calculus;
pub mod eig;
pub mod grid;
pub mod lapack;
pub mod newton;
pub mod tridiag;

pub use calculus::{derivative, dirichlet_energy, second_derivative, solve_second_derivative};
pub use eig::{b_orthonormalize, constrained_min_eig, pair_residual, sym_gen_eig, QuadraticForm};
pub use grid::{Grid1D, GridKind};
pub use newton::{newton_solve, DenseNewton, NewtonProblem, NewtonReport};
pub use tridiag::SymTridiag;
