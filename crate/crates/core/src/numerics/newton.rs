//! Newton iteration for nonlinear systems.
//!
//! The Jacobian enters through a solve callback so structured callers (the
//! flow's tridiagonal-plus-rank-one systems) avoid forming dense matrices.

use super::lapack;
use crate::error::{Error, Result};

pub trait NewtonProblem {
    fn residual(&self, x: &[f64]) -> Vec<f64>;
    /// Solve `J(x) δ = rhs`.
    fn solve_jacobian(&self, x: &[f64], rhs: &[f64]) -> Result<Vec<f64>>;
}

#[derive(Debug, Clone, Copy)]
pub struct NewtonReport {
    pub iterations: usize,
    pub residual_norm: f64,
}

/// Newton iteration to sup-norm tolerance `tol`.
pub fn newton_solve(
    problem: &impl NewtonProblem,
    init: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, NewtonReport)> {
    let mut x = init.to_vec();
    let mut r = problem.residual(&x);
    let mut rnorm = sup_norm(&r);
    let r0 = rnorm;
    for it in 0..max_iter {
        if rnorm <= tol {
            return Ok((x, NewtonReport { iterations: it, residual_norm: rnorm }));
        }
        let delta = problem.solve_jacobian(&x, &r)?;
        for (xi, di) in x.iter_mut().zip(&delta) {
            *xi -= di;
        }
        r = problem.residual(&x);
        rnorm = sup_norm(&r);
        if !rnorm.is_finite() || rnorm > 1e6 * (r0 + 1.0) {
            return Err(Error::non_convergence(format!(
                "newton diverged at iteration {}: residual {rnorm:.3e}",
                it + 1
            )));
        }
    }
    if rnorm <= tol {
        Ok((x, NewtonReport { iterations: max_iter, residual_norm: rnorm }))
    } else {
        Err(Error::non_convergence(format!(
            "newton did not reach tolerance {tol:.3e} in {max_iter} iterations (residual {rnorm:.3e})"
        )))
    }
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Convenience problem with a dense Jacobian matrix callback (column-major).
pub struct DenseNewton<R, J>
where
    R: Fn(&[f64]) -> Vec<f64>,
    J: Fn(&[f64]) -> Vec<f64>,
{
    pub residual: R,
    pub jacobian: J,
    pub dim: usize,
}

impl<R, J> NewtonProblem for DenseNewton<R, J>
where
    R: Fn(&[f64]) -> Vec<f64>,
    J: Fn(&[f64]) -> Vec<f64>,
{
    fn residual(&self, x: &[f64]) -> Vec<f64> {
        (self.residual)(x)
    }

    fn solve_jacobian(&self, x: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
        let mut jac = (self.jacobian)(x);
        let mut b = rhs.to_vec();
        lapack::solve_dense(&mut jac, self.dim, &mut b)?;
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_sqrt2() {
        let p = DenseNewton {
            residual: |x: &[f64]| vec![x[0] * x[0] - 2.0],
            jacobian: |x: &[f64]| vec![2.0 * x[0]],
            dim: 1,
        };
        let (x, report) = newton_solve(&p, &[1.0], 1e-13, 50).unwrap();
        assert!((x[0] - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(report.iterations <= 8);
    }

    #[test]
    fn linear_system_one_step() {
        // residual Ax - b with A = [[2,1],[1,3]]
        let a = [2.0, 1.0, 1.0, 3.0]; // col-major
        let bvec = [5.0, 10.0];
        let p = DenseNewton {
            residual: move |x: &[f64]| {
                vec![
                    a[0] * x[0] + a[2] * x[1] - bvec[0],
                    a[1] * x[0] + a[3] * x[1] - bvec[1],
                ]
            },
            jacobian: move |_x: &[f64]| a.to_vec(),
            dim: 2,
        };
        let (x, report) = newton_solve(&p, &[0.0, 0.0], 1e-12, 5).unwrap();
        assert!(report.iterations <= 1, "exact newton on a linear map takes one step");
        assert!((2.0 * x[0] + x[1] - 5.0).abs() < 1e-12);
        assert!((x[0] + 3.0 * x[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn divergence_reported() {
        // residual with no real root and outward-pointing updates
        let p = DenseNewton {
            residual: |x: &[f64]| vec![x[0] * x[0] + 1.0],
            jacobian: |x: &[f64]| vec![2.0 * x[0]],
            dim: 1,
        };
        assert!(newton_solve(&p, &[0.5], 1e-12, 30).is_err());
    }
}
