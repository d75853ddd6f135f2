use nalgebra::DVector;

use super::{jacobian, max_abs, system_residual};
use crate::bounds::ParameterSet;
use crate::error::{Error, Result};
use crate::iteration::{chebyshev_init, RootVector};

pub const DEFAULT_NEWTON_TOL: f64 = 1e-12;
pub const DEFAULT_NEWTON_STEPS: usize = 100;

/// Armijo sufficient-decrease constant.
const ARMIJO_C: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 60;

fn merit(residual: &[f64]) -> f64 {
    0.5 * residual.iter().map(|r| r * r).sum::<f64>()
}

/// Solves the root system by damped Newton from the Chebyshev nodes.
///
/// Steps are halved until `½‖G‖²` decreases by the Armijo factor. The
/// Jacobian is symmetric positive definite (it is the Hessian of a strictly
/// convex function), so the Newton system is solved by Cholesky.
///
/// Returns the first iterate with `max_j |G_j| < tol`.
pub fn newton_solve(params: &ParameterSet, tol: f64, max_steps: usize) -> Result<RootVector> {
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance {tol} must be positive")));
    }
    let mut theta = chebyshev_init(params.n())?.into_inner();
    let mut residual = system_residual(params, &theta);
    let mut steps = 0;

    while steps < max_steps {
        if max_abs(&residual) < tol {
            return Ok(RootVector::from_vec(theta));
        }
        steps += 1;

        let jac = jacobian(params, &theta);
        let rhs = -DVector::from_column_slice(&residual);
        let direction = match jac.clone().cholesky() {
            Some(chol) => chol.solve(&rhs),
            None => match jac.lu().solve(&rhs) {
                Some(d) => d,
                None => break,
            },
        };

        let current = merit(&residual);
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            let trial: Vec<f64> = theta
                .iter()
                .zip(direction.iter())
                .map(|(x, d)| x + t * d)
                .collect();
            let trial_residual = system_residual(params, &trial);
            if merit(&trial_residual) <= (1.0 - 2.0 * ARMIJO_C * t) * current {
                accepted = Some((trial, trial_residual));
                break;
            }
            t *= 0.5;
        }
        match accepted {
            Some((next, next_residual)) => {
                theta = next;
                residual = next_residual;
            }
            // no decrease possible: the residual sits at its rounding floor
            None => break,
        }
    }

    let reached = max_abs(&residual);
    if reached < tol {
        return Ok(RootVector::from_vec(theta));
    }
    Err(Error::SolverFailure {
        steps,
        residual: reached,
        tol,
        best: theta,
    })
}
