use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::bounds::ParameterSet;
use crate::iteration::rho;

/// Slack allowed when comparing the spectral norm against `rho`.
const RHO_SLACK: f64 = 1e-10;

/// Jacobian `DU` of the fixed-point map.
///
/// ```text
/// DU_jj = 1 − [Σ_r u_{a_r}(θ_j) + Σ_{i≠j} (u_q(θ_j+θ_i) + u_q(θ_j−θ_i))] / (2(n+1))
/// DU_jk = [u_q(θ_j−θ_k) − u_q(θ_j+θ_k)] / (2(n+1))
/// ```
pub fn fixed_point_jacobian(params: &ParameterSet, theta: &[f64]) -> DMatrix<f64> {
    let n = theta.len();
    let scale = 1.0 / (2.0 * (n + 1) as f64);
    let q = params.q_kernel();
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut density = params.u_sum(theta[j]);
        for i in (0..n).filter(|&i| i != j) {
            density += q.u(theta[j] + theta[i]) + q.u(theta[j] - theta[i]);
            m[(j, i)] = scale * (q.u(theta[j] - theta[i]) - q.u(theta[j] + theta[i]));
        }
        m[(j, j)] = 1.0 - scale * density;
    }
    m
}

/// Extreme eigenvalues of `DU` and their comparison with `rho`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralCheck {
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// `max(|λ_min|, |λ_max|)`.
    pub spectral_norm: f64,
    pub rho: f64,
    /// Uniform lower bound on `λ_min`; its magnitude is `rho`.
    pub lambda_min_bound: f64,
    /// Uniform upper bound on `λ_max`.
    pub lambda_max_bound: f64,
    pub rho_bound_ok: bool,
}

/// Eigen-decomposes `DU(θ)` and checks `‖DU(θ)‖ <= rho`.
pub fn spectral_norm_check(params: &ParameterSet, theta: &[f64]) -> SpectralCheck {
    let du = fixed_point_jacobian(params, theta);
    let eigen = SymmetricEigen::new(du);
    let lambda_min = eigen.eigenvalues.min();
    let lambda_max = eigen.eigenvalues.max();
    let spectral_norm = lambda_min.abs().max(lambda_max.abs());

    let n = theta.len() as f64;
    let q = params.q().abs();
    let pair_weight = (n - 1.0) / (n + 1.0);
    let upper_tail: f64 = params
        .a()
        .iter()
        .map(|a| a.modulus() / (1.0 + a.modulus()))
        .sum();
    let rho = rho(params);
    SpectralCheck {
        lambda_min,
        lambda_max,
        spectral_norm,
        rho,
        lambda_min_bound: -rho,
        lambda_max_bound: pair_weight * 2.0 * q / (1.0 + q) + upper_tail / (n + 1.0),
        rho_bound_ok: spectral_norm <= rho + RHO_SLACK,
    }
}
