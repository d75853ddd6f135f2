//! Independent ground truth for the root angles.
//!
//! The roots are the unique solution of
//!
//! ```text
//! G_j(θ) = Σ_r v_{a_r}(θ_j) + Σ_{k≠j} (v_q(θ_j+θ_k) + v_q(θ_j−θ_k)) − 2πj = 0,
//! ```
//!
//! which is the gradient of a strictly convex function `V` on ℝⁿ. This module
//! evaluates `G`, its symmetric Jacobian and `V`, solves `G = 0` by damped
//! Newton, and cross-checks candidate roots against the multiplicative form
//! of the same system in complex arithmetic.

mod newton;
mod spectral;

pub use newton::{newton_solve, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL};
pub use spectral::{fixed_point_jacobian, spectral_norm_check, SpectralCheck};

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{root_bounds, ParameterSet};
use crate::iteration::nu_sums;

/// Default truncation tolerance for [`morse_value`].
pub const DEFAULT_MORSE_TOL: f64 = 1e-12;

/// Residuals `G_j(θ)` of the transcendental system, `j = 1..n`.
///
/// Uses `v_ε(t) = t + ν_ε(t)`: the linear parts add up to `2(n+1)θ_j`,
/// which keeps the large terms out of the kernel sums.
pub fn system_residual(params: &ParameterSet, theta: &[f64]) -> Vec<f64> {
    let n1 = (theta.len() + 1) as f64;
    nu_sums(params, theta)
        .into_iter()
        .zip(theta)
        .enumerate()
        .map(|(j, (nu, &t))| (2.0 * n1 * t - 2.0 * PI * (j + 1) as f64) + nu)
        .collect()
}

pub(crate) fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Jacobian of [`system_residual`].
///
/// `DG_jj = Σ_r u_{a_r}(θ_j) + Σ_{k≠j} (u_q(θ_j+θ_k) + u_q(θ_j−θ_k))` and
/// `DG_jk = u_q(θ_j+θ_k) − u_q(θ_j−θ_k)`. It equals `2(n+1)(I − DU)` for the
/// Jacobian `DU` of the fixed-point map, and is symmetric since `u` is even.
pub fn jacobian(params: &ParameterSet, theta: &[f64]) -> DMatrix<f64> {
    let n = theta.len();
    let q = params.q_kernel();
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        m[(j, j)] += params.u_sum(theta[j]);
        for k in j + 1..n {
            let plus = q.u(theta[j] + theta[k]);
            let minus = q.u(theta[j] - theta[k]);
            m[(j, j)] += plus + minus;
            m[(k, k)] += plus + minus;
            m[(j, k)] = plus - minus;
            m[(k, j)] = plus - minus;
        }
    }
    m
}

/// `|Π_j − 1|` for the multiplicative form of the root system.
///
/// ```text
/// Π_j = Π_r (1 − a_r z_j)/(z_j − a_r) · Π_{k≠j} (1 − q w⁺)(1 − q w⁻) / ((w⁺ − q)(w⁻ − q))
/// ```
///
/// with `z_j = e^{iθ_j}` and `w± = e^{i(θ_j ± θ_k)}`. Each factor is formed
/// as a ratio before multiplying so the running product stays near the unit circle.
pub fn product_residual(params: &ParameterSet, theta: &[f64]) -> Vec<f64> {
    let a = params.a_complex();
    let q = Complex64::new(params.q(), 0.0);
    let one = Complex64::new(1.0, 0.0);
    (0..theta.len())
        .map(|j| {
            let z = Complex64::from_polar(1.0, theta[j]);
            let mut product = one;
            for ar in &a {
                product *= (one - ar * z) / (z - ar);
            }
            for k in (0..theta.len()).filter(|&k| k != j) {
                let wp = Complex64::from_polar(1.0, theta[j] + theta[k]);
                let wm = Complex64::from_polar(1.0, theta[j] - theta[k]);
                product *= (one - q * wp) / (wp - q);
                product *= (one - q * wm) / (wm - q);
            }
            (product - one).norm()
        })
        .collect()
}

/// The strictly convex function `V` whose gradient is [`system_residual`].
///
/// ```text
/// V(θ) = Σ_{j<k} (I_q(θ_j+θ_k) + I_q(θ_j−θ_k)) + Σ_j (Σ_r I_{a_r}(θ_j) − 2πj θ_j)
/// ```
///
/// where `I_ε(x) = ∫₀ˣ v_ε`. The total truncation error is below `tol`.
pub fn morse_value(params: &ParameterSet, theta: &[f64], tol: f64) -> f64 {
    let n = theta.len();
    let q = params.q_kernel();
    let share = tol / (n * n) as f64;
    let mut value = 0.0;
    for j in 0..n {
        for k in j + 1..n {
            value += q.v_integral(theta[j] + theta[k], share);
            value += q.v_integral(theta[j] - theta[k], share);
        }
        value += params.v_integral_sum(theta[j], share);
        value -= 2.0 * PI * (j + 1) as f64 * theta[j];
    }
    value
}

/// Residual and consistency checks for a candidate root vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// `max_j |G_j(θ)|`.
    pub system_residual: f64,
    /// `max_j |Π_j − 1|`.
    pub product_residual: f64,
    /// Coordinate `j` lies inside its bracket.
    pub in_bounds: Vec<bool>,
    /// `max |DG − DGᵀ|`.
    pub jacobian_symmetry_defect: f64,
    /// Spectral norm of the fixed-point Jacobian at `θ`.
    pub spectral_norm: f64,
    /// `spectral_norm <= rho + 1e-10`.
    pub rho_bound_ok: bool,
}

impl VerificationReport {
    pub fn all_in_bounds(&self) -> bool {
        self.in_bounds.iter().all(|&b| b)
    }
}

/// Runs every check in this module on `theta`.
pub fn verify(params: &ParameterSet, theta: &[f64]) -> VerificationReport {
    let jac = jacobian(params, theta);
    let defect = (&jac - jac.transpose()).amax();
    let spectral = spectral_norm_check(params, theta);
    VerificationReport {
        system_residual: max_abs(&system_residual(params, theta)),
        product_residual: max_abs(&product_residual(params, theta)),
        in_bounds: root_bounds(params).contains(theta),
        jacobian_symmetry_defect: defect,
        spectral_norm: spectral.spectral_norm,
        rho_bound_ok: spectral.rho_bound_ok,
    }
}
