//! Fixed-point iteration for the root angles.
//!
//! Writing `v = θ + ν` turns the root system into `θ = U(θ)` with
//!
//! ```text
//! U_j(θ) = π j/(n+1) - [ Σ_r ν_{a_r}(θ_j) + Σ_{k≠j} (ν_q(θ_j+θ_k) + ν_q(θ_j-θ_k)) ] / (2(n+1))
//! ```
//!
//! `U` is Lipschitz on all of ℝⁿ with constant at most [`rho`]. Starting at
//! the Chebyshev nodes, the distance of iterate `l` to the roots is at most
//! `rho^l · ‖θ⁺ − θ⁻‖` whenever `rho < 1`.

use std::f64::consts::PI;
use std::ops::Deref;

use serde::Serialize;

use crate::bounds::{chebyshev_angles, root_bounds, BoundsResult, ParameterSet};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITERS: usize = 200;
pub const DEFAULT_STEP_TOL: f64 = 1e-13;

/// An ordered vector of `n` root angles, or an iterate approximating one.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RootVector(Vec<f64>);

impl RootVector {
    /// Wraps a non-empty vector of finite angles.
    pub fn new(angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::Argument("root vector must not be empty".into()));
        }
        if let Some(x) = angles.iter().find(|x| !x.is_finite()) {
            return Err(Error::Domain(format!("angle {x} is not finite")));
        }
        Ok(Self(angles))
    }

    pub(crate) fn from_vec(angles: Vec<f64>) -> Self {
        Self(angles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn cosines(&self) -> Vec<f64> {
        self.0.iter().map(|t| t.cos()).collect()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// All angles strictly inside (0, π).
    pub fn is_inside(&self) -> bool {
        self.0.iter().all(|&t| 0.0 < t && t < PI)
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &[f64]) -> f64 {
        euclidean_distance(&self.0, other)
    }

    /// Largest coordinate difference to `other`.
    pub fn max_distance(&self, other: &[f64]) -> f64 {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Deref for RootVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// The Chebyshev starting point `θ⁽⁰⁾_j = π j / (n + 1)`.
pub fn chebyshev_init(n: usize) -> Result<RootVector> {
    if n < 1 {
        return Err(Error::Argument("degree n must be at least 1".into()));
    }
    Ok(RootVector(chebyshev_angles(n)))
}

/// `Σ_r ν_{a_r}(θ_j) + Σ_{k≠j} (ν_q(θ_j+θ_k) + ν_q(θ_j−θ_k))` for every `j`.
pub(crate) fn nu_sums(params: &ParameterSet, theta: &[f64]) -> Vec<f64> {
    let q = params.q_kernel();
    let mut sums: Vec<f64> = theta.iter().map(|&t| params.nu_sum(t)).collect();
    if params.q() != 0.0 {
        for j in 0..theta.len() {
            for k in j + 1..theta.len() {
                let plus = q.nu(theta[j] + theta[k]);
                let minus = q.nu(theta[j] - theta[k]);
                // ν_q is odd, so the (k, j) term is plus - minus
                sums[j] += plus + minus;
                sums[k] += plus - minus;
            }
        }
    }
    sums
}

/// One application of the fixed-point map `U`.
pub fn fixed_point_map(params: &ParameterSet, theta: &[f64]) -> RootVector {
    let n1 = (theta.len() + 1) as f64;
    let scale = 1.0 / (2.0 * n1);
    let sums = nu_sums(params, theta);
    RootVector(
        sums.iter()
            .enumerate()
            .map(|(j, s)| PI * (j + 1) as f64 / n1 - scale * s)
            .collect(),
    )
}

/// The Lipschitz constant `ρ_n` of the fixed-point map.
pub fn rho(params: &ParameterSet) -> f64 {
    let n = params.n() as f64;
    let q = params.q().abs();
    let tail: f64 = params
        .a()
        .iter()
        .map(|a| a.modulus() / (1.0 - a.modulus()))
        .sum();
    ((n - 1.0) / (n + 1.0)) * (2.0 * q / (1.0 - q)) + tail / (n + 1.0)
}

/// Closed-form first approximation: the map `U` evaluated at the Chebyshev nodes.
pub fn first_order_approx(params: &ParameterSet) -> RootVector {
    let n = params.n();
    let n1 = (n + 1) as f64;
    let node = |m: i64| PI * m as f64 / n1;
    let q = params.q_kernel();
    let angles = (1..=n as i64)
        .map(|j| {
            let mut s = params.nu_sum(node(j));
            for k in (1..=n as i64).filter(|&k| k != j) {
                s += q.nu(node(j + k)) + q.nu(node(j - k));
            }
            node(j) - s / (2.0 * n1)
        })
        .collect();
    RootVector(angles)
}

/// The iterates of the fixed-point map together with their error certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationTrace {
    /// `iterates[l]` is `θ⁽ˡ⁾`; `iterates[0]` is the Chebyshev start.
    pub iterates: Vec<RootVector>,
    /// `step_deltas[l] = ‖θ⁽ˡ⁺¹⁾ − θ⁽ˡ⁾‖`.
    pub step_deltas: Vec<f64>,
    pub rho: f64,
    /// `‖θ⁺ − θ⁻‖` from the root brackets.
    pub bracket_width: f64,
    /// `ρ^l · ‖θ⁺ − θ⁻‖` for every recorded iterate; empty without a certificate.
    pub apriori_bounds: Vec<f64>,
    /// The final step fell below the requested tolerance.
    pub converged: bool,
}

impl IterationTrace {
    /// `ρ < 1`, so the a-priori bounds hold and the iteration converges.
    pub fn is_certified(&self) -> bool {
        self.rho < 1.0
    }

    pub fn last(&self) -> &RootVector {
        self.iterates
            .last()
            .expect("trace holds the initial iterate")
    }

    /// Number of map applications performed.
    pub fn iterations(&self) -> usize {
        self.iterates.len() - 1
    }
}

/// Runs the fixed-point recurrence from the Chebyshev nodes.
///
/// Stops once a step is shorter than `step_tol` or after `max_iters` steps.
/// With `ρ >= 1` the iteration is still carried out but the trace carries
/// no a-priori bounds.
pub fn iterate(params: &ParameterSet, max_iters: usize, step_tol: f64) -> Result<IterationTrace> {
    if !(step_tol >= 0.0) {
        return Err(Error::Argument(format!(
            "step tolerance {step_tol} must be non-negative"
        )));
    }
    let bounds = root_bounds(params);
    let rho = rho(params);
    let mut iterates = vec![chebyshev_init(params.n())?];
    let mut step_deltas = Vec::new();
    let mut converged = false;
    for _ in 0..max_iters {
        let current = iterates.last().expect("non-empty");
        let next = fixed_point_map(params, current);
        let delta = next.distance(current);
        iterates.push(next);
        step_deltas.push(delta);
        if delta < step_tol {
            converged = true;
            break;
        }
    }
    let bracket_width = bounds.width_norm();
    let apriori_bounds = if rho < 1.0 {
        (0..iterates.len())
            .map(|l| rho.powi(l as i32) * bracket_width)
            .collect()
    } else {
        Vec::new()
    };
    Ok(IterationTrace {
        iterates,
        step_deltas,
        rho,
        bracket_width,
        apriori_bounds,
        converged,
    })
}

/// The a-priori bound `ρ^l · ‖θ⁺ − θ⁻‖` on `‖θ − θ⁽ˡ⁾‖`.
pub fn error_certificate(trace: &IterationTrace, bounds: &BoundsResult, l: usize) -> Result<f64> {
    if !trace.is_certified() {
        return Err(Error::Uncertified { rho: trace.rho });
    }
    Ok(trace.rho.powi(l as i32) * bounds.width_norm())
}
