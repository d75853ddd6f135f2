//! Brackets for the root angles.
//!
//! Integrating the uniform bounds on the kernel density from 0 to θ_j and
//! from θ_j to π gives two families of brackets:
//!
//! ```text
//! (a)  π j / k_+              <= θ_j <= π j / k_-
//! (b)  π (1 - (n+1-j)/k_-)    <= θ_j <= π (1 - (n+1-j)/k_+)
//! ```
//!
//! Family (a) is sharper near θ = 0, family (b) near θ = π, and the
//! crossover indices `j_-`, `j_+` tell which one wins for the lower and
//! the upper bound. Bounds taken from family (b) are reported as "boxed".

mod params;

pub use params::{validate, ParamTerm, ParameterSet};

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Crossover indices separating the two bracket families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossover {
    /// Lower bounds come from family (a) for `j <= j_minus`, from (b) beyond.
    pub j_minus: f64,
    /// Upper bounds come from family (a) for `j <= j_plus`, from (b) beyond.
    pub j_plus: f64,
}

/// Per-root brackets `lower[j] <= θ_j <= upper[j]` (0-based `j`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsResult {
    pub k_minus: f64,
    pub k_plus: f64,
    /// `None` in the degenerate case `k_+ = k_-`, where the roots are exact.
    pub crossover: Option<Crossover>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Lower bound `j` comes from family (b).
    pub lower_boxed: Vec<bool>,
    /// Upper bound `j` comes from family (b).
    pub upper_boxed: Vec<bool>,
}

impl BoundsResult {
    pub fn is_degenerate(&self) -> bool {
        self.crossover.is_none()
    }

    /// Euclidean norm of `upper - lower`.
    pub fn width_norm(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| (u - l) * (u - l))
            .sum::<f64>()
            .sqrt()
    }

    /// Membership flag for each coordinate of `theta`.
    pub fn contains(&self, theta: &[f64]) -> Vec<bool> {
        theta
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(t, (l, u))| l <= t && t <= u)
            .collect()
    }
}

/// The constants `(k_-, k_+)`; only the moduli of the parameters enter.
pub fn k_bounds(params: &ParameterSet) -> (f64, f64) {
    let ratio = |m: f64| (1.0 + m) / (1.0 - m);
    let n = params.n() as f64;
    let qr = ratio(params.q().abs());
    let mut k_plus = (n - 1.0) * qr;
    let mut k_minus = (n - 1.0) / qr;
    for a in params.a() {
        let r = ratio(a.modulus());
        k_plus += 0.5 * r;
        k_minus += 0.5 / r;
    }
    (k_minus, k_plus)
}

/// The exact roots `π j / (n + 1)` of the Chebyshev case.
pub(crate) fn chebyshev_angles(n: usize) -> Vec<f64> {
    let n1 = (n + 1) as f64;
    (1..=n).map(|j| PI * j as f64 / n1).collect()
}

/// The crossover indices `(j_-, j_+)`.
///
/// Fails with [`Error::Degenerate`] when `k_+ = k_-`.
pub fn crossover_indices(params: &ParameterSet) -> Result<(f64, f64)> {
    let (k_minus, k_plus) = k_bounds(params);
    if !(k_plus > k_minus) {
        return Err(Error::Degenerate {
            k: k_plus,
            exact_roots: chebyshev_angles(params.n()),
        });
    }
    let n1 = (params.n() + 1) as f64;
    let spread = k_plus - k_minus;
    let j_plus = (k_plus - n1) * k_minus / spread;
    let j_minus = k_plus * (n1 - k_minus) / spread;
    Ok((j_minus, j_plus))
}

/// Brackets for every root angle.
///
/// Both bracket families are evaluated and intersected. In the degenerate
/// case the brackets collapse onto the exact roots `π j / (n + 1)`.
pub fn root_bounds(params: &ParameterSet) -> BoundsResult {
    let n = params.n();
    let (k_minus, k_plus) = k_bounds(params);
    let (j_minus, j_plus) = match crossover_indices(params) {
        Ok(c) => c,
        Err(_) => {
            let exact = chebyshev_angles(n);
            return BoundsResult {
                k_minus,
                k_plus,
                crossover: None,
                lower: exact.clone(),
                upper: exact,
                lower_boxed: vec![false; n],
                upper_boxed: vec![false; n],
            };
        }
    };

    let n1 = (n + 1) as f64;
    let mut result = BoundsResult {
        k_minus,
        k_plus,
        crossover: Some(Crossover { j_minus, j_plus }),
        lower: Vec::with_capacity(n),
        upper: Vec::with_capacity(n),
        lower_boxed: Vec::with_capacity(n),
        upper_boxed: Vec::with_capacity(n),
    };
    for j in 1..=n {
        let jf = j as f64;
        let lower_a = PI * jf / k_plus;
        let upper_a = PI * jf / k_minus;
        let lower_b = PI * (1.0 - (n1 - jf) / k_minus);
        let upper_b = PI * (1.0 - (n1 - jf) / k_plus);
        result.lower.push(lower_a.max(lower_b));
        result.upper.push(upper_a.min(upper_b));
        result.lower_boxed.push(jf > j_minus);
        result.upper_boxed.push(jf > j_plus);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn table1() -> ParameterSet {
        ParameterSet::real([0.3, -0.2, 0.15, 0.1], 0.1, 5).unwrap()
    }

    fn table2(n: usize) -> ParameterSet {
        ParameterSet::real([6.0 / 7.0, 5.0 / 7.0, 4.0 / 7.0, 3.0 / 7.0], 1.0 / 9.0, n).unwrap()
    }

    fn round4(x: f64) -> f64 {
        (x * 1e4).round_ties_even() / 1e4
    }

    #[test]
    fn k_bounds_reference() {
        let (k_minus, k_plus) = k_bounds(&table1());
        // 4 * 11/9 + (13/7 + 3/2 + 23/17 + 11/9) / 2
        let exact_plus = 4.0 * 11.0 / 9.0 + 0.5 * (13.0 / 7.0 + 1.5 + 23.0 / 17.0 + 11.0 / 9.0);
        let exact_minus =
            4.0 * 9.0 / 11.0 + 0.5 * (7.0 / 13.0 + 2.0 / 3.0 + 17.0 / 23.0 + 9.0 / 11.0);
        assert_abs_diff_eq!(k_plus, exact_plus, epsilon = 1e-14);
        assert_abs_diff_eq!(k_minus, exact_minus, epsilon = 1e-14);
        assert_abs_diff_eq!(k_plus, 7.8550, epsilon = 5e-5);
        assert_abs_diff_eq!(k_minus, 4.6539, epsilon = 5e-5);
        assert_eq!(round4(PI / k_plus), 0.3999);
        assert_eq!(round4(PI / k_minus), 0.6750);
    }

    #[test]
    fn k_bounds_all_zero() {
        for n in [1, 4, 9] {
            let p = ParameterSet::real([0.0; 4], 0.0, n).unwrap();
            assert_eq!(k_bounds(&p), ((n + 1) as f64, (n + 1) as f64));
        }
    }

    #[test]
    fn k_bounds_table2() {
        // θ⁻_n = π(1 - 1/k_-) and θ⁺_1 = π/k_- are mirror images
        let (k_minus, _) = k_bounds(&table2(7));
        assert_eq!(round4((PI * (1.0 - 1.0 / k_minus)).cos()), -0.8268);
        assert_eq!(round4((PI / k_minus).cos()), 0.8268);
    }

    #[test]
    fn crossover_reference() {
        let (j_minus, j_plus) = crossover_indices(&table1()).unwrap();
        assert_abs_diff_eq!(j_plus, 2.70, epsilon = 5e-3);
        assert_abs_diff_eq!(j_minus, 3.30, epsilon = 5e-3);
    }

    #[test]
    fn crossover_symmetric_identity() {
        // j_+ + j_- = n + 1 whenever k_+ - (n+1) = (n+1) - k_-
        let n1 = 8.0;
        let delta = 1.3;
        let (k_plus, k_minus) = (n1 + delta, n1 - delta);
        let spread = k_plus - k_minus;
        let j_plus = (k_plus - n1) * k_minus / spread;
        let j_minus = k_plus * (n1 - k_minus) / spread;
        assert_abs_diff_eq!(j_plus + j_minus, n1, epsilon = 1e-14);
    }

    #[test]
    fn crossover_degenerate() {
        let p = ParameterSet::real([0.0; 4], 0.0, 5).unwrap();
        match crossover_indices(&p) {
            Err(Error::Degenerate { k, exact_roots }) => {
                assert_eq!(k, 6.0);
                assert_eq!(exact_roots.len(), 5);
            }
            other => panic!("expected degenerate signal, got {other:?}"),
        }
        // n = 1 with only q nonzero: q does not enter, still degenerate
        let p = ParameterSet::real([0.0; 4], 0.4, 1).unwrap();
        assert!(crossover_indices(&p).is_err());
    }

    #[test]
    fn table1_brackets() {
        let b = root_bounds(&table1());
        let lower: Vec<f64> = b.lower.iter().map(|&x| round4(x)).collect();
        let upper: Vec<f64> = b.upper.iter().map(|&x| round4(x)).collect();
        assert_eq!(lower, vec![0.3999, 0.7999, 1.1998, 1.7915, 2.4666]);
        assert_eq!(upper, vec![0.6750, 1.3501, 1.9418, 2.3417, 2.7416]);
        assert_eq!(b.lower_boxed, vec![false, false, false, true, true]);
        assert_eq!(b.upper_boxed, vec![false, false, true, true, true]);
    }

    #[test]
    fn table2_extreme_brackets() {
        let b = root_bounds(&table2(12));
        assert_eq!(round4(b.upper[0].cos()), 0.9430);
        assert_eq!(round4(b.lower[11].cos()), -0.9430);
    }

    #[test]
    fn degenerate_brackets_are_exact() {
        let p = ParameterSet::real([0.0; 4], 0.0, 5).unwrap();
        let b = root_bounds(&p);
        assert!(b.is_degenerate());
        for j in 0..5 {
            assert_eq!(b.lower[j], b.upper[j]);
            assert_eq!(b.lower[j], PI * (j + 1) as f64 / 6.0);
        }
        assert_eq!(b.width_norm(), 0.0);
    }

    #[test]
    fn intersection_matches_piecewise_rule() {
        for p in [table1(), table2(7), table2(20)] {
            let b = root_bounds(&p);
            let (k_minus, k_plus) = (b.k_minus, b.k_plus);
            let c = b.crossover.unwrap();
            let n1 = (p.n() + 1) as f64;
            for j in 1..=p.n() {
                let jf = j as f64;
                let lower = if jf <= c.j_minus {
                    PI * jf / k_plus
                } else {
                    PI * (1.0 - (n1 - jf) / k_minus)
                };
                let upper = if jf <= c.j_plus {
                    PI * jf / k_minus
                } else {
                    PI * (1.0 - (n1 - jf) / k_plus)
                };
                assert_eq!(b.lower[j - 1], lower);
                assert_eq!(b.upper[j - 1], upper);
            }
        }
    }
}
