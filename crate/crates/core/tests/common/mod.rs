#![allow(dead_code)]

use awroots::bounds::ParameterSet;
use awroots::iteration::rho;
use num_complex::Complex64;
use proptest::prelude::*;

pub const TABLE1_A: [f64; 4] = [0.3, -0.2, 0.15, 0.1];
pub const TABLE1_Q: f64 = 0.1;
pub const TABLE2_A: [f64; 4] = [6.0 / 7.0, 5.0 / 7.0, 4.0 / 7.0, 3.0 / 7.0];
pub const TABLE2_Q: f64 = 1.0 / 9.0;

pub fn table1(n: usize) -> ParameterSet {
    ParameterSet::real(TABLE1_A, TABLE1_Q, n).unwrap()
}

pub fn round4(x: f64) -> f64 {
    (x * 1e4).round_ties_even() / 1e4
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Four parameters with moduli below `max_modulus`; with probability
/// one half, the first two form a conjugate pair.
pub fn parameters(max_modulus: f64) -> impl Strategy<Value = [Complex64; 4]> {
    let real = -max_modulus..max_modulus;
    (
        any::<bool>(),
        real.clone(),
        real.clone(),
        real.clone(),
        real,
        0.0..max_modulus,
        0.05..3.1f64,
    )
        .prop_map(|(paired, a1, a2, a3, a4, r, phi)| {
            if paired {
                let z = Complex64::from_polar(r, phi);
                [
                    z,
                    z.conj(),
                    Complex64::new(a3, 0.0),
                    Complex64::new(a4, 0.0),
                ]
            } else {
                [a1, a2, a3, a4].map(|x| Complex64::new(x, 0.0))
            }
        })
}

/// Valid parameter sets with degree in `degrees`.
pub fn parameter_sets(
    max_modulus: f64,
    max_q: f64,
    degrees: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = ParameterSet> {
    (parameters(max_modulus), -max_q..max_q, degrees)
        .prop_map(|(a, q, n)| ParameterSet::new(a, q, n).unwrap())
}

/// Valid parameter sets with a contraction constant below one.
pub fn contracting_sets(
    degrees: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = ParameterSet> {
    parameter_sets(0.7, 0.5, degrees).prop_filter("rho < 1", |p| rho(p) < 1.0)
}
