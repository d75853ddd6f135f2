use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{KernelParam, RealKernel};

/// Tolerance used when matching a complex parameter with its conjugate partner.
const CONJUGATE_TOL: f64 = 1e-12;

/// How the four parameters enter the kernel sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamTerm {
    /// A single real parameter.
    Real(RealKernel),
    /// A conjugate pair `{a, conj(a)}` with `Im a != 0`.
    Pair(KernelParam),
}

/// Validated Askey-Wilson parameters `(a1, a2, a3, a4 | q)` together with the degree `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterSet {
    a: [KernelParam; 4],
    q: f64,
    n: usize,
    terms: Vec<ParamTerm>,
}

/// Validates raw parameters; see [`ParameterSet::new`].
pub fn validate(a: [Complex64; 4], q: f64, n: usize) -> Result<ParameterSet> {
    ParameterSet::new(a, q, n)
}

impl ParameterSet {
    /// Checks `|a_r| < 1`, `|q| < 1`, `n >= 1` and that non-real parameters
    /// come in conjugate pairs.
    pub fn new(a: [Complex64; 4], q: f64, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Argument("degree n must be at least 1".into()));
        }
        if !(q.is_finite() && q.abs() < 1.0) {
            return Err(Error::QDomain(q));
        }
        let mut polar = [KernelParam::real(0.0)?; 4];
        for (r, z) in a.iter().enumerate() {
            let modulus = z.norm();
            if !(modulus < 1.0) {
                return Err(Error::OutOfDisk {
                    index: r + 1,
                    value: z.to_string(),
                    modulus,
                });
            }
            polar[r] = KernelParam::from_complex(*z)?;
        }

        let mut terms = Vec::with_capacity(4);
        let mut matched = [false; 4];
        for r in 0..4 {
            if matched[r] {
                continue;
            }
            matched[r] = true;
            if let Some(x) = polar[r].signed_real() {
                terms.push(ParamTerm::Real(RealKernel::new(x)?));
                continue;
            }
            let partner = (r + 1..4).find(|&s| {
                !matched[s]
                    && polar[s].signed_real().is_none()
                    && (a[s] - a[r].conj()).norm() <= CONJUGATE_TOL
            });
            match partner {
                Some(s) => {
                    matched[s] = true;
                    terms.push(ParamTerm::Pair(polar[r]));
                }
                None => {
                    return Err(Error::UnpairedComplex {
                        index: r + 1,
                        value: a[r].to_string(),
                    })
                }
            }
        }

        Ok(Self {
            a: polar,
            q,
            n,
            terms,
        })
    }

    /// Parameters that are all real.
    pub fn real(a: [f64; 4], q: f64, n: usize) -> Result<Self> {
        Self::new(a.map(|x| Complex64::new(x, 0.0)), q, n)
    }

    /// Same parameters, different degree.
    pub fn with_degree(&self, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Argument("degree n must be at least 1".into()));
        }
        Ok(Self { n, ..self.clone() })
    }

    /// Every `a_r` replaced by its negative, `q` kept.
    ///
    /// This maps the roots `θ_j` to `π − θ_{n+1−j}`. Negating `q` as well
    /// would break the pair terms, which only reflect for the same `q`.
    pub fn negated(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| match t {
                ParamTerm::Real(k) => ParamTerm::Real(RealKernel::new_unchecked(-k.eps())),
                ParamTerm::Pair(a) => ParamTerm::Pair(a.negated()),
            })
            .collect();
        Self {
            a: self.a.map(|a| a.negated()),
            terms,
            ..self.clone()
        }
    }

    pub fn a(&self) -> &[KernelParam; 4] {
        &self.a
    }

    pub fn a_complex(&self) -> [Complex64; 4] {
        self.a.map(|p| p.to_complex())
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ParamTerm] {
        &self.terms
    }

    pub(crate) fn q_kernel(&self) -> RealKernel {
        RealKernel::new_unchecked(self.q)
    }

    pub fn is_all_zero(&self) -> bool {
        self.q == 0.0 && self.a.iter().all(|p| p.modulus() == 0.0)
    }

    /// `sum_r nu_{a_r}(theta)`.
    pub(crate) fn nu_sum(&self, theta: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| match t {
                ParamTerm::Real(k) => k.nu(theta),
                ParamTerm::Pair(p) => p.nu_pair(theta),
            })
            .sum()
    }

    /// `sum_r u_{a_r}(theta)`.
    pub(crate) fn u_sum(&self, theta: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| match t {
                ParamTerm::Real(k) => k.u(theta),
                ParamTerm::Pair(p) => p.u_pair(theta),
            })
            .sum()
    }

    /// `sum_r integral_0^theta v_{a_r}`, total truncation error below `tol`.
    pub(crate) fn v_integral_sum(&self, theta: f64, tol: f64) -> f64 {
        let share = tol / self.terms.len() as f64;
        self.terms
            .iter()
            .map(|t| match t {
                ParamTerm::Real(k) => k.v_integral(theta, share),
                ParamTerm::Pair(p) => p.v_integral_pair(theta, share),
            })
            .sum()
    }
}
