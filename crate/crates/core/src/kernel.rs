//! Kernel functions of the transcendental root system.
//!
//! For a real parameter `|eps| < 1`:
//!
//! ```text
//! u_eps(t)  = (1 - eps^2) / (1 - 2 eps cos t + eps^2)
//! v_eps(t)  = integral of u_eps over [0, t]
//! nu_eps(t) = v_eps(t) - t = sum_{k>0} (2 eps^k / k) sin(k t)
//! ```
//!
//! `nu_eps` is odd and 2π-periodic. On (−π, π) it has the closed form
//! `2 atan(((1 + eps)/(1 - eps)) tan(t/2)) - t`; at odd multiples of π its
//! value is the continuous limit 0.
//!
//! Non-real parameters only ever appear together with their conjugate. The
//! pair contributes `nu_a + nu_conj(a) = nu_|a|(t + Arg a) + nu_|a|(t - Arg a)`,
//! and the same shifted-argument identity holds for `u`, so everything is
//! evaluated in real arithmetic.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Reduces an angle to the half-open interval (−π, π].
pub fn reduce_angle(theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::Domain(format!("angle {theta} is not finite")));
    }
    Ok(reduce(theta))
}

#[inline]
pub(crate) fn reduce(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "kernel parameter {eps} must satisfy |eps| < 1"
        )))
    }
}

/// The kernel family for one real parameter `eps` in (−1, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealKernel {
    eps: f64,
}

impl RealKernel {
    pub fn new(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        Ok(Self { eps })
    }

    pub(crate) fn new_unchecked(eps: f64) -> Self {
        debug_assert!(eps.abs() < 1.0);
        Self { eps }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Poisson-type density `u_eps(theta)`.
    #[inline]
    pub fn u(&self, theta: f64) -> f64 {
        let e = self.eps;
        let s = (0.5 * theta).sin();
        // 1 - 2e cos t + e^2 written without cancellation near t = 0, e -> 1
        let denom = (1.0 - e) * (1.0 - e) + 4.0 * e * s * s;
        (1.0 - e) * (1.0 + e) / denom
    }

    /// Closed-form `nu_eps(theta)` on all of ℝ.
    #[inline]
    pub fn nu(&self, theta: f64) -> f64 {
        if self.eps == 0.0 {
            return 0.0;
        }
        let t = reduce(theta);
        if t == PI {
            return 0.0;
        }
        let ratio = (1.0 + self.eps) / (1.0 - self.eps);
        2.0 * (ratio * (0.5 * t).tan()).atan() - t
    }

    /// `v_eps(theta) = theta + nu_eps(theta)`.
    #[inline]
    pub fn v(&self, theta: f64) -> f64 {
        theta + self.nu(theta)
    }

    /// Partial Fourier sum of `nu_eps` with `terms` harmonics.
    pub fn nu_fourier(&self, theta: f64, terms: usize) -> f64 {
        let mut power = 1.0;
        let mut sum = 0.0;
        for k in 1..=terms {
            power *= self.eps;
            let kf = k as f64;
            sum += 2.0 * power / kf * (kf * theta).sin();
        }
        sum
    }

    /// Upper bound on `|nu_eps - nu_fourier(.., terms)|` over all angles.
    pub fn fourier_tail_bound(&self, terms: usize) -> f64 {
        let e = self.eps.abs();
        let k = (terms + 1) as f64;
        2.0 * e.powi(terms as i32 + 1) / (k * (1.0 - e))
    }

    /// Number of harmonics needed so the integrated series is within `tol`.
    ///
    /// The tail of `sum (2 eps^k / k^2)(1 - cos k t)` is bounded by
    /// `4 |eps|^(K+1) / ((K+1)^2 (1 - |eps|))`.
    pub(crate) fn integral_terms(modulus: f64, tol: f64) -> usize {
        let mut terms = 0usize;
        let mut power = modulus;
        loop {
            let k = (terms + 1) as f64;
            if 4.0 * power / (k * k * (1.0 - modulus)) < tol {
                return terms;
            }
            terms += 1;
            power *= modulus;
        }
    }

    /// `integral_0^theta v_eps`, truncated with a certified tail below `tol`.
    pub fn v_integral(&self, theta: f64, tol: f64) -> f64 {
        let terms = Self::integral_terms(self.eps.abs(), tol);
        let mut power = 1.0;
        let mut sum = 0.5 * theta * theta;
        for k in 1..=terms {
            power *= self.eps;
            let kf = k as f64;
            sum += 2.0 * power / (kf * kf) * (1.0 - (kf * theta).cos());
        }
        sum
    }
}

/// `u_eps(theta)` for a real parameter.
pub fn u_kernel(eps: f64, theta: f64) -> Result<f64> {
    Ok(RealKernel::new(eps)?.u(theta))
}

/// `nu_eps(theta) = v_eps(theta) - theta` via the arctangent closed form.
pub fn nu_kernel(eps: f64, theta: f64) -> Result<f64> {
    if !theta.is_finite() {
        return Err(Error::Domain(format!("angle {theta} is not finite")));
    }
    Ok(RealKernel::new(eps)?.nu(theta))
}

/// `v_eps(theta)`, the antiderivative of `u_eps` vanishing at 0.
pub fn v_kernel(eps: f64, theta: f64) -> Result<f64> {
    Ok(theta + nu_kernel(eps, theta)?)
}

/// Truncated Fourier series `sum_{k=1..terms} (2 eps^k / k) sin(k theta)`.
pub fn nu_fourier(eps: f64, theta: f64, terms: usize) -> Result<f64> {
    if terms < 1 {
        return Err(Error::Argument(
            "Fourier truncation order must be at least 1".into(),
        ));
    }
    Ok(RealKernel::new(eps)?.nu_fourier(theta, terms))
}

/// `integral_0^theta v_eps(t) dt` with truncation error below `tol`.
pub fn v_integral(eps: f64, theta: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance {tol} must be positive")));
    }
    Ok(RealKernel::new(eps)?.v_integral(theta, tol))
}

/// A parameter of the open unit disk in polar form.
///
/// The argument is the principal value in (−π, π] with `Arg(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParam {
    modulus: f64,
    argument: f64,
    is_real: bool,
}

impl KernelParam {
    pub fn new(modulus: f64, argument: f64) -> Result<Self> {
        if !(modulus.is_finite() && (0.0..1.0).contains(&modulus)) {
            return Err(Error::Domain(format!(
                "modulus {modulus} must lie in [0, 1)"
            )));
        }
        let argument = if modulus == 0.0 {
            0.0
        } else {
            reduce_angle(argument)?
        };
        Ok(Self {
            modulus,
            argument,
            is_real: argument == 0.0 || argument == PI,
        })
    }

    /// A real parameter; negative values get argument π.
    pub fn real(eps: f64) -> Result<Self> {
        check_eps(eps)?;
        let argument = if eps < 0.0 { PI } else { 0.0 };
        Self::new(eps.abs(), argument)
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        if z.im == 0.0 {
            return Self::real(z.re);
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain(format!("parameter {z} is not finite")));
        }
        Self::new(z.norm(), z.im.atan2(z.re))
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    /// The signed real value, if the parameter is real.
    pub fn signed_real(&self) -> Option<f64> {
        match (self.is_real, self.argument == PI) {
            (true, true) => Some(-self.modulus),
            (true, false) => Some(self.modulus),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self.signed_real() {
            Some(x) => Complex64::new(x, 0.0),
            None => Complex64::from_polar(self.modulus, self.argument),
        }
    }

    pub fn conj(&self) -> Self {
        if self.is_real {
            *self
        } else {
            Self {
                argument: -self.argument,
                ..*self
            }
        }
    }

    /// `-a`: same modulus, argument rotated by π.
    pub fn negated(&self) -> Self {
        if self.modulus == 0.0 {
            return *self;
        }
        Self {
            argument: reduce(self.argument + PI),
            ..*self
        }
    }

    fn modulus_kernel(&self) -> RealKernel {
        RealKernel::new_unchecked(self.modulus)
    }

    /// `nu_a + nu_conj(a)` at `theta`.
    pub fn nu_pair(&self, theta: f64) -> f64 {
        if let Some(x) = self.signed_real() {
            return 2.0 * RealKernel::new_unchecked(x).nu(theta);
        }
        let k = self.modulus_kernel();
        k.nu(theta + self.argument) + k.nu(theta - self.argument)
    }

    /// `u_a + u_conj(a)` at `theta`, i.e. twice the real part of `u_a`.
    pub fn u_pair(&self, theta: f64) -> f64 {
        if let Some(x) = self.signed_real() {
            return 2.0 * RealKernel::new_unchecked(x).u(theta);
        }
        let k = self.modulus_kernel();
        k.u(theta + self.argument) + k.u(theta - self.argument)
    }

    /// `integral_0^theta (v_a + v_conj(a))`, truncation error below `tol`.
    pub fn v_integral_pair(&self, theta: f64, tol: f64) -> f64 {
        // two conjugate series, each held to tol / 2
        let terms = RealKernel::integral_terms(self.modulus, 0.5 * tol);
        let mut power = 1.0;
        let mut sum = theta * theta;
        for k in 1..=terms {
            power *= self.modulus;
            let kf = k as f64;
            sum +=
                4.0 * power * (kf * self.argument).cos() / (kf * kf) * (1.0 - (kf * theta).cos());
        }
        sum
    }
}

/// Real contribution `nu_a(theta) + nu_conj(a)(theta)` of a conjugate pair.
pub fn nu_pair(a: &KernelParam, theta: f64) -> f64 {
    a.nu_pair(theta)
}
