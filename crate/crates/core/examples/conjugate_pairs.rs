//! Complex parameters enter as conjugate pairs; an unpaired one is rejected.

use awroots::bounds::ParameterSet;
use awroots::error::Result;
use awroots::iteration::{iterate, DEFAULT_STEP_TOL};
use awroots::kernel::KernelParam;
use num_complex::Complex64;

fn main() -> Result<()> {
    let a = Complex64::new(0.4, 0.3);
    let pair = KernelParam::from_complex(a)?;
    println!(
        "a = {a}, |a| = {}, arg a = {:.6}",
        pair.modulus(),
        pair.argument()
    );
    for theta in [0.0, 1.0, 2.0, 3.0] {
        println!(
            "  nu_a + nu_conj(a) at {theta}: {:+.8}",
            pair.nu_pair(theta)
        );
    }

    let params = ParameterSet::new(
        [
            a,
            a.conj(),
            Complex64::new(-0.5, 0.0),
            Complex64::new(0.2, 0.0),
        ],
        -0.3,
        8,
    )?;
    let trace = iterate(&params, 200, DEFAULT_STEP_TOL)?;
    println!("\nrho = {:.4}, {} steps", trace.rho, trace.iterations());
    println!("roots: {:.6?}", trace.last().angles());

    let unpaired = ParameterSet::new(
        [
            a,
            Complex64::new(0.4, 0.2),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ],
        0.0,
        3,
    );
    println!("\nwithout its conjugate: {}", unpaired.unwrap_err());
    Ok(())
}
