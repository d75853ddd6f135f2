//! The Poisson-type kernels u, v and nu for a few values of eps, and how
//! fast the Fourier series of nu converges.

use std::f64::consts::PI;

use awroots::error::Result;
use awroots::kernel::RealKernel;

fn main() -> Result<()> {
    println!(
        "{:>6} {:>7} {:>10} {:>10} {:>10}",
        "eps", "theta", "u", "v", "nu"
    );
    for eps in [-0.6, 0.0, 0.3, 0.9] {
        let k = RealKernel::new(eps)?;
        for theta in [0.0, PI / 3.0, 2.0 * PI / 3.0, PI] {
            println!(
                "{eps:>6.2} {theta:>7.4} {:>10.6} {:>10.6} {:>10.6}",
                k.u(theta),
                k.v(theta),
                k.nu(theta)
            );
        }
    }

    // truncated series vs closed form, next to the certified tail bound
    let k = RealKernel::new(0.7)?;
    let theta = 1.0;
    println!("\nnu_0.7(1) = {:.15}", k.nu(theta));
    for terms in [5, 20, 50] {
        let err = (k.nu(theta) - k.nu_fourier(theta, terms)).abs();
        println!(
            "K = {terms:>3}: |error| = {err:.2e}  tail bound = {:.2e}",
            k.fourier_tail_bound(terms)
        );
    }

    let area = RealKernel::new(0.5)?.v_integral(1.0, 1e-14);
    println!("\nintegral of v_0.5 over [0, 1] = {area:.12}");
    Ok(())
}
