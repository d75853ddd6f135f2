//! The convex potential whose gradient is the root system: its values along
//! a line through the minimum, and the spectrum of the fixed-point Jacobian.

use awroots::bounds::ParameterSet;
use awroots::error::Result;
use awroots::oracle::{
    morse_value, newton_solve, spectral_norm_check, DEFAULT_MORSE_TOL, DEFAULT_NEWTON_STEPS,
    DEFAULT_NEWTON_TOL,
};

fn main() -> Result<()> {
    let params = ParameterSet::real([0.3, -0.2, 0.15, 0.1], 0.1, 5)?;
    let theta = newton_solve(&params, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)?;
    let v0 = morse_value(&params, &theta, DEFAULT_MORSE_TOL);

    let direction = [1.0, -0.5, 0.25, 0.5, -1.0];
    println!("{:>6}  {:>12}", "s", "V - V_min");
    for i in -5..=5 {
        let s = 0.1 * i as f64;
        let moved: Vec<f64> = theta
            .iter()
            .zip(&direction)
            .map(|(t, d)| t + s * d)
            .collect();
        println!(
            "{s:>6.2}  {:>12.6}",
            morse_value(&params, &moved, DEFAULT_MORSE_TOL) - v0
        );
    }

    let check = spectral_norm_check(&params, &theta);
    println!(
        "\nDU spectrum in [{:.4}, {:.4}], bounds [{:.4}, {:.4}], |DU| = {:.4} <= rho = {:.4}",
        check.lambda_min,
        check.lambda_max,
        check.lambda_min_bound,
        check.lambda_max_bound,
        check.spectral_norm,
        check.rho
    );
    Ok(())
}
