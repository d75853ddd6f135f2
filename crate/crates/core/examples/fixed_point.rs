//! Fixed-point iteration for the root angles, with the a-priori error
//! certificate rho^l * |theta+ - theta-| next to the true error.

use awroots::bounds::ParameterSet;
use awroots::error::Result;
use awroots::iteration::{iterate, DEFAULT_STEP_TOL};
use awroots::oracle::{newton_solve, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL};

fn main() -> Result<()> {
    let params = ParameterSet::real([0.3, -0.2, 0.15, 0.1], 0.1, 5)?;
    let trace = iterate(&params, 200, DEFAULT_STEP_TOL)?;
    let exact = newton_solve(&params, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)?;

    println!(
        "rho = {:.6} (certified: {})",
        trace.rho,
        trace.is_certified()
    );
    println!(
        "{:>3}  {:>10}  {:>10}  {:>10}",
        "l", "step", "error", "bound"
    );
    for (l, it) in trace.iterates.iter().enumerate() {
        let step = match l {
            0 => "-".to_string(),
            _ => format!("{:.2e}", trace.step_deltas[l - 1]),
        };
        println!(
            "{l:>3}  {step:>10}  {:>10.2e}  {:>10.2e}",
            it.distance(&exact),
            trace.apriori_bounds[l]
        );
    }
    println!("\nlimit: {:?}", trace.last().angles());

    // rho >= 1: the map is still iterated but nothing is certified
    let wild = ParameterSet::real([0.9, 0.85, -0.8, 0.7], 0.6, 4)?;
    let trace = iterate(&wild, 200, DEFAULT_STEP_TOL)?;
    println!(
        "\nrho = {:.3}: certified = {}, converged = {} after {} steps",
        trace.rho,
        trace.is_certified(),
        trace.converged,
        trace.iterations()
    );
    Ok(())
}
