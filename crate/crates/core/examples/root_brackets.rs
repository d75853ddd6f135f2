//! Lower and upper bounds for every root angle. Brackets marked with `*`
//! come from the second family of bounds, which is sharper near pi.

use awroots::bounds::{crossover_indices, k_bounds, root_bounds, ParameterSet};
use awroots::error::Result;
use awroots::oracle::{newton_solve, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL};

fn main() -> Result<()> {
    let params = ParameterSet::real([0.3, -0.2, 0.15, 0.1], 0.1, 5)?;
    let (k_minus, k_plus) = k_bounds(&params);
    let (j_minus, j_plus) = crossover_indices(&params)?;
    println!("k_- = {k_minus:.6}, k_+ = {k_plus:.6}");
    println!("crossover: j_- = {j_minus:.4}, j_+ = {j_plus:.4}\n");

    let b = root_bounds(&params);
    let theta = newton_solve(&params, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)?;
    let mark = |boxed: bool| if boxed { '*' } else { ' ' };
    for j in 0..params.n() {
        println!(
            "j = {}: {:.4}{} <= {:.4} <= {:.4}{}",
            j + 1,
            b.lower[j],
            mark(b.lower_boxed[j]),
            theta[j],
            b.upper[j],
            mark(b.upper_boxed[j]),
        );
    }

    Ok(())
}
