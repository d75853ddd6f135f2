//! The closed-form first approximation (one map step from the Chebyshev
//! angles) and its relative error as the degree grows.

use awroots::bounds::ParameterSet;
use awroots::error::Result;
use awroots::iteration::first_order_approx;
use awroots::oracle::{newton_solve, DEFAULT_NEWTON_STEPS, DEFAULT_NEWTON_TOL};

fn main() -> Result<()> {
    let base = ParameterSet::real([0.3, -0.2, 0.15, 0.1], 0.1, 1)?;
    println!(
        "{:>4} {:>10} {:>10} {:>10}",
        "n", "eps_1", "eps_n/2", "eps_n"
    );
    for n in [10, 20, 40, 80, 160] {
        let params = base.with_degree(n)?;
        let approx = first_order_approx(&params);
        let exact = newton_solve(&params, DEFAULT_NEWTON_TOL, DEFAULT_NEWTON_STEPS)?;
        let rel = |j: usize| (approx[j - 1] - exact[j - 1]).abs() / exact[j - 1];
        println!(
            "{n:>4} {:>10.2e} {:>10.2e} {:>10.2e}",
            rel(1),
            rel(n / 2),
            rel(n)
        );
    }
    Ok(())
}
