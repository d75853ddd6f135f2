//! Solving the root system directly by damped Newton and checking the
//! answer every way the library knows.

use awroots::bounds::ParameterSet;
use awroots::error::Result;
use awroots::oracle::{newton_solve, verify, DEFAULT_NEWTON_STEPS};

fn main() -> Result<()> {
    // far outside the contraction regime; Newton does not care
    let params = ParameterSet::real([6.0 / 7.0, 5.0 / 7.0, 4.0 / 7.0, 3.0 / 7.0], 1.0 / 9.0, 7)?;
    let theta = newton_solve(&params, 1e-13, DEFAULT_NEWTON_STEPS)?;
    println!("theta     = {:.6?}", theta.angles());
    println!("cos theta = {:.6?}", theta.cosines());

    let report = verify(&params, &theta);
    println!("\nsystem residual   {:.2e}", report.system_residual);
    println!("product residual  {:.2e}", report.product_residual);
    println!("inside brackets   {}", report.all_in_bounds());
    println!("|DG - DG^T|       {:.2e}", report.jacobian_symmetry_defect);
    println!(
        "|DU|              {:.4} (within rho: {})",
        report.spectral_norm, report.rho_bound_ok
    );

    // an impossible budget surfaces the best iterate
    match newton_solve(&params, 1e-13, 1) {
        Err(e) => println!("\nwith one step: {e}"),
        Ok(_) => println!("\nconverged in one step"),
    }
    Ok(())
}
