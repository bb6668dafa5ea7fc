//! The reduction functions f, h and g across the plasma-frequency range, with the two
//! independent evaluation paths of g_TM and g_3.

use plasma_sheet::numerics::QuadratureSpec;
use plasma_sheet::polder::{g_3_closed, g_3_double, g_tm_closed, g_tm_double, ReductionFunctions};
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "x", "f_TE", "f_TM", "h_par", "h_3", "g_TE", "g_TM", "g_3"
    );
    for x in [1e-3, 0.1, 1.0, 10.0, 1e3] {
        let r = ReductionFunctions::at(x)?;
        println!(
            "{x:>8} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            r.f_te, r.f_tm, r.h_par, r.h_3, r.g_te, r.g_tm, r.g_3
        );
    }
    let spec = QuadratureSpec::exponential_weight().with_tolerance(1e-10);
    let x = 2.5;
    println!(
        "x = {x}: g_TM {:.12} / {:.12}, g_3 {:.12} / {:.12}",
        g_tm_double(x, &spec)?,
        g_tm_closed(x, &spec)?,
        g_3_double(x, &spec)?,
        g_3_closed(x, &spec)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
