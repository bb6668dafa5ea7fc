//! Polarization basis of a wave vector and the matching conditions of the propagator at the
//! sheet.

use plasma_sheet::sheet::{
    matching_residual, polarization_basis, scalar_propagator, MinkowskiMomentum, Polarization, SheetParameters,
};
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let k = MinkowskiMomentum::new(1.7, 0.6, 0.0);
    let basis = polarization_basis(&k)?;
    println!("Gram error {:.1e}, completeness error {:.1e}", basis.gram_error(), basis.completeness_error());

    let sheet = SheetParameters::single(1.1)?;
    for pol in Polarization::ALL {
        let d = scalar_propagator(0.3, 0.8, &k, &sheet, pol)?;
        println!("{:>6}: D(0.3, 0.8) = {:.10} (boundary part {:.10})", pol.name(), d.total(), d.boundary);
        for h in [1e-3, 5e-4] {
            let m = matching_residual(&k, &sheet, pol, h)?;
            println!("        h = {h:.0e}: continuity {:.2e}, jump {:.2e}", m.continuity, m.jump);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
