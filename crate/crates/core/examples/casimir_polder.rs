//! Casimir-Polder energy of an isotropic atom in front of a sheet, approaching the
//! ideal-conductor value as the plasma frequency grows.

use std::f64::consts::PI;

use plasma_sheet::polder::{casimir_polder_energy, AtomProperties, THICK_CONDUCTOR_COEFFICIENT};
use plasma_sheet::sheet::SheetParameters;
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let a = 1.0;
    let atom = AtomProperties::new(0.0, 1.0)?.with_isotropic_polarizability(1.0)?;
    let ideal = -13.0 / (160.0 * PI * PI);
    println!("{:>10} {:>22} {:>10}", "Omega a", "a^4 delta_CP", "ratio");
    for omega_a in [0.01, 0.1, 1.0, 10.0, 100.0, 1e4] {
        let sheet = SheetParameters::single(omega_a / a)?;
        let e = casimir_polder_energy(a, &sheet, &atom)?;
        println!("{omega_a:>10} {:>22.15e} {:>10.6}", e * a.powi(4), e / ideal);
    }
    let thick = -THICK_CONDUCTOR_COEFFICIENT / (32.0 * PI * PI);
    println!("thin ideal sheet {ideal:.10e}, conducting half-space {thick:.10e}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
