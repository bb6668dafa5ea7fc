//! Energy of a point charge in front of a sheet: image term, kinetic no-recoil correction and
//! the one-loop shift.

use plasma_sheet::polder::{charge_sheet_energy, delta1, electrostatic_shift, image_potential, AtomProperties};
use plasma_sheet::sheet::SheetParameters;
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let a = 2.0;
    let atom = AtomProperties::new(1.0, 10.0)?.with_momenta(0.5, 0.25)?.with_quadrupole(0.1)?;
    println!("image potential at the charge: {:.12e}", image_potential(0.0, 0.0, a, a, atom.charge)?);
    println!("electrostatic shift: {:.12e}", electrostatic_shift(a, &atom)?);
    println!("{:>8} {:>18} {:>18} {:>18}", "Omega a", "electrostatic", "kinetic", "delta1");
    for omega_a in [0.1, 1.0, 10.0, 1e3] {
        let sheet = SheetParameters::single(omega_a / a)?;
        let e = charge_sheet_energy(a, &sheet, &atom)?;
        let d1 = delta1(a, &sheet, &atom)?;
        println!("{omega_a:>8} {:>18.10e} {:>18.10e} {:>18.10e}", e.electrostatic, e.kinetic, d1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
