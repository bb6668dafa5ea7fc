//! Casimir energy and pressure between two sheets, relative to ideal conductors.

use plasma_sheet::casimir::{ideal_energy_per_area, ideal_pressure, lifshitz_energy_per_area, lifshitz_pressure};
use plasma_sheet::sheet::SheetParameters;
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let a = 1.0;
    println!("{:>8} {:>14} {:>14} {:>14} {:>8} {:>8}", "Omega a", "E/E_ideal", "P/P_ideal", "P_fd/P_ideal", "TE", "TM");
    for omega_a in [0.1, 1.0, 10.0, 100.0] {
        let sheet = SheetParameters::pair(omega_a / a, a)?;
        let res = lifshitz_energy_per_area(a, &sheet)?;
        let fd = lifshitz_pressure(a, &sheet)?;
        println!(
            "{omega_a:>8} {:>14.10} {:>14.10} {:>14.10} {:>8.4} {:>8.4}",
            res.energy_per_area / ideal_energy_per_area(a),
            res.pressure / ideal_pressure(a),
            fd / ideal_pressure(a),
            res.te_share,
            res.tm_share
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
