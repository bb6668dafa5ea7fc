//! Jost functions of a spherical plasma shell and the real-frequency scan for zeros.

use plasma_sheet::sphere::{jost_evaluation, jost_tm_from_jy, scan_minimum, scan_real_zeros, ScanGrid, SphericalShell};
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let shell = SphericalShell::new(1.0, 1.0)?;
    for k0 in [0.5, 2.0, 8.0] {
        let j = jost_evaluation(2, k0, &shell)?;
        let check = jost_tm_from_jy(2, k0, &shell)?;
        println!(
            "l = 2, k0R = {k0}: g_TE = {:.10}, g_TM = {:.10} (|diff| to j/y route {:.1e})",
            j.g_te,
            j.g_tm,
            (j.g_tm - check).norm()
        );
    }
    let grid = ScanGrid::default();
    for omega_r in [0.1, 1.0, 10.0] {
        let shell = SphericalShell::new(1.0, omega_r)?;
        for l in 1..=3 {
            let [te, tm] = scan_minimum(l, &shell, &grid)?;
            let zeros = scan_real_zeros(l, &shell, &grid)?;
            println!(
                "Omega R = {omega_r:>4}, l = {l}: min|g_TE|^2 = {:.3e} at {:.4}, min|g_TM|^2 = {:.3e} at {:.4}, {} candidates",
                te.modulus_squared,
                te.k0r,
                tm.modulus_squared,
                tm.k0r,
                zeros.len()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
