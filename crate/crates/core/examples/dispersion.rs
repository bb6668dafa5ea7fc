//! TM surface-plasmon branch of one sheet and the absence of a TE mode.

use plasma_sheet::sheet::{
    te_plasmon_exists, tm_dispersion_residual, tm_plasmon_branch, tm_plasmon_closed, tm_plasmon_root, SheetParameters,
};
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let sheet = SheetParameters::single(2.0)?;
    println!("{:>10} {:>20} {:>20} {:>12} {:>6}", "kpar", "k0 closed", "k0 root", "residual", "TE");
    for kpar in [0.01, 0.1, 1.0, 10.0, 100.0] {
        let closed = tm_plasmon_closed(kpar, &sheet)?;
        let root = tm_plasmon_root(kpar, &sheet)?;
        let residual = tm_dispersion_residual(root, kpar, &sheet) / (kpar * kpar);
        let te = te_plasmon_exists(kpar, &sheet)?;
        println!("{kpar:>10.3} {closed:>20.15} {root:>20.15} {residual:>12.2e} {te:>6}");
        assert!(residual.abs() <= 1e-10 && !te);
    }
    let branch = tm_plasmon_branch(&sheet, 1e-3, 1e3, 61)?;
    println!("branch of {} samples below the light cone: {}", branch.samples.len(), branch.is_consistent());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
