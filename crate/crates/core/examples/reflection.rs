//! Reflection coefficients of one sheet on both sides of the light cone and at imaginary
//! frequency.

use num_complex::Complex64;
use plasma_sheet::sheet::{
    reflection_te, reflection_te_euclidean, reflection_tm, reflection_tm_at, reflection_tm_euclidean,
    scalar_reflection, EuclideanMomentum, MinkowskiMomentum, SheetParameters,
};
use plasma_sheet::Result;

pub fn run_example() -> Result<()> {
    let sheet = SheetParameters::single(1.0)?;
    let kpar = 1.0;
    println!("{:>6} {:>24} {:>24} {:>24}", "k0", "r_TE", "r_TM", "r_scalar");
    for k0 in [0.0, 0.4, 0.8, 1.2, 2.0] {
        let k = MinkowskiMomentum::from_kpar(k0, kpar);
        let te = reflection_te(&k, &sheet)?;
        let tm = reflection_tm(&k, &sheet)?;
        let scalar = scalar_reflection(&k, &sheet)?;
        println!("{k0:>6.2} {:>24} {:>24} {:>24}", fmt(te), fmt(tm), fmt(scalar));
        // Above the light cone the sheet is passive.
        if k0 > kpar {
            assert!(te.norm() <= 1.0 && tm.norm() <= 1.0);
        }
    }

    // Wick rotation k0 = i k4 turns the Minkowski coefficients into the Euclidean ones.
    let k4 = 0.7;
    let tm_wick = reflection_tm_at(Complex64::new(0.0, k4), kpar, &sheet)?;
    let e = EuclideanMomentum::new(k4, kpar)?;
    let tm_euclid = reflection_tm_euclidean(&e, &sheet)?;
    println!("Wick check at k4 = {k4}: {} vs {tm_euclid:.15}", fmt(tm_wick));
    assert!((tm_wick.re - tm_euclid).abs() < 1e-12 && tm_wick.im.abs() < 1e-12);
    println!("Euclidean r_TE = {:.15}", reflection_te_euclidean(&e, &sheet)?);
    Ok(())
}

fn fmt(z: Complex64) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
