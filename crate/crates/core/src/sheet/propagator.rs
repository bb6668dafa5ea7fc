use num_complex::Complex64;

use super::kinematics::{gamma_minkowski, MinkowskiMomentum, SheetParameters};
use super::reflection::{reflection, Polarization};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Free and sheet-induced parts of the one-dimensional propagator `D(x₃, y₃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorParts {
    /// `e^{iΓ|x₃−y₃|} / (2iΓ)`
    pub free: Complex64,
    /// `−r e^{iΓ(|x₃|+|y₃|)} / (2iΓ)`
    pub boundary: Complex64,
}

impl PropagatorParts {
    pub fn total(&self) -> Complex64 {
        self.free + self.boundary
    }
}

fn single_position(sheet: &SheetParameters) -> Result<f64> {
    match sheet.positions() {
        [p] => Ok(*p),
        _ => Err(Error::InvalidParameter(
            "the propagator is defined for a single sheet".into(),
        )),
    }
}

fn parts(x: f64, y: f64, gamma: Complex64, r: Complex64) -> PropagatorParts {
    let denom = 2.0 * I * gamma;
    PropagatorParts {
        free: (I * gamma * (x - y).abs()).exp() / denom,
        boundary: -r * (I * gamma * (x.abs() + y.abs())).exp() / denom,
    }
}

/// Propagator of one polarization amplitude across the sheet, coordinates measured along `x₃`.
pub fn scalar_propagator(
    x3: f64,
    y3: f64,
    k: &MinkowskiMomentum,
    sheet: &SheetParameters,
    pol: Polarization,
) -> Result<PropagatorParts> {
    let p = single_position(sheet)?;
    let gamma = gamma_minkowski(k);
    if gamma == Complex64::new(0.0, 0.0) {
        return Err(Error::OnLightCone { k0: k.k0 });
    }
    let r = reflection(k, sheet, pol)?;
    Ok(parts(x3 - p, y3 - p, gamma, r))
}

/// Coefficient `c` in `discont ∂₃D = c · D` at the sheet.
///
/// Scalar: `Ω k_∥²/k₀²`; TE: `Ω`; TM: `Ω Γ²/k₀²`.
pub fn jump_coefficient(k: &MinkowskiMomentum, sheet: &SheetParameters, pol: Polarization) -> Result<Complex64> {
    let omega = sheet.omega();
    let k0sq = k.k0 * k.k0;
    match pol {
        Polarization::Te => Ok(Complex64::new(omega, 0.0)),
        _ if k0sq == 0.0 => Err(Error::DegenerateMomentum("k0 = 0: the jump coefficient diverges")),
        Polarization::Scalar => Ok(Complex64::new(omega * k.kpar().powi(2) / k0sq, 0.0)),
        Polarization::Tm => {
            let g = gamma_minkowski(k);
            Ok(omega * g * g / k0sq)
        }
    }
}

/// Finite-difference check of the matching conditions at the sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingResidual {
    /// `|D(0⁺) − D(0⁻)|`, relative to the free propagator at the sheet.
    pub continuity: f64,
    /// `|discont ∂₃D − c D(0)|`, relative to `|Γ|` times the free propagator at the sheet.
    pub jump: f64,
    pub probe_offset: f64,
}

/// Evaluates the matching conditions with one-sided three-point extrapolations from samples
/// at `±h, ±2h, ±3h` around the sheet, source placed at `1/|Γ|` above it.
///
/// Value errors are `O(h³)` and the derivative errors `O(h²)`.
pub fn matching_residual(
    k: &MinkowskiMomentum,
    sheet: &SheetParameters,
    pol: Polarization,
    probe_offset: f64,
) -> Result<MatchingResidual> {
    let h = probe_offset;
    let p = single_position(sheet)?;
    let gamma = gamma_minkowski(k);
    if gamma == Complex64::new(0.0, 0.0) {
        return Err(Error::OnLightCone { k0: k.k0 });
    }
    let y = 1.0 / gamma.norm();
    if !(h > 0.0 && 3.0 * h < y) {
        return Err(Error::InvalidParameter(format!(
            "probe offset must lie in (0, 1/(3|Gamma|)) = (0, {}), got {h}",
            y / 3.0
        )));
    }
    let r = reflection(k, sheet, pol)?;
    let c = jump_coefficient(k, sheet, pol)?;
    let d = |x: f64| parts(x - p, y, gamma, r).total();

    let (r1, r2, r3) = (d(p + h), d(p + 2.0 * h), d(p + 3.0 * h));
    let (l1, l2, l3) = (d(p - h), d(p - 2.0 * h), d(p - 3.0 * h));
    let value_right = 3.0 * r1 - 3.0 * r2 + r3;
    let value_left = 3.0 * l1 - 3.0 * l2 + l3;
    let slope_right = (-2.5 * r1 + 4.0 * r2 - 1.5 * r3) / h;
    let slope_left = (2.5 * l1 - 4.0 * l2 + 1.5 * l3) / h;

    let scale = parts(0.0, y, gamma, r).free.norm();
    let value = 0.5 * (value_right + value_left);
    Ok(MatchingResidual {
        continuity: (value_right - value_left).norm() / scale,
        jump: (slope_right - slope_left - c * value).norm() / (gamma.norm() * scale),
        probe_offset: h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sheet(omega: f64) -> SheetParameters {
        SheetParameters::single(omega).unwrap()
    }

    #[test]
    fn transparent_sheet_is_free() {
        let k = MinkowskiMomentum::from_kpar(2.0, 1.0);
        let d = scalar_propagator(0.3, -0.4, &k, &sheet(0.0), Polarization::Te).unwrap();
        let g = 3f64.sqrt();
        let expected = (I * g * 0.7).exp() / (2.0 * I * g);
        assert_eq!(d.boundary, Complex64::new(0.0, 0.0));
        assert!((d.total() - expected).norm() < 1e-15);
    }

    #[test]
    fn symmetric_in_arguments() {
        let k = MinkowskiMomentum::from_kpar(0.5, 1.5);
        let s = sheet(1.3);
        for pol in Polarization::ALL {
            let a = scalar_propagator(0.2, -1.1, &k, &s, pol).unwrap().total();
            let b = scalar_propagator(-1.1, 0.2, &k, &s, pol).unwrap().total();
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn exact_jump_per_polarization() {
        let s = sheet(0.8);
        let y = 0.9;
        for k in [MinkowskiMomentum::from_kpar(2.0, 1.0), MinkowskiMomentum::from_kpar(0.4, 1.2)] {
            let g = gamma_minkowski(&k);
            for pol in Polarization::ALL {
                let r = reflection(&k, &s, pol).unwrap();
                // Only the boundary part is kinked at the sheet: its slope is ∓ r e^{iΓy}/2.
                let jump = -r * (I * g * y).exp();
                let value = scalar_propagator(0.0, y, &k, &s, pol).unwrap().total();
                let c = jump_coefficient(&k, &s, pol).unwrap();
                assert!((jump - c * value).norm() < 1e-13 * jump.norm().max(1.0), "{pol:?}");
            }
        }
    }

    #[test]
    fn residuals_shrink_under_halving() {
        let s = sheet(1.1);
        let k = MinkowskiMomentum::from_kpar(1.7, 0.6);
        for pol in Polarization::ALL {
            let a = matching_residual(&k, &s, pol, 1e-3).unwrap();
            let b = matching_residual(&k, &s, pol, 5e-4).unwrap();
            assert!(a.jump / b.jump > 3.5, "{pol:?}: {} {}", a.jump, b.jump);
            assert!(a.continuity / b.continuity > 3.5, "{pol:?}");
        }
    }

    #[test]
    fn rejects_two_sheets_and_light_cone() {
        let k = MinkowskiMomentum::from_kpar(2.0, 1.0);
        let two = SheetParameters::pair(1.0, 1.0).unwrap();
        assert!(scalar_propagator(0.0, 0.0, &k, &two, Polarization::Te).is_err());
        let cone = MinkowskiMomentum::from_kpar(1.0, 1.0);
        assert!(matches!(
            scalar_propagator(0.0, 1.0, &cone, &sheet(1.0), Polarization::Te),
            Err(Error::OnLightCone { .. })
        ));
    }
}
