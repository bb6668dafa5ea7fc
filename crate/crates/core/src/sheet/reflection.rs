use num_complex::Complex64;

use super::kinematics::{gamma_complex, gamma_minkowski, EuclideanMomentum, MinkowskiMomentum, SheetParameters};
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Field component the sheet acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    Scalar,
    Te,
    Tm,
}

impl Polarization {
    pub const ALL: [Polarization; 3] = [Polarization::Scalar, Polarization::Te, Polarization::Tm];

    pub fn name(self) -> &'static str {
        match self {
            Polarization::Scalar => "scalar",
            Polarization::Te => "te",
            Polarization::Tm => "tm",
        }
    }
}

/// `r₁ = 1/(1 − 2iΓ/Ω)`.
pub fn reflection_te(k: &MinkowskiMomentum, sheet: &SheetParameters) -> Result<Complex64> {
    Ok(te_from_gamma(gamma_minkowski(k), sheet.omega()))
}

/// `r₂ = 1/(1 − 2ik₀²/(ΩΓ))`, equal to 1 at `k₀ = 0`.
pub fn reflection_tm(k: &MinkowskiMomentum, sheet: &SheetParameters) -> Result<Complex64> {
    tm_from_gamma(Complex64::new(k.k0, 0.0), gamma_minkowski(k), sheet.omega())
}

/// `r₁` at complex frequency, `Γ` continued with `Im Γ ≥ 0`.
pub fn reflection_te_at(k0: Complex64, kpar: f64, sheet: &SheetParameters) -> Result<Complex64> {
    Ok(te_from_gamma(gamma_complex(k0, kpar), sheet.omega()))
}

/// `r₂` at complex frequency.
pub fn reflection_tm_at(k0: Complex64, kpar: f64, sheet: &SheetParameters) -> Result<Complex64> {
    tm_from_gamma(k0, gamma_complex(k0, kpar), sheet.omega())
}

fn te_from_gamma(gamma: Complex64, omega: f64) -> Complex64 {
    if omega == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    ONE / (ONE - 2.0 * I * gamma / omega)
}

fn tm_from_gamma(k0: Complex64, gamma: Complex64, omega: f64) -> Result<Complex64> {
    if omega == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if k0 == Complex64::new(0.0, 0.0) {
        return Ok(ONE);
    }
    if gamma == Complex64::new(0.0, 0.0) {
        return Err(Error::OnLightCone { k0: k0.re });
    }
    Ok(ONE / (ONE - 2.0 * I * k0 * k0 / (omega * gamma)))
}

/// `r̃₁ = 1/(1 + 2γ/Ω)`.
pub fn reflection_te_euclidean(k: &EuclideanMomentum, sheet: &SheetParameters) -> Result<f64> {
    if k.gamma() == 0.0 {
        return Err(Error::DegenerateMomentum("gamma = 0"));
    }
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(0.0);
    }
    Ok(omega / (omega + 2.0 * k.gamma()))
}

/// `r̃₂ = 1/(1 + 2k₄²/(Ωγ))`.
pub fn reflection_tm_euclidean(k: &EuclideanMomentum, sheet: &SheetParameters) -> Result<f64> {
    if k.gamma() == 0.0 {
        return Err(Error::DegenerateMomentum("gamma = 0"));
    }
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(0.0);
    }
    let og = omega * k.gamma();
    Ok(og / (og + 2.0 * k.k4() * k.k4()))
}

/// Scalar-field coefficient `r = 1/(1 − (2iΓ/Ω)(k₀²/k_∥²))`; the `k₀ → 0` limit is 1.
pub fn scalar_reflection(k: &MinkowskiMomentum, sheet: &SheetParameters) -> Result<Complex64> {
    let kpar = k.kpar();
    if kpar == 0.0 {
        return Err(Error::DegenerateMomentum("kpar = 0"));
    }
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if k.k0 == 0.0 {
        return Ok(ONE);
    }
    let ratio = (k.k0 / kpar).powi(2);
    Ok(ONE / (ONE - 2.0 * I * gamma_minkowski(k) * ratio / omega))
}

/// Reflection coefficient for `pol`.
pub fn reflection(k: &MinkowskiMomentum, sheet: &SheetParameters, pol: Polarization) -> Result<Complex64> {
    match pol {
        Polarization::Scalar => scalar_reflection(k, sheet),
        Polarization::Te => reflection_te(k, sheet),
        Polarization::Tm => reflection_tm(k, sheet),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sheet(omega: f64) -> SheetParameters {
        SheetParameters::single(omega).unwrap()
    }

    #[test]
    fn te_substitution() {
        let r = reflection_te(&MinkowskiMomentum::from_kpar(2.0, 1.0), &sheet(1.0)).unwrap();
        let expected = ONE / Complex64::new(1.0, -2.0 * 3f64.sqrt());
        assert!((r - expected).norm() < 1e-15);
    }

    #[test]
    fn static_tm_is_one() {
        for kpar in [0.1, 1.0, 7.0] {
            let r = reflection_tm(&MinkowskiMomentum::from_kpar(0.0, kpar), &sheet(0.3)).unwrap();
            assert_eq!(r, ONE);
        }
    }

    #[test]
    fn ideal_limit() {
        let k = MinkowskiMomentum::from_kpar(0.7, 1.3);
        let s = sheet(1e12);
        assert!((reflection_te(&k, &s).unwrap() - ONE).norm() < 1e-10);
        assert!((reflection_tm(&k, &s).unwrap() - ONE).norm() < 1e-10);
    }

    #[test]
    fn light_cone_error() {
        let err = reflection_tm(&MinkowskiMomentum::from_kpar(1.0, 1.0), &sheet(1.0)).unwrap_err();
        assert!(matches!(err, Error::OnLightCone { .. }));
    }

    #[test]
    fn euclidean_values() {
        let s = sheet(2.0);
        let k = EuclideanMomentum::new(0.0, 1.0).unwrap();
        assert_eq!(reflection_tm_euclidean(&k, &s).unwrap(), 1.0);
        let half = EuclideanMomentum::new(0.6, 0.8).unwrap();
        // gamma = 1 = Omega / 2
        assert!((reflection_te_euclidean(&half, &s).unwrap() - 0.5).abs() < 1e-15);
        let zero = EuclideanMomentum::new(0.0, 0.0).unwrap();
        assert!(reflection_te_euclidean(&zero, &s).is_err());
    }

    #[test]
    fn scalar_values() {
        let s = sheet(1.0);
        let r = scalar_reflection(&MinkowskiMomentum::from_kpar(2.0, 1.0), &s).unwrap();
        let expected = ONE / Complex64::new(1.0, -8.0 * 3f64.sqrt());
        assert!((r - expected).norm() < 1e-15);
        assert_eq!(scalar_reflection(&MinkowskiMomentum::from_kpar(0.0, 1.0), &s).unwrap(), ONE);
        assert!(scalar_reflection(&MinkowskiMomentum::from_kpar(1.0, 0.0), &s).is_err());
    }

    #[test]
    fn wick_rotation() {
        let s = sheet(1.7);
        let k = EuclideanMomentum::new(0.4, 2.2).unwrap();
        let k0 = Complex64::new(0.0, k.k4());
        let te = reflection_te_at(k0, k.kpar(), &s).unwrap();
        let tm = reflection_tm_at(k0, k.kpar(), &s).unwrap();
        assert!((te - reflection_te_euclidean(&k, &s).unwrap()).norm() < 1e-14);
        assert!((tm - reflection_tm_euclidean(&k, &s).unwrap()).norm() < 1e-14);
    }

    #[test]
    fn transparent_sheet() {
        let s = sheet(0.0);
        let k = MinkowskiMomentum::from_kpar(0.5, 1.0);
        for pol in Polarization::ALL {
            assert_eq!(reflection(&k, &s, pol).unwrap(), Complex64::new(0.0, 0.0));
        }
    }
}
