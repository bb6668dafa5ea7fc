//! Interaction energies of a point charge and of a polarizable atom with one sheet.
//!
//! The sheet sits at distance `a` from the charge or atom. Units are ħ = c = 1 with
//! Heaviside–Lorentz charges (Coulomb energy `e²/(4πr)`).

use std::f64::consts::PI;

use super::reduction::{f_te_with, f_tm_with, g_3_with, g_te_with, g_tm_with, h_3, h_parallel_with};
use crate::error::{Error, Result};
use crate::numerics::{integrate_semi_infinite, QuadratureSpec};
use crate::sheet::SheetParameters;

/// Charge, mass and the static moments of the system placed in front of the sheet.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AtomProperties {
    pub charge: f64,
    pub mass: f64,
    /// Static polarizabilities along `x₁, x₂, x₃`.
    pub alpha: [f64; 3],
    /// `⟨p_∥²⟩`
    pub p2_par: f64,
    /// `⟨p₃²⟩`
    pub p2_perp: f64,
    pub quadrupole: f64,
}

impl AtomProperties {
    /// A bare charge with no polarizability or internal motion.
    pub fn new(charge: f64, mass: f64) -> Result<Self> {
        Self {
            charge,
            mass,
            alpha: [0.0; 3],
            p2_par: 0.0,
            p2_perp: 0.0,
            quadrupole: 0.0,
        }
        .validated()
    }

    pub fn with_polarizabilities(mut self, alpha: [f64; 3]) -> Result<Self> {
        self.alpha = alpha;
        self.validated()
    }

    pub fn with_isotropic_polarizability(self, alpha: f64) -> Result<Self> {
        self.with_polarizabilities([alpha; 3])
    }

    pub fn with_momenta(mut self, p2_par: f64, p2_perp: f64) -> Result<Self> {
        self.p2_par = p2_par;
        self.p2_perp = p2_perp;
        self.validated()
    }

    pub fn with_quadrupole(mut self, quadrupole: f64) -> Result<Self> {
        self.quadrupole = quadrupole;
        self.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let finite = [self.charge, self.mass, self.p2_par, self.p2_perp, self.quadrupole]
            .iter()
            .chain(&self.alpha)
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidParameter("atom properties must be finite".into()));
        }
        if !(self.mass > 0.0) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {}", self.mass)));
        }
        if self.alpha.iter().any(|a| *a < 0.0) {
            return Err(Error::InvalidParameter("polarizabilities must be non-negative".into()));
        }
        if self.p2_par < 0.0 || self.p2_perp < 0.0 {
            return Err(Error::InvalidParameter("momentum expectations must be non-negative".into()));
        }
        Ok(self)
    }
}

fn check_distance(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("distance must be positive, got {a}")))
    }
}

/// Potential of the mirror charge at `(0, 0, 2a)` seen at `(x₁, x₂, x₃)`, independent of `Ω`.
pub fn image_potential(x1: f64, x2: f64, x3: f64, a: f64, e: f64) -> Result<f64> {
    let r = x1.hypot(x2).hypot(x3 - 2.0 * a);
    if r == 0.0 {
        return Err(Error::MirrorPoint);
    }
    Ok(e * e / (4.0 * PI * r))
}

/// `(e²/4π)(1/(2a) + Q/(16a³))`.
pub fn electrostatic_shift(a: f64, atom: &AtomProperties) -> Result<f64> {
    check_distance(a)?;
    let e2 = atom.charge * atom.charge;
    Ok(e2 / (4.0 * PI) * (0.5 / a + atom.quadrupole / (16.0 * a.powi(3))))
}

/// `δ₁ = −(e²/4π)(1/(8πma²))(f_TE(Ωa) + f_TM(Ωa)/3)`.
pub fn delta1(a: f64, sheet: &SheetParameters, atom: &AtomProperties) -> Result<f64> {
    delta1_with(a, sheet, atom, &QuadratureSpec::exponential_weight())
}

pub fn delta1_with(a: f64, sheet: &SheetParameters, atom: &AtomProperties, spec: &QuadratureSpec) -> Result<f64> {
    check_distance(a)?;
    let x = sheet.omega() * a;
    if x == 0.0 {
        return Ok(0.0);
    }
    let e2 = atom.charge * atom.charge;
    let reduction = f_te_with(x, spec)? + f_tm_with(x, spec)? / 3.0;
    Ok(-e2 / (4.0 * PI) / (8.0 * PI * atom.mass * a * a) * reduction)
}

/// `δ₁` from the Euclidean momentum integral
/// `−(e²/2m) ∫d³k/(2π)³ e^{−2γa}/(2γ) (r̃₁ + r̃₂ k₄²/γ²)` over `(k₄, k_∥)`.
pub fn delta1_integral(a: f64, sheet: &SheetParameters, atom: &AtomProperties, spec: &QuadratureSpec) -> Result<f64> {
    check_distance(a)?;
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(0.0);
    }
    let inner_spec = spec.tightened(0.1);
    let failure = std::cell::Cell::new(None);
    let outer = integrate_semi_infinite(
        |k4| {
            let inner = integrate_semi_infinite(
                |kp| {
                    let g = k4.hypot(kp);
                    if g == 0.0 {
                        return 0.0;
                    }
                    let r1 = omega / (omega + 2.0 * g);
                    let r2 = omega * g / (omega * g + 2.0 * k4 * k4);
                    kp * (-2.0 * g * a).exp() / (2.0 * g) * (r1 + r2 * k4 * k4 / (g * g))
                },
                0.0,
                &[0.5 * omega, 1.0 / a],
                &inner_spec,
            );
            match inner {
                Ok(i) => i.value,
                Err(e) => {
                    failure.set(Some(e));
                    f64::NAN
                }
            }
        },
        0.0,
        &[0.5 * omega, 1.0 / a],
        spec,
    );
    if let Some(e) = failure.take() {
        return Err(e);
    }
    // k₄ over the whole line and the azimuth of k_∥ give 2 · 2π / (2π)³.
    let prefactor = -(atom.charge * atom.charge) / (2.0 * atom.mass) / (2.0 * PI * PI);
    Ok(prefactor * outer?.value)
}

/// Electrostatic and kinetic parts of the no-recoil charge–sheet energy.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ChargeSheetEnergy {
    pub electrostatic: f64,
    pub kinetic: f64,
}

impl ChargeSheetEnergy {
    pub fn total(&self) -> f64 {
        self.electrostatic + self.kinetic
    }
}

/// The `k_∥` integral
/// `∫ d²k_∥/(2π)² e^{−2k_∥a}/(2k_∥) {−e² + (e²/m²)[(r − (ak_∥ + 3/2 + 2k_∥/Ω))·½⟨p_∥²⟩
/// − (ak_∥ + 1/2 + k_∥/Ω)⟨p₃²⟩]}` with `r = 1/(1 + 2k_∥/Ω)`.
pub fn charge_sheet_energy(a: f64, sheet: &SheetParameters, atom: &AtomProperties) -> Result<ChargeSheetEnergy> {
    charge_sheet_energy_with(a, sheet, atom, &QuadratureSpec::semi_infinite())
}

pub fn charge_sheet_energy_with(
    a: f64,
    sheet: &SheetParameters,
    atom: &AtomProperties,
    spec: &QuadratureSpec,
) -> Result<ChargeSheetEnergy> {
    check_distance(a)?;
    let omega = sheet.omega();
    if !(omega > 0.0) {
        return Err(Error::InvalidParameter("the charge-sheet energy needs omega > 0".into()));
    }
    let e2 = atom.charge * atom.charge;
    let m2 = atom.mass * atom.mass;
    // d²k/(2π)² · 1/(2k) = dk/(4π).
    let measure = |k: f64| (-2.0 * k * a).exp() / (4.0 * PI);
    let electrostatic = integrate_semi_infinite(|k| -e2 * measure(k), 0.0, &[1.0 / a], spec)?.value;
    let kinetic = integrate_semi_infinite(
        |k| {
            let r = omega / (omega + 2.0 * k);
            let par = (r - (a * k + 1.5 + 2.0 * k / omega)) * 0.5 * atom.p2_par;
            let perp = -(a * k + 0.5 + k / omega) * atom.p2_perp;
            e2 / m2 * measure(k) * (par + perp)
        },
        0.0,
        &[1.0 / a, 0.5 * omega],
        spec,
    )?
    .value;
    Ok(ChargeSheetEnergy { electrostatic, kinetic })
}

/// The compact reconstruction `−(e²/m²)[h_∥(Ωa)·½⟨p_∥²⟩ + h₃(Ωa)⟨p₃²⟩]` of the kinetic part.
pub fn charge_sheet_h_form(a: f64, sheet: &SheetParameters, atom: &AtomProperties) -> Result<f64> {
    check_distance(a)?;
    let x = sheet.omega() * a;
    let spec = QuadratureSpec::exponential_weight();
    let e2m2 = (atom.charge / atom.mass).powi(2);
    Ok(-e2m2 * (h_parallel_with(x, &spec)? * 0.5 * atom.p2_par + h_3(x)? * atom.p2_perp))
}

/// The braces of the Casimir–Polder energy,
/// `(g_TE + (11/5) g_TM)(α₁ + α₂)/4 + g₃ α₃`, at `x = Ωa`.
pub fn casimir_polder_braces(x: f64, atom: &AtomProperties, spec: &QuadratureSpec) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    let [a1, a2, a3] = atom.alpha;
    let transverse = if a1 + a2 > 0.0 {
        (g_te_with(x, spec)? + 2.2 * g_tm_with(x, spec)?) * (a1 + a2) / 4.0
    } else {
        0.0
    };
    let normal = if a3 > 0.0 { g_3_with(x, spec)? * a3 } else { 0.0 };
    Ok(transverse + normal)
}

/// `δ_CP = −{…}/(32π²a⁴)`.
pub fn casimir_polder_energy(a: f64, sheet: &SheetParameters, atom: &AtomProperties) -> Result<f64> {
    casimir_polder_energy_with(a, sheet, atom, &QuadratureSpec::exponential_weight())
}

pub fn casimir_polder_energy_with(
    a: f64,
    sheet: &SheetParameters,
    atom: &AtomProperties,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_distance(a)?;
    let braces = casimir_polder_braces(sheet.omega() * a, atom, spec)?;
    Ok(-braces / (32.0 * PI * PI * a.powi(4)))
}

/// Braces coefficient of an isotropic atom next to an ideal conductor with a conducting bulk.
pub const THICK_CONDUCTOR_COEFFICIENT: f64 = 3.0;
