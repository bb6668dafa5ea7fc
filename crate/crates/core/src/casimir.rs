//! Casimir energy and pressure between two parallel plasma sheets.
//!
//! The energy per unit area is the imaginary-frequency Lifshitz integral
//!
//! ```text
//! E/A = 1/(4π²) ∫dk₄ ∫dk_∥ k_∥ Σ_s ln(1 − r̃_s² e^{−2γa})
//! ```
//!
//! done in polar coordinates `γ = q`, `k₄ = qε`, where it becomes
//! `1/(4π²) ∫q² dq [ln(1 − r̃₁² e^{−2qa}) + ∫₀¹ dε ln(1 − r̃₂(ε)² e^{−2qa})]` with
//! `r̃₁ = Ω/(Ω + 2q)` and `r̃₂ = Ω/(Ω + 2qε²)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{integrate_adaptive_with_points, integrate_semi_infinite, QuadratureSpec};
use crate::sheet::SheetParameters;

/// Energy, pressure and polarization shares at one separation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CasimirResult {
    pub energy_per_area: f64,
    /// `−∂E/∂a`, from the differentiated integrand.
    pub pressure: f64,
    pub te_share: f64,
    pub tm_share: f64,
    pub distance: f64,
    pub omega: f64,
}

/// `−π²/(720a³)`.
pub fn ideal_energy_per_area(a: f64) -> f64 {
    -PI * PI / (720.0 * a.powi(3))
}

/// `−π²/(240a⁴)`.
pub fn ideal_pressure(a: f64) -> f64 {
    -PI * PI / (240.0 * a.powi(4))
}

fn check_distance(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("separation must be positive, got {a}")))
    }
}

#[derive(Clone, Copy)]
enum Kernel {
    /// `ln(1 − x)`
    Energy,
    /// `∂_a ln(1 − x) = 2q x/(1 − x)`, sign flipped into the pressure at the end.
    Pressure,
}

impl Kernel {
    fn eval(self, q: f64, x: f64) -> f64 {
        match self {
            Kernel::Energy => (-x).ln_1p(),
            Kernel::Pressure => 2.0 * q * x / (1.0 - x),
        }
    }
}

fn te_coefficient(q: f64, omega: f64) -> f64 {
    omega / (omega + 2.0 * q)
}

fn tm_coefficient(q: f64, eps: f64, omega: f64) -> f64 {
    omega / (omega + 2.0 * q * eps * eps)
}

/// The TM coefficient rebuilt from the normal-field matching convention,
/// `R = s/(s + 2)` with `s = Ωγ/k₄²`.
fn tm_coefficient_normal_field(q: f64, eps: f64, omega: f64) -> f64 {
    let k4 = q * eps;
    if k4 == 0.0 {
        return 1.0;
    }
    let s = omega * q / (k4 * k4);
    s / (s + 2.0)
}

/// `(TE, TM)` parts of `1/(4π²) ∫q² dq ∫dε kernel`.
fn polar_integral(
    a: f64,
    omega: f64,
    kernel: Kernel,
    tm: fn(f64, f64, f64) -> f64,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let inner_spec = spec.tightened(0.1);
    let damping = |q: f64| (-2.0 * q * a).exp();
    let breaks = [0.5 * omega, 1.0 / a, 10.0 / a];

    let te = integrate_semi_infinite(
        |q| {
            let r = te_coefficient(q, omega);
            q * q * kernel.eval(q, r * r * damping(q))
        },
        0.0,
        &breaks,
        spec,
    )?;

    let inner_failure = std::cell::Cell::new(None);
    let tm = integrate_semi_infinite(
        |q| {
            let e = damping(q);
            if e == 0.0 {
                return 0.0;
            }
            let knee = (0.5 * omega / q).sqrt();
            let inner = integrate_adaptive_with_points(
                |eps| {
                    let r = tm(q, eps, omega);
                    kernel.eval(q, r * r * e)
                },
                0.0,
                1.0,
                &[knee],
                &inner_spec,
            );
            match inner {
                Ok(i) => q * q * i.value,
                Err(err) => {
                    inner_failure.set(Some(err));
                    f64::NAN
                }
            }
        },
        0.0,
        &breaks,
        spec,
    );
    if let Some(err) = inner_failure.take() {
        return Err(err);
    }
    let tm = tm?;
    let norm = 1.0 / (4.0 * PI * PI);
    Ok((norm * te.value, norm * tm.value))
}

/// Casimir energy per unit area of two sheets at separation `a`, default tolerance.
pub fn lifshitz_energy_per_area(a: f64, sheet: &SheetParameters) -> Result<CasimirResult> {
    lifshitz_energy_per_area_with(a, sheet, &QuadratureSpec::semi_infinite())
}

/// As [`lifshitz_energy_per_area`] with explicit quadrature settings.
pub fn lifshitz_energy_per_area_with(a: f64, sheet: &SheetParameters, spec: &QuadratureSpec) -> Result<CasimirResult> {
    check_distance(a)?;
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(CasimirResult {
            energy_per_area: 0.0,
            pressure: 0.0,
            te_share: 0.0,
            tm_share: 0.0,
            distance: a,
            omega,
        });
    }
    let (te, tm) = polar_integral(a, omega, Kernel::Energy, tm_coefficient, spec)?;
    let (pte, ptm) = polar_integral(a, omega, Kernel::Pressure, tm_coefficient, spec)?;
    let energy = te + tm;
    Ok(CasimirResult {
        energy_per_area: energy,
        pressure: -(pte + ptm),
        te_share: te / energy,
        tm_share: tm / energy,
        distance: a,
        omega,
    })
}

/// `−dE/da` by the five-point central difference with step `a·10⁻³`.
pub fn lifshitz_pressure(a: f64, sheet: &SheetParameters) -> Result<f64> {
    lifshitz_pressure_with(a, sheet, &QuadratureSpec::semi_infinite())
}

/// As [`lifshitz_pressure`]; the energies are integrated 10³ times tighter than `spec`.
pub fn lifshitz_pressure_with(a: f64, sheet: &SheetParameters, spec: &QuadratureSpec) -> Result<f64> {
    check_distance(a)?;
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(0.0);
    }
    let fine = spec.tightened(1e-3);
    let h = a * 1e-3;
    let e = |x: f64| -> Result<f64> {
        let (te, tm) = polar_integral(x, omega, Kernel::Energy, tm_coefficient, &fine)?;
        Ok(te + tm)
    };
    let derivative = (e(a - 2.0 * h)? - 8.0 * e(a - h)? + 8.0 * e(a + h)? - e(a + 2.0 * h)?) / (12.0 * h);
    Ok(-derivative)
}

/// Relative difference between the energy with the standard TM coefficient and with the
/// coefficient obtained from the normal-field matching convention.
pub fn polarization_convention_equivalence(a: f64, sheet: &SheetParameters) -> Result<f64> {
    check_distance(a)?;
    let omega = sheet.omega();
    if omega == 0.0 {
        return Ok(0.0);
    }
    let spec = QuadratureSpec::semi_infinite();
    let (te, tm) = polar_integral(a, omega, Kernel::Energy, tm_coefficient, &spec)?;
    let (te2, tm2) = polar_integral(a, omega, Kernel::Energy, tm_coefficient_normal_field, &spec)?;
    let standard = te + tm;
    Ok(((te2 + tm2) - standard).abs() / standard.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate_semi_infinite;

    fn pair(omega: f64, a: f64) -> SheetParameters {
        SheetParameters::pair(omega, a).unwrap()
    }

    #[test]
    fn reference_values() {
        // a³E at Ωa = 0.1, 1, 10, 100 from an independent high-precision integration.
        let cases = [
            (0.1, -0.0011341610883480215),
            (1.0, -0.0038720519696755344),
            (10.0, -0.010060049519808796),
            (100.0, -0.01318696674468731),
        ];
        for (x, expected) in cases {
            let r = lifshitz_energy_per_area(1.0, &pair(x, 1.0)).unwrap();
            assert!((r.energy_per_area / expected - 1.0).abs() < 1e-7, "x = {x}");
        }
    }

    #[test]
    fn transparent_sheets() {
        let r = lifshitz_energy_per_area(1.0, &pair(0.0, 1.0)).unwrap();
        assert_eq!(r.energy_per_area, 0.0);
        assert_eq!(lifshitz_pressure(1.0, &pair(0.0, 1.0)).unwrap(), 0.0);
    }

    #[test]
    fn scaling_in_omega_a() {
        let e1 = lifshitz_energy_per_area(1.0, &pair(2.0, 1.0)).unwrap().energy_per_area;
        let e2 = lifshitz_energy_per_area(2.0, &pair(1.0, 2.0)).unwrap().energy_per_area;
        assert!((e1 / (8.0 * e2) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn shares_and_sign() {
        let r = lifshitz_energy_per_area(1.0, &pair(3.0, 1.0)).unwrap();
        assert!(r.energy_per_area < 0.0 && r.pressure < 0.0);
        assert!((r.te_share + r.tm_share - 1.0).abs() < 1e-12);
        assert!(r.tm_share > r.te_share && r.te_share > 0.0);
    }

    #[test]
    fn finite_difference_matches_direct_pressure() {
        let s = pair(10.0, 1.0);
        let p = lifshitz_pressure(1.0, &s).unwrap();
        let direct = lifshitz_energy_per_area(1.0, &s).unwrap().pressure;
        assert!((p / direct - 1.0).abs() < 1e-6);
    }

    #[test]
    fn cartesian_integration_agrees() {
        let (omega, a) = (1.5, 0.8);
        let spec = QuadratureSpec::semi_infinite().with_tolerance(1e-10);
        let integrand = |k4: f64| {
            integrate_semi_infinite(
                |kp: f64| {
                    let g = k4.hypot(kp);
                    let e = (-2.0 * g * a).exp();
                    let r1 = omega / (omega + 2.0 * g);
                    let r2 = omega * g / (omega * g + 2.0 * k4 * k4);
                    kp * ((-r1 * r1 * e).ln_1p() + (-r2 * r2 * e).ln_1p())
                },
                0.0,
                &[1.0 / a],
                &spec,
            )
            .unwrap()
            .value
        };
        let cartesian = integrate_semi_infinite(integrand, 0.0, &[1.0 / a], &spec).unwrap().value / (4.0 * PI * PI);
        let polar = lifshitz_energy_per_area(a, &pair(omega, a)).unwrap().energy_per_area;
        assert!((polar / cartesian - 1.0).abs() < 1e-7);
    }

    #[test]
    fn conventions_agree() {
        for x in [1.0, 100.0] {
            assert!(polarization_convention_equivalence(1.0, &pair(x, 1.0)).unwrap() <= 1e-12);
        }
    }
}
