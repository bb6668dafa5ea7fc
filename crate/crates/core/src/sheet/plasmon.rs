use super::kinematics::SheetParameters;
use crate::error::{Error, Result};
use crate::numerics::find_root_bracketed;

/// Surface-plasmon samples `(k_∥, k₀)` at one `Ω`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PlasmonBranch {
    pub omega: f64,
    pub samples: Vec<(f64, f64)>,
}

impl PlasmonBranch {
    /// Every sample lies below the light cone and `k₀` grows with `k_∥`.
    pub fn is_consistent(&self) -> bool {
        self.samples.iter().all(|(kp, k0)| k0 < kp)
            && self.samples.windows(2).all(|w| w[1].0 > w[0].0 && w[1].1 > w[0].1)
    }
}

fn check_kpar(kpar: f64) -> Result<()> {
    if kpar > 0.0 && kpar.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("kpar must be positive, got {kpar}")))
    }
}

/// TM plasmon frequency from `k₀² = (Ω/8)√(Ω² + 16k_∥²) − Ω²/8`.
///
/// Evaluated as `2Ωk_∥² / (√(Ω² + 16k_∥²) + Ω)` to avoid the cancellation at small `k_∥`.
pub fn tm_plasmon_closed(kpar: f64, sheet: &SheetParameters) -> Result<f64> {
    check_kpar(kpar)?;
    let omega = sheet.omega();
    let root = omega.hypot(4.0 * kpar);
    Ok((2.0 * omega * kpar * kpar / (root + omega)).sqrt())
}

/// `k₀² − (Ω/2)√(k_∥² − k₀²)`, the TM equation below the light cone.
pub fn tm_dispersion_residual(k0: f64, kpar: f64, sheet: &SheetParameters) -> f64 {
    k0 * k0 - 0.5 * sheet.omega() * ((kpar - k0) * (kpar + k0)).max(0.0).sqrt()
}

/// TM plasmon frequency by bracketed root finding on `(0, k_∥)`.
pub fn tm_plasmon_root(kpar: f64, sheet: &SheetParameters) -> Result<f64> {
    check_kpar(kpar)?;
    find_root_bracketed(|k0| tm_dispersion_residual(k0, kpar, sheet), 0.0, kpar, 1e-15)
}

/// Closed-form branch on a logarithmic grid of `k_∥/Ω`.
pub fn tm_plasmon_branch(sheet: &SheetParameters, ratio_min: f64, ratio_max: f64, count: usize) -> Result<PlasmonBranch> {
    let omega = sheet.omega();
    if omega <= 0.0 {
        return Err(Error::InvalidParameter("the plasmon branch needs omega > 0".into()));
    }
    if !(ratio_min > 0.0 && ratio_max > ratio_min) || count < 2 {
        return Err(Error::InvalidParameter(format!(
            "need 0 < ratio_min < ratio_max and count >= 2, got ({ratio_min}, {ratio_max}, {count})"
        )));
    }
    let step = (ratio_max / ratio_min).ln() / (count - 1) as f64;
    let samples = (0..count)
        .map(|i| {
            let kpar = omega * ratio_min * (step * i as f64).exp();
            tm_plasmon_closed(kpar, sheet).map(|k0| (kpar, k0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlasmonBranch { omega, samples })
}

/// TE equation divided by `k₀²`: `1 + Ω/(2√(k_∥² − k₀²))`.
pub fn te_residual(k0: f64, kpar: f64, sheet: &SheetParameters) -> f64 {
    1.0 + 0.5 * sheet.omega() / ((kpar - k0) * (kpar + k0)).sqrt()
}

/// Minimum of [`te_residual`] over `points` interior nodes of `(0, k_∥)`.
pub fn te_residual_scan_minimum(kpar: f64, sheet: &SheetParameters, points: usize) -> Result<f64> {
    check_kpar(kpar)?;
    let n = points.max(1);
    Ok((1..=n)
        .map(|i| te_residual(kpar * i as f64 / (n + 1) as f64, kpar, sheet))
        .fold(f64::INFINITY, f64::min))
}

/// Whether a TE surface mode exists at `k_∥`; a residual bounded below by 1 rules it out.
pub fn te_plasmon_exists(kpar: f64, sheet: &SheetParameters) -> Result<bool> {
    Ok(!(te_residual_scan_minimum(kpar, sheet, 1000)? > 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sheet(omega: f64) -> SheetParameters {
        SheetParameters::single(omega).unwrap()
    }

    #[test]
    fn closed_form_reference() {
        let k0 = tm_plasmon_closed(1.0, &sheet(1.0)).unwrap();
        assert!((k0 * k0 - (17f64.sqrt() - 1.0) / 8.0).abs() < 1e-15);
    }

    #[test]
    fn closed_form_limits() {
        let s = sheet(1.0);
        assert!(tm_plasmon_closed(1e-12, &s).unwrap() < 1e-11);
        let kpar = 1e4;
        let k0 = tm_plasmon_closed(kpar, &s).unwrap();
        assert!(((k0 * k0) / (0.5 * kpar) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn root_matches_closed_form() {
        let s = sheet(2.0);
        for kpar in [1e-3, 0.1, 1.0, 30.0, 2e3] {
            let a = tm_plasmon_closed(kpar, &s).unwrap();
            let b = tm_plasmon_root(kpar, &s).unwrap();
            assert!(((a - b) / a).abs() < 1e-10, "kpar = {kpar}");
            assert!(b < kpar);
            assert!(tm_dispersion_residual(b, kpar, &s).abs() <= 1e-10 * 2.0 * kpar);
        }
    }

    #[test]
    fn branch_is_consistent() {
        let branch = tm_plasmon_branch(&sheet(1.0), 1e-3, 1e3, 50).unwrap();
        assert_eq!(branch.samples.len(), 50);
        assert!(branch.is_consistent());
    }

    #[test]
    fn no_te_plasmon() {
        assert!(!te_plasmon_exists(1.0, &sheet(1.0)).unwrap());
        assert!(!te_plasmon_exists(0.1, &sheet(100.0)).unwrap());
        assert!(te_residual_scan_minimum(1.0, &sheet(1.0), 200).unwrap() > 1.0);
    }
}
