//! Spherical plasma shell: radial propagator, TE/TM Jost functions and a scan of the real
//! frequency axis for zeros.
//!
//! With `z = k₀R` the Jost functions are
//! `g⁽¹⁾_l = 1 + ΩR² d_l(R, R) = 1 + (iΩ/k₀) ĵ_l(z) ĥ_l(z)` and
//! `g⁽²⁾_l = 1 + (iΩ/k₀) ĵ_l'(z) ĥ_l'(z)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{minimize_bracketed, riccati_bessel, spherical_bessel_j, spherical_hankel1, L_MAX};
use crate::sheet::Polarization;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `|g|²` minima below this value are reported as zero candidates.
pub const ZERO_THRESHOLD: f64 = 1e-6;

/// Fewest grid points per `2π` of `k₀R` accepted by [`scan_real_zeros`].
pub const MIN_POINTS_PER_PERIOD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SphericalShell {
    radius: f64,
    omega: f64,
}

impl SphericalShell {
    /// `radius > 0`; `omega ≥ 0`, with `Ω = 0` the transparent shell.
    pub fn new(radius: f64, omega: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!("radius must be positive, got {radius}")));
        }
        if !(omega >= 0.0 && omega.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "plasma frequency must be finite and non-negative, got {omega}"
            )));
        }
        Ok(Self { radius, omega })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// Both Jost functions at one `(l, k₀)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct JostEvaluation {
    pub l: usize,
    pub k0: f64,
    pub g_te: Complex64,
    pub g_tm: Complex64,
}

fn check_frequency(k0: f64) -> Result<()> {
    if k0 == 0.0 || !k0.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "the spherical functions need a finite, non-zero k0, got {k0}"
        )));
    }
    Ok(())
}

fn check_order(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidParameter("orbital momentum must be at least 1".into()));
    }
    if l > L_MAX {
        return Err(Error::OrderTooLarge { l, max: L_MAX });
    }
    Ok(())
}

/// `d_l(r, r') = i k₀ j_l(k₀ r_<) h⁽¹⁾_l(k₀ r_>)`.
pub fn radial_propagator_dl(l: usize, k0: f64, r: f64, rp: f64) -> Result<Complex64> {
    check_frequency(k0)?;
    if !(r > 0.0 && rp > 0.0) {
        return Err(Error::InvalidParameter("radii must be positive".into()));
    }
    let (lo, hi) = (r.min(rp), r.max(rp));
    let j = spherical_bessel_j(l, Complex64::new(k0 * lo, 0.0))?;
    let h = spherical_hankel1(l, Complex64::new(k0 * hi, 0.0))?;
    Ok(I * k0 * j * h)
}

/// TE Jost function through the radial propagator.
pub fn jost_te(l: usize, k0: f64, shell: &SphericalShell) -> Result<Complex64> {
    check_order(l)?;
    check_frequency(k0)?;
    if shell.omega == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let r = shell.radius;
    Ok(1.0 + shell.omega * r * r * radial_propagator_dl(l, k0, r, r)?)
}

/// TE Jost function through the Riccati–Bessel functions, `1 + (iΩ/k₀) ĵ_l ĥ_l`.
pub fn jost_te_riccati(l: usize, k0: f64, shell: &SphericalShell) -> Result<Complex64> {
    check_order(l)?;
    check_frequency(k0)?;
    if shell.omega == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let rb = riccati_bessel(l, Complex64::new(k0 * shell.radius, 0.0))?;
    Ok(1.0 + I * shell.omega / k0 * rb.j * rb.h)
}

/// TM Jost function `1 + (iΩ/k₀) ĵ_l'(k₀R) ĥ_l'(k₀R)`.
pub fn jost_tm(l: usize, k0: f64, shell: &SphericalShell) -> Result<Complex64> {
    check_order(l)?;
    check_frequency(k0)?;
    if shell.omega == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let rb = riccati_bessel(l, Complex64::new(k0 * shell.radius, 0.0))?;
    Ok(1.0 + I * shell.omega / k0 * rb.dj * rb.dh)
}

/// `y_0 ..= y_l` at real `z > 0` by upward recurrence.
fn bessel_y_sequence(l: usize, z: f64) -> Vec<f64> {
    let mut out = vec![-z.cos() / z];
    out.push(-z.cos() / (z * z) - z.sin() / z);
    for n in 1..l {
        let next = (2 * n + 1) as f64 / z * out[n] - out[n - 1];
        out.push(next);
    }
    out.truncate(l + 1);
    out
}

/// `j_0 ..= j_l` at real `z > 0`: closed forms for `l ≤ 1`, then upward recurrence while
/// `z > l`, Miller's downward recurrence otherwise.
fn bessel_j_real(l: usize, z: f64) -> Result<Vec<f64>> {
    if z > l as f64 {
        let mut out = vec![z.sin() / z, z.sin() / (z * z) - z.cos() / z];
        for n in 1..l {
            let next = (2 * n + 1) as f64 / z * out[n] - out[n - 1];
            out.push(next);
        }
        out.truncate(l + 1);
        Ok(out)
    } else {
        (0..=l)
            .map(|n| spherical_bessel_j(n, Complex64::new(z, 0.0)).map(|v| v.re))
            .collect()
    }
}

/// TM Jost function rebuilt from `ĵ' = z j_{l−1} − l j_l` and `ŷ' = z y_{l−1} − l y_l`
/// with `ĥ' = ĵ' + i ŷ'`, for real `k₀ > 0`.
pub fn jost_tm_from_jy(l: usize, k0: f64, shell: &SphericalShell) -> Result<Complex64> {
    check_order(l)?;
    check_frequency(k0)?;
    if k0 < 0.0 {
        return Err(Error::InvalidParameter("the (j, y) route is implemented for k0 > 0".into()));
    }
    let z = k0 * shell.radius;
    let j = bessel_j_real(l, z)?;
    let y = bessel_y_sequence(l, z);
    let lf = l as f64;
    let dj = z * j[l - 1] - lf * j[l];
    let dy = z * y[l - 1] - lf * y[l];
    Ok(1.0 + I * shell.omega / k0 * dj * Complex64::new(dj, dy))
}

pub fn jost_evaluation(l: usize, k0: f64, shell: &SphericalShell) -> Result<JostEvaluation> {
    Ok(JostEvaluation {
        l,
        k0,
        g_te: jost_te(l, k0, shell)?,
        g_tm: jost_tm(l, k0, shell)?,
    })
}

/// Uniform grid `k₀R = k0r_max · i / points`, `i = 1..=points`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ScanGrid {
    pub k0r_max: f64,
    pub points: usize,
}

impl ScanGrid {
    pub fn new(k0r_max: f64, points: usize) -> Self {
        Self { k0r_max, points }
    }

    pub fn spacing(&self) -> f64 {
        self.k0r_max / self.points as f64
    }

    pub fn points_per_period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.spacing()
    }
}

impl Default for ScanGrid {
    fn default() -> Self {
        Self::new(30.0, 3000)
    }
}

/// A local minimum of `|g|²` that fell below [`ZERO_THRESHOLD`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ZeroCandidate {
    pub polarization: Polarization,
    pub l: usize,
    /// Bracketing interval in `k₀R`.
    pub lo: f64,
    pub hi: f64,
    /// Refined location and value of the minimum.
    pub k0r: f64,
    pub modulus_squared: f64,
}

/// Smallest `|g|²` found on the grid for one polarization, refined by minimisation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ScanMinimum {
    pub polarization: Polarization,
    pub l: usize,
    pub k0r: f64,
    pub modulus_squared: f64,
}

fn modulus_squared(pol: Polarization, l: usize, k0r: f64, shell: &SphericalShell) -> Result<f64> {
    let k0 = k0r / shell.radius;
    let g = match pol {
        Polarization::Te => jost_te(l, k0, shell)?,
        _ => jost_tm(l, k0, shell)?,
    };
    Ok(g.norm_sqr())
}

fn refine(pol: Polarization, l: usize, lo: f64, hi: f64, shell: &SphericalShell) -> Result<(f64, f64)> {
    let failure = std::cell::Cell::new(None);
    let f = |x: f64| match modulus_squared(pol, l, x, shell) {
        Ok(v) => v,
        Err(e) => {
            failure.set(Some(e));
            f64::INFINITY
        }
    };
    let found = minimize_bracketed(f, lo, hi, 1e-12 * hi);
    if let Some(e) = failure.take() {
        return Err(e);
    }
    found
}

fn grid_minima(pol: Polarization, l: usize, shell: &SphericalShell, grid: &ScanGrid) -> Result<Vec<(f64, f64, f64)>> {
    if grid.points < 3 || !(grid.k0r_max > 0.0) {
        return Err(Error::InvalidParameter("scan grid needs k0r_max > 0 and at least 3 points".into()));
    }
    if grid.points_per_period() < MIN_POINTS_PER_PERIOD as f64 {
        return Err(Error::UnderResolvedGrid {
            points_per_period: grid.points_per_period(),
            required: MIN_POINTS_PER_PERIOD,
        });
    }
    let h = grid.spacing();
    let values = (1..=grid.points)
        .map(|i| modulus_squared(pol, l, h * i as f64, shell))
        .collect::<Result<Vec<_>>>()?;
    let mut minima = Vec::new();
    for i in 0..values.len() {
        let left = if i == 0 { f64::INFINITY } else { values[i - 1] };
        let right = values.get(i + 1).copied().unwrap_or(f64::INFINITY);
        if values[i] <= left && values[i] <= right {
            let x = h * (i + 1) as f64;
            // The first node's left neighbour is k₀R → 0, where the functions are singular.
            let lo = if i == 0 { 0.5 * x } else { x - h };
            let hi = if i + 1 == values.len() { x } else { x + h };
            minima.push((lo, hi, values[i]));
        }
    }
    Ok(minima)
}

/// Intervals of `k₀R` where `|g⁽ˢ⁾_l|²` has a local minimum below [`ZERO_THRESHOLD`], for both
/// polarizations. Each grid minimum is refined by bracketed minimisation before the test.
pub fn scan_real_zeros(l: usize, shell: &SphericalShell, grid: &ScanGrid) -> Result<Vec<ZeroCandidate>> {
    check_order(l)?;
    let mut out = Vec::new();
    if shell.omega == 0.0 {
        return Ok(out);
    }
    for pol in [Polarization::Te, Polarization::Tm] {
        for (lo, hi, _) in grid_minima(pol, l, shell, grid)? {
            let (x, v) = refine(pol, l, lo, hi, shell)?;
            if v < ZERO_THRESHOLD {
                out.push(ZeroCandidate {
                    polarization: pol,
                    l,
                    lo,
                    hi,
                    k0r: x,
                    modulus_squared: v,
                });
            }
        }
    }
    Ok(out)
}

/// The refined global minimum of `|g|²` over the grid, per polarization.
pub fn scan_minimum(l: usize, shell: &SphericalShell, grid: &ScanGrid) -> Result<[ScanMinimum; 2]> {
    check_order(l)?;
    let mut out = [Polarization::Te, Polarization::Tm].map(|polarization| ScanMinimum {
        polarization,
        l,
        k0r: f64::NAN,
        modulus_squared: f64::INFINITY,
    });
    for m in out.iter_mut() {
        if shell.omega == 0.0 {
            m.k0r = grid.spacing();
            m.modulus_squared = 1.0;
            continue;
        }
        for (lo, hi, _) in grid_minima(m.polarization, l, shell, grid)? {
            let (x, v) = refine(m.polarization, l, lo, hi, shell)?;
            if v < m.modulus_squared {
                m.k0r = x;
                m.modulus_squared = v;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn propagator_closed_form_l0() {
        let (k0, r) = (1.3, 0.7);
        let z = k0 * r;
        let expected = I * k0 * (z.sin() / z) * (-I * (I * z).exp() / z);
        assert!((radial_propagator_dl(0, k0, r, r).unwrap() - expected).norm() < 1e-14);
    }

    #[test]
    fn propagator_symmetric_and_positive_imaginary_part() {
        let a = radial_propagator_dl(3, 2.0, 0.5, 1.5).unwrap();
        let b = radial_propagator_dl(3, 2.0, 1.5, 0.5).unwrap();
        assert_eq!(a, b);
        for l in 0..=5 {
            let (k0, r) = (1.7, 1.1);
            let d = radial_propagator_dl(l, k0, r, r).unwrap();
            let j = spherical_bessel_j(l, c(k0 * r, 0.0)).unwrap().re;
            assert!((d.im - k0 * j * j).abs() < 1e-13, "l = {l}");
        }
    }

    #[test]
    fn transparent_shell() {
        let shell = SphericalShell::new(1.0, 0.0).unwrap();
        for l in 1..=4 {
            assert_eq!(jost_te(l, 0.8, &shell).unwrap(), c(1.0, 0.0));
            assert_eq!(jost_tm(l, 0.8, &shell).unwrap(), c(1.0, 0.0));
        }
        assert!(scan_real_zeros(2, &shell, &ScanGrid::default()).unwrap().is_empty());
    }

    #[test]
    fn two_te_routes_agree() {
        let shell = SphericalShell::new(1.3, 0.9).unwrap();
        for l in 1..=6 {
            for k0 in [0.05, 1.0, 7.5] {
                let a = jost_te(l, k0, &shell).unwrap();
                let b = jost_te_riccati(l, k0, &shell).unwrap();
                assert!((a - b).norm() < 1e-10 * a.norm(), "l = {l}, k0 = {k0}");
            }
        }
    }

    #[test]
    fn tm_from_bessel_pairs() {
        let shell = SphericalShell::new(1.0, 2.0).unwrap();
        for l in 1..=6 {
            for k0 in [0.3, 2.7, 15.0] {
                let a = jost_tm(l, k0, &shell).unwrap();
                let b = jost_tm_from_jy(l, k0, &shell).unwrap();
                assert!((a - b).norm() < 1e-10 * a.norm(), "l = {l}, k0 = {k0}");
            }
        }
    }

    #[test]
    fn tm_reference_value() {
        // l = 1, k₀R = 1, ΩR = 1 from the closed-form Riccati–Bessel functions.
        let shell = SphericalShell::new(1.0, 1.0).unwrap();
        let z: f64 = 1.0;
        let dj = z.sin() - (z.sin() / (z * z) - z.cos() / z);
        let h1 = -(I * z).exp() * (z + I) / (z * z);
        let h0 = -I * (I * z).exp() / z;
        let dh = z * h0 - h1;
        let expected = 1.0 + I * dj * dh;
        assert!((jost_tm(1, 1.0, &shell).unwrap() - expected).norm() < 1e-14);
    }

    #[test]
    fn transparent_at_high_frequency() {
        let shell = SphericalShell::new(1.0, 1.0).unwrap();
        let g = jost_tm(2, 100.0, &shell).unwrap();
        assert!((g - 1.0).norm() < 2.0 * shell.omega() / 100.0);
    }

    #[test]
    fn imaginary_parts_never_negative() {
        let shell = SphericalShell::new(1.0, 3.0).unwrap();
        for l in 1..=5 {
            for i in 1..200 {
                let k0 = 0.15 * i as f64;
                assert!(jost_te(l, k0, &shell).unwrap().im >= -1e-14);
                assert!(jost_tm(l, k0, &shell).unwrap().im >= -1e-14);
            }
        }
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let shell = SphericalShell::new(1.0, 1.0).unwrap();
        let err = scan_real_zeros(1, &shell, &ScanGrid::new(30.0, 50)).unwrap_err();
        assert!(matches!(err, Error::UnderResolvedGrid { .. }));
    }

    #[test]
    fn minima_stay_positive() {
        let shell = SphericalShell::new(1.0, 10.0).unwrap();
        let mins = scan_minimum(3, &shell, &ScanGrid::new(30.0, 1000)).unwrap();
        assert!(mins.iter().all(|m| m.modulus_squared > 0.0));
    }

    #[test]
    fn large_l_crossing_approaches_flat_plasmon() {
        use crate::sheet::{tm_plasmon_closed, SheetParameters};
        let (kpar, omega) = (1.0, 1.0);
        let flat = tm_plasmon_closed(kpar, &SheetParameters::single(omega).unwrap()).unwrap();
        let mut gaps = Vec::new();
        for l in [10, 20, 40] {
            let shell = SphericalShell::new(l as f64 / kpar, omega).unwrap();
            let re = |k0: f64| jost_tm(l, k0, &shell).unwrap().re;
            let k0 = crate::numerics::find_root_bracketed(re, 0.3 * flat, 0.999 * kpar, 1e-12).unwrap();
            gaps.push((k0 - flat).abs());
        }
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    }
}
