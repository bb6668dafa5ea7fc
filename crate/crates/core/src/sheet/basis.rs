use num_complex::Complex64;

use super::kinematics::{gamma_minkowski, MinkowskiMomentum};
use crate::error::{Error, Result};

/// Diagonal of `g = diag(1, −1, −1, −1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// The four polarization 4-vectors `E^s_μ`, `s = 0..3`, at one momentum.
///
/// `E⁰` is longitudinal in `(k₀, k₁, k₂)`, `E¹` is the TE direction, `E²` the TM direction
/// and `E³` the normal to the sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationBasis {
    pub vectors: [[Complex64; 4]; 4],
}

/// Bilinear Minkowski product (no complex conjugation).
pub fn minkowski_product(a: &[Complex64; 4], b: &[Complex64; 4]) -> Complex64 {
    (0..4).map(|mu| a[mu] * METRIC[mu] * b[mu]).sum()
}

impl PolarizationBasis {
    /// `E^s · g · E^t`.
    pub fn gram(&self) -> [[Complex64; 4]; 4] {
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (s, row) in out.iter_mut().enumerate() {
            for (t, v) in row.iter_mut().enumerate() {
                *v = minkowski_product(&self.vectors[s], &self.vectors[t]);
            }
        }
        out
    }

    /// `Σ_s E^s_μ g_ss E^s_ν`, which reconstructs `g_μν` for a complete basis.
    pub fn completeness(&self) -> [[Complex64; 4]; 4] {
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (mu, row) in out.iter_mut().enumerate() {
            for (nu, v) in row.iter_mut().enumerate() {
                *v = (0..4)
                    .map(|s| self.vectors[s][mu] * METRIC[s] * self.vectors[s][nu])
                    .sum();
            }
        }
        out
    }

    /// Largest entry of `completeness() − g`.
    pub fn completeness_error(&self) -> f64 {
        max_deviation(&self.completeness())
    }

    /// Largest entry of `gram() − g`.
    pub fn gram_error(&self) -> f64 {
        max_deviation(&self.gram())
    }
}

fn max_deviation(m: &[[Complex64; 4]; 4]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { METRIC[i] } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

/// Basis at `k`: needs `k_∥ > 0` and `Γ ≠ 0`.
pub fn polarization_basis(k: &MinkowskiMomentum) -> Result<PolarizationBasis> {
    let kpar = k.kpar();
    if kpar == 0.0 {
        return Err(Error::DegenerateBasis("kpar = 0"));
    }
    let gamma = gamma_minkowski(k);
    if gamma == Complex64::new(0.0, 0.0) {
        return Err(Error::DegenerateBasis("Gamma = 0"));
    }
    let c = |x: f64| Complex64::new(x, 0.0);
    let zero = c(0.0);
    let e0 = [c(k.k0) / gamma, c(k.k1) / gamma, c(k.k2) / gamma, zero];
    let e1 = [zero, c(k.k2 / kpar), c(-k.k1 / kpar), zero];
    let norm2 = gamma * kpar;
    let e2 = [c(kpar * kpar) / norm2, c(k.k0 * k.k1) / norm2, c(k.k0 * k.k2) / norm2, zero];
    let e3 = [zero, zero, zero, c(1.0)];
    Ok(PolarizationBasis {
        vectors: [e0, e1, e2, e3],
    })
}
