use num_complex::Complex64;

use crate::error::{Error, Result};

/// Plasma frequency `Ω` and the sheet coordinate(s) along `x₃`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SheetParameters {
    omega: f64,
    positions: Vec<f64>,
}

impl SheetParameters {
    /// `omega` must be finite and non-negative; `Ω = 0` is the transparent sheet.
    /// One or two strictly increasing positions.
    pub fn new(omega: f64, positions: Vec<f64>) -> Result<Self> {
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "plasma frequency must be finite and non-negative, got {omega}"
            )));
        }
        if positions.is_empty() || positions.len() > 2 {
            return Err(Error::InvalidParameter(format!(
                "expected one or two sheet positions, got {}",
                positions.len()
            )));
        }
        if positions.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter("sheet positions must be finite".into()));
        }
        if positions.len() == 2 && !(positions[0] < positions[1]) {
            return Err(Error::InvalidParameter(
                "sheet positions must be strictly increasing".into(),
            ));
        }
        Ok(Self { omega, positions })
    }

    /// One sheet at `x₃ = 0`.
    pub fn single(omega: f64) -> Result<Self> {
        Self::new(omega, vec![0.0])
    }

    /// Two sheets at `x₃ = 0` and `x₃ = a`.
    pub fn pair(omega: f64, a: f64) -> Result<Self> {
        Self::new(omega, vec![0.0, a])
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    /// Separation of a two-sheet configuration.
    pub fn separation(&self) -> Option<f64> {
        match self.positions.as_slice() {
            [a, b] => Some(b - a),
            _ => None,
        }
    }

    pub fn with_omega(&self, omega: f64) -> Result<Self> {
        Self::new(omega, self.positions.clone())
    }
}

/// Real-frequency momentum `(k₀, k₁, k₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiMomentum {
    pub k0: f64,
    pub k1: f64,
    pub k2: f64,
}

impl MinkowskiMomentum {
    pub fn new(k0: f64, k1: f64, k2: f64) -> Self {
        Self { k0, k1, k2 }
    }

    /// Momentum with `k_∥` along `x₁`.
    pub fn from_kpar(k0: f64, kpar: f64) -> Self {
        Self { k0, k1: kpar, k2: 0.0 }
    }

    pub fn kpar(&self) -> f64 {
        self.k1.hypot(self.k2)
    }

    pub fn gamma(&self) -> Complex64 {
        gamma_minkowski(self)
    }
}

/// Imaginary-frequency momentum `(k₄, k_∥)` with `γ = √(k₄² + k_∥²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanMomentum {
    k4: f64,
    kpar: f64,
    gamma: f64,
}

impl EuclideanMomentum {
    pub fn new(k4: f64, kpar: f64) -> Result<Self> {
        if !(k4.is_finite() && kpar.is_finite() && k4 >= 0.0 && kpar >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Euclidean momentum needs finite k4, kpar >= 0, got ({k4}, {kpar})"
            )));
        }
        Ok(Self {
            k4,
            kpar,
            gamma: k4.hypot(kpar),
        })
    }

    pub fn k4(&self) -> f64 {
        self.k4
    }

    pub fn kpar(&self) -> f64 {
        self.kpar
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// `Γ = √(k₀² − k_∥² + i0)` on the branch `Im Γ ≥ 0`.
pub fn gamma_minkowski(k: &MinkowskiMomentum) -> Complex64 {
    let kpar = k.kpar();
    let d = (k.k0 - kpar) * (k.k0 + kpar);
    if d >= 0.0 {
        Complex64::new(d.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-d).sqrt())
    }
}

/// `Γ = √(k₀² − k_∥²)` for complex `k₀`, again with `Im Γ ≥ 0`.
pub fn gamma_complex(k0: Complex64, kpar: f64) -> Complex64 {
    let g = (k0 * k0 - kpar * kpar).sqrt();
    if g.im < 0.0 || (g.im == 0.0 && g.re < 0.0) {
        -g
    } else {
        g
    }
}
