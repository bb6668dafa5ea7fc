//! Quadrature, root finding and complex special functions shared by the physics modules.
//!
//! Everything here is a pure function of its arguments. The only state is the lazily built
//! table of Gauss–Laguerre rules, which is immutable once initialised.

pub mod bessel;
pub mod laguerre;
pub mod quadrature;
pub mod roots;

pub use bessel::{riccati_bessel, spherical_bessel_j, spherical_hankel1, ComplexValue, RiccatiBessel, L_MAX};
pub use quadrature::{
    integrate, integrate_adaptive, integrate_adaptive_with_points, integrate_exponential_weight,
    integrate_exponential_weight_detailed, integrate_laplace, integrate_semi_infinite, Integral,
    QuadratureKind, QuadratureSpec, DEFAULT_RELATIVE_TOLERANCE,
};
pub use roots::{find_root_bracketed, minimize_bracketed};
