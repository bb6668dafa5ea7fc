//! A single flat plasma sheet: kinematics, reflection coefficients, the scalar propagator
//! amplitudes, the polarization basis and the surface-plasmon dispersion.

mod basis;
mod kinematics;
mod plasmon;
mod propagator;
mod reflection;

pub use basis::{minkowski_product, polarization_basis, PolarizationBasis, METRIC};
pub use kinematics::{gamma_complex, gamma_minkowski, EuclideanMomentum, MinkowskiMomentum, SheetParameters};
pub use plasmon::{
    te_plasmon_exists, te_residual, te_residual_scan_minimum, tm_dispersion_residual, tm_plasmon_branch,
    tm_plasmon_closed, tm_plasmon_root, PlasmonBranch,
};
pub use propagator::{jump_coefficient, matching_residual, scalar_propagator, MatchingResidual, PropagatorParts};
pub use reflection::{
    reflection, reflection_te, reflection_te_at, reflection_te_euclidean, reflection_tm, reflection_tm_at,
    reflection_tm_euclidean, scalar_reflection, Polarization,
};
