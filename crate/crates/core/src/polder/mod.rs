//! Charge–sheet and atom–sheet (Casimir–Polder) interaction energies.

mod energies;
mod reduction;

pub use energies::{
    casimir_polder_braces, casimir_polder_energy, casimir_polder_energy_with, charge_sheet_energy,
    charge_sheet_energy_with, charge_sheet_h_form, delta1, delta1_integral, delta1_with, electrostatic_shift,
    image_potential, AtomProperties, ChargeSheetEnergy, THICK_CONDUCTOR_COEFFICIENT,
};
pub use reduction::{
    f_te, f_te_with, f_tm, f_tm_with, g_3, g_3_closed, g_3_double, g_3_with, g_te, g_te_with, g_tm, g_tm_closed,
    g_tm_double, g_tm_with, h_3, h_parallel, h_parallel_with, ReductionFunctions, PATH_AGREEMENT, SERIES_THRESHOLD,
};
