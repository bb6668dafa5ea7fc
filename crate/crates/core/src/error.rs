use thiserror::Error;

/// Errors raised by the numerical kernels and the physics built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("tolerance not met: best estimate {estimate:e} with error bound {error_bound:e}")]
    ToleranceNotMet { estimate: f64, error_bound: f64 },

    #[error("invalid integration interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("root finder hit the iteration limit ({iterations}) at x = {x}")]
    IterationLimit { iterations: usize, x: f64 },

    #[error("Hankel function is singular at z = 0")]
    HankelAtZero,

    #[error("order l = {l} exceeds the recurrence stability limit {max}")]
    OrderTooLarge { l: usize, max: usize },

    #[error("momentum lies on the light cone (Gamma = 0 with k0 = {k0})")]
    OnLightCone { k0: f64 },

    #[error("degenerate momentum: {0}")]
    DegenerateMomentum(&'static str),

    #[error("degenerate polarization basis: {0}")]
    DegenerateBasis(&'static str),

    #[error("field point coincides with the mirror charge")]
    MirrorPoint,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("integration paths disagree: {first:e} vs {second:e} (relative {relative:e})")]
    PathDisagreement { first: f64, second: f64, relative: f64 },

    #[error("grid under-resolved: {points_per_period:.1} points per period, need at least {required}")]
    UnderResolvedGrid { points_per_period: f64, required: usize },

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
