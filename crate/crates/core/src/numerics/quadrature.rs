use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::numerics::laguerre::{gauss_laguerre, MAX_LAGUERRE_ORDER};

/// Which integration scheme a [`QuadratureSpec`] drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureKind {
    /// Gauss–Laguerre against `e^{-k}` on `(0, ∞)`, order doubled until successive orders agree.
    ExponentialWeight,
    /// Globally adaptive Gauss–Kronrod (10/21) on a finite interval.
    AdaptiveFinite,
    /// Adaptive Gauss–Kronrod after mapping `[lo, ∞)` onto `[0, 1)` with `x = lo + t/(1-t)`.
    SemiInfiniteTransformed,
}

/// Integration settings.
///
/// `order` is the starting Gauss–Laguerre order for [`QuadratureKind::ExponentialWeight`] and the
/// number of initial equal subintervals for the adaptive kinds.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadratureSpec {
    pub kind: QuadratureKind,
    pub order: usize,
    pub relative_tolerance: f64,
    pub absolute_floor: f64,
}

/// Relative tolerance used by every physics integral unless overridden.
pub const DEFAULT_RELATIVE_TOLERANCE: f64 = 1e-8;

/// Hard cap on the number of subintervals an adaptive run may create.
pub const MAX_SUBDIVISIONS: usize = 4000;

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            kind: QuadratureKind::AdaptiveFinite,
            order: 2,
            relative_tolerance: DEFAULT_RELATIVE_TOLERANCE,
            absolute_floor: 1e-300,
        }
    }
}

impl QuadratureSpec {
    pub fn new(kind: QuadratureKind, order: usize, relative_tolerance: f64) -> Result<Self> {
        let spec = Self {
            kind,
            order,
            relative_tolerance,
            absolute_floor: 1e-300,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn exponential_weight() -> Self {
        Self {
            kind: QuadratureKind::ExponentialWeight,
            order: 8,
            ..Self::default()
        }
    }

    pub fn adaptive() -> Self {
        Self::default()
    }

    pub fn semi_infinite() -> Self {
        Self {
            kind: QuadratureKind::SemiInfiniteTransformed,
            ..Self::default()
        }
    }

    pub fn with_tolerance(mut self, relative_tolerance: f64) -> Self {
        self.relative_tolerance = relative_tolerance;
        self
    }

    pub fn with_kind(mut self, kind: QuadratureKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_absolute_floor(mut self, absolute_floor: f64) -> Self {
        self.absolute_floor = absolute_floor;
        self
    }

    /// Same settings with the tolerance tightened by `factor` (never looser than before).
    pub fn tightened(self, factor: f64) -> Self {
        let tol = (self.relative_tolerance * factor).max(1e-14);
        self.with_tolerance(tol.min(self.relative_tolerance))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance <= 1e-3) {
            return Err(Error::InvalidParameter(format!(
                "relative tolerance must lie in (0, 1e-3], got {}",
                self.relative_tolerance
            )));
        }
        if self.order < 2 {
            return Err(Error::InvalidParameter(format!(
                "quadrature order must be at least 2, got {}",
                self.order
            )));
        }
        if !(self.absolute_floor >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "absolute floor must be non-negative, got {}",
                self.absolute_floor
            )));
        }
        Ok(())
    }

    fn accepts(&self, value: f64, error: f64) -> bool {
        error <= self.absolute_floor.max(self.relative_tolerance * value.abs())
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

// Kronrod abscissae (descending, last is the centre) and weights of the 21-point rule,
// plus the weights of the embedded 10-point Gauss rule (odd Kronrod indices).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_223_618,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

fn kronrod21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut values = [0.0; 21];
    values[10] = fc;
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        values[j] = f1;
        values[20 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    // QUADPACK error heuristic.
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        asc += WGK[j] * ((values[j] - mean).abs() + (values[20 - j] - mean).abs());
    }
    let result = kronrod * half;
    let asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    (result, err.max(50.0 * f64::EPSILON * result.abs()))
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn adaptive_core<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], spec: &QuadratureSpec) -> Result<Integral> {
    let mut heap = BinaryHeap::new();
    let mut total = 0.0;
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        let pieces = spec.order.max(1);
        let step = (w[1] - w[0]) / pieces as f64;
        for i in 0..pieces {
            let a = w[0] + step * i as f64;
            let b = if i + 1 == pieces { w[1] } else { a + step };
            let (value, error) = kronrod21(f, a, b);
            total += value;
            total_err += error;
            heap.push(Segment { a, b, value, error });
        }
    }
    let mut subdivisions = heap.len();
    while !spec.accepts(total, total_err) {
        if !(total.is_finite() && total_err.is_finite()) {
            return Err(Error::NonFinite("adaptive quadrature"));
        }
        if subdivisions >= MAX_SUBDIVISIONS {
            return Err(Error::ToleranceNotMet {
                estimate: total,
                error_bound: total_err,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval collapsed to machine resolution; nothing left to refine.
            return Err(Error::ToleranceNotMet {
                estimate: total,
                error_bound: total_err,
            });
        }
        let (v1, e1) = kronrod21(f, worst.a, mid);
        let (v2, e2) = kronrod21(f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2 });
        subdivisions += 1;
    }
    // Re-sum to shed the drift accumulated by the incremental updates.
    let value: f64 = heap.iter().map(|s| s.value).sum();
    let error: f64 = heap.iter().map(|s| s.error).sum();
    if !value.is_finite() {
        return Err(Error::NonFinite("adaptive quadrature"));
    }
    Ok(Integral {
        value,
        error,
        subdivisions,
    })
}

fn sorted_breaks(lo: f64, hi: f64, points: &[f64]) -> Vec<f64> {
    let mut breaks = vec![lo];
    let mut inner: Vec<f64> = points
        .iter()
        .copied()
        .filter(|p| p.is_finite() && *p > lo && *p < hi)
        .collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    breaks.extend(inner);
    breaks.push(hi);
    breaks
}

/// Adaptive Gauss–Kronrod estimate of `∫_lo^hi f`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<Integral> {
    integrate_adaptive_with_points(f, lo, hi, &[], spec)
}

/// As [`integrate_adaptive`], with extra breakpoints where the integrand changes character.
pub fn integrate_adaptive_with_points<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral> {
    spec.validate()?;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { lo, hi });
    }
    adaptive_core(&f, &sorted_breaks(lo, hi, points), spec)
}

/// `∫_lo^∞ f` via `x = lo + t/(1-t)` and adaptive quadrature on `t ∈ [0, 1)`.
///
/// `points` are breakpoints in the original variable.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral> {
    spec.validate()?;
    if !lo.is_finite() {
        return Err(Error::InvalidInterval { lo, hi: f64::INFINITY });
    }
    let mapped: Vec<f64> = points
        .iter()
        .filter(|p| p.is_finite() && **p > lo)
        .map(|p| {
            let d = p - lo;
            d / (1.0 + d)
        })
        .collect();
    let g = |t: f64| {
        let one_minus = 1.0 - t;
        let x = lo + t / one_minus;
        let v = f(x) / (one_minus * one_minus);
        // The far tail maps onto a neighbourhood of t = 1 where x overflows.
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    adaptive_core(&g, &sorted_breaks(0.0, 1.0, &mapped), spec)
}

/// `∫_0^∞ e^{-k} f(k) dk` by Gauss–Laguerre with order doubling.
///
/// Starts at `spec.order` (rounded up to a power of two) and doubles until two successive
/// orders agree to the tolerance, up to order [`MAX_LAGUERRE_ORDER`].
pub fn integrate_exponential_weight<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    integrate_exponential_weight_detailed(f, spec).map(|i| i.value)
}

/// As [`integrate_exponential_weight`]; `subdivisions` reports the accepted order.
pub fn integrate_exponential_weight_detailed<F: Fn(f64) -> f64>(
    f: F,
    spec: &QuadratureSpec,
) -> Result<Integral> {
    spec.validate()?;
    let mut order = spec.order.next_power_of_two().clamp(2, MAX_LAGUERRE_ORDER);
    let mut previous = gauss_laguerre(order).integrate(&f);
    while order < MAX_LAGUERRE_ORDER {
        order *= 2;
        let current = gauss_laguerre(order).integrate(&f);
        if !current.is_finite() {
            return Err(Error::NonFinite("Gauss-Laguerre quadrature"));
        }
        let diff = (current - previous).abs();
        if spec.accepts(current, diff) {
            return Ok(Integral {
                value: current,
                error: diff,
                subdivisions: order,
            });
        }
        previous = current;
    }
    Err(Error::ToleranceNotMet {
        estimate: previous,
        error_bound: f64::NAN,
    })
}

/// `∫_0^∞ e^{-k} f(k) dk` for integrands with structure on the scale `k ~ scale`.
///
/// Gauss–Laguerre is tried first when the scale is large compared with the spacing of its
/// low nodes; otherwise (or when it fails to settle) the integral is done adaptively on the
/// mapped half-line with breakpoints at `scale` and `1`.
pub fn integrate_laplace<F: Fn(f64) -> f64>(f: F, scale: f64, spec: &QuadratureSpec) -> Result<f64> {
    if scale >= LAGUERRE_SCALE_THRESHOLD {
        let laguerre = QuadratureSpec {
            kind: QuadratureKind::ExponentialWeight,
            order: spec.order.max(8),
            ..*spec
        };
        if let Ok(value) = integrate_exponential_weight(&f, &laguerre) {
            return Ok(value);
        }
    }
    let adaptive = QuadratureSpec {
        kind: QuadratureKind::SemiInfiniteTransformed,
        order: 2,
        ..*spec
    };
    integrate_semi_infinite(|k| (-k).exp() * f(k), 0.0, &[scale, 1.0, 10.0], &adaptive).map(|i| i.value)
}

/// Below this structure scale Gauss–Laguerre order doubling is not attempted.
pub const LAGUERRE_SCALE_THRESHOLD: f64 = 20.0;

/// Dispatch on `spec.kind`: finite adaptive on `[lo, hi]`, transformed adaptive on `[lo, ∞)`
/// (`hi` ignored), or the exponential-weight rule on `(0, ∞)` (both bounds ignored, `f` is the
/// factor multiplying `e^{-k}`).
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    match spec.kind {
        QuadratureKind::AdaptiveFinite => integrate_adaptive(f, lo, hi, spec).map(|i| i.value),
        QuadratureKind::SemiInfiniteTransformed => {
            integrate_semi_infinite(f, lo, &[], spec).map(|i| i.value)
        }
        QuadratureKind::ExponentialWeight => integrate_exponential_weight(f, spec),
    }
}
