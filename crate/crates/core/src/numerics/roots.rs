use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 200;

/// Root of `f` on `[lo, hi]` by Brent's method (bisection-safeguarded inverse quadratic
/// interpolation).
///
/// Stops once `|f(x)| <= tol * max(|f(lo)|, |f(hi)|)` or the bracket has shrunk to machine
/// resolution around `x`.
pub fn find_root_bracketed<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { lo, hi });
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo: fa, f_hi: fb });
    }
    let scale = fa.abs().max(fb.abs());
    let target = tol.abs() * scale;

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITERATIONS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let x_tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * f64::MIN_POSITIVE;
        let m = 0.5 * (c - b);
        if fb.abs() <= target || fb == 0.0 || m.abs() <= x_tol {
            return Ok(b);
        }
        if e.abs() >= x_tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (x_tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > x_tol { d } else { x_tol.copysign(m) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::NonFinite("root finder"));
        }
    }
    Err(Error::IterationLimit {
        iterations: MAX_ITERATIONS,
        x: b,
    })
}

/// Brent's minimiser on `[lo, hi]`; returns `(x_min, f(x_min))`.
pub fn minimize_bracketed<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, x_tol: f64) -> Result<(f64, f64)> {
    if !(lo < hi) {
        return Err(Error::InvalidInterval { lo, hi });
    }
    const GOLD: f64 = 0.381_966_011_250_105_1;
    let (mut a, mut b) = (lo, hi);
    let mut x = a + GOLD * (b - a);
    let (mut w, mut v) = (x, x);
    let mut fx = f(x);
    let (mut fw, mut fv) = (fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    for _ in 0..MAX_ITERATIONS {
        let xm = 0.5 * (a + b);
        let tol1 = x_tol.abs().max(f64::EPSILON.sqrt() * x.abs() * 1e-4) + 1e-300;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            return Ok((x, fx));
        }
        let mut golden = true;
        if e.abs() > tol1 {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let etemp = e;
            e = d;
            if p.abs() < (0.5 * q * etemp).abs() && p > q * (a - x) && p < q * (b - x) {
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLD * e;
        }
        let u = if d.abs() >= tol1 { x + d } else { x + tol1.copysign(d) };
        let fu = f(u);
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }
    Err(Error::IterationLimit {
        iterations: MAX_ITERATIONS,
        x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let x = find_root_bracketed(|x| x - 2.0, 0.0, 5.0, 1e-14).unwrap();
        assert!((x - 2.0).abs() < 1e-14);
    }

    #[test]
    fn sqrt_three() {
        let x = find_root_bracketed(|x| x * x - 3.0, 1.0, 2.0, 1e-15).unwrap();
        assert!((x - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn tm_dispersion_residual() {
        // k0^2 - (Omega/2) sqrt(kpar^2 - k0^2) at Omega = kpar = 1.
        let k0 = find_root_bracketed(|k: f64| k * k - 0.5 * (1.0 - k * k).sqrt(), 0.0, 1.0, 1e-15).unwrap();
        let expected = (17f64.sqrt() - 1.0) / 8.0;
        assert!((k0 * k0 - expected).abs() < 1e-14);
    }

    #[test]
    fn no_sign_change() {
        let err = find_root_bracketed(|x| x * x + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn residual_contract() {
        let f = |x: f64| x.powi(3) - 2.0 * x - 5.0;
        let (lo, hi) = (2.0, 3.0);
        let tol = 1e-12;
        let x = find_root_bracketed(f, lo, hi, tol).unwrap();
        let scale = f(lo).abs().max(f(hi).abs());
        assert!(f(x).abs() <= tol * scale);
        assert!((lo..=hi).contains(&x));
    }

    #[test]
    fn minimise_parabola() {
        let (x, fx) = minimize_bracketed(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 1.0).abs() < 1e-13);
    }
}
