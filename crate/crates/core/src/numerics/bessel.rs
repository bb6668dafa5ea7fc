//! Spherical Bessel, spherical Hankel and Riccati–Bessel functions of complex argument.
//!
//! `j_l` comes from Miller's downward recurrence normalised against the closed forms of `j_0`
//! or `j_1` (whichever is larger at `z`, so real zeros of `j_0` are harmless). `h_l^{(1)}`
//! comes from the upward recurrence started at its closed forms. The Riccati forms are
//! `ĵ_l = z j_l`, `ĥ_l = z h_l^{(1)}`, with derivatives `ĵ_l' = z j_{l-1} - l j_l` (and the same
//! for `ĥ`), using `j_{-1} = cos z / z` and `h_{-1} = e^{iz} / z`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex numbers carried through the library.
pub type ComplexValue = Complex64;

/// Largest order accepted by the recurrences.
pub const L_MAX: usize = 50;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `(ĵ_l, ĵ_l', ĥ_l, ĥ_l')` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiBessel {
    pub j: Complex64,
    pub dj: Complex64,
    pub h: Complex64,
    pub dh: Complex64,
}

impl RiccatiBessel {
    /// `ĵ ĥ' - ĵ' ĥ`, identically `i`.
    pub fn wronskian(&self) -> Complex64 {
        self.j * self.dh - self.dj * self.h
    }
}

fn check_order(l: usize) -> Result<()> {
    if l > L_MAX {
        Err(Error::OrderTooLarge { l, max: L_MAX })
    } else {
        Ok(())
    }
}

fn j0_exact(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        Complex64::new(1.0, 0.0) - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

fn j1_exact(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        // z/3 - z^3/30 + z^5/840 - ...
        let z2 = z * z;
        let mut term = z / 3.0;
        let mut sum = term;
        for k in 1..12 {
            let kf = k as f64;
            term = -term * z2 / (2.0 * kf * (2.0 * kf + 3.0));
            sum += term;
        }
        sum
    } else {
        (z.sin() - z * z.cos()) / (z * z)
    }
}

/// `j_0 ..= j_lmax` at `z`.
fn bessel_j_sequence(lmax: usize, z: Complex64) -> Vec<Complex64> {
    let top = lmax.max(1);
    let mut out = vec![Complex64::new(0.0, 0.0); top + 1];
    if z == Complex64::new(0.0, 0.0) {
        out[0] = Complex64::new(1.0, 0.0);
        out.truncate(lmax + 1);
        return out;
    }
    let start = top.max(z.norm().ceil() as usize) + 60;
    let mut next = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1.0, 0.0);
    // Downward: j_{n-1} = (2n+1)/z j_n - j_{n+1}; `cur` holds j_n.
    for n in (1..=start).rev() {
        if n <= top {
            out[n] = cur;
        }
        let prev = cur * ((2 * n + 1) as f64) / z - next;
        next = cur;
        cur = prev;
        let m = cur.norm();
        if m > 1e100 {
            cur /= m;
            next /= m;
            for v in out.iter_mut() {
                *v /= m;
            }
        }
    }
    out[0] = cur;
    let j0 = j0_exact(z);
    // Divide by pre-scaled values: `norm_sqr` of the raw recurrence values can overflow.
    let ratio = |exact: Complex64, raw: Complex64| {
        let s = raw.norm();
        (exact / s) / (raw / s)
    };
    let norm = if z.norm() >= 1.0 {
        let j1 = j1_exact(z);
        if j1.norm() > j0.norm() {
            ratio(j1, out[1])
        } else {
            ratio(j0, out[0])
        }
    } else {
        ratio(j0, out[0])
    };
    for v in out.iter_mut() {
        *v *= norm;
    }
    out.truncate(lmax + 1);
    out
}

/// `h^{(1)}_0 ..= h^{(1)}_lmax` at `z ≠ 0`.
fn hankel_sequence(lmax: usize, z: Complex64) -> Vec<Complex64> {
    let e = (I * z).exp();
    let mut out = Vec::with_capacity(lmax + 1);
    let h0 = -I * e / z;
    out.push(h0);
    if lmax == 0 {
        return out;
    }
    let h1 = -e * (z + I) / (z * z);
    out.push(h1);
    for n in 1..lmax {
        let next = out[n] * ((2 * n + 1) as f64) / z - out[n - 1];
        out.push(next);
    }
    out
}

/// Spherical Bessel function of the first kind `j_l(z)`.
pub fn spherical_bessel_j(l: usize, z: ComplexValue) -> Result<ComplexValue> {
    check_order(l)?;
    Ok(bessel_j_sequence(l, z)[l])
}

/// Spherical Hankel function of the first kind `h_l^{(1)}(z)`.
pub fn spherical_hankel1(l: usize, z: ComplexValue) -> Result<ComplexValue> {
    check_order(l)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::HankelAtZero);
    }
    Ok(hankel_sequence(l, z)[l])
}

/// Riccati–Bessel functions `ĵ_l`, `ĥ_l` and their derivatives at `z ≠ 0`.
pub fn riccati_bessel(l: usize, z: ComplexValue) -> Result<RiccatiBessel> {
    check_order(l)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::HankelAtZero);
    }
    let js = bessel_j_sequence(l, z);
    let hs = hankel_sequence(l, z);
    let lf = l as f64;
    let (j_prev, h_prev) = if l == 0 {
        (z.cos() / z, (I * z).exp() / z)
    } else {
        (js[l - 1], hs[l - 1])
    };
    Ok(RiccatiBessel {
        j: z * js[l],
        dj: z * j_prev - lf * js[l],
        h: z * hs[l],
        dh: z * h_prev - lf * hs[l],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn j0_vanishes_at_pi() {
        let v = spherical_bessel_j(0, c(PI, 0.0)).unwrap();
        assert!(v.norm() < 1e-16);
    }

    #[test]
    fn h0_closed_form_at_one() {
        let v = spherical_hankel1(0, c(1.0, 0.0)).unwrap();
        let expected = -I * c(0.0, 1.0).exp();
        assert!((v - expected).norm() < 1e-15);
    }

    #[test]
    fn j_at_origin() {
        assert_eq!(spherical_bessel_j(0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert_eq!(spherical_bessel_j(3, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn hankel_rejects_origin() {
        assert_eq!(spherical_hankel1(2, c(0.0, 0.0)), Err(Error::HankelAtZero));
        assert!(matches!(riccati_bessel(2, c(0.0, 0.0)), Err(Error::HankelAtZero)));
    }

    #[test]
    fn order_limit() {
        assert!(matches!(
            spherical_bessel_j(L_MAX + 1, c(1.0, 0.0)),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(spherical_bessel_j(L_MAX, c(1.0, 0.0)).is_ok());
    }

    #[test]
    fn wronskian_l3() {
        let rb = riccati_bessel(3, c(2.7, 0.0)).unwrap();
        assert!((rb.wronskian() - I).norm() < 1e-12);
    }

    #[test]
    fn j1_near_zero_of_j0() {
        // At z = pi the normalisation must come from j_1 = 1/pi.
        let v = spherical_bessel_j(1, c(PI, 0.0)).unwrap();
        assert!((v - c(1.0 / PI, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn small_arguments_all_orders() {
        // Miller values near 1e175 once overflowed the normalising division.
        for z in [0.01, 0.1, 0.15, 0.2] {
            for l in 0..=8 {
                let v = spherical_bessel_j(l, c(z, 0.0)).unwrap();
                let double_factorial: f64 = (1..=2 * l + 1).step_by(2).map(|k| k as f64).product();
                let leading = z.powi(l as i32) / double_factorial;
                assert!(((v.re - leading) / leading).abs() < 0.01, "z = {z}, l = {l}: {v}");
            }
        }
    }

    #[test]
    fn small_argument_high_order() {
        // j_l(z) ~ z^l / (2l+1)!!
        let z = 1e-3;
        let v = spherical_bessel_j(5, c(z, 0.0)).unwrap();
        let double_factorial: f64 = (1..=11).step_by(2).map(|k| k as f64).product();
        let leading = z.powi(5) / double_factorial;
        assert!(((v.re - leading) / leading).abs() < 1e-6);
    }
}
