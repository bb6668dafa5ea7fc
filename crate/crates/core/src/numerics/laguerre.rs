//! Gauss–Laguerre rules for the weight `e^{-k}` on `(0, ∞)`.
//!
//! Nodes come from the eigenvalues of the Jacobi matrix (Golub–Welsch) and are then polished
//! by Newton steps on `L_n`. Weights are the Christoffel numbers `1 / Σ_{k<n} L_k(x_i)²`,
//! accumulated with running rescaling because `L_k` overflows at the largest nodes.

use std::sync::OnceLock;

use nalgebra::DMatrix;

pub const MAX_LAGUERRE_ORDER: usize = 256;

const CACHED_EXPONENTS: usize = 8; // 2^1 ..= 2^8

#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerre {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| **w > 0.0)
            .map(|(x, w)| w * f(*x))
            .sum()
    }
}

/// Returns `(L_n(x), L_{n-1}(x), ln_scale)` with the true values equal to the returned ones
/// times `exp(ln_scale)`.
fn laguerre_scaled(n: usize, x: f64) -> (f64, f64, f64) {
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    let mut ln_scale = 0.0;
    if n == 0 {
        return (1.0, 0.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > 1e150 {
            cur /= m;
            prev /= m;
            ln_scale += m.ln();
        }
    }
    (cur, prev, ln_scale)
}

/// `ln Σ_{k<n} L_k(x)²`.
fn ln_christoffel_sum(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    let mut sum = 1.0 + if n > 1 { cur * cur } else { 0.0 };
    let mut ln_scale = 0.0;
    for k in 1..n.saturating_sub(1) {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        sum += cur * cur;
        let m = cur.abs().max(prev.abs());
        if m > 1e100 {
            cur /= m;
            prev /= m;
            sum /= m * m;
            ln_scale += 2.0 * m.ln();
        }
    }
    sum.ln() + ln_scale
}

fn build(n: usize) -> GaussLaguerre {
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        jacobi[(i, i)] = 2.0 * i as f64 + 1.0;
        if i + 1 < n {
            let b = (i + 1) as f64;
            jacobi[(i, i + 1)] = b;
            jacobi[(i + 1, i)] = b;
        }
    }
    let mut nodes: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    nodes.sort_by(f64::total_cmp);

    let nf = n as f64;
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (ln, lnm1, _) = laguerre_scaled(n, *x);
            let denom = nf * (ln - lnm1);
            if denom == 0.0 {
                break;
            }
            let step = *x * ln / denom;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs() {
                break;
            }
        }
        weights.push((-ln_christoffel_sum(n, *x)).exp());
    }
    GaussLaguerre { nodes, weights }
}

static CACHE: [OnceLock<GaussLaguerre>; CACHED_EXPONENTS] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

/// Rule of order `n` (rounded up to a power of two in `2..=256`), built once and shared.
pub fn gauss_laguerre(n: usize) -> &'static GaussLaguerre {
    let n = n.next_power_of_two().clamp(2, MAX_LAGUERRE_ORDER);
    let exponent = n.trailing_zeros() as usize;
    CACHE[exponent - 1].get_or_init(|| build(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule_closed_form() {
        let rule = gauss_laguerre(2);
        let s = 2f64.sqrt();
        assert!((rule.nodes[0] - (2.0 - s)).abs() < 1e-14);
        assert!((rule.nodes[1] - (2.0 + s)).abs() < 1e-14);
        assert!((rule.weights[0] - (2.0 + s) / 4.0).abs() < 1e-14);
        assert!((rule.weights[1] - (2.0 - s) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_to_one() {
        for n in [4, 16, 64, 256] {
            let rule = gauss_laguerre(n);
            assert_eq!(rule.order(), n);
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 1.0).abs() < 1e-12, "n = {n}: {sum}");
        }
    }

    #[test]
    fn moments_are_factorials() {
        let rule = gauss_laguerre(16);
        let mut factorial = 1.0;
        for p in 0..=12 {
            if p > 0 {
                factorial *= p as f64;
            }
            let v = rule.integrate(|x| x.powi(p));
            assert!(((v - factorial) / factorial).abs() < 1e-12, "p = {p}");
        }
    }
}
