//! Test-polynomial families: random, Hamiltonian simulation (Jacobi-Anger),
//! eigenvalue filtering and the signum approximation.

mod chebyshev;
mod special;

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

pub use chebyshev::{ChebSeries, Parity};
pub use special::{bessel_j_sequence, lambert_w0, scaled_bessel_i_sequence};

use crate::error::{Error, Result};
use crate::poly::{sup_norm_refined, ComplexPoly};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub degree: usize,
    pub delta: f64,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(degree: usize, delta: f64, seed: u64) -> Result<Self> {
        if !(0.0..1.0).contains(&delta) {
            return Err(Error::domain("delta", delta, "0 <= delta < 1"));
        }
        Ok(Self {
            degree,
            delta,
            seed,
        })
    }
}

/// Standard normal real and imaginary parts, rescaled so that the supremum
/// of `|P|` on the circle is `1 - delta`.
///
/// The supremum is the refined one from [`sup_norm_refined`], so the 16x grid
/// norm never exceeds `1 - delta` either.
pub fn random_poly(spec: &RandomSpec) -> ComplexPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let coeffs: Vec<Complex64> = (0..=spec.degree)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    let raw = ComplexPoly::with_degree(coeffs);
    let sup = sup_norm_refined(&raw);
    raw.scale(Complex64::new((1.0 - spec.delta) / sup, 0.0))
}

/// Truncation order `⌈eτ/2 + ln(1/ε)⌉` of the Jacobi-Anger series.
pub fn jacobi_anger_order(tau: f64, eps: f64) -> usize {
    (0.5 * E * tau.abs() + (1.0 / eps).ln()).ceil().max(0.0) as usize
}

/// Chebyshev approximation of `e^{-iτx}` with error below `eps`, divided by
/// `1 + eps` so it stays below 1 in modulus on `[-1, 1]`.
pub fn jacobi_anger(tau: f64, eps: f64) -> Result<ChebSeries> {
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(Error::domain("tau", tau, "tau >= 0"));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::domain("eps", eps, "0 < eps < 1"));
    }
    let m = jacobi_anger_order(tau, eps);
    let j = bessel_j_sequence(tau, m);
    let neg_i_pow = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
    ];
    let scale = 1.0 / (1.0 + eps);
    let coeffs = j
        .iter()
        .enumerate()
        .map(|(n, &jn)| {
            let weight = if n == 0 { 1.0 } else { 2.0 };
            neg_i_pow[n % 4] * (weight * jn * scale)
        })
        .collect();
    Ok(ChebSeries::mixed(coeffs))
}

/// `T_M((2x² - (1+a²))/(1-a²)) / T_M(-(1+a²)/(1-a²))`, evaluated without
/// forming either Chebyshev value outside `[-1, 1]`.
pub fn eig_filter_value(x: f64, a: f64, m: usize) -> f64 {
    let span = 1.0 - a * a;
    let y = (2.0 * x * x - (1.0 + a * a)) / span;
    let u0 = ((1.0 + a * a) / span).acosh();
    let mf = m as f64;
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let denom_tail = 1.0 + (-2.0 * mf * u0).exp();
    if y.abs() > 1.0 {
        let u = y.abs().acosh();
        let sign = if y < 0.0 { sign_m } else { 1.0 };
        sign * sign_m * (mf * (u - u0)).exp() * (1.0 + (-2.0 * mf * u).exp()) / denom_tail
    } else {
        (mf * y.acos()).cos() * sign_m * 2.0 * (-mf * u0).exp() / denom_tail
    }
}

/// Even degree-`2M` Chebyshev interpolant of the eigenvalue filter at the
/// `2M + 1` first-kind nodes, scaled by `1 - 1e-10`.
pub fn eig_filter(a: f64, m: usize) -> Result<ChebSeries> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain("a", a, "0 < a < 1"));
    }
    let k = 2 * m + 1;
    let angles: Vec<f64> = (0..k)
        .map(|j| (2 * j + 1) as f64 * PI / (2 * k) as f64)
        .collect();
    let samples: Vec<f64> = angles.iter().map(|t| eig_filter_value(t.cos(), a, m)).collect();
    let scale = 1.0 - 1e-10;
    let coeffs = (0..k)
        .map(|n| {
            if n % 2 == 1 {
                return Complex64::default();
            }
            let sum: f64 = samples
                .iter()
                .zip(&angles)
                .map(|(g, t)| g * (n as f64 * t).cos())
                .sum();
            let weight = if n == 0 { 1.0 } else { 2.0 };
            Complex64::new(weight * sum / k as f64 * scale, 0.0)
        })
        .collect();
    ChebSeries::new(coeffs, Parity::Even)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignumParams {
    pub a: f64,
    pub eps: f64,
    pub beta: f64,
    pub m: usize,
}

/// Smallest integer `β` and degree parameter `M` for which the erf-based
/// signum approximation is within `eps` on `[-1, -a] ∪ [a, 1]`.
pub fn signum_params(a: f64, eps: f64) -> Result<SignumParams> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain("a", a, "0 < a < 1"));
    }
    let eps_max = 3.0 / (8.0 * PI * 2f64.ln()).sqrt();
    if !(eps > 0.0 && eps < eps_max) {
        return Err(Error::domain("eps", eps, "0 < eps < 3/sqrt(8 pi ln 2)"));
    }
    let beta = (lambert_w0(18.0 / (PI * eps * eps)) / (4.0 * a * a)).ceil();
    let w72 = lambert_w0(72.0 / (PI * eps * eps));
    let l = (3.0 / (2.0 * PI).sqrt() / (eps * w72.sqrt())).ln();
    let bound = (w72 * (l - beta) / lambert_w0((l / beta - 1.0) / E)).sqrt();
    if !bound.is_finite() {
        return Err(Error::domain("eps", eps, "parameters with a finite degree bound"));
    }
    let m = (bound.ceil() as usize).max(1);
    Ok(SignumParams { a, eps, beta, m })
}

/// Odd degree-`2M + 1` approximation of `sgn(x)`, divided by `1 + 2ε/3`.
pub fn signum_poly(params: &SignumParams) -> ChebSeries {
    let SignumParams { eps, beta, m, .. } = *params;
    let i = scaled_bessel_i_sequence(beta, m);
    let amp = 2.0 * (2.0 * beta / PI).sqrt() / (1.0 + 2.0 * eps / 3.0);
    let mut coeffs = vec![Complex64::default(); 2 * m + 2];
    for k in 0..=m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let next = if k < m { i[k + 1] } else { 0.0 };
        coeffs[2 * k + 1] = Complex64::new(amp * sign * (i[k] + next) / (2 * k + 1) as f64, 0.0);
    }
    ChebSeries::new(coeffs, Parity::Odd).expect("only odd slots are filled")
}
