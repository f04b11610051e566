//! Coefficient re-indexings between Chebyshev series, Laurent polynomials of
//! definite parity and polynomials on the circle, plus the single-qubit
//! product that realizes `(P, Q)` as the top row of a unitary.

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dft;
use crate::error::{Error, Result};
use crate::families::{ChebSeries, Parity};
use crate::poly::{root_of_unity, ComplexPoly, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleMode {
    /// `P(z) = z^M f((z + 1/z)/2)`, degree `2M`.
    Full,
    /// `P(z) = z^{d/2} f((√z + 1/√z)/2)`, degree `d`; needs definite parity.
    Parity,
}

pub fn cheb_to_circle(f: &ChebSeries, mode: CircleMode) -> Result<ComplexPoly> {
    let m = f.degree();
    let coeffs = f.coeffs();
    match mode {
        CircleMode::Full => {
            let mut p = vec![Complex64::default(); 2 * m + 1];
            p[m] += coeffs[0];
            for (n, &c) in coeffs.iter().enumerate().skip(1) {
                p[m + n] += c * 0.5;
                p[m - n] += c * 0.5;
            }
            Ok(ComplexPoly::with_degree(p))
        }
        CircleMode::Parity => {
            let expected = match f.parity() {
                Parity::Even => 0,
                Parity::Odd => 1,
                Parity::Mixed => {
                    return Err(Error::Parity(
                        "parity mode needs an even or odd Chebyshev series".into(),
                    ))
                }
            };
            if m % 2 != expected {
                return Err(Error::Parity(format!(
                    "degree {m} does not match {:?} parity",
                    f.parity()
                )));
            }
            let mut p = vec![Complex64::default(); m + 1];
            for (n, &c) in coeffs.iter().enumerate() {
                if n % 2 != expected {
                    continue;
                }
                if n == 0 {
                    p[m / 2] += c;
                } else {
                    p[(m + n) / 2] += c * 0.5;
                    p[(m - n) / 2] += c * 0.5;
                }
            }
            Ok(ComplexPoly::with_degree(p))
        }
    }
}

/// `G` with `iG(z) = z^{-d} Q(z²)`: `G_{2n-d} = -i q_n`.
pub fn circle_to_laurent_complement(q: &ComplexPoly, d: usize) -> Result<LaurentPoly> {
    if q.degree() != d {
        return Err(Error::DegreeMismatch {
            left: d,
            right: q.degree(),
        });
    }
    let minus_i = Complex64::new(0.0, -1.0);
    let coeffs = spread(q.coeffs().iter().map(|&c| minus_i * c));
    Ok(LaurentPoly::new(-(d as i64), coeffs))
}

/// `F(z) = z^{-d} P(z²)`: `F_{2n-d} = p_n`. Inverse of [`laurent_to_circle`].
pub fn circle_to_laurent(p: &ComplexPoly) -> LaurentPoly {
    LaurentPoly::new(-(p.degree() as i64), spread(p.coeffs().iter().copied()))
}

/// Interleaves zeros: `c_0, 0, c_1, 0, ..., c_d`.
fn spread(coeffs: impl Iterator<Item = Complex64>) -> Vec<Complex64> {
    let mut out = Vec::new();
    for c in coeffs {
        if !out.is_empty() {
            out.push(Complex64::default());
        }
        out.push(c);
    }
    out
}

/// `P(z) = z^{d/2} F(√z)` with `d` the largest exponent modulus of `F`:
/// `p_{(d+n)/2} = F_n`.
pub fn laurent_to_circle(f: &LaurentPoly) -> Result<ComplexPoly> {
    let d = f.min_exp().abs().max(f.max_exp().abs());
    let mut p = vec![Complex64::default(); d as usize + 1];
    for (n, c) in f.iter() {
        if c == Complex64::default() {
            continue;
        }
        if (n - d).rem_euclid(2) != 0 {
            return Err(Error::Parity(format!(
                "exponent {n} has the wrong parity for degree {d}"
            )));
        }
        p[((d + n) / 2) as usize] = c;
    }
    Ok(ComplexPoly::with_degree(p))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GqspPhases {
    pub lambda: f64,
    pub phi: Vec<f64>,
    pub theta: Vec<f64>,
}

impl GqspPhases {
    pub fn new(lambda: f64, phi: Vec<f64>, theta: Vec<f64>) -> Result<Self> {
        if phi.is_empty() || phi.len() != theta.len() {
            return Err(Error::DegreeMismatch {
                left: phi.len(),
                right: theta.len(),
            });
        }
        Ok(Self { lambda, phi, theta })
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

fn product_unchecked(phases: &GqspPhases, z: Complex64) -> Matrix2<Complex64> {
    let cis = |a: f64| Complex64::from_polar(1.0, a);
    let re = |a: f64| Complex64::new(a, 0.0);
    let (c0, s0) = (phases.theta[0].cos(), phases.theta[0].sin());
    let mut acc = Matrix2::new(
        cis(phases.lambda + phases.phi[0]) * c0,
        cis(phases.lambda) * s0,
        cis(phases.phi[0]) * s0,
        re(-c0),
    );
    for (&phi, &theta) in phases.phi.iter().zip(&phases.theta).skip(1) {
        let (c, s) = (theta.cos(), theta.sin());
        let e = cis(phi);
        // diag(z, 1) times the rotation.
        let factor = Matrix2::new(z * e * c, z * s, e * s, re(-c));
        acc *= factor;
    }
    acc
}

/// The product matrix at `z` on the unit circle.
pub fn evaluate_gqsp_product(phases: &GqspPhases, z: Complex64) -> Result<Matrix2<Complex64>> {
    if (z.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::OffUnitCircle { modulus: z.norm() });
    }
    Ok(product_unchecked(phases, z))
}

/// `(P, Q)` read off the top row, via `d + 1` evaluations and one transform.
pub fn gqsp_polynomials(phases: &GqspPhases) -> (ComplexPoly, ComplexPoly) {
    let n = phases.degree() + 1;
    let (mut p, mut q): (Vec<_>, Vec<_>) = (0..n)
        .map(|m| {
            let u = product_unchecked(phases, root_of_unity(m, n));
            (u[(0, 0)], u[(0, 1)])
        })
        .unzip();
    dft::forward_in_place(&mut p);
    dft::forward_in_place(&mut q);
    (ComplexPoly::with_degree(p), ComplexPoly::with_degree(q))
}

/// `(-1)^d z^d e^{i(λ + Σφ_j)}`, the phase in the bottom row.
pub fn gqsp_u(phases: &GqspPhases, z: Complex64) -> Complex64 {
    let d = phases.degree();
    let sign = if d.is_multiple_of(2) { 1.0 } else { -1.0 };
    let total: f64 = phases.lambda + phases.phi.iter().sum::<f64>();
    z.powi(d as i32) * Complex64::from_polar(sign, total)
}
