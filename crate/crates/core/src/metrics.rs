//! Complementarity error on the circle (sup norm) and the coefficient loss.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{one_minus_abs_sq_laurent, ComplexPoly, DEFAULT_OVERSAMPLE};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    /// Max of `||P|² + |Q|² - 1|` over the evaluation grid.
    pub phi_grid: f64,
    /// `ℓ¹` norm of the Laurent coefficients; bounds the true sup from above.
    pub phi_l1_upper: f64,
    pub loss_tilde: f64,
    pub grid_size: usize,
}

fn check_degrees(p: &ComplexPoly, q: &ComplexPoly) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

/// Grid size for `phi`: next power of two at or above `oversample·(2d+1)`.
pub fn phi_grid_size(degree: usize, oversample: usize) -> usize {
    (oversample.max(1) * (2 * degree + 1)).next_power_of_two()
}

/// `(phi_grid, phi_l1_upper)`.
pub fn phi(p: &ComplexPoly, q: &ComplexPoly, oversample: usize) -> Result<(f64, f64)> {
    check_degrees(p, q)?;
    let n = phi_grid_size(p.degree(), oversample);
    let pv = p.eval_roots_of_unity(n)?;
    let qv = q.eval_roots_of_unity(n)?;
    let grid = pv
        .values()
        .iter()
        .zip(qv.values())
        .map(|(a, b)| (a.norm_sqr() + b.norm_sqr() - 1.0).abs())
        .fold(0.0, f64::max);
    let l1 = one_minus_abs_sq_laurent(p, Some(q))?
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .sum();
    Ok((grid, l1))
}

/// `ℓ²` norm of the `2d + 1` Laurent coefficients of `|P|² + |Q|² - 1`.
pub fn loss_tilde(p: &ComplexPoly, q: &ComplexPoly) -> Result<f64> {
    check_degrees(p, q)?;
    Ok(one_minus_abs_sq_laurent(p, Some(q))?
        .coeffs()
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt())
}

pub fn metric_report(p: &ComplexPoly, q: &ComplexPoly, oversample: usize) -> Result<MetricReport> {
    let (phi_grid, phi_l1_upper) = phi(p, q, oversample)?;
    Ok(MetricReport {
        phi_grid,
        phi_l1_upper,
        loss_tilde: loss_tilde(p, q)?,
        grid_size: phi_grid_size(p.degree(), oversample),
    })
}

/// `Φ_grid/√(2d+1) <= Φ̃ <= √(2d+1)·Φ_l1`, each side with slack `1e-10`.
pub fn check_norm_equivalence(p: &ComplexPoly, q: &ComplexPoly) -> Result<bool> {
    let slack = 1e-10;
    let (grid, l1) = phi(p, q, DEFAULT_OVERSAMPLE)?;
    let loss = loss_tilde(p, q)?;
    let root = ((2 * p.degree() + 1) as f64).sqrt();
    Ok(grid / root <= loss + slack && loss <= root * l1 + slack)
}
