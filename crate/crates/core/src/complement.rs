//! FFT construction of the canonical complementary polynomial: given `P` with
//! `|P| <= 1` on the unit circle, find `Q` of the same degree, without roots in
//! the open unit disk, such that `|P|² + |Q|² = 1` on the circle.
//!
//! The pipeline takes `log(1 - |P|²)` on `N` roots of unity, keeps the analytic
//! half of its spectrum (positive modes, half the mean), exponentiates back on
//! the grid and truncates the resulting coefficients to degree `d`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dft::{self, SpectrumModes};
use crate::error::{Error, Result};
use crate::metrics::loss_tilde;
use crate::poly::{ComplexPoly, UnitGridSamples};

/// Largest FFT grid the downscaled variant will attempt.
pub const MAX_GRID: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ZeroHandling {
    /// Fail on the first grid point with `1 - |P|² <= 0`.
    Strict,
    /// Replace nonpositive gaps by `clamp_floor` and count them.
    #[default]
    Clamp,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementOptions {
    pub n_points: usize,
    pub zero_handling: ZeroHandling,
    pub clamp_floor: f64,
}

impl ComplementOptions {
    pub fn new(n_points: usize) -> Self {
        Self {
            n_points,
            zero_handling: ZeroHandling::Clamp,
            clamp_floor: 1e-300,
        }
    }

    pub fn strict(n_points: usize) -> Self {
        Self {
            zero_handling: ZeroHandling::Strict,
            ..Self::new(n_points)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplementResult {
    pub q: ComplexPoly,
    pub n_used: usize,
    /// Minimum of `1 - |P|²` over the grid, before any clamping.
    pub grid_min_gap: f64,
    /// Loss of `(P, q)`, against the caller's original `P`.
    pub loss: f64,
    pub clamped_points: usize,
}

/// `log(1 - |P|²)` on the grid together with clamp bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct LogGap {
    pub samples: UnitGridSamples,
    pub min_gap: f64,
    pub clamped_points: usize,
}

pub fn log_gap_on_grid(p: &ComplexPoly, opts: &ComplementOptions) -> Result<LogGap> {
    if !(opts.clamp_floor > 0.0) {
        return Err(Error::domain("clamp_floor", opts.clamp_floor, "clamp_floor > 0"));
    }
    let values = p.eval_roots_of_unity(opts.n_points)?.into_values();
    let mut min_gap = f64::INFINITY;
    let mut clamped_points = 0;
    let mut out = Vec::with_capacity(values.len());
    for (m, v) in values.iter().enumerate() {
        let gap = 1.0 - v.norm_sqr();
        min_gap = min_gap.min(gap);
        let gap = if gap > 0.0 {
            gap
        } else {
            match opts.zero_handling {
                ZeroHandling::Strict => return Err(Error::GapViolated { index: m, value: gap }),
                ZeroHandling::Clamp => {
                    clamped_points += 1;
                    opts.clamp_floor
                }
            }
        };
        out.push(Complex64::new(gap.ln(), 0.0));
    }
    Ok(LogGap {
        samples: UnitGridSamples::new(out),
        min_gap,
        clamped_points,
    })
}

/// Halves mode 0, keeps modes `1..=⌊N/2⌋`, zeroes the negative ones.
pub fn apply_pi_multiplier(modes: &SpectrumModes) -> SpectrumModes {
    let mut out = modes.clone();
    let n = out.n_points();
    let slice = out.as_mut_slice();
    slice[0] *= 0.5;
    for v in &mut slice[n / 2 + 1..] {
        *v = Complex64::default();
    }
    out
}

/// Runs the pipeline and rotates the result so `q_0` is real and positive.
/// Returns `(q, min_gap, clamped_points)`.
fn pipeline(p: &ComplexPoly, opts: &ComplementOptions) -> Result<(ComplexPoly, f64, usize)> {
    let gap = log_gap_on_grid(p, opts)?;
    let half = apply_pi_multiplier(&dft::forward(&gap.samples));
    let mut buf = half.into_storage();
    dft::inverse_in_place(&mut buf);
    for v in &mut buf {
        *v = v.exp();
    }
    dft::forward_in_place(&mut buf);
    buf.truncate(p.degree() + 1);
    let q0 = buf[0];
    if q0.norm() > 0.0 {
        let phase = q0.conj() / q0.norm();
        for v in &mut buf {
            *v *= phase;
        }
        buf[0] = Complex64::new(buf[0].norm(), 0.0);
    }
    Ok((ComplexPoly::with_degree(buf), gap.min_gap, gap.clamped_points))
}

/// Complementary polynomial on a fixed grid of `opts.n_points` roots of unity.
///
/// Accurate when `|P| <= 1 - δ` on the circle for some `δ > 0`; the grid size
/// needed for a given accuracy is bounded by [`required_n`].
pub fn complementary_known_delta(p: &ComplexPoly, opts: &ComplementOptions) -> Result<ComplementResult> {
    let (q, grid_min_gap, clamped_points) = pipeline(p, opts)?;
    let loss = loss_tilde(p, &q)?;
    Ok(ComplementResult {
        q,
        n_used: opts.n_points,
        grid_min_gap,
        loss,
        clamped_points,
    })
}

/// Complementary polynomial with sup-norm error `Φ(P, Q) < eps`, valid even
/// when `|P|` touches 1 on the circle.
///
/// `P` is shrunk by `1 - eps/4` to open a gap and the grid size comes from
/// [`required_n`] with accuracy `eps/(5(d+1))` and gap `eps/4`.
pub fn complementary_downscaled(p: &ComplexPoly, eps: f64) -> Result<ComplementResult> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::domain("eps", eps, "0 < eps < 1"));
    }
    let d = p.degree();
    let shrunk = p.scale(Complex64::new(1.0 - eps / 4.0, 0.0));
    let n = if d == 0 {
        1
    } else {
        required_n(eps / (5.0 * (d as f64 + 1.0)), eps / 4.0, d)?
    };
    if n > MAX_GRID {
        return Err(Error::GridTooLarge {
            n_points: n,
            limit: MAX_GRID,
        });
    }
    let opts = ComplementOptions::new(n as usize);
    let (q, grid_min_gap, clamped_points) = pipeline(&shrunk, &opts)?;
    let loss = loss_tilde(p, &q)?;
    Ok(ComplementResult {
        q,
        n_used: opts.n_points,
        grid_min_gap,
        loss,
        clamped_points,
    })
}

/// Grid size `⌈(2/log r) log(8 log(1/δ) / ((r - 1) ε))⌉` with
/// `r = (1 - δ)^{-1/d}`, guaranteeing coefficient error below `eps` when
/// `|P| <= 1 - delta`. Never less than 1.
pub fn required_n(eps: f64, delta: f64, d: usize) -> Result<u64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::domain("eps", eps, "0 < eps < 1"));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain("delta", delta, "0 < delta < 1"));
    }
    if d == 0 {
        return Err(Error::domain("d", 0.0, "d >= 1"));
    }
    let log_r = -(-delta).ln_1p() / d as f64;
    let r_minus_1 = log_r.exp_m1();
    let inner = 8.0 * (1.0 / delta).ln() / r_minus_1 / eps;
    let n0 = (2.0 / log_r * inner.ln()).ceil();
    if !n0.is_finite() || n0 >= u64::MAX as f64 {
        return Err(Error::GridTooLarge {
            n_points: u64::MAX,
            limit: MAX_GRID,
        });
    }
    Ok(n0.max(1.0) as u64)
}

/// Doubles `N` from the first power of two at or above `2(d+1)` until the
/// loss reaches `target_loss`.
///
/// Returns the smallest tried `N` meeting the target; otherwise reports the
/// best loss seen once `N` would exceed `max_n`.
pub fn auto_n(p: &ComplexPoly, target_loss: f64, max_n: usize) -> Result<ComplementResult> {
    if !(target_loss > 0.0) {
        return Err(Error::domain("target_loss", target_loss, "target_loss > 0"));
    }
    let d = p.degree();
    if max_n < d + 1 {
        return Err(Error::InsufficientGrid {
            degree: d,
            n_points: max_n,
        });
    }
    let mut n = (2 * (d + 1)).next_power_of_two().min(max_n);
    let mut best: Option<ComplementResult> = None;
    loop {
        let result = complementary_known_delta(p, &ComplementOptions::new(n))?;
        if result.loss <= target_loss {
            return Ok(result);
        }
        if best.as_ref().is_none_or(|b| result.loss < b.loss) {
            best = Some(result);
        }
        if n >= max_n || n > max_n / 2 {
            break;
        }
        n *= 2;
    }
    let best = best.expect("at least one grid size was tried");
    Err(Error::TargetNotReached {
        max_n,
        best_n: best.n_used,
        best_loss: best.loss,
    })
}
