//! Bessel sequences and the principal Lambert W branch.

use std::f64::consts::E;

const RESCALE_ABOVE: f64 = 1e100;
const RESCALE_BY: f64 = 1e-100;

/// `J_0(τ), ..., J_M(τ)` by Miller's backward recurrence, normalized with
/// `J_0 + 2 Σ J_{2k} = 1`.
pub fn bessel_j_sequence(tau: f64, m: usize) -> Vec<f64> {
    if tau == 0.0 {
        let mut out = vec![0.0; m + 1];
        out[0] = 1.0;
        return out;
    }
    let x = tau.abs();
    let top = (m as f64).max(x);
    let mut start = (top + 20.0 + (160.0 * top.max(1.0)).sqrt()).ceil() as usize;
    start += start % 2;

    let mut vals = vec![0.0; start + 1];
    let (mut next, mut cur) = (0.0f64, 1e-30f64);
    vals[start] = cur;
    for n in (1..=start).rev() {
        let prev = 2.0 * n as f64 / x * cur - next;
        next = cur;
        cur = prev;
        vals[n - 1] = cur;
        if cur.abs() > RESCALE_ABOVE {
            next *= RESCALE_BY;
            cur *= RESCALE_BY;
            for v in &mut vals[n - 1..] {
                *v *= RESCALE_BY;
            }
        }
    }
    let norm = vals[0] + 2.0 * vals.iter().skip(2).step_by(2).sum::<f64>();
    vals.truncate(m + 1);
    vals.resize(m + 1, 0.0);
    let flip = tau < 0.0;
    for (n, v) in vals.iter_mut().enumerate() {
        *v /= norm;
        if flip && n % 2 == 1 {
            *v = -*v;
        }
    }
    vals
}

/// `e^{-β} I_0(β), ..., e^{-β} I_M(β)` for `β > 0`.
///
/// Backward recurrence normalized by `e^{-β}(I_0 + 2 Σ I_n) = 1`, so neither
/// `e^β` nor `I_n(β)` is ever formed.
pub fn scaled_bessel_i_sequence(beta: f64, m: usize) -> Vec<f64> {
    assert!(beta > 0.0, "beta must be positive");
    let start = ((m as f64).powi(2) + 200.0 * beta).sqrt().ceil() as usize + 50;

    let mut vals = vec![0.0; start + 1];
    let (mut next, mut cur) = (0.0f64, 1e-30f64);
    vals[start] = cur;
    for n in (1..=start).rev() {
        let prev = 2.0 * n as f64 / beta * cur + next;
        next = cur;
        cur = prev;
        vals[n - 1] = cur;
        if cur > RESCALE_ABOVE {
            next *= RESCALE_BY;
            cur *= RESCALE_BY;
            for v in &mut vals[n - 1..] {
                *v *= RESCALE_BY;
            }
        }
    }
    // Summed from the small end for accuracy.
    let tail: f64 = vals[1..].iter().rev().sum();
    let norm = vals[0] + 2.0 * tail;
    vals.truncate(m + 1);
    for v in &mut vals {
        *v /= norm;
    }
    vals
}

/// Principal branch `W_0(x)` for `x >= -1/e`; `NaN` below the branch point.
pub fn lambert_w0(x: f64) -> f64 {
    let branch = -1.0 / E;
    if x.is_nan() || x < branch {
        return f64::NAN;
    }
    if x == 0.0 {
        return 0.0;
    }
    if x == f64::INFINITY {
        return f64::INFINITY;
    }
    let p2 = 2.0 * (E * x + 1.0);
    if p2 <= 0.0 {
        return -1.0;
    }
    let mut w = if x < -0.25 {
        let p = p2.sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        let l = x.ln_1p();
        l * (1.0 - l.ln_1p() / (2.0 + l))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    w
}
