//! Discrete Fourier transforms with the normalization used throughout the
//! crate: the forward transform carries the `1/N` factor,
//!
//! ```text
//! modes(n) = (1/N) Σ_m x[m] ω^{-nm},      x[m] = Σ_n modes(n) ω^{nm},
//! ```
//!
//! with `ω = e^{2πi/N}`. Mode vectors are stored in FFT order; storage index
//! `k` holds signed frequency `k` for `k <= N/2` and `k - N` otherwise.
//!
//! Plans are cached per thread, so every function here is reentrant.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::poly::UnitGridSamples;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Length-`N` vector of Fourier modes indexed by signed frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumModes {
    modes: Vec<Complex64>,
}

impl SpectrumModes {
    /// Wraps a vector already laid out in FFT storage order.
    ///
    /// # Panics
    /// If `modes` is empty.
    pub fn from_storage(modes: Vec<Complex64>) -> Self {
        assert!(!modes.is_empty(), "a spectrum needs at least one mode");
        Self { modes }
    }

    pub fn zeros(n_points: usize) -> Self {
        Self::from_storage(vec![Complex64::new(0.0, 0.0); n_points])
    }

    pub fn n_points(&self) -> usize {
        self.modes.len()
    }

    /// Signed frequency held at storage index `k`.
    pub fn frequency(&self, k: usize) -> i64 {
        frequency_of(k, self.modes.len())
    }

    /// Storage index of signed frequency `n`, if representable.
    pub fn storage_index(&self, n: i64) -> Option<usize> {
        let len = self.modes.len() as i64;
        let (lo, hi) = (-((len + 1) / 2) + 1, len / 2);
        if n < lo || n > hi {
            return None;
        }
        Some(if n >= 0 { n as usize } else { (n + len) as usize })
    }

    /// Mode at signed frequency `n`; zero if `n` is outside the band.
    pub fn get(&self, n: i64) -> Complex64 {
        self.storage_index(n)
            .map(|k| self.modes[k])
            .unwrap_or_default()
    }

    /// # Panics
    /// If `n` is outside the representable band.
    pub fn set(&mut self, n: i64, value: Complex64) {
        let k = self
            .storage_index(n)
            .unwrap_or_else(|| panic!("frequency {n} outside band of {}", self.modes.len()));
        self.modes[k] = value;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.modes
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.modes
    }

    pub fn into_storage(self) -> Vec<Complex64> {
        self.modes
    }

    /// `(frequency, mode)` pairs in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let len = self.modes.len();
        self.modes
            .iter()
            .enumerate()
            .map(move |(k, &c)| (frequency_of(k, len), c))
    }
}

fn frequency_of(k: usize, len: usize) -> i64 {
    if k <= len / 2 {
        k as i64
    } else {
        k as i64 - len as i64
    }
}

/// `modes(n) = (1/N) Σ_m x[m] ω^{-nm}`.
pub fn forward(x: &UnitGridSamples) -> SpectrumModes {
    let mut buf = x.values().to_vec();
    forward_in_place(&mut buf);
    SpectrumModes::from_storage(buf)
}

/// `x[m] = Σ_n modes(n) ω^{nm}`, no scaling.
pub fn inverse(modes: &SpectrumModes) -> UnitGridSamples {
    let mut buf = modes.as_slice().to_vec();
    inverse_in_place(&mut buf);
    UnitGridSamples::new(buf)
}

/// Scaled forward transform on a raw buffer.
pub fn forward_in_place(buf: &mut [Complex64]) {
    if buf.is_empty() {
        return;
    }
    let fft = PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()));
    fft.process(buf);
    let scale = 1.0 / buf.len() as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
}

/// Unscaled inverse transform on a raw buffer.
pub fn inverse_in_place(buf: &mut [Complex64]) {
    if buf.is_empty() {
        return;
    }
    let fft = PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(buf.len()));
    fft.process(buf);
}
