//! Monomial and Laurent polynomials with complex coefficients, plus the
//! evaluation primitives the other modules share.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dft;
use crate::error::{Error, Result};

/// Default oversampling factor for grid estimates of norms on the circle.
pub const DEFAULT_OVERSAMPLE: usize = 16;

/// Polynomial `c_0 + c_1 z + ... + c_d z^d`.
///
/// [`ComplexPoly::new`] trims trailing zero coefficients so the degree is
/// canonical. [`ComplexPoly::with_degree`] keeps a declared length, which is
/// how algorithm outputs report `deg Q = deg P` even when the numerically
/// computed leading coefficient vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| *c == Complex64::default()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::default());
        }
        Self { coeffs }
    }

    /// Keeps every entry; an empty vector becomes the zero constant.
    pub fn with_degree(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::default());
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^n`, zero past the degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }

    /// Values at `ω_N^m`, `m = 0..N`, via one zero-padded inverse transform.
    pub fn eval_roots_of_unity(&self, n_points: usize) -> Result<UnitGridSamples> {
        if n_points < self.coeffs.len() {
            return Err(Error::InsufficientGrid {
                degree: self.degree(),
                n_points,
            });
        }
        let mut buf = vec![Complex64::default(); n_points];
        buf[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        dft::inverse_in_place(&mut buf);
        Ok(UnitGridSamples::new(buf))
    }

    /// `z^d P*(1/z)`: coefficients conjugated and reversed.
    pub fn conj_reciprocal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().map(|c| c.conj()).collect())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::with_degree(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Same polynomial padded with zeros up to degree `degree`.
    pub fn padded_to(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < degree + 1 {
            coeffs.resize(degree + 1, Complex64::default());
        }
        Self::with_degree(coeffs)
    }
}

/// Laurent polynomial `Σ_{k=min_exp}^{max_exp} c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Complex64>,
}

impl LaurentPoly {
    /// Exact zeros at either end are trimmed; all-zero input becomes `{0: 0}`.
    pub fn new(mut min_exp: i64, mut coeffs: Vec<Complex64>) -> Self {
        let zero = Complex64::default();
        while coeffs.last() == Some(&zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| **c == zero).count();
        coeffs.drain(..lead);
        min_exp += lead as i64;
        if coeffs.is_empty() {
            return Self {
                min_exp: 0,
                coeffs: vec![zero],
            };
        }
        Self { min_exp, coeffs }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero outside the stored range.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let idx = k - self.min_exp;
        if idx < 0 {
            return Complex64::default();
        }
        self.coeffs.get(idx as usize).copied().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (self.min_exp + i as i64, c))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c);
        inner * z.powi(self.min_exp as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::default())
    }
}

/// Function values on the `N`th roots of unity; `values[m]` sits at `ω_N^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitGridSamples {
    values: Vec<Complex64>,
}

impl UnitGridSamples {
    pub fn new(values: Vec<Complex64>) -> Self {
        Self { values }
    }

    pub fn n_points(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// `ω_N^m` for this grid.
    pub fn node(&self, m: usize) -> Complex64 {
        root_of_unity(m, self.values.len())
    }
}

/// `e^{2πi m / n}`.
pub fn root_of_unity(m: usize, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (m % n) as f64 / n as f64)
}

/// Laurent coefficients of `|P(z)|^2 + |Q(z)|^2 - 1` on the circle (or of
/// `|P(z)|^2 - 1` without `Q`), exponents `-d..=d`.
///
/// Computed as a linear autocorrelation through a transform of length
/// `next_pow2(2d + 2)`, large enough that the circular product does not wrap.
pub fn one_minus_abs_sq_laurent(p: &ComplexPoly, q: Option<&ComplexPoly>) -> Result<LaurentPoly> {
    let d = p.degree();
    if let Some(q) = q {
        if q.degree() != d {
            return Err(Error::DegreeMismatch {
                left: d,
                right: q.degree(),
            });
        }
    }
    let len = (2 * d + 2).next_power_of_two();
    let mut sq: Vec<Complex64> = p
        .eval_roots_of_unity(len)?
        .values()
        .iter()
        .map(|v| Complex64::new(v.norm_sqr(), 0.0))
        .collect();
    if let Some(q) = q {
        for (s, v) in sq.iter_mut().zip(q.eval_roots_of_unity(len)?.values()) {
            s.re += v.norm_sqr();
        }
    }
    dft::forward_in_place(&mut sq);
    sq[0] -= 1.0;
    let coeffs: Vec<Complex64> = (-(d as i64)..=d as i64)
        .map(|k| sq[k.rem_euclid(len as i64) as usize])
        .collect();
    Ok(LaurentPoly::new(-(d as i64), coeffs))
}

/// Grid size used for sup-norm estimates of a degree-`degree` polynomial.
pub fn sup_norm_grid_size(degree: usize, oversample: usize) -> usize {
    (oversample.max(1) * (degree + 1)).next_power_of_two()
}

/// Max of `|P|` over `next_pow2(oversample·(d+1))` roots of unity.
///
/// A grid estimate, so never larger than the true supremum on the circle.
pub fn sup_norm_on_circle(p: &ComplexPoly, oversample: usize) -> f64 {
    let n = sup_norm_grid_size(p.degree(), oversample);
    p.eval_roots_of_unity(n)
        .expect("grid size covers the degree")
        .values()
        .iter()
        .map(|v| v.norm())
        .fold(0.0, f64::max)
}

/// Supremum of `|P|` on the circle, refined past the grid estimate.
///
/// Starts from the default 16x grid and polishes every grid local maximum
/// that could hide the true peak with a golden-section search over its two
/// neighbouring cells.
pub fn sup_norm_refined(p: &ComplexPoly) -> f64 {
    let d = p.degree();
    if d == 0 {
        return p.coeff(0).norm();
    }
    let n = sup_norm_grid_size(d, DEFAULT_OVERSAMPLE);
    let values: Vec<f64> = p
        .eval_roots_of_unity(n)
        .expect("grid size covers the degree")
        .values()
        .iter()
        .map(|v| v.norm_sqr())
        .collect();
    let grid_max = values.iter().copied().fold(0.0, f64::max);
    let h = 2.0 * PI / n as f64;
    // |f''| <= d^2 ||f|| for a degree-d trig polynomial, so any grid point
    // adjacent to the true maximum lies above this threshold.
    let threshold = grid_max * (1.0 - (d as f64 * h).powi(2) / 2.0);
    let abs_sq_at = |theta: f64| p.eval(Complex64::from_polar(1.0, theta)).norm_sqr();

    let mut best = grid_max;
    for m in 0..n {
        let v = values[m];
        if v < threshold || v < values[(m + n - 1) % n] || v < values[(m + 1) % n] {
            continue;
        }
        let centre = m as f64 * h;
        best = best.max(golden_max(&abs_sq_at, centre - h, centre + h));
    }
    best.sqrt()
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    f1.max(f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = ComplexPoly::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), 0);
        assert_eq!(ComplexPoly::new(vec![]).coeffs(), &[c(0.0, 0.0)]);
        assert_eq!(ComplexPoly::zero().degree(), 0);
        let kept = ComplexPoly::with_degree(vec![c(0.8, 0.0), c(0.0, 0.0)]);
        assert_eq!(kept.degree(), 1);
    }

    #[test]
    fn horner_examples() {
        let z = c(0.3, -2.0);
        assert_eq!(ComplexPoly::from_real(&[1.0]).eval(z), c(1.0, 0.0));
        assert_eq!(ComplexPoly::from_real(&[0.0, 1.0]).eval(c(0.0, 1.0)), c(0.0, 1.0));
        assert_eq!(ComplexPoly::from_real(&[0.5, 0.5]).eval(c(1.0, 0.0)), c(1.0, 0.0));
    }

    #[test]
    fn roots_of_unity_examples() {
        let one = ComplexPoly::from_real(&[1.0]).eval_roots_of_unity(4).unwrap();
        assert_eq!(one.values(), &[c(1.0, 0.0); 4]);

        let ident = ComplexPoly::from_real(&[0.0, 1.0]).eval_roots_of_unity(2).unwrap();
        assert!((ident.values()[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((ident.values()[1] - c(-1.0, 0.0)).norm() < 1e-15);

        // Horner at i^m: ½(1 + i^m).
        let half = ComplexPoly::from_real(&[0.5, 0.5]).eval_roots_of_unity(4).unwrap();
        let expected = [c(1.0, 0.0), c(0.5, 0.5), c(0.0, 0.0), c(0.5, -0.5)];
        for (v, e) in half.values().iter().zip(expected) {
            assert!((v - e).norm() < 1e-15, "{v} vs {e}");
        }
    }

    #[test]
    fn roots_of_unity_rejects_small_grid() {
        let p = ComplexPoly::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(
            p.eval_roots_of_unity(2),
            Err(Error::InsufficientGrid {
                degree: 2,
                n_points: 2
            })
        );
    }

    #[test]
    fn conj_reciprocal_examples() {
        let p = ComplexPoly::new(vec![c(1.0, 0.0), c(0.0, 2.0)]);
        assert_eq!(p.conj_reciprocal().coeffs(), &[c(0.0, -2.0), c(1.0, 0.0)]);
        assert_eq!(ComplexPoly::from_real(&[1.0]).conj_reciprocal().coeffs(), &[c(1.0, 0.0)]);
        let pal = ComplexPoly::from_real(&[0.5, 0.5]);
        assert_eq!(pal.conj_reciprocal(), pal);
    }

    #[test]
    fn residual_examples() {
        let exact = one_minus_abs_sq_laurent(
            &ComplexPoly::from_real(&[0.6]),
            Some(&ComplexPoly::from_real(&[0.8])),
        )
        .unwrap();
        assert!(exact.coeffs().iter().all(|v| v.norm() < 1e-15));

        // ¼|1 + z|² - 1 = ¼z⁻¹ - ½ + ¼z on the circle.
        let half = one_minus_abs_sq_laurent(&ComplexPoly::from_real(&[0.5, 0.5]), None).unwrap();
        assert!((half.coeff(-1) - c(0.25, 0.0)).norm() < 1e-15);
        assert!((half.coeff(0) - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((half.coeff(1) - c(0.25, 0.0)).norm() < 1e-15);

        let zero = one_minus_abs_sq_laurent(&ComplexPoly::zero(), Some(&ComplexPoly::zero())).unwrap();
        assert_eq!(zero.min_exp(), 0);
        assert_eq!(zero.coeffs(), &[c(-1.0, 0.0)]);
    }

    #[test]
    fn residual_rejects_degree_mismatch() {
        let p = ComplexPoly::from_real(&[0.5, 0.5]);
        let q = ComplexPoly::from_real(&[0.5]);
        assert_eq!(
            one_minus_abs_sq_laurent(&p, Some(&q)),
            Err(Error::DegreeMismatch { left: 1, right: 0 })
        );
    }

    #[test]
    fn sup_norm_examples() {
        assert!((sup_norm_on_circle(&ComplexPoly::from_real(&[0.6]), 3) - 0.6).abs() < 1e-15);
        assert!((sup_norm_on_circle(&ComplexPoly::from_real(&[0.0, 1.0]), 16) - 1.0).abs() < 1e-15);
        assert!((sup_norm_on_circle(&ComplexPoly::from_real(&[0.5, 0.5]), 16) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn refined_sup_norm_beats_grid_between_nodes() {
        // Peak of |1 + z^5| sits at θ = 0 rotated by an irrational offset.
        let alpha: f64 = 0.123_456_789;
        let p = ComplexPoly::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0),
            Complex64::from_polar(1.0, -5.0 * alpha)]);
        let refined = sup_norm_refined(&p);
        assert!((refined - 2.0).abs() < 1e-12, "{refined}");
        assert!(sup_norm_on_circle(&p, 16) <= refined);
    }

    #[test]
    fn laurent_trims_and_indexes() {
        let l = LaurentPoly::new(-2, vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(l.min_exp(), -1);
        assert_eq!(l.max_exp(), 0);
        assert_eq!(l.coeff(-1), c(1.0, 0.0));
        assert_eq!(l.coeff(5), c(0.0, 0.0));
        let z = c(0.3, 0.4);
        assert!((l.eval(z) - (c(1.0, 0.0) / z + 2.0)).norm() < 1e-14);
    }

    fn poly(max_degree: usize) -> impl Strategy<Value = ComplexPoly> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_degree + 1)
            .prop_map(|v| ComplexPoly::with_degree(v.into_iter().map(|(a, b)| c(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn grid_matches_horner(p in poly(1024), extra in 0usize..64) {
            let n = p.degree() + 1 + extra;
            let grid = p.eval_roots_of_unity(n).unwrap();
            let scale: f64 = p.coeffs().iter().map(|c| c.norm()).sum();
            for (m, v) in grid.values().iter().enumerate().step_by(7) {
                let h = p.eval(grid.node(m));
                prop_assert!((v - h).norm() <= 1e-12 * scale.max(1e-300));
            }
        }

        #[test]
        fn conj_reciprocal_is_involution(p in poly(40)) {
            prop_assume!(p.coeff(0) != Complex64::default());
            let p = ComplexPoly::new(p.into_coeffs());
            prop_assert_eq!(p.conj_reciprocal().conj_reciprocal(), p);
        }

        #[test]
        fn residual_is_conjugate_symmetric(p in poly(40), seed in 0u64..1000) {
            let q = ComplexPoly::with_degree(
                p.coeffs().iter().enumerate()
                    .map(|(i, _)| Complex64::from_polar(0.3, (i as u64 * 7 + seed) as f64))
                    .collect(),
            );
            let r = one_minus_abs_sq_laurent(&p, Some(&q)).unwrap();
            let d = p.degree() as i64;
            for n in 0..=d {
                prop_assert!((r.coeff(-n) - r.coeff(n).conj()).norm() <= 1e-14);
            }
            // Sum of coefficients is the value at z = 1.
            let total: Complex64 = r.coeffs().iter().sum();
            let at_one = p.eval(c(1.0, 0.0)).norm_sqr() + q.eval(c(1.0, 0.0)).norm_sqr() - 1.0;
            prop_assert!((total - at_one).norm() <= 1e-12 * (1.0 + at_one.abs()) * (d + 1) as f64);
        }
    }
}
