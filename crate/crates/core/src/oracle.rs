//! Independent constructions of the canonical complement used to check the
//! FFT pipeline: explicit root factorization, trapezoidal quadrature of the
//! Schwarz integral, and a direct circulant Hilbert transform.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complement::apply_pi_multiplier;
use crate::dft::{self, SpectrumModes};
use crate::error::{Error, Result};
use crate::poly::{root_of_unity, sup_norm_grid_size, ComplexPoly, DEFAULT_OVERSAMPLE};

/// Default modulus tolerance for calling a root "on the circle".
pub const DEFAULT_CIRCLE_TOL: f64 = 1e-8;
/// Eigenvalues closer than this are merged into one multiple root.
const CLUSTER_RADIUS: f64 = 1e-6;

/// Roots of `z^d (1 - P(z) P*(1/z))`, split by position relative to the
/// unit circle. Circle roots carry half their multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootClassification {
    pub inside: Vec<(Complex64, usize)>,
    pub on_circle: Vec<(Complex64, usize)>,
    pub outside: Vec<(Complex64, usize)>,
    /// Leading coefficient `Q̄` of the canonical complement.
    pub leading: Complex64,
    pub d0: usize,
    pub d1: usize,
}

/// Coefficients `a_0..a_{2d}` of `z^d (1 - P(z) P*(1/z))`.
fn gap_numerator(p: &ComplexPoly) -> Vec<Complex64> {
    let d = p.degree();
    let c = p.coeffs();
    let mut a = vec![Complex64::default(); 2 * d + 1];
    a[d] = Complex64::new(1.0, 0.0);
    for (n, pn) in c.iter().enumerate() {
        for (m, pm) in c.iter().enumerate() {
            a[d + n - m] -= pn * pm.conj();
        }
    }
    a
}

fn horner_with_derivative(a: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::default();
    let mut dv = Complex64::default();
    for &c in a.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

fn polynomial_roots(a: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = a.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = a[n];
    let mut companion = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        companion[(i, n - 1)] = -a[i] / lead;
    }
    let schur = Schur::try_new(companion, f64::EPSILON, 10_000).ok_or(Error::EigenSolver)?;
    let (_, t) = schur.unpack();
    Ok((0..n)
        .map(|i| {
            let z = t[(i, i)];
            let (v, dv) = horner_with_derivative(a, z);
            if dv.norm() == 0.0 {
                return z;
            }
            let polished = z - v / dv;
            if horner_with_derivative(a, polished).0.norm() < v.norm() {
                polished
            } else {
                z
            }
        })
        .collect())
}

/// Single-linkage grouping; each group is replaced by its centroid.
fn cluster(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let mut group: Vec<usize> = (0..roots.len()).collect();
    fn find(g: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while g[r] != r {
            r = g[r];
        }
        g[i] = r;
        r
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let scale = 1.0f64.max(roots[i].norm());
            if (roots[i] - roots[j]).norm() < CLUSTER_RADIUS * scale {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a] = b;
            }
        }
    }
    let mut out: Vec<(usize, Complex64, usize)> = Vec::new();
    for i in 0..roots.len() {
        let r = find(&mut group, i);
        match out.iter_mut().find(|(id, _, _)| *id == r) {
            Some((_, sum, count)) => {
                *sum += roots[i];
                *count += 1;
            }
            None => out.push((r, roots[i], 1)),
        }
    }
    out.into_iter()
        .map(|(_, sum, count)| (sum / count as f64, count))
        .collect()
}

/// Companion-matrix roots of `z^d (1 - P(z) P*(1/z))`, one Newton step each,
/// grouped into multiple roots and classified by `||w| - 1| < tol`.
///
/// Trailing zero coefficients of `P` are ignored; a zero constant term is an
/// error since `z^k P` and `P` share their complement up to the degree shift.
pub fn classify_roots(p: &ComplexPoly, tol: f64) -> Result<RootClassification> {
    if p.coeff(0) == Complex64::default() {
        return Err(Error::ZeroConstantTerm);
    }
    let p = ComplexPoly::new(p.coeffs().to_vec());
    let roots = polynomial_roots(&gap_numerator(&p))?;
    let mut cls = RootClassification {
        inside: Vec::new(),
        on_circle: Vec::new(),
        outside: Vec::new(),
        leading: Complex64::default(),
        d0: 0,
        d1: 0,
    };
    for (w, mult) in cluster(&roots) {
        let gap = w.norm() - 1.0;
        if gap.abs() < tol {
            if mult % 2 != 0 {
                return Err(Error::CircleRootPairing {
                    root: w,
                    multiplicity: mult,
                });
            }
            cls.on_circle.push((w, mult / 2));
        } else if gap < 0.0 {
            cls.inside.push((w, mult));
        } else {
            cls.outside.push((w, mult));
        }
    }
    cls.d0 = cls.on_circle.len();
    cls.d1 = cls.outside.len();
    cls.leading = leading_coefficient(&cls, &p);
    Ok(cls)
}

fn monic_from_roots(cls: &RootClassification) -> ComplexPoly {
    let mut monic = vec![Complex64::new(1.0, 0.0)];
    for &(root, mult) in cls.on_circle.iter().chain(&cls.outside) {
        for _ in 0..mult {
            monic.push(Complex64::default());
            for k in (1..monic.len()).rev() {
                monic[k] = monic[k - 1] - root * monic[k];
            }
            monic[0] *= -root;
        }
    }
    ComplexPoly::with_degree(monic)
}

/// `Q̄` such that `|Q̄ Q_monic|² = 1 - |P|²` at the grid point where the gap
/// is largest and `Q̄ Q_monic(0) > 0`.
fn leading_coefficient(cls: &RootClassification, p: &ComplexPoly) -> Complex64 {
    let monic = monic_from_roots(cls);
    let n = sup_norm_grid_size(p.degree(), DEFAULT_OVERSAMPLE);
    let values = p.eval_roots_of_unity(n).expect("grid covers the degree");
    let (best_m, best_gap) = values
        .values()
        .iter()
        .map(|v| 1.0 - v.norm_sqr())
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (m, g)| if g > acc.1 { (m, g) } else { acc });
    let magnitude = best_gap.max(0.0).sqrt() / monic.eval(root_of_unity(best_m, n)).norm();
    let q0 = monic.coeff(0);
    if q0.norm() > 0.0 {
        q0.conj() / q0.norm() * magnitude
    } else {
        Complex64::new(magnitude, 0.0)
    }
}

/// `Q(z) = Q̄ ∏(z - t_j)^{α_j} ∏(z - w_j)^{β_j}`, padded with zeros to the
/// degree of `P`.
pub fn canonical_q_from_roots(cls: &RootClassification, p: &ComplexPoly) -> ComplexPoly {
    let q = monic_from_roots(cls).scale(cls.leading);
    let mut coeffs = q.into_coeffs();
    coeffs[0] = Complex64::new(coeffs[0].norm(), 0.0);
    ComplexPoly::with_degree(coeffs).padded_to(p.degree())
}

/// Canonical complement by root factorization, for any `P` with
/// `|P| <= 1` on the circle; leading zero coefficients are factored out.
pub fn canonical_complement(p: &ComplexPoly, tol: f64) -> Result<ComplexPoly> {
    let Some(shift) = p.coeffs().iter().position(|c| *c != Complex64::default()) else {
        let mut q = vec![Complex64::default(); p.degree() + 1];
        q[0] = Complex64::new(1.0, 0.0);
        return Ok(ComplexPoly::with_degree(q));
    };
    let stripped = ComplexPoly::with_degree(p.coeffs()[shift..].to_vec());
    let cls = classify_roots(&stripped, tol)?;
    Ok(canonical_q_from_roots(&cls, &stripped).padded_to(p.degree()))
}

impl RootClassification {
    /// `Σ α_j`.
    pub fn d0_degree(&self) -> usize {
        self.on_circle.iter().map(|r| r.1).sum()
    }

    /// `Σ β_j`.
    pub fn d1_degree(&self) -> usize {
        self.outside.iter().map(|r| r.1).sum()
    }
}

/// `Q(z)` off the circle by trapezoidal quadrature of the Schwarz integral
/// of `log(1 - |P|²)` over `quad_points` nodes. Assumes `|P| < 1` on the
/// circle.
pub fn contour_q(p: &ComplexPoly, z: Complex64, quad_points: usize) -> Result<Complex64> {
    let margin = 0.01;
    let r = z.norm();
    if (r - 1.0).abs() < margin {
        return Err(Error::NearUnitCircle { modulus: r, margin });
    }
    let values = p.eval_roots_of_unity(quad_points)?;
    let logs: Vec<f64> = values
        .values()
        .iter()
        .enumerate()
        .map(|(m, v)| {
            let gap = 1.0 - v.norm_sqr();
            if gap > 0.0 {
                Ok(gap.ln())
            } else {
                Err(Error::GapViolated { index: m, value: gap })
            }
        })
        .collect::<Result<_>>()?;
    let interior = |w: Complex64| -> Complex64 {
        let sum: Complex64 = logs
            .iter()
            .enumerate()
            .map(|(m, &l)| {
                let node = root_of_unity(m, quad_points);
                (node + w) / (node - w) * l
            })
            .sum();
        (sum / (2.0 * quad_points as f64)).exp()
    };
    if r < 1.0 {
        return Ok(interior(z));
    }
    let mirror = 1.0 / z.conj();
    let gap = Complex64::new(1.0, 0.0) - p.eval(z) * p.eval(mirror).conj();
    Ok(gap / interior(mirror).conj())
}

/// Max deviation between the analytic projection applied to random modes
/// and `½(1 - iH)` with `H` applied as an explicit circulant convolution.
pub fn hilbert_multiplier_check(n: usize) -> f64 {
    assert!(n >= 1, "need at least one point");
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let modes = SpectrumModes::from_storage(
        (0..n)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    );
    hilbert_deviation(&modes)
}

fn hilbert_deviation(modes: &SpectrumModes) -> f64 {
    let n = modes.n_points();
    let x = dft::inverse(modes).into_values();

    // Kernel of the multiplier i·sgn(n), with +i at the Nyquist mode.
    let half = n / 2;
    let kernel: Vec<Complex64> = (0..n)
        .map(|m| {
            let upper = if n.is_multiple_of(2) { half.saturating_sub(1) } else { half };
            let sines: f64 = (1..=upper)
                .map(|k| (2.0 * std::f64::consts::PI * ((k * m) % n) as f64 / n as f64).sin())
                .sum();
            let mut v = Complex64::new(0.0, 2.0 * sines);
            if n.is_multiple_of(2) && n > 1 {
                v += if m % 2 == 0 { 1.0 } else { -1.0 };
            }
            Complex64::new(0.0, 1.0 / n as f64) * v
        })
        .collect();
    let hx: Vec<Complex64> = (0..n)
        .map(|m| (0..n).map(|j| kernel[(m + n - j) % n] * x[j]).sum())
        .collect();
    let projected: Vec<Complex64> = x
        .iter()
        .zip(&hx)
        .map(|(a, h)| (a - Complex64::new(0.0, 1.0) * h) * 0.5)
        .collect();
    let mut lhs = projected;
    dft::forward_in_place(&mut lhs);
    let rhs = apply_pi_multiplier(modes);
    lhs.iter()
        .zip(rhs.as_slice())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}
