use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// `Σ_{n=0}^{M} f_n T_n(x)` on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    coeffs: Vec<Complex64>,
    parity: Parity,
}

impl ChebSeries {
    /// Fails if a coefficient of the wrong parity is nonzero.
    pub fn new(coeffs: Vec<Complex64>, parity: Parity) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Format("a Chebyshev series needs at least one coefficient".into()));
        }
        let forbidden = match parity {
            Parity::Even => 1,
            Parity::Odd => 0,
            Parity::Mixed => return Ok(Self { coeffs, parity }),
        };
        if let Some(n) = (forbidden..coeffs.len())
            .step_by(2)
            .find(|&n| coeffs[n] != Complex64::default())
        {
            return Err(Error::Parity(format!(
                "coefficient of T_{n} is nonzero in a {parity:?} series"
            )));
        }
        Ok(Self { coeffs, parity })
    }

    pub fn mixed(coeffs: Vec<Complex64>) -> Self {
        Self::new(coeffs, Parity::Mixed).expect("mixed parity is unconstrained")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Clenshaw evaluation.
    pub fn eval(&self, x: f64) -> Complex64 {
        let mut b1 = Complex64::default();
        let mut b2 = Complex64::default();
        for &c in self.coeffs[1..].iter().rev() {
            let b0 = c + b1 * (2.0 * x) - b2;
            b2 = b1;
            b1 = b0;
        }
        self.coeffs[0] + b1 * x - b2
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            parity: self.parity,
        }
    }
}
