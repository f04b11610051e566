//! Coefficient files: `{"degree": d, "coeffs": [[re, im], ...]}` with
//! `d + 1` entries. Chebyshev series add `"basis": "chebyshev"` and
//! `"parity"`; Laurent polynomials add `"basis": "laurent"` and `"min_exp"`,
//! with `degree` the exponent span.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complement::ComplementResult;
use crate::error::{Error, Result};
use crate::families::{ChebSeries, Parity};
use crate::poly::{ComplexPoly, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Monomial,
    Chebyshev,
    Laurent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub n_used: usize,
    pub loss: f64,
    pub grid_min_gap: f64,
    pub clamped_points: usize,
}

impl From<&ComplementResult> for Diagnostics {
    fn from(r: &ComplementResult) -> Self {
        Self {
            n_used: r.n_used,
            loss: r.loss,
            grid_min_gap: r.grid_min_gap,
            clamped_points: r.clamped_points,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffDoc {
    pub degree: usize,
    pub coeffs: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Basis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Parity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_exp: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

/// A parsed coefficient file in whichever basis it declares.
#[derive(Debug, Clone, PartialEq)]
pub enum Coefficients {
    Circle(ComplexPoly),
    Chebyshev(ChebSeries),
    Laurent(LaurentPoly),
}

fn pairs(coeffs: &[Complex64]) -> Vec<[f64; 2]> {
    coeffs.iter().map(|c| [c.re, c.im]).collect()
}

impl CoeffDoc {
    fn bare(coeffs: &[Complex64]) -> Self {
        Self {
            degree: coeffs.len() - 1,
            coeffs: pairs(coeffs),
            basis: None,
            parity: None,
            min_exp: None,
            diagnostics: None,
        }
    }

    pub fn from_poly(p: &ComplexPoly) -> Self {
        Self::bare(p.coeffs())
    }

    pub fn from_complement(r: &ComplementResult) -> Self {
        Self {
            diagnostics: Some(r.into()),
            ..Self::bare(r.q.coeffs())
        }
    }

    pub fn from_cheb(f: &ChebSeries) -> Self {
        Self {
            basis: Some(Basis::Chebyshev),
            parity: Some(f.parity()),
            ..Self::bare(f.coeffs())
        }
    }

    pub fn from_laurent(f: &LaurentPoly) -> Self {
        Self {
            basis: Some(Basis::Laurent),
            min_exp: Some(f.min_exp()),
            ..Self::bare(f.coeffs())
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("coefficient documents always serialize") + "\n"
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if doc.coeffs.len() != doc.degree + 1 {
            return Err(Error::Format(format!(
                "field \"coeffs\" has {} entries but \"degree\" is {}",
                doc.coeffs.len(),
                doc.degree
            )));
        }
        if let Some(i) = doc.coeffs.iter().position(|c| !c[0].is_finite() || !c[1].is_finite()) {
            return Err(Error::Format(format!("coeffs[{i}] is not finite")));
        }
        Ok(doc)
    }

    fn complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| Complex64::new(c[0], c[1])).collect()
    }

    pub fn into_coefficients(self) -> Result<Coefficients> {
        let coeffs = self.complex();
        match self.basis.unwrap_or_default() {
            Basis::Monomial => Ok(Coefficients::Circle(ComplexPoly::with_degree(coeffs))),
            Basis::Chebyshev => Ok(Coefficients::Chebyshev(ChebSeries::new(
                coeffs,
                self.parity.unwrap_or(Parity::Mixed),
            )?)),
            Basis::Laurent => {
                let min_exp = self
                    .min_exp
                    .ok_or_else(|| Error::Format("field \"min_exp\" is required for a Laurent file".into()))?;
                Ok(Coefficients::Laurent(LaurentPoly::new(min_exp, coeffs)))
            }
        }
    }

    /// The document as a monomial polynomial; other bases are rejected.
    pub fn into_poly(self) -> Result<ComplexPoly> {
        match self.into_coefficients()? {
            Coefficients::Circle(p) => Ok(p),
            _ => Err(Error::Format(
                "expected a monomial-basis polynomial; convert it first".into(),
            )),
        }
    }
}
