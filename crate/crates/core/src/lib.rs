//! Complementary polynomials on the unit circle.
//!
//! Given `P` with `|P(z)| <= 1` for `|z| = 1`, [`complement`] computes the
//! polynomial `Q` of the same degree with no roots in the open unit disk and
//! `|P|² + |Q|² = 1` on the circle, using a handful of FFTs. The remaining
//! modules supply error metrics, test families, basis conversions and slow
//! independent oracles.
//!
//! ```
//! use qspc_core::{complement, metrics, ComplexPoly};
//!
//! let p = ComplexPoly::from_real(&[0.36, 0.48]);
//! let r = complement::complementary_known_delta(&p, &complement::ComplementOptions::new(256)).unwrap();
//! assert!(metrics::loss_tilde(&p, &r.q).unwrap() < 1e-12);
//! ```

pub mod complement;
pub mod conventions;
pub mod dft;
pub mod error;
pub mod families;
pub mod json;
pub mod metrics;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::{ComplexPoly, LaurentPoly, UnitGridSamples};
