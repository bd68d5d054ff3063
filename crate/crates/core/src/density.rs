//! Density and distribution function of Y = X³, X ~ N(0, 1/2):
//!
//! ```text
//! f(x) = |x|^{-2/3} e^{-|x|^{2/3}} / (3√π),   x ≠ 0
//! F(x) = (1 + erf(∛x)) / 2
//! ```

use serde::Serialize;

use crate::distributions::GaussianSpec;
use crate::error::{Error, Result};
use crate::special::erfc;

/// The density evaluated at `x`; `f` is `+∞` at the pole `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityValue {
    pub x: f64,
    pub f: f64,
}

impl DensityValue {
    pub fn at(x: f64) -> Self {
        let f = density_cube_half(x).unwrap_or(f64::INFINITY);
        Self { x, f }
    }

    pub fn is_pole(&self) -> bool {
        self.x == 0.0
    }
}

/// Density of X³ for X ~ N(0, 1/2); the origin is an integrable pole.
pub fn density_cube_half(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Singularity);
    }
    let c = x.abs().cbrt();
    let c2 = c * c;
    Ok((-c2).exp() / (3.0 * std::f64::consts::PI.sqrt() * c2))
}

/// ln f(x) = −ln 3 − ½ln π − (2/3)ln|x| − |x|^{2/3}, finite wherever f
/// underflows; −∞ at the pole.
pub fn ln_density_cube_half(x: f64) -> f64 {
    let a = x.abs();
    -(3f64.ln() + 0.5 * std::f64::consts::PI.ln()) - 2.0 / 3.0 * a.ln() - a.cbrt().powi(2)
}

/// CDF of X³ for X ~ N(0, 1/2).
///
/// Evaluated as erfc(−∛x)/2, the same quantity as (1 + erf(∛x))/2 without
/// cancellation in the left tail.
pub fn cdf_cube_half(x: f64) -> f64 {
    0.5 * erfc(-x.cbrt())
}

/// Density of S³ for S ~ N(0, σ²): f(x/c)/c with c = (σ√2)³.
pub fn density_cube_sigma(sigma: f64, x: f64) -> Result<f64> {
    let spec = GaussianSpec::scaled(sigma)?;
    let s = spec.scale_from_half();
    let c = s * s * s;
    Ok(density_cube_half(x / c)? / c)
}

/// CDF of S³ for S ~ N(0, σ²).
pub fn cdf_cube_sigma(sigma: f64, x: f64) -> Result<f64> {
    let spec = GaussianSpec::scaled(sigma)?;
    let s = spec.scale_from_half();
    Ok(cdf_cube_half(x / (s * s * s)))
}
