//! The Gaussian laws whose cubes are studied here, and the argument
//! rescalings that relate their characteristic functions.

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// A normal law N(μ, σ²), parameterized by mean and standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianSpec {
    mu: f64,
    sigma: f64,
}

impl GaussianSpec {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(domain("mean", mu));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(domain("standard deviation", sigma));
        }
        Ok(Self { mu, sigma })
    }

    /// X ~ N(0, 1/2): variance one half, so σ = 1/√2.
    pub fn half() -> Self {
        Self { mu: 0.0, sigma: std::f64::consts::FRAC_1_SQRT_2 }
    }

    /// T ~ N(0, 1).
    pub fn std() -> Self {
        Self { mu: 0.0, sigma: 1.0 }
    }

    /// S ~ N(0, σ²).
    pub fn scaled(sigma: f64) -> Result<Self> {
        Self::new(0.0, sigma)
    }

    /// W ~ N(μ, σ²).
    pub fn general(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(mu, sigma)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Factor c with Y = c·X for the centered part, X ~ N(0, 1/2): c = σ√2.
    pub fn scale_from_half(&self) -> f64 {
        self.sigma * std::f64::consts::SQRT_2
    }
}

/// Whether the cube of a law has a closed-form characteristic function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CubeLawKind {
    /// μ = 0: the Bessel closed form applies.
    ClosedFormCentral,
    /// μ ≠ 0: only the numerical integral is available.
    NumericGeneral,
}

/// Exact test on μ; any nonzero mean, however small, is `NumericGeneral`.
pub fn classify(spec: &GaussianSpec) -> CubeLawKind {
    if spec.mu == 0.0 {
        CubeLawKind::ClosedFormCentral
    } else {
        CubeLawKind::NumericGeneral
    }
}

/// The argument t' with E[e^{itS³}] = E[e^{it'X³}], i.e. t' = (σ√2)³·t.
pub fn reduce_to_base_t(spec: &GaussianSpec, t: f64) -> Result<f64> {
    if classify(spec) != CubeLawKind::ClosedFormCentral {
        return Err(Error::Precondition(format!(
            "argument reduction needs a centered law, got mean {}",
            spec.mu
        )));
    }
    // (σ√2)³ = 2√2·σ³; this grouping keeps the σ = 1 case bit-identical to 2√2·t
    Ok(2.0 * std::f64::consts::SQRT_2 * (spec.sigma.powi(3) * t))
}
