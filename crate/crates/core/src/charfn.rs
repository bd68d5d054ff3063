//! Closed-form characteristic functions of a Gaussian and of the cube of a
//! centered Gaussian.
//!
//! For X ~ N(0, 1/2) and t ≠ 0,
//!
//! ```text
//! E[e^{itX³}] = 2 / (3|t|√(3π)) · e^{z} K_{1/3}(z),    z = 2 / (27 t²)
//! ```
//!
//! and the value is 1 at t = 0. The product e^{z}K_{1/3}(z) is always taken
//! from the scaled Bessel kernel: e^{z} alone overflows once |t| drops below
//! about 0.05.

use serde::Serialize;

use crate::distributions::{reduce_to_base_t, GaussianSpec};
use crate::error::{domain, Result};
use crate::special::{bessel_k, BesselOrder};

/// A characteristic-function value at the point `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharFnValue {
    pub t: f64,
    pub re: f64,
    pub im: f64,
}

impl CharFnValue {
    pub fn real(t: f64, re: f64) -> Self {
        Self { t, re, im: 0.0 }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// E[e^{itW}] = e^{itμ − σ²t²/2}.
pub fn charfn_gauss(spec: &GaussianSpec, t: f64) -> CharFnValue {
    let s = spec.sigma() * t;
    let envelope = (-0.5 * s * s).exp();
    let (sin, cos) = (spec.mu() * t).sin_cos();
    CharFnValue { t, re: envelope * cos, im: envelope * sin }
}

/// E[e^{itX³}] for X ~ N(0, 1/2).
pub fn charfn_cube_half(t: f64) -> CharFnValue {
    CharFnValue::real(t, cube_half_value(t))
}

fn cube_half_value(t: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    let a = t.abs();
    let z = 2.0 / (27.0 * a * a);
    if !z.is_finite() {
        // t² underflowed; every correction is O(t²) and below rounding
        return 1.0;
    }
    let k = bessel_k(BesselOrder::one_third(), z).expect("z is positive and finite");
    2.0 / (3.0 * a * (3.0 * std::f64::consts::PI).sqrt()) * k.scaled_value
}

/// E[e^{itT³}] for T ~ N(0, 1); equals `charfn_cube_half(2√2·t)`.
pub fn charfn_cube_std(t: f64) -> CharFnValue {
    let reduced = reduce_to_base_t(&GaussianSpec::std(), t).expect("centered law");
    CharFnValue::real(t, cube_half_value(reduced))
}

/// E[e^{itS³}] for S ~ N(0, σ²); equals `charfn_cube_std(σ³·t)`.
pub fn charfn_cube_sigma(sigma: f64, t: f64) -> Result<CharFnValue> {
    let spec = GaussianSpec::scaled(sigma)?;
    let reduced = reduce_to_base_t(&spec, t)?;
    Ok(CharFnValue::real(t, cube_half_value(reduced)))
}

/// Closed-form characteristic function of the cube of any centered law;
/// fails for a nonzero mean, which has no closed form.
pub fn charfn_cube(spec: &GaussianSpec, t: f64) -> Result<CharFnValue> {
    let reduced = reduce_to_base_t(spec, t)?;
    Ok(CharFnValue::real(t, cube_half_value(reduced)))
}

/// Coefficients of the small-t expansion 1 − 15/16·t² + 3465/512·t⁴.
pub const SMALL_T_COEFFS: [f64; 3] = [1.0, -15.0 / 16.0, 3465.0 / 512.0];

/// Largest |t| accepted by [`charfn_cube_limit_small_t`].
pub const SMALL_T_WINDOW: f64 = 0.5;

/// Three-term small-t expansion of E[e^{itX³}], valid for 0 < |t| ≤ 0.5.
pub fn charfn_cube_limit_small_t(t: f64) -> Result<f64> {
    if t == 0.0 || t.is_nan() || t.abs() > SMALL_T_WINDOW {
        return Err(domain("small-t expansion point", t));
    }
    let t2 = t * t;
    Ok(SMALL_T_COEFFS[0] + t2 * (SMALL_T_COEFFS[1] + t2 * SMALL_T_COEFFS[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{E, FRAC_1_SQRT_2, PI, SQRT_2};

    #[test]
    fn gauss_half_at_two() {
        let v = charfn_gauss(&GaussianSpec::half(), 2.0);
        assert_relative_eq!(v.re, 1.0 / E, max_relative = 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn gauss_at_zero_is_one() {
        let v = charfn_gauss(&GaussianSpec::general(3.0, 2.0).unwrap(), 0.0);
        assert_eq!((v.re, v.im), (1.0, 0.0));
    }

    #[test]
    fn gauss_general() {
        let v = charfn_gauss(&GaussianSpec::general(1.0, 1.0).unwrap(), 1.0);
        let m = (-0.5f64).exp();
        assert_relative_eq!(v.re, m * 1.0f64.cos(), max_relative = 1e-15);
        assert_relative_eq!(v.im, m * 1.0f64.sin(), max_relative = 1e-15);
    }

    #[test]
    fn cube_half_at_zero_is_exactly_one() {
        let v = charfn_cube_half(0.0);
        assert_eq!((v.re, v.im), (1.0, 0.0));
        assert_eq!(charfn_cube_std(0.0).re, 1.0);
        assert_eq!(charfn_cube_sigma(3.0, 0.0).unwrap().re, 1.0);
    }

    #[test]
    fn cube_half_reference_values() {
        // 40-digit evaluations of the Bessel form
        let reference = [
            (0.05, 0.997_697_156_887_999_5),
            (0.1, 0.991_223_494_532_976_9),
            (0.5, 0.889_452_460_315_832_6),
            (1.0, 0.783_156_225_060_314_3),
            (2.0, 0.658_458_866_986_840_3),
            (5.0, 0.501_743_193_590_797_8),
        ];
        for (t, want) in reference {
            assert_relative_eq!(charfn_cube_half(t).re, want, max_relative = 1e-13);
        }
    }

    #[test]
    fn cube_half_is_even() {
        for k in 1..200 {
            let t = k as f64 * 0.037;
            assert_eq!(charfn_cube_half(t).re, charfn_cube_half(-t).re);
        }
    }

    #[test]
    fn std_is_half_at_reduced_argument() {
        assert_eq!(charfn_cube_std(1.0).re, charfn_cube_half(2.0 * SQRT_2).re);
    }

    #[test]
    fn sigma_reductions() {
        for k in -20..=20 {
            let t = k as f64 * 0.23;
            assert_eq!(charfn_cube_sigma(1.0, t).unwrap().re, charfn_cube_std(t).re);
            assert_relative_eq!(
                charfn_cube_sigma(FRAC_1_SQRT_2, t).unwrap().re,
                charfn_cube_half(t).re,
                max_relative = 1e-14
            );
        }
        assert!(charfn_cube_sigma(0.0, 1.0).is_err());
        assert!(charfn_cube_sigma(-1.0, 1.0).is_err());
    }

    #[test]
    fn charfn_cube_rejects_noncentral() {
        assert!(charfn_cube(&GaussianSpec::general(0.5, 1.0).unwrap(), 1.0).is_err());
    }

    #[test]
    fn small_t_expansion() {
        let v = charfn_cube_limit_small_t(0.1).unwrap();
        assert_relative_eq!(v, 1.0 - 0.009_375 + 3465.0 / 512.0 * 1e-4, max_relative = 1e-15);
        assert!((v - 0.991_301_757_812_5).abs() < 1e-15);
        assert!((charfn_cube_limit_small_t(1e-9).unwrap() - 1.0).abs() < 1e-17);
        assert!(charfn_cube_limit_small_t(0.0).is_err());
        assert!(charfn_cube_limit_small_t(0.51).is_err());
        // next omitted coefficient is 17!!/(8³·6!)
        let c3 = 34_459_425.0 / (512.0 * 720.0);
        let t: f64 = 0.2;
        let gap = (charfn_cube_half(t).re - charfn_cube_limit_small_t(t).unwrap()).abs();
        assert!(gap <= c3 * t.powi(6));
    }

    #[test]
    fn no_overflow_for_tiny_t() {
        for &t in &[1e-300, 1e-200, 1e-150, 1e-20] {
            let v = charfn_cube_half(t).re;
            assert!(v.is_finite());
            assert!((v - 1.0).abs() <= 10.0 * t * t + f64::EPSILON);
        }
    }

    #[test]
    fn prefactor_matches_asymptotic_constant() {
        // 2/(3t√(3π)) · √(π/(2z)) = 1 for z = 2/(27t²)
        let t: f64 = 0.37;
        let z = 2.0 / (27.0 * t * t);
        let p = 2.0 / (3.0 * t * (3.0 * PI).sqrt()) * (PI / (2.0 * z)).sqrt();
        assert_relative_eq!(p, 1.0, max_relative = 1e-15);
    }
}
