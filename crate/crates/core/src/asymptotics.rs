//! Small-t expansions around the closed form.
//!
//! With z = 2/(27t²), the function A(t) = 3√3·t·e^{−z}·∫₀^∞ cos(tx³)e^{−x²}dx
//! equals K_{1/3}(z), and term-by-term integration of the cosine series gives
//!
//! ```text
//! A(t) ~ (3√(3π)/2)·t·e^{−z}·Σ (−1)^n (6n−1)!!/(8^n (2n)!)·t^{2n}
//!      = (3√(3π)/2)·t·e^{−z}·(1 − 15/16·t² + 3465/512·t⁴ − …)
//! ```
//!
//! which is also the large-argument expansion of K_{1/3}(z). The growing
//! solution I_{1/3}(z) is larger than K_{1/3}(z) by a factor ~e^{2z}/π, which
//! is why A cannot contain any multiple of it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::moments::{rational_to_f64, series_coefficient};
use crate::special::{bessel_i, bessel_k, BesselOrder};

/// Default number of expansion terms beyond the constant.
pub const DEFAULT_ORDER: u32 = 10;

/// One term coefficient·t^{power} of an expansion in t.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionTerm {
    pub power: u32,
    pub coefficient: BigRational,
}

impl ExpansionTerm {
    pub fn coefficient_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient)
    }
}

/// Terms n = 0..=N of the bracketed series of A(t): coefficient of t^{2n} is
/// (−1)^n (6n−1)!!/(8^n (2n)!).
pub fn a_series_coefficients(order: u32) -> Vec<ExpansionTerm> {
    (0..=order)
        .map(|n| ExpansionTerm { power: 2 * n, coefficient: series_coefficient(n) })
        .collect()
}

/// The large-argument series of Kν(z) (`alternate = false`) or Iν(z)
/// (`alternate = true`) at ν = 1/3 rewritten in t through 1/z = 27t²/2:
/// the coefficient of t^{2n} is (±1)^n Π_{j≤n}(4/9 − (2j−1)²)/(n! 8^n)·(27/2)^n.
pub fn bessel_third_coefficients(order: u32, alternate: bool) -> Vec<ExpansionTerm> {
    let four_nu_sq = BigRational::new(BigInt::from(4), BigInt::from(9));
    let step = BigRational::new(BigInt::from(27), BigInt::from(16));
    let mut c = BigRational::one();
    let mut out = vec![ExpansionTerm { power: 0, coefficient: c.clone() }];
    for n in 1..=order {
        let odd = BigRational::from_integer(BigInt::from(2 * n - 1));
        // 27/(2·8) per step, divided by n for the factorial
        c = c * (&four_nu_sq - &odd * &odd) * &step / BigRational::from_integer(BigInt::from(n));
        let signed = if alternate && n % 2 == 1 { -c.clone() } else { c.clone() };
        out.push(ExpansionTerm { power: 2 * n, coefficient: signed });
    }
    out
}

/// The I_{1/3} bracket exactly as it is commonly printed, 1 + 15/16·t² + 3465/512·t⁴.
pub fn printed_i_third_coefficients() -> Vec<ExpansionTerm> {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    vec![
        ExpansionTerm { power: 0, coefficient: q(1, 1) },
        ExpansionTerm { power: 2, coefficient: q(15, 16) },
        ExpansionTerm { power: 4, coefficient: q(3465, 512) },
    ]
}

/// 3√(3π)/2, the prefactor of the expansion of A.
pub fn a_prefactor() -> f64 {
    1.5 * (3.0 * std::f64::consts::PI).sqrt()
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain("expansion point", t));
    }
    Ok(())
}

fn bracket(t: f64, order: u32) -> f64 {
    let t2 = t * t;
    a_series_coefficients(order)
        .iter()
        .rev()
        .fold(0.0, |acc, term| acc * t2 + term.coefficient_f64())
}

/// (3√(3π)/2)·t·e^{−2/(27t²)}·Σ_{n≤N} c_n t^{2n}.
pub fn eval_truncated_a(t: f64, order: u32) -> Result<f64> {
    check_t(t)?;
    Ok(eval_truncated_a_scaled(t, order)? * (-2.0 / (27.0 * t * t)).exp())
}

/// [`eval_truncated_a`] without the factor e^{−2/(27t²)}; compare with the
/// scaled Bessel value e^{z}K_{1/3}(z).
pub fn eval_truncated_a_scaled(t: f64, order: u32) -> Result<f64> {
    check_t(t)?;
    Ok(a_prefactor() * t * bracket(t, order))
}

/// Size of the first omitted term, (3√(3π)/2)·t·|c_{N+1}|·t^{2N+2}, in the
/// scaled normalization.
pub fn first_omitted_scaled(t: f64, order: u32) -> Result<f64> {
    check_t(t)?;
    let c = series_coefficient(order + 1).abs();
    Ok(a_prefactor() * t * rational_to_f64(&c) * t.powi(2 * order as i32 + 2))
}

/// ln(I_{1/3}(z)/K_{1/3}(z)) at z = 2/(27t²) for each t, formed from the
/// scaled values as ln(e^{−z}I) − ln(e^{z}K) + 2z so nothing overflows.
/// For small t it approaches 4/(27t²) − ln π.
pub fn ik_ratio_divergence(t_values: &[f64]) -> Result<Vec<f64>> {
    t_values
        .iter()
        .map(|&t| {
            check_t(t)?;
            let z = 2.0 / (27.0 * t * t);
            let i = bessel_i(BesselOrder::one_third(), z)?;
            let k = bessel_k(BesselOrder::one_third(), z)?;
            Ok(i.scaled_value.ln() - k.scaled_value.ln() + 2.0 * z)
        })
        .collect()
}

/// 4/(27t²) − ln π, the leading behaviour of [`ik_ratio_divergence`].
pub fn ik_ratio_leading(t: f64) -> f64 {
    4.0 / (27.0 * t * t) - std::f64::consts::PI.ln()
}

/// Side-by-side evaluation of the printed three-term I_{1/3} bracket and the
/// generic alternating template at the same t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IExpansionComparison {
    pub t: f64,
    pub printed: f64,
    pub generic: f64,
    pub difference: f64,
    /// Whether the two brackets agree coefficient by coefficient.
    pub coefficients_agree: bool,
}

pub fn compare_i_expansions(t: f64) -> Result<IExpansionComparison> {
    check_t(t)?;
    let printed = printed_i_third_coefficients();
    let generic = bessel_third_coefficients(2, true);
    let eval = |terms: &[ExpansionTerm]| {
        terms.iter().map(|c| c.coefficient_f64() * t.powi(c.power as i32)).sum::<f64>()
    };
    let p = eval(&printed);
    let g = eval(&generic);
    Ok(IExpansionComparison {
        t,
        printed: p,
        generic: g,
        difference: p - g,
        coefficients_agree: printed == generic,
    })
}
