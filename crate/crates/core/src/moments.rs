//! Moments of Y = X³, X ~ N(0, 1/2), and the indeterminacy diagnostics.
//!
//! E[Y^{2k}] = Γ(3k + ½)/√π = (6k−1)!!/8^k and every odd moment vanishes.
//! The moments grow so fast that the power series they generate has zero
//! radius of convergence and the Carleman sum converges; the Krein integral
//! of the density is finite, which makes the law indeterminate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::special::{double_factorial, ln_gamma};

/// E[Y^{2k}] = (6k−1)!!/8^k, exactly.
pub fn moment(k: u32) -> BigRational {
    let num = double_factorial(6 * k as i64 - 1).expect("6k − 1 ≥ −1");
    BigRational::new(BigInt::from(num), BigInt::from(8u32).pow(k))
}

/// E[Y^{2k+1}] = 0 by symmetry.
pub fn odd_moment(_k: u32) -> BigRational {
    BigRational::zero()
}

/// E[Y^n] for any order n.
pub fn raw_moment(n: u32) -> BigRational {
    if n % 2 == 1 {
        odd_moment(n / 2)
    } else {
        moment(n / 2)
    }
}

/// The even moments m₀, m₂, …, m_{2K}; the odd ones are all zero.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence {
    order_cap: u32,
    even_moments: Vec<BigRational>,
}

impl MomentSequence {
    /// Builds m_{2k} for k = 0..=K by the exact recurrence
    /// m_{2k+2} = m_{2k}·(6k+1)(6k+3)(6k+5)/8.
    pub fn new(order_cap: u32) -> Result<Self> {
        if order_cap == 0 {
            return Err(domain("moment order cap", 0.0));
        }
        let mut even_moments = Vec::with_capacity(order_cap as usize + 1);
        let mut m = BigRational::one();
        even_moments.push(m.clone());
        for k in 0..order_cap {
            m = m * recurrence_factor(k);
            even_moments.push(m.clone());
        }
        Ok(Self { order_cap, even_moments })
    }

    pub fn order_cap(&self) -> u32 {
        self.order_cap
    }

    /// m_{2k}, or `None` beyond the cap.
    pub fn even(&self, k: u32) -> Option<&BigRational> {
        self.even_moments.get(k as usize)
    }

    pub fn even_moments(&self) -> &[BigRational] {
        &self.even_moments
    }

    /// Float view; entries overflow to +∞ once m_{2k} exceeds f64 range.
    pub fn to_f64(&self) -> Vec<f64> {
        self.even_moments.iter().map(rational_to_f64).collect()
    }

    pub fn odd_moments_vanish(&self) -> bool {
        true
    }
}

/// m_{2k+2}/m_{2k} = (6k+1)(6k+3)(6k+5)/8.
pub fn recurrence_factor(k: u32) -> BigRational {
    let k = BigInt::from(k);
    let six_k = BigInt::from(6) * k;
    let num = (&six_k + 1) * (&six_k + 3) * (&six_k + 5);
    BigRational::new(num, BigInt::from(8))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Coefficient of t^{2k} in the formal Maclaurin series of E[e^{itY}]:
/// (−1)^k m_{2k}/(2k)!.
pub fn series_coefficient(k: u32) -> BigRational {
    let mut fact = BigInt::one();
    for j in 2..=2 * k as u64 {
        fact *= j;
    }
    let c = moment(k) / BigRational::from_integer(fact);
    if k % 2 == 1 {
        -c
    } else {
        c
    }
}

/// |c_{k+1}/c_k| for k = 1..=K. The ratios increase without bound, so the
/// series has zero radius of convergence; they grow like 27k/4.
pub fn radius_of_convergence_witness(order_cap: u32) -> Result<Vec<f64>> {
    if order_cap < 2 {
        return Err(domain("witness order cap", order_cap as f64));
    }
    let coeffs: Vec<BigRational> = (1..=order_cap + 1).map(series_coefficient).collect();
    Ok(coeffs
        .windows(2)
        .map(|w| rational_to_f64(&(&w[1] / &w[0])).abs())
        .collect())
}

/// m_{2k}^{−1/(2k)}, from ln m_{2k} = ln Γ(3k + ½) − ½ ln π.
pub fn carleman_term(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(domain("Carleman index", 0.0));
    }
    let ln_m = ln_gamma(3.0 * k as f64 + 0.5)? - 0.5 * std::f64::consts::PI.ln();
    Ok((-ln_m / (2.0 * k as f64)).exp())
}

/// Partial sums Σ_{k=1..n} m_{2k}^{−1/(2k)} for n = 1..=K. The terms decay
/// like k^{−3/2}, so the sums stay bounded and the Carleman criterion fails.
pub fn carleman_partial_sums(order_cap: u32) -> Result<Vec<f64>> {
    if order_cap == 0 {
        return Err(domain("Carleman order cap", 0.0));
    }
    let mut out = Vec::with_capacity(order_cap as usize);
    let mut sum = crate::quadrature::CompensatedSum::new();
    for k in 1..=order_cap {
        sum.add(carleman_term(k)?);
        out.push(sum.value());
    }
    Ok(out)
}

/// −π(ln 3 + ½ ln π + 2), the value of ∫ ln f(x)/(1+x²) dx.
pub fn krein_closed_constant() -> f64 {
    let pi = std::f64::consts::PI;
    -pi * (3f64.ln() + 0.5 * pi.ln() + 2.0)
}
