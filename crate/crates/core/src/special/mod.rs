//! Special functions: Γ, erf, double factorials and the modified Bessel
//! functions Iν, Kν.

mod bessel;
mod erf;
mod gamma;

pub use bessel::{
    bessel_i, bessel_i_in_regime, bessel_k, bessel_k_in_regime, large_argument_sum, BesselOrder,
    BesselResult, Regime, TruncatedSum, I_ASYMPTOTIC_MIN, K_ASYMPTOTIC_MIN, K_SERIES_MAX,
};
pub use erf::{erf, erfc};
pub use gamma::{double_factorial, gamma_fn, ln_gamma};
