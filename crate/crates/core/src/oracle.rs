//! Direct numerical evaluation of the integrals behind the closed forms.
//!
//! Nothing here calls the Bessel kernel: these routines are the reference the
//! closed forms are checked against.
//!
//! Oscillatory integrands such as cos(tx³)e^{−x²} are split into panels at
//! the zeros of the oscillating factor (further cut to unit width), each
//! panel is integrated with an n-point and a 2n-point Gauss-Legendre rule,
//! and panel contributions are accumulated with compensated summation in
//! panel order. The 2n-point total is returned; the gap to the n-point total
//! is the error estimate, floored at a rounding bound derived from the L¹
//! norm of the integrand.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::density::ln_density_cube_half;
use crate::distributions::GaussianSpec;
use crate::error::{domain, Error, Result};
use crate::quadrature::{adaptive_gk15, CompensatedSum, GaussLegendre};
use crate::special::{erf, gamma_fn};

/// Largest |t| the oscillatory oracles accept.
pub const MAX_ABS_T: f64 = 100.0;

const MAX_PANEL_WIDTH: f64 = 1.0;

/// Settings for the panel quadratures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    /// Cutoff for integrals against e^{−x²}; e^{−x²} is negligible beyond it.
    pub truncation_x: f64,
    /// Gauss nodes per panel for the coarse rule; the fine rule uses twice as many.
    pub panel_order: usize,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { truncation_x: 8.0, panel_order: 16, rel_tol: 1e-10, max_panels: 200_000 }
    }
}

impl QuadratureConfig {
    pub fn new(truncation_x: f64, panel_order: usize, rel_tol: f64, max_panels: usize) -> Result<Self> {
        let cfg = Self { truncation_x, panel_order, rel_tol, max_panels };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_panel_order(self, panel_order: usize) -> Result<Self> {
        Self::new(self.truncation_x, panel_order, self.rel_tol, self.max_panels)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.truncation_x >= 6.0) || !self.truncation_x.is_finite() {
            return Err(domain("truncation_x", self.truncation_x));
        }
        if !(4..=64).contains(&self.panel_order) {
            return Err(domain("panel_order", self.panel_order as f64));
        }
        if !(self.rel_tol >= 1e-14) || !self.rel_tol.is_finite() {
            return Err(domain("rel_tol", self.rel_tol));
        }
        if self.max_panels == 0 {
            return Err(domain("max_panels", 0.0));
        }
        Ok(())
    }
}

/// A quadrature value with its refinement error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: Complex64,
    pub est_error: f64,
    pub panels_used: usize,
}

impl OracleResult {
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

struct PanelSums {
    coarse: Complex64,
    fine: Complex64,
    abs_fine: f64,
    panels: usize,
}

fn panel_count(breaks: &[f64]) -> usize {
    breaks
        .windows(2)
        .map(|w| ((w[1] - w[0]) / MAX_PANEL_WIDTH).ceil().max(1.0) as usize)
        .sum()
}

fn budget_exceeded(cfg: &QuadratureConfig) -> Error {
    Error::ToleranceNotMet { est_error: f64::INFINITY, target: cfg.rel_tol }
}

fn integrate_panels<F>(breaks: &[f64], cfg: &QuadratureConfig, f: F) -> Result<PanelSums>
where
    F: Fn(f64) -> Complex64,
{
    let panels = panel_count(breaks);
    if panels > cfg.max_panels {
        return Err(budget_exceeded(cfg));
    }
    let coarse_rule = GaussLegendre::new(cfg.panel_order);
    let fine_rule = GaussLegendre::new(2 * cfg.panel_order);
    let mut coarse = (CompensatedSum::new(), CompensatedSum::new());
    let mut fine = (CompensatedSum::new(), CompensatedSum::new());
    let mut abs_fine = CompensatedSum::new();
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let pieces = ((b - a) / MAX_PANEL_WIDTH).ceil().max(1.0) as usize;
        let h = (b - a) / pieces as f64;
        for p in 0..pieces {
            let lo = a + p as f64 * h;
            let hi = if p + 1 == pieces { b } else { lo + h };
            let (c, _) = apply_rule(&coarse_rule, lo, hi, &f);
            let (v, abs) = apply_rule(&fine_rule, lo, hi, &f);
            coarse.0.add(c.re);
            coarse.1.add(c.im);
            fine.0.add(v.re);
            fine.1.add(v.im);
            abs_fine.add(abs);
        }
    }
    Ok(PanelSums {
        coarse: Complex64::new(coarse.0.value(), coarse.1.value()),
        fine: Complex64::new(fine.0.value(), fine.1.value()),
        abs_fine: abs_fine.value(),
        panels,
    })
}

fn apply_rule<F: Fn(f64) -> Complex64>(rule: &GaussLegendre, a: f64, b: f64, f: &F) -> (Complex64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    let mut abs = 0.0;
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        let v = f(mid + half * x) * *w;
        re.add(v.re);
        im.add(v.im);
        abs += v.norm();
    }
    (Complex64::new(re.value(), im.value()) * half, abs * half)
}

fn finish(sums: PanelSums, l1_bound: f64, cfg: &QuadratureConfig) -> Result<OracleResult> {
    let floor = 4.0 * f64::EPSILON * l1_bound;
    let est_error = (sums.fine - sums.coarse).norm().max(floor);
    let target = (cfg.rel_tol * sums.fine.norm()).max(floor);
    if est_error > target {
        return Err(Error::ToleranceNotMet { est_error, target });
    }
    Ok(OracleResult { value: sums.fine, est_error, panels_used: sums.panels })
}

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || t.abs() > MAX_ABS_T {
        return Err(domain("oscillation parameter t", t));
    }
    Ok(())
}

/// Breakpoints 0, x₀, x₁, …, X with x_k = ((k + offset)·π / (scale·a))^{1/3}.
fn cube_root_breaks(a: f64, scale: f64, offset: f64, x_max: f64, cfg: &QuadratureConfig) -> Result<Vec<f64>> {
    let mut breaks = vec![0.0];
    if a > 0.0 {
        let expected = (a * scale * x_max.powi(3) / PI) as usize + 1;
        if expected > cfg.max_panels {
            return Err(budget_exceeded(cfg));
        }
        let mut k = 0usize;
        loop {
            let x = ((k as f64 + offset) * PI / (scale * a)).cbrt();
            if x >= x_max {
                break;
            }
            if x > 0.0 {
                breaks.push(x);
            }
            k += 1;
        }
    }
    breaks.push(x_max);
    Ok(breaks)
}

// at t = 0 every characteristic function is the total mass, exactly 1
fn unit_mass() -> OracleResult {
    OracleResult { value: Complex64::new(1.0, 0.0), est_error: 0.0, panels_used: 0 }
}

/// E[e^{itX³}] = (2/√π)∫₀^∞ cos(|t|x³)e^{−x²} dx, panels cut at the zeros of
/// the cosine.
pub fn oracle_charfn_cube_half(t: f64, cfg: &QuadratureConfig) -> Result<OracleResult> {
    cfg.validate()?;
    check_t(t)?;
    if t == 0.0 {
        return Ok(unit_mass());
    }
    let a = t.abs();
    let x_max = cfg.truncation_x;
    let breaks = cube_root_breaks(a, 1.0, 0.5, x_max, cfg)?;
    let norm = 2.0 / PI.sqrt();
    let sums = integrate_panels(&breaks, cfg, |x| {
        Complex64::new(norm * (a * x * x * x).cos() * (-x * x).exp(), 0.0)
    })?;
    // ∫|integrand| ≤ (2/√π)∫₀^X e^{−x²} = erf(X)
    finish(sums, erf(x_max), cfg)
}

/// (1/√π)∫ e^{it(σλ+μ)³ − λ²} dλ, with σ and μ acting on X ~ N(0, 1/2)
/// itself: the cube of σX + μ, whose standard deviation is σ/√2.
pub fn oracle_charfn_operator(mu: f64, sigma_op: f64, t: f64, cfg: &QuadratureConfig) -> Result<OracleResult> {
    cfg.validate()?;
    check_t(t)?;
    if !mu.is_finite() {
        return Err(domain("mean", mu));
    }
    if !(sigma_op > 0.0) || !sigma_op.is_finite() {
        return Err(domain("scale", sigma_op));
    }
    if t == 0.0 {
        return Ok(unit_mass());
    }
    let x_max = cfg.truncation_x;
    let mut breaks = vec![-x_max];
    {
        // phase t·y³ with y = σλ + μ is monotone in λ; cut where it crosses kπ
        let y_lo = mu - sigma_op * x_max;
        let y_hi = mu + sigma_op * x_max;
        let (p_lo, p_hi) = {
            let a = t * y_lo.powi(3);
            let b = t * y_hi.powi(3);
            (a.min(b), a.max(b))
        };
        let k_lo = (p_lo / PI).ceil() as i64;
        let k_hi = (p_hi / PI).floor() as i64;
        if (k_hi - k_lo).max(0) as usize > cfg.max_panels {
            return Err(budget_exceeded(cfg));
        }
        for k in k_lo..=k_hi {
            let y = (k as f64 * PI / t).cbrt();
            let lambda = (y - mu) / sigma_op;
            if lambda > -x_max && lambda < x_max {
                breaks.push(lambda);
            }
        }
    }
    breaks.push(x_max);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let norm = 1.0 / PI.sqrt();
    let sums = integrate_panels(&breaks, cfg, |lambda| {
        let y = sigma_op * lambda + mu;
        let (s, c) = (t * y * y * y).sin_cos();
        Complex64::new(c, s) * (norm * (-lambda * lambda).exp())
    })?;
    finish(sums, erf(x_max), cfg)
}

/// E[e^{itW³}] for W ~ `spec`, by direct quadrature. The only route for a
/// nonzero mean; internally W = σ√2·X + μ.
pub fn oracle_charfn_general(spec: &GaussianSpec, t: f64, cfg: &QuadratureConfig) -> Result<OracleResult> {
    oracle_charfn_operator(spec.mu(), spec.scale_from_half(), t, cfg)
}

/// J(t) = ∫₀^∞ cos(tx³)e^{−x²}dx and its first two t-derivatives,
/// J′ = −∫x³ sin(tx³)e^{−x²}, J″ = −∫x⁶ cos(tx³)e^{−x²}.
pub fn oracle_j_derivative(t: f64, order: u8, cfg: &QuadratureConfig) -> Result<OracleResult> {
    cfg.validate()?;
    check_t(t)?;
    if !(t > 0.0) {
        return Err(domain("J argument", t));
    }
    if order > 2 {
        return Err(domain("J derivative order", order as f64));
    }
    let x_max = cfg.truncation_x;
    // quarter-period cuts cover the zeros of both sin and cos
    let breaks = cube_root_breaks(t, 2.0, 0.0, x_max, cfg)?;
    let sums = integrate_panels(&breaks, cfg, |x| {
        let x3 = x * x * x;
        let env = (-x * x).exp();
        let v = match order {
            0 => (t * x3).cos() * env,
            1 => -x3 * (t * x3).sin() * env,
            _ => -x3 * x3 * (t * x3).cos() * env,
        };
        Complex64::new(v, 0.0)
    })?;
    // ∫₀^∞ x^{3m} e^{−x²} dx = Γ((3m+1)/2)/2
    let l1 = 0.5 * gamma_fn((3.0 * order as f64 + 1.0) / 2.0)?;
    finish(sums, l1, cfg)
}

/// A(t) = 3√3·t·e^{−2/(27t²)}·J(t), its derivatives, and the residual of
/// (t²/4)A″ + (t/4)A′ − (4/(27²t⁴) + 1/9)A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AOdeResidual {
    pub t: f64,
    pub a: f64,
    pub a_prime: f64,
    pub a_second: f64,
    pub residual: f64,
}

impl AOdeResidual {
    /// |residual| ≤ tol·(1 + |A|).
    pub fn within(&self, tol: f64) -> bool {
        self.residual.abs() <= tol * (1.0 + self.a.abs())
    }
}

/// Assembles A, A′, A″ from J, J′, J″ by the product rule and evaluates the
/// modified-Bessel-type ODE that A must satisfy.
pub fn verify_a_ode(t: f64, cfg: &QuadratureConfig) -> Result<AOdeResidual> {
    let j0 = oracle_j_derivative(t, 0, cfg)?.re();
    let j1 = oracle_j_derivative(t, 1, cfg)?.re();
    let j2 = oracle_j_derivative(t, 2, cfg)?.re();
    let c = 3.0 * 3f64.sqrt();
    let a = 2.0 / 27.0;
    let e = (-a / (t * t)).exp();
    // P(t) = 3√3·t·e^{−a/t²}
    let p0 = c * t * e;
    let p1 = c * e * (1.0 + 2.0 * a / (t * t));
    let p2 = c * e * (4.0 * a * a / t.powi(5) - 2.0 * a / t.powi(3));
    let a0 = p0 * j0;
    let a1 = p1 * j0 + p0 * j1;
    let a2 = p2 * j0 + 2.0 * p1 * j1 + p0 * j2;
    let residual = 0.25 * t * t * a2 + 0.25 * t * a1 - (4.0 / (729.0 * t.powi(4)) + 1.0 / 9.0) * a0;
    Ok(AOdeResidual { t, a: a0, a_prime: a1, a_second: a2, residual })
}

const KREIN_U_MIN: f64 = -40.0;
const KREIN_U_MAX: f64 = 130.0;

/// ∫₀^∞ g(x) dx through x = e^u, on u ∈ [−40, 130].
fn half_line_log_substituted<G: Fn(f64) -> f64>(g: G, cfg: &QuadratureConfig) -> Result<f64> {
    let h = |u: f64| {
        let x = u.exp();
        g(x) * x
    };
    let mut total = CompensatedSum::new();
    for (a, b) in [(KREIN_U_MIN, 0.0), (0.0, KREIN_U_MAX)] {
        let r = adaptive_gk15(&h, a, b, 1e-14, cfg.rel_tol.min(1e-12), cfg.max_panels.min(10_000));
        if !r.converged {
            return Err(Error::ToleranceNotMet { est_error: r.est_error, target: 1e-14 });
        }
        total.add(r.value);
    }
    Ok(total.value())
}

/// The three half-line integrals the Krein integral splits into.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KreinComponents {
    /// ∫₀^∞ dx/(1+x²) = π/2
    pub arctan: f64,
    /// ∫₀^∞ ln x/(1+x²) dx = 0
    pub log: f64,
    /// ∫₀^∞ x^{2/3}/(1+x²) dx = π
    pub power: f64,
}

impl KreinComponents {
    /// 2(−(ln 3 + ½ln π)·arctan − (2/3)·log − power).
    pub fn combined(&self) -> f64 {
        let c = 3f64.ln() + 0.5 * PI.ln();
        2.0 * (-c * self.arctan - 2.0 / 3.0 * self.log - self.power)
    }
}

pub fn krein_components(cfg: &QuadratureConfig) -> Result<KreinComponents> {
    cfg.validate()?;
    Ok(KreinComponents {
        arctan: half_line_log_substituted(|x| 1.0 / (1.0 + x * x), cfg)?,
        log: half_line_log_substituted(|x| x.ln() / (1.0 + x * x), cfg)?,
        power: half_line_log_substituted(|x| x.powf(2.0 / 3.0) / (1.0 + x * x), cfg)?,
    })
}

/// ∫ ln f(x)/(1+x²) dx over ℝ for the density f of X³, integrating ln f
/// directly (2× the half line, by evenness).
pub fn krein_integral(cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    let half = half_line_log_substituted(|x| ln_density_cube_half(x) / (1.0 + x * x), cfg)?;
    Ok(2.0 * half)
}

/// Cutoff of the δ-neighbourhood of the density pole handled in u = x^{1/3}.
pub const POLE_DELTA: f64 = 1e-3;

/// E[g(Y)] = ∫ g(x) f(x) dx for Y = X³ by pole-aware panels.
///
/// Near the origin (|x| < δ) the integral is taken in u = x^{1/3}, where
/// f(x)dx = e^{−u²}du/√π is smooth; on δ ≤ |x| ≤ 1 panels grow geometrically;
/// beyond 1 they have width `min(1, π/(2·frequency))` up to X³, the image of
/// `truncation_x`.
pub fn density_expectation<G>(g: G, frequency: f64, cfg: &QuadratureConfig) -> Result<OracleResult>
where
    G: Fn(f64) -> Complex64,
{
    cfg.validate()?;
    let u_delta = POLE_DELTA.cbrt();
    let x_max = cfg.truncation_x.powi(3);
    let norm = 1.0 / PI.sqrt();
    let third = 1.0 / (3.0 * PI.sqrt());

    // u-space piece, both sides: ∫₀^{δ^{1/3}} (g(u³) + g(−u³)) e^{−u²}/√π du
    let near = integrate_panels(&[0.0, u_delta], cfg, |u| {
        let x = u * u * u;
        (g(x) + g(-x)) * (norm * (-u * u).exp())
    })?;

    let mut breaks = vec![POLE_DELTA];
    let mut x = POLE_DELTA;
    while x < 1.0 {
        x = (2.0 * x).min(1.0);
        breaks.push(x);
    }
    let width = if frequency > 0.0 { (0.5 * PI / frequency).min(1.0) } else { 1.0 };
    let steps = ((x_max - 1.0) / width).ceil() as usize;
    if steps > cfg.max_panels {
        return Err(budget_exceeded(cfg));
    }
    for k in 1..=steps {
        breaks.push((1.0 + k as f64 * width).min(x_max));
    }
    let far = integrate_panels(&breaks, cfg, |x| {
        let c = x.cbrt();
        let f = third * (-c * c).exp() / (c * c);
        (g(x) + g(-x)) * f
    })?;

    let sums = PanelSums {
        coarse: near.coarse + far.coarse,
        fine: near.fine + far.fine,
        abs_fine: near.abs_fine + far.abs_fine,
        panels: near.panels + far.panels,
    };
    let l1 = sums.abs_fine;
    finish(sums, l1, cfg)
}

/// ∫ e^{itx} f(x) dx for the density f of X³, computed in x-space.
pub fn density_charfn(t: f64, cfg: &QuadratureConfig) -> Result<OracleResult> {
    check_t(t)?;
    density_expectation(|x| Complex64::new(0.0, t * x).exp(), t.abs(), cfg)
}

/// ∫ x^{2k} f(x) dx for the density f of X³.
pub fn density_moment(k: u32, cfg: &QuadratureConfig) -> Result<OracleResult> {
    density_expectation(|x| Complex64::new(x.powi(2 * k as i32), 0.0), 0.0, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(5.9, 16, 1e-10, 10).is_err());
        assert!(QuadratureConfig::new(8.0, 3, 1e-10, 10).is_err());
        assert!(QuadratureConfig::new(8.0, 65, 1e-10, 10).is_err());
        assert!(QuadratureConfig::new(8.0, 16, 1e-15, 10).is_err());
        assert!(QuadratureConfig::new(8.0, 16, 1e-10, 0).is_err());
        assert!(QuadratureConfig::new(6.0, 4, 1e-14, 1).is_ok());
    }

    #[test]
    fn charfn_oracle_at_zero_is_one() {
        let r = oracle_charfn_cube_half(0.0, &cfg()).unwrap();
        assert!((r.re() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn charfn_oracle_is_even_in_t() {
        for &t in &[0.3, 1.0, 7.5] {
            let a = oracle_charfn_cube_half(t, &cfg()).unwrap();
            let b = oracle_charfn_cube_half(-t, &cfg()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }

    #[test]
    fn charfn_oracle_reference_value() {
        // high-precision oscillatory quadrature at t = 1
        let r = oracle_charfn_cube_half(1.0, &cfg()).unwrap();
        assert_relative_eq!(r.re(), 0.783_156_225_060_314_3, max_relative = 1e-12);
        assert!(r.est_error < 1e-12);
    }

    #[test]
    fn charfn_oracle_rejects_out_of_range_t() {
        assert!(oracle_charfn_cube_half(100.5, &cfg()).is_err());
        assert!(oracle_charfn_cube_half(f64::NAN, &cfg()).is_err());
        let tight = QuadratureConfig::new(8.0, 16, 1e-10, 50).unwrap();
        assert!(matches!(
            oracle_charfn_cube_half(50.0, &tight),
            Err(Error::ToleranceNotMet { .. })
        ));
    }

    #[test]
    fn coarse_rule_on_fast_oscillation_misses_tolerance() {
        let coarse = QuadratureConfig::new(8.0, 4, 1e-14, 200_000).unwrap();
        assert!(matches!(
            oracle_charfn_cube_half(60.0, &coarse),
            Err(Error::ToleranceNotMet { .. })
        ));
    }

    #[test]
    fn operator_form_reduces_to_half_law() {
        // σ = 1, μ = 0 acting on X is X itself
        for &t in &[0.4, 1.3, 3.0] {
            let g = oracle_charfn_operator(0.0, 1.0, t, &cfg()).unwrap();
            let h = oracle_charfn_cube_half(t, &cfg()).unwrap();
            assert!((g.value.re - h.re()).abs() < 1e-12);
            assert!(g.value.im.abs() < 1e-12);
        }
    }

    #[test]
    fn general_at_zero_t() {
        let spec = GaussianSpec::general(2.0, 0.7).unwrap();
        let r = oracle_charfn_general(&spec, 0.0, &cfg()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-14 && r.value.im.abs() < 1e-15);
    }

    #[test]
    fn j_small_t_limits() {
        let t = 1e-4;
        let j0 = oracle_j_derivative(t, 0, &cfg()).unwrap().re();
        assert!((j0 - PI.sqrt() / 2.0).abs() < 1e-6);
        // J′(t) ≈ −t ∫x⁶e^{−x²} = −t·Γ(7/2)/2
        let j1 = oracle_j_derivative(t, 1, &cfg()).unwrap().re();
        let lead = -t * gamma_fn(3.5).unwrap() / 2.0;
        assert!(j1 < 0.0);
        assert_relative_eq!(j1, lead, max_relative = 1e-5);
    }

    #[test]
    fn j_derivatives_match_finite_differences_of_j() {
        let t = 1.0;
        let h = 1e-4;
        let j = |s: f64| oracle_j_derivative(s, 0, &cfg()).unwrap().re();
        let j1 = oracle_j_derivative(t, 1, &cfg()).unwrap().re();
        let j2 = oracle_j_derivative(t, 2, &cfg()).unwrap().re();
        assert!((j1 - (j(t + h) - j(t - h)) / (2.0 * h)).abs() < 1e-8);
        assert!((j2 - (j(t + h) - 2.0 * j(t) + j(t - h)) / (h * h)).abs() < 1e-5);
    }

    #[test]
    fn j_rejects_bad_arguments() {
        assert!(oracle_j_derivative(0.0, 0, &cfg()).is_err());
        assert!(oracle_j_derivative(1.0, 3, &cfg()).is_err());
    }

    #[test]
    fn ode_residual_vanishes() {
        for &t in &[0.5, 1.0, 2.0] {
            let r = verify_a_ode(t, &cfg()).unwrap();
            assert!(r.within(1e-7), "t = {t}: {r:?}");
        }
    }

    #[test]
    fn krein_components_have_closed_values() {
        let c = krein_components(&cfg()).unwrap();
        assert!((c.arctan - PI / 2.0).abs() < 1e-9);
        assert!(c.log.abs() < 1e-9);
        assert!((c.power - PI).abs() < 1e-9);
    }

    #[test]
    fn density_moments_low_orders() {
        let m0 = density_moment(0, &cfg()).unwrap().re();
        assert!((m0 - 1.0).abs() < 1e-10);
        let m2 = density_moment(1, &cfg()).unwrap().re();
        assert_relative_eq!(m2, 15.0 / 8.0, max_relative = 1e-6);
    }
}
