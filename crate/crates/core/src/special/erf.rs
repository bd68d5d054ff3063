use std::f64::consts::PI;

const SERIES_LIMIT: f64 = 3.0;

/// The error function.
///
/// Uses the all-positive ascending series
/// erf(x) = 2/√π · e^{-x²} · Σ 2ⁿ x^{2n+1} / (1·3···(2n+1)) for |x| < 3
/// and the complementary continued fraction beyond.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let a = x.abs();
    if a.is_infinite() {
        return 1f64.copysign(x);
    }
    let r = if a < SERIES_LIMIT {
        erf_series(a)
    } else {
        1.0 - erfc_continued_fraction(a)
    };
    r.copysign(x)
}

/// The complementary error function 1 - erf(x).
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return if x > 0.0 { 0.0 } else { 2.0 };
    }
    if x >= SERIES_LIMIT {
        erfc_continued_fraction(x)
    } else if x <= -SERIES_LIMIT {
        2.0 - erfc_continued_fraction(-x)
    } else {
        1.0 - erf(x)
    }
}

fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if term <= f64::EPSILON * 0.25 * sum {
            break;
        }
    }
    2.0 / PI.sqrt() * (-x2).exp() * sum
}

// erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..500 {
        let a = 0.5 * k as f64;
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        d = 1.0 / d;
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (PI.sqrt() * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussLegendre;

    // Independent reference: Gauss-Legendre on (2/√π)∫₀ˣ e^{-t²} dt.
    fn erf_by_quadrature(x: f64) -> f64 {
        let rule = GaussLegendre::new(32);
        let panels = 64;
        let h = x / panels as f64;
        let mut s = 0.0;
        for k in 0..panels {
            let a = k as f64 * h;
            s += rule.integrate(a, a + h, |t| (-t * t).exp());
        }
        2.0 / PI.sqrt() * s
    }

    #[test]
    fn erf_zero() {
        assert_eq!(erf(0.0), 0.0);
    }

    #[test]
    fn erf_one() {
        assert!((erf(1.0) - 0.842_700_792_949_714_87).abs() <= 1e-15);
        assert!((erf(1.0) - erf_by_quadrature(1.0)).abs() <= 1e-14);
    }

    #[test]
    fn erf_ten_saturates() {
        assert!((erf(10.0) - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn erf_matches_quadrature_across_regimes() {
        for k in 1..=60 {
            let x = k as f64 * 0.1;
            let q = erf_by_quadrature(x);
            assert!((erf(x) - q).abs() <= 1e-14, "x = {x}: {} vs {q}", erf(x));
        }
    }

    #[test]
    fn erf_is_continuous_at_regime_switch() {
        let below = erf(SERIES_LIMIT * (1.0 - 1e-15));
        let above = erf(SERIES_LIMIT);
        assert!((above - below).abs() < 1e-15);
    }

    #[test]
    fn erfc_tail_relative_accuracy() {
        // erfc(5) = 1.5374597944280348502e-12
        let want = 1.537_459_794_428_034_8e-12;
        assert!(((erfc(5.0) - want) / want).abs() < 1e-13);
        assert!((erfc(-5.0) - (2.0 - want)).abs() < 1e-15);
    }

    #[test]
    fn infinite_arguments() {
        assert_eq!(erf(f64::INFINITY), 1.0);
        assert_eq!(erf(f64::NEG_INFINITY), -1.0);
        assert_eq!(erfc(f64::INFINITY), 0.0);
        assert_eq!(erfc(f64::NEG_INFINITY), 2.0);
    }

    #[test]
    fn erf_is_odd_and_bounded() {
        for k in -80..=80 {
            let x = k as f64 * 0.125;
            assert_eq!(erf(-x), -erf(x));
            assert!(erf(x).abs() <= 1.0);
        }
    }

    #[test]
    fn erf_is_monotone() {
        let mut prev = erf(-7.0);
        for k in 1..=1400 {
            let x = -7.0 + k as f64 * 0.01;
            let v = erf(x);
            assert!(v >= prev, "non-monotone at {x}");
            prev = v;
        }
    }
}
