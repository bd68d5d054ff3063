use gausscube::charfn::charfn_cube_half;
use gausscube::distributions::GaussianSpec;
use gausscube::montecarlo::{empirical_charfn, histogram, sample_cube, sample_moments, SampleRun};
use gausscube::oracle::{oracle_charfn_general, QuadratureConfig};
use gausscube::verify::linear_grid;

const N: u64 = 1_000_000;

fn half_run(seed: u64) -> SampleRun {
    SampleRun::new(seed, N, GaussianSpec::half()).unwrap()
}

#[test]
fn identical_runs_reproduce() {
    let run = SampleRun::new(42, 10, GaussianSpec::half()).unwrap();
    let a: Vec<f64> = sample_cube(&run).collect();
    let b: Vec<f64> = sample_cube(&run).collect();
    assert_eq!(a, b);
    let other = SampleRun::new(43, 10, GaussianSpec::half()).unwrap();
    assert_ne!(a, sample_cube(&other).collect::<Vec<_>>());
    let big = half_run(42);
    assert_eq!(empirical_charfn(&big, 1.0), empirical_charfn(&big, 1.0));
}

#[test]
fn empirical_charfn_tracks_closed_form() {
    let run = half_run(42);
    let tol = 4.0 / (N as f64).sqrt();
    for t in [0.25, 0.5, 1.0, 2.0] {
        let e = empirical_charfn(&run, t);
        assert!(e.norm() <= 1.0 + 1e-15);
        assert!((e.re - charfn_cube_half(t).re).abs() <= tol, "t = {t}");
        assert!(e.im.abs() <= tol, "t = {t}");
    }
}

#[test]
fn empirical_charfn_tracks_general_oracle() {
    let spec = GaussianSpec::general(1.0, 1.0).unwrap();
    let run = SampleRun::new(7, N, spec).unwrap();
    let e = empirical_charfn(&run, 0.5);
    let o = oracle_charfn_general(&spec, 0.5, &QuadratureConfig::default()).unwrap().value;
    assert!((e - o).norm() <= 4.0 / (N as f64).sqrt());
}

#[test]
fn low_moments() {
    let m = sample_moments(&half_run(42));
    assert!(m.mean.abs() <= 4.0 * m.se_mean);
    assert!((m.second - 15.0 / 8.0).abs() <= 4.0 * m.se_second);
    // the variance of Y is 15/8; five standard errors
    assert!((m.second - m.mean * m.mean - 15.0 / 8.0).abs() <= 5.0 * m.se_second);
}

#[test]
fn histogram_matches_density_bins() {
    let run = half_run(42);
    let pos = linear_grid(0.1, 5.0, 50);
    let neg: Vec<f64> = pos.iter().rev().map(|x| -x).collect();
    for edges in [pos, neg] {
        for bin in histogram(&run, &edges).unwrap() {
            assert!(bin.z_score() <= 5.0, "bin [{}, {}): {} vs {}", bin.lo, bin.hi, bin.count, bin.expected);
        }
    }
}

#[test]
fn symmetric_sample_of_scaled_law() {
    let run = SampleRun::new(11, 200_000, GaussianSpec::scaled(2.0).unwrap()).unwrap();
    let t = 0.05;
    let e = empirical_charfn(&run, t);
    let closed = gausscube::charfn::charfn_cube_sigma(2.0, t).unwrap().re;
    assert!((e.re - closed).abs() <= 4.0 / (200_000f64).sqrt());
}
