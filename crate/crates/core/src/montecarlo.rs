//! Seeded Monte Carlo estimates for the cube of a Gaussian.
//!
//! Generator: SplitMix64 evaluated at counter positions, so any sample can be
//! produced without the ones before it. The i-th raw word (i = 0, 1, …) is
//!
//! ```text
//! x = seed + (i + 1)·0x9E3779B97F4A7C15           (wrapping)
//! x = (x ^ (x >> 30))·0xBF58476D1CE4E5B9
//! x = (x ^ (x >> 27))·0x94D049BB133111EB
//! x =  x ^ (x >> 31)
//! ```
//!
//! mapped to a uniform in (0, 1) as ((x >> 12) + ½)·2⁻⁵², which is exact.
//! Normal pair p uses words 2p and 2p+1 through Box–Muller,
//! z₂ₚ = r·cos(2πu₂), z₂ₚ₊₁ = r·sin(2πu₂) with r = √(−2 ln u₁). Sample i is (μ + σ·zᵢ)³.
//!
//! Sums are taken over fixed shards of [`SHARD_SIZE`] samples, in parallel,
//! and merged in shard order, so results do not depend on thread count.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::density::cdf_cube_half;
use crate::distributions::GaussianSpec;
use crate::error::{domain, Result};
use crate::quadrature::CompensatedSum;

/// Samples per shard; even, so shards never split a Box–Muller pair.
pub const SHARD_SIZE: u64 = 1 << 16;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// A reproducible sampling job.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleRun {
    pub seed: u64,
    pub n_samples: u64,
    pub spec: GaussianSpec,
}

impl SampleRun {
    pub fn new(seed: u64, n_samples: u64, spec: GaussianSpec) -> Result<Self> {
        if n_samples == 0 {
            return Err(domain("sample count", 0.0));
        }
        Ok(Self { seed, n_samples, spec })
    }

    fn shards(&self) -> Vec<(u64, u64)> {
        (0..self.n_samples.div_ceil(SHARD_SIZE))
            .map(|s| (s * SHARD_SIZE, ((s + 1) * SHARD_SIZE).min(self.n_samples)))
            .collect()
    }
}

/// The i-th SplitMix64 output for `seed`.
pub fn splitmix64_at(seed: u64, i: u64) -> u64 {
    let mut x = seed.wrapping_add(i.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn unit_open(word: u64) -> f64 {
    ((word >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}

/// Standard normal pair number `p` (samples 2p and 2p+1).
pub fn normal_pair(seed: u64, p: u64) -> (f64, f64) {
    let u1 = unit_open(splitmix64_at(seed, 2 * p));
    let u2 = unit_open(splitmix64_at(seed, 2 * p + 1));
    let r = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
    (r * c, r * s)
}

fn cube(spec: &GaussianSpec, z: f64) -> f64 {
    let w = spec.mu() + spec.sigma() * z;
    w * w * w
}

/// Sample i of the run.
pub fn sample_at(run: &SampleRun, i: u64) -> f64 {
    let (a, b) = normal_pair(run.seed, i / 2);
    cube(&run.spec, if i % 2 == 0 { a } else { b })
}

/// Iterator over the samples of a run, in index order.
pub struct CubeSamples {
    run: SampleRun,
    next: u64,
    end: u64,
    pending: Option<f64>,
}

impl Iterator for CubeSamples {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        if self.next >= self.end {
            return None;
        }
        let i = self.next;
        self.next += 1;
        if let Some(v) = self.pending.take() {
            return Some(v);
        }
        let (a, b) = normal_pair(self.run.seed, i / 2);
        if i % 2 == 0 {
            self.pending = Some(cube(&self.run.spec, b));
            Some(cube(&self.run.spec, a))
        } else {
            Some(cube(&self.run.spec, b))
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for CubeSamples {}

fn samples_in(run: &SampleRun, start: u64, end: u64) -> CubeSamples {
    CubeSamples { run: *run, next: start, end, pending: None }
}

/// All samples of the run, lazily.
pub fn sample_cube(run: &SampleRun) -> CubeSamples {
    samples_in(run, 0, run.n_samples)
}

/// Σ g(Y_i) over the run, sharded and merged in shard order.
fn sharded_sum<const D: usize, G>(run: &SampleRun, g: G) -> [f64; D]
where
    G: Fn(f64) -> [f64; D] + Sync,
{
    let partials: Vec<[f64; D]> = run
        .shards()
        .into_par_iter()
        .map(|(a, b)| {
            let mut acc = [(); D].map(|_| CompensatedSum::new());
            for y in samples_in(run, a, b) {
                for (s, v) in acc.iter_mut().zip(g(y)) {
                    s.add(v);
                }
            }
            acc.map(|s| s.value())
        })
        .collect();
    let mut total = [(); D].map(|_| CompensatedSum::new());
    for p in partials {
        for (s, v) in total.iter_mut().zip(p) {
            s.add(v);
        }
    }
    total.map(|s| s.value())
}

/// (1/N)·Σ e^{itY_j}.
pub fn empirical_charfn(run: &SampleRun, t: f64) -> Complex64 {
    if t == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let [re, im] = sharded_sum(run, |y| {
        let (s, c) = (t * y).sin_cos();
        [c, s]
    });
    let n = run.n_samples as f64;
    Complex64::new(re / n, im / n)
}

/// Sample moments of Y with standard errors of the mean and of the second
/// moment, both from the sample itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleMoments {
    pub n: u64,
    pub mean: f64,
    pub second: f64,
    pub fourth: f64,
    pub se_mean: f64,
    pub se_second: f64,
}

pub fn sample_moments(run: &SampleRun) -> SampleMoments {
    let [s1, s2, s4] = sharded_sum(run, |y| {
        let y2 = y * y;
        [y, y2, y2 * y2]
    });
    let n = run.n_samples as f64;
    let (mean, second, fourth) = (s1 / n, s2 / n, s4 / n);
    SampleMoments {
        n: run.n_samples,
        mean,
        second,
        fourth,
        se_mean: ((second - mean * mean).max(0.0) / n).sqrt(),
        se_second: ((fourth - second * second).max(0.0) / n).sqrt(),
    }
}

/// Observed and expected counts in one histogram bin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    /// N·(F(hi) − F(lo)) under the N(0, 1/2) cube law.
    pub expected: f64,
    /// √expected.
    pub poisson_se: f64,
}

impl HistogramBin {
    /// |count − expected| in Poisson standard errors.
    pub fn z_score(&self) -> f64 {
        (self.count as f64 - self.expected).abs() / self.poisson_se.max(f64::MIN_POSITIVE)
    }
}

/// Counts of samples in the half-open bins [edges[i], edges[i+1]), compared
/// with the N(0, 1/2) cube law. Edges must be finite and strictly increasing.
pub fn histogram(run: &SampleRun, edges: &[f64]) -> Result<Vec<HistogramBin>> {
    if edges.len() < 2 {
        return Err(domain("histogram edge count", edges.len() as f64));
    }
    if edges.iter().any(|e| !e.is_finite()) || edges.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(domain("histogram edges", f64::NAN));
    }
    let bins = edges.len() - 1;
    let partials: Vec<Vec<u64>> = run
        .shards()
        .into_par_iter()
        .map(|(a, b)| {
            let mut counts = vec![0u64; bins];
            for y in samples_in(run, a, b) {
                let j = edges.partition_point(|&e| e <= y);
                if j >= 1 && j <= bins {
                    counts[j - 1] += 1;
                }
            }
            counts
        })
        .collect();
    let mut counts = vec![0u64; bins];
    for p in partials {
        for (c, v) in counts.iter_mut().zip(p) {
            *c += v;
        }
    }
    let n = run.n_samples as f64;
    Ok(edges
        .windows(2)
        .zip(counts)
        .map(|(w, count)| {
            let expected = n * (cdf_cube_half(w[1]) - cdf_cube_half(w[0]));
            HistogramBin { lo: w[0], hi: w[1], count, expected, poisson_se: expected.sqrt() }
        })
        .collect())
}
