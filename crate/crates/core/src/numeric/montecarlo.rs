use std::f64::consts::E;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{hyp1f1, NumericCheck, MC_SIGMAS};
use crate::exact::from_f64;
use crate::pbell::pbell_poly;
use crate::special::TriangleCache;

/// Work is always split into this many substreams, so results do not depend
/// on the thread count.
const CHUNKS: u64 = 64;

/// Seeded random stream: ChaCha8 keyed by `seed_from_u64(seed)`, with the
/// 64-bit ChaCha stream id selecting independent substreams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub const ALGORITHM: &'static str = "chacha8-seed_from_u64-stream";

    pub fn new(seed: u64) -> Self {
        RngStream { seed, stream: 0 }
    }

    /// The `i`-th child stream. Children of distinct parents or indices never
    /// share a ChaCha stream id as long as `i < 2^32` and stream ids stay
    /// below `2^32`.
    pub fn split(&self, i: u64) -> Self {
        RngStream {
            seed: self.seed,
            stream: (self.stream << 32) | (i + 1),
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// The mixture `Z ~ Poisson(lambda)`, `lambda ~ Beta(1, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetaPoisson {
    pub p: usize,
}

impl BetaPoisson {
    pub fn new(p: usize) -> Self {
        assert!(p >= 1, "beta-Poisson needs p >= 1");
        BetaPoisson { p }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.random();
        let lambda = 1.0 - u.powf(1.0 / self.p as f64);
        let v: f64 = rng.random();
        let mut k = 0u64;
        let mut prob = (-lambda).exp();
        let mut cdf = prob;
        while v > cdf && prob > 0.0 {
            k += 1;
            prob *= lambda / k as f64;
            cdf += prob;
        }
        k
    }

    /// `P(Z = k) = p!/(p+k)! 1F1(k+1; p+k+1; -1)`.
    pub fn pmf(&self, k: u64) -> f64 {
        let ratio: f64 = (1..=k).map(|j| 1.0 / (self.p as f64 + j as f64)).product();
        ratio
            * hyp1f1(
                k as f64 + 1.0,
                (self.p as u64 + k) as f64 + 1.0,
                -1.0,
                1e-17,
            )
            .expect("converges")
    }

    /// `(1/(e k!)) p/(p+k) 1F1(1; p+k+1; 1)`, which agrees with [`Self::pmf`]
    /// only for `p = 1`.
    pub fn pmf_as_printed(&self, k: u64) -> f64 {
        let inv_fact: f64 = (1..=k).map(|j| 1.0 / j as f64).product();
        let p = self.p as f64;
        inv_fact / E * p / (p + k as f64)
            * hyp1f1(1.0, p + k as f64 + 1.0, 1.0, 1e-17).expect("converges")
    }

    /// `E[e^{tZ}] = 1F1(1; p+1; e^t - 1)`.
    pub fn mgf(&self, t: f64) -> f64 {
        hyp1f1(1.0, self.p as f64 + 1.0, t.exp() - 1.0, 1e-16).expect("converges")
    }

    /// `1F1(p; p+1; e^t - 1)`, equal to [`Self::mgf`] only for `p = 1`.
    pub fn mgf_as_printed(&self, t: f64) -> f64 {
        let p = self.p as f64;
        hyp1f1(p, p + 1.0, t.exp() - 1.0, 1e-16).expect("converges")
    }
}

/// One draw of `Z` from `rng`.
pub fn beta_poisson_sample<R: Rng + ?Sized>(p: usize, rng: &mut R) -> u64 {
    BetaPoisson::new(p).sample(rng)
}

/// Running count, mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.count += 1.0;
        let d = v - self.mean;
        self.mean += d / self.count;
        self.m2 += d * (v - self.mean);
    }

    fn merge(a: Moments, b: Moments) -> Moments {
        if a.count == 0.0 {
            return b;
        }
        if b.count == 0.0 {
            return a;
        }
        let count = a.count + b.count;
        let d = b.mean - a.mean;
        Moments {
            count,
            mean: a.mean + d * b.count / count,
            m2: a.m2 + b.m2 + d * d * a.count * b.count / count,
        }
    }

    fn std_dev(&self) -> f64 {
        if self.count < 2.0 {
            0.0
        } else {
            (self.m2 / (self.count - 1.0)).sqrt()
        }
    }
}

fn pairwise(mut parts: Vec<Moments>) -> Moments {
    while parts.len() > 1 {
        parts = parts
            .chunks(2)
            .map(|c| {
                if c.len() == 2 {
                    Moments::merge(c[0], c[1])
                } else {
                    c[0]
                }
            })
            .collect();
    }
    parts.pop().unwrap_or_default()
}

/// Samples `f(Z)` over `CHUNKS` substreams in parallel, merged in a fixed
/// pairwise order.
fn sample_moments<F: Fn(u64) -> f64 + Sync>(
    p: usize,
    samples: u64,
    rng: RngStream,
    f: F,
) -> Moments {
    let law = BetaPoisson::new(p);
    let parts: Vec<Moments> = (0..CHUNKS)
        .into_par_iter()
        .map(|i| {
            let share = samples / CHUNKS + u64::from(i < samples % CHUNKS);
            let mut r = rng.split(i).rng();
            let mut m = Moments::default();
            for _ in 0..share {
                m.push(f(law.sample(&mut r)));
            }
            m
        })
        .collect();
    pairwise(parts)
}

/// Monte Carlo estimate of `E[(x + Z)^n]` against `B_{n,p}(x)`.
pub fn mc_moment_check(
    cache: &TriangleCache,
    n: usize,
    p: usize,
    x: f64,
    samples: u64,
    rng: RngStream,
) -> NumericCheck {
    let m = sample_moments(p, samples, rng, |z| (x + z as f64).powi(n as i32));
    let half_width = MC_SIGMAS * m.std_dev() / (samples as f64).sqrt();
    let target = pbell_poly(cache, n, p).eval(&from_f64(x).expect("finite x"));
    let mut check = NumericCheck::new(
        "mc",
        &[
            ("n", n as f64),
            ("p", p as f64),
            ("x", x),
            ("seed", rng.seed as f64),
        ],
        target,
        m.mean,
        half_width,
        samples,
    );
    check.ci_half_width = Some(half_width);
    check
}

/// Sample MGF compared with both candidate closed forms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MgfReport {
    pub check: &'static str,
    pub p: usize,
    pub t: f64,
    pub seed: u64,
    pub samples: u64,
    pub estimate: f64,
    pub ci_half_width: f64,
    pub derived_form: f64,
    pub derived_abs_error: f64,
    pub derived_pass: bool,
    pub printed_form: f64,
    pub printed_abs_error: f64,
    pub printed_pass: bool,
}

impl MgfReport {
    /// True if at least one closed form lies inside the confidence band.
    pub fn pass(&self) -> bool {
        self.derived_pass || self.printed_pass
    }
}

pub fn mgf_check(p: usize, t: f64, samples: u64, rng: RngStream) -> MgfReport {
    let law = BetaPoisson::new(p);
    let m = sample_moments(p, samples, rng, |z| (t * z as f64).exp());
    let ci = MC_SIGMAS * m.std_dev() / (samples as f64).sqrt();
    let derived = law.mgf(t);
    let printed = law.mgf_as_printed(t);
    let (de, pe) = ((m.mean - derived).abs(), (m.mean - printed).abs());
    MgfReport {
        check: "mgf",
        p,
        t,
        seed: rng.seed,
        samples,
        estimate: m.mean,
        ci_half_width: ci,
        derived_form: derived,
        derived_abs_error: de,
        derived_pass: de <= ci,
        printed_form: printed,
        printed_abs_error: pe,
        printed_pass: pe <= ci,
    }
}

/// Empirical frequency of one value of `Z` against both pmf forms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PmfRow {
    pub k: u64,
    pub empirical: f64,
    pub sigma: f64,
    pub derived: f64,
    pub printed: f64,
    pub derived_pass: bool,
    pub printed_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PmfReport {
    pub p: usize,
    pub samples: u64,
    pub sigmas: f64,
    pub rows: Vec<PmfRow>,
}

/// Frequencies of `Z = 0..=k_max`, each judged within `sigmas` binomial
/// standard errors.
pub fn pmf_check(p: usize, k_max: u64, samples: u64, sigmas: f64, rng: RngStream) -> PmfReport {
    let law = BetaPoisson::new(p);
    let rows = (0..=k_max)
        .map(|k| {
            let m = sample_moments(p, samples, rng, |z| f64::from(u8::from(z == k)));
            let derived = law.pmf(k);
            let printed = law.pmf_as_printed(k);
            let sigma = (derived * (1.0 - derived) / samples as f64).sqrt();
            PmfRow {
                k,
                empirical: m.mean,
                sigma,
                derived,
                printed,
                derived_pass: (m.mean - derived).abs() <= sigmas * sigma,
                printed_pass: (m.mean - printed).abs() <= sigmas * sigma,
            }
        })
        .collect();
    PmfReport {
        p,
        samples,
        sigmas,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use rand::RngCore;

    #[test]
    fn reproducible_sequences() {
        let a: Vec<u64> = {
            let mut r = RngStream::new(7).rng();
            (0..16).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = RngStream::new(7).rng();
            (0..16).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        let mut other = RngStream::new(7).split(3).rng();
        assert_ne!(a[0], other.next_u64());
        let c = TriangleCache::new();
        let x = mc_moment_check(&c, 2, 2, 1.0, 20_000, RngStream::new(11));
        let y = mc_moment_check(&c, 2, 2, 1.0, 20_000, RngStream::new(11));
        assert_eq!(x.to_json(), y.to_json());
        assert_eq!(x.estimate.to_bits(), y.estimate.to_bits());
    }

    #[test]
    fn independent_of_thread_count() {
        let c = TriangleCache::new();
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let a = one.install(|| mc_moment_check(&c, 3, 1, 0.0, 10_000, RngStream::new(5)));
        let b = mc_moment_check(&c, 3, 1, 0.0, 10_000, RngStream::new(5));
        assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
    }

    #[test]
    fn zeroth_moment_is_exact() {
        let c = TriangleCache::new();
        let r = mc_moment_check(&c, 0, 3, 2.5, 1000, RngStream::new(1));
        assert_eq!(r.target, int(1));
        assert_eq!(r.estimate, 1.0);
        assert_eq!(r.ci_half_width, Some(0.0));
        assert!(r.pass);
    }

    #[test]
    fn first_moment() {
        let c = TriangleCache::new();
        let r = mc_moment_check(&c, 1, 1, 0.0, 1_000_000, RngStream::new(42));
        assert_eq!(r.target, ratio(1, 2));
        assert!(r.pass, "{r:?}");
        // 3-sigma check of the mean of Z for p = 1
        assert!(r.abs_error <= 0.75 * r.tolerance);
    }

    #[test]
    fn uniform_intensity_for_p1() {
        // P(Z = 0) = E[e^{-lambda}] = 1 - 1/e for lambda uniform
        let law = BetaPoisson::new(1);
        assert!((law.pmf(0) - (1.0 - 1.0 / E)).abs() < 1e-14);
        let mut r = RngStream::new(3).rng();
        let zeros = (0..200_000).filter(|_| law.sample(&mut r) == 0).count() as f64 / 200_000.0;
        let sigma = (law.pmf(0) * (1.0 - law.pmf(0)) / 200_000.0).sqrt();
        assert!((zeros - law.pmf(0)).abs() < 4.0 * sigma);
    }

    #[test]
    fn pmf_forms() {
        let law = BetaPoisson::new(2);
        assert!((law.pmf(0) - 2.0 / E).abs() < 1e-14);
        assert!((law.pmf_as_printed(0) - 2.0 * (E - 2.0) / E).abs() < 1e-14);
        for p in 1..=4 {
            let law = BetaPoisson::new(p);
            let total: f64 = (0..40).map(|k| law.pmf(k)).sum();
            assert!((total - 1.0).abs() < 1e-13, "p={p}");
        }
        let one = BetaPoisson::new(1);
        for k in 0..6 {
            assert!((one.pmf(k) - one.pmf_as_printed(k)).abs() < 1e-14);
        }
    }

    #[test]
    fn empirical_pmf() {
        let r1 = pmf_check(1, 2, 1_000_000, 3.0, RngStream::new(2024));
        assert!(
            r1.rows.iter().all(|r| r.derived_pass && r.printed_pass),
            "{r1:?}"
        );
        let r2 = pmf_check(2, 2, 1_000_000, 3.0, RngStream::new(2024));
        assert!(r2.rows.iter().all(|r| r.derived_pass), "{r2:?}");
        assert!(!r2.rows[0].printed_pass);
    }

    #[test]
    fn mgf_forms() {
        for p in 1..=4 {
            let law = BetaPoisson::new(p);
            assert!((law.mgf(0.0) - 1.0).abs() < 1e-15);
            assert!((law.mgf_as_printed(0.0) - 1.0).abs() < 1e-15);
            // E[e^{tZ}] = sum_k e^{tk} P(Z = k)
            let t = 0.4;
            let direct: f64 = (0..60).map(|k| (t * k as f64).exp() * law.pmf(k)).sum();
            assert!((direct - law.mgf(t)).abs() < 1e-12, "p={p}");
        }
        let r = mgf_check(1, 0.3, 1_000_000, RngStream::new(42));
        assert!(r.derived_pass && r.printed_pass && r.pass());
        let r = mgf_check(3, -0.5, 1_000_000, RngStream::new(42));
        assert!(r.derived_pass, "{r:?}");
        assert!(!r.printed_pass, "{r:?}");
        assert!((r.derived_form - 0.908_89).abs() < 1e-4);
    }

    #[test]
    fn pairwise_merge_matches_direct() {
        let vals: Vec<f64> = (0..37).map(|i| (i as f64).sin() * 3.0 + 1.0).collect();
        let mut direct = Moments::default();
        vals.iter().for_each(|v| direct.push(*v));
        let parts: Vec<Moments> = vals
            .chunks(5)
            .map(|c| {
                let mut m = Moments::default();
                c.iter().for_each(|v| m.push(*v));
                m
            })
            .collect();
        let merged = pairwise(parts);
        assert!((merged.mean - direct.mean).abs() < 1e-13);
        assert!((merged.m2 - direct.m2).abs() < 1e-10);
    }
}
