//! Seeded sampling experiments measuring how common the h-Sidon property is.
//!
//! Failing configurations all lie on one of finitely many hyperplanes, so a
//! high-entropy sampler should almost never hit one; the experiments here
//! make that observable. Sampling is deterministic: each trial draws from
//! its own ChaCha stream keyed by (seed, trial index), so runs are
//! reproducible and trials can be distributed without changing the counts.
//! An exhaustive integer-grid counter provides exact small-scale numbers to
//! compare against.

use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::verify::verify_bruteforce;

/// How configurations are drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SamplerKind {
    /// k distinct integers, uniform in 1..=n.
    UniformIntegerGrid { n: u64 },
    /// k distinct rationals with numerator in -m..=m and denominator in 1..=m.
    RandomRational { m: u64 },
}

/// A sampler plus its seed; the text form is `grid:<N>` or `rational:<M>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerSpec {
    pub kind: SamplerKind,
    pub seed: u64,
}

impl SamplerSpec {
    pub fn grid(n: u64, seed: u64) -> Self {
        SamplerSpec {
            kind: SamplerKind::UniformIntegerGrid { n },
            seed,
        }
    }

    pub fn rational(m: u64, seed: u64) -> Self {
        SamplerSpec {
            kind: SamplerKind::RandomRational { m },
            seed,
        }
    }

    /// Parses `grid:<N>` or `rational:<M>` (the CLI sampler syntax).
    pub fn parse_kind(text: &str) -> Result<SamplerKind> {
        let err = || {
            Error::Sampler(format!(
                "cannot parse sampler {text:?}: expected grid:<N> or rational:<M>"
            ))
        };
        let (name, value) = text.split_once(':').ok_or_else(err)?;
        let value: u64 = value.parse().map_err(|_| err())?;
        match name {
            "grid" => Ok(SamplerKind::UniformIntegerGrid { n: value }),
            "rational" => Ok(SamplerKind::RandomRational { m: value }),
            _ => Err(err()),
        }
    }
}

impl std::fmt::Display for SamplerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SamplerKind::UniformIntegerGrid { n } => write!(f, "grid:{n}"),
            SamplerKind::RandomRational { m } => write!(f, "rational:{m}"),
        }
    }
}

/// Outcome of a density run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub k: usize,
    pub h: u32,
    pub trials: u64,
    pub sidon_count: u64,
    /// Exact fraction sidon_count / trials.
    pub fraction: Rational,
    pub seed: u64,
    pub sampler: String,
}

/// Draws the configuration for trial 0; see [`sample_configuration_trial`].
pub fn sample_configuration(k: usize, spec: &SamplerSpec) -> Result<PointConfiguration> {
    sample_configuration_trial(k, spec, 0)
}

/// Draws k pairwise-distinct points for one trial, deterministically in
/// (seed, trial).
///
/// Duplicate draws are rejected and redrawn, with a retry budget so an
/// undersized grid fails cleanly instead of spinning.
pub fn sample_configuration_trial(
    k: usize,
    spec: &SamplerSpec,
    trial: u64,
) -> Result<PointConfiguration> {
    if k == 0 {
        return Err(Error::Sampler("k must be at least 1".into()));
    }
    match spec.kind {
        SamplerKind::UniformIntegerGrid { n } => {
            if (n as u128) < k as u128 {
                return Err(Error::Sampler(format!(
                    "grid 1..={n} cannot hold {k} distinct points"
                )));
            }
        }
        SamplerKind::RandomRational { m } => {
            if m < 1 {
                return Err(Error::Sampler("rational sampler needs m >= 1".into()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(trial);
    let mut points: Vec<Rational> = Vec::with_capacity(k);
    let budget = 10_000 + 200 * k as u64;
    let mut attempts = 0;
    while points.len() < k {
        attempts += 1;
        if attempts > budget {
            return Err(Error::Sampler(format!(
                "gave up after {budget} draws looking for {k} distinct points ({})",
                spec.kind
            )));
        }
        let candidate = match spec.kind {
            SamplerKind::UniformIntegerGrid { n } => {
                Rational::from_integer(rng.random_range(1..=n))
            }
            SamplerKind::RandomRational { m } => {
                let numerator = rng.random_range(-(m as i128)..=m as i128);
                let denominator = rng.random_range(1..=m);
                Rational::new(numerator.into(), denominator.into()).expect("denominator >= 1")
            }
        };
        if !points.contains(&candidate) {
            points.push(candidate);
        }
    }
    PointConfiguration::new(points)
}

/// Runs `trials` independent sampled verifications and reports the exact
/// fraction that came out h-Sidon.
pub fn sidon_density(k: usize, h: u32, trials: u64, spec: &SamplerSpec) -> Result<DensityReport> {
    if trials == 0 {
        return Err(Error::Sampler("at least one trial is required".into()));
    }
    let mut sidon_count = 0u64;
    for trial in 0..trials {
        let config = sample_configuration_trial(k, spec, trial)?;
        if verify_bruteforce(&config, h).is_sidon {
            sidon_count += 1;
        }
    }
    Ok(DensityReport {
        k,
        h,
        trials,
        sidon_count,
        fraction: Rational::from_integer(sidon_count)
            / Rational::from_integer(trials),
        seed: spec.seed,
        sampler: spec.kind.to_string(),
    })
}

/// Default cap on the number of subsets an exhaustive count will visit.
pub const DEFAULT_SUBSET_BUDGET: u128 = 1_000_000;

/// Exact fraction of k-subsets of {1..n} that are h-Sidon, by full
/// enumeration, within the default budget.
pub fn exact_grid_density(n: u64, k: usize, h: u32) -> Result<DensityReport> {
    exact_grid_density_with_budget(n, k, h, DEFAULT_SUBSET_BUDGET)
}

/// As [`exact_grid_density`] with an explicit subset budget.
pub fn exact_grid_density_with_budget(
    n: u64,
    k: usize,
    h: u32,
    budget: u128,
) -> Result<DensityReport> {
    if k == 0 || (n as u128) < k as u128 {
        return Err(Error::Sampler(format!(
            "grid 1..={n} cannot hold {k} distinct points"
        )));
    }
    let needed = binomial(n, k as u64);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed,
            limit: budget,
        });
    }
    let mut trials = 0u64;
    let mut sidon_count = 0u64;
    for subset in (1..=n).combinations(k) {
        trials += 1;
        let config = PointConfiguration::new(
            subset.into_iter().map(Rational::from_integer).collect(),
        )?;
        if verify_bruteforce(&config, h).is_sidon {
            sidon_count += 1;
        }
    }
    Ok(DensityReport {
        k,
        h,
        trials,
        sidon_count,
        fraction: Rational::from_integer(sidon_count) / Rational::from_integer(trials),
        seed: 0,
        sampler: format!("exhaustive-grid:{n}"),
    })
}

/// C(n, k), saturating at u128::MAX rather than overflowing.
fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
