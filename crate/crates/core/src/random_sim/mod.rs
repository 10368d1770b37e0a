//! The random model: `2k - 1` independent uniform orders on `0..n`, and the
//! size `X` of the largest transitive subtournament of the result.
//!
//! Every stochastic routine is a pure function of its seed. Trial `i` of an
//! experiment draws from `ChaCha8Rng::seed_from_u64(master_seed)` switched to
//! stream `i`, so results do not depend on scheduling or thread count.

mod patterns;

pub use patterns::*;

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::order::LinearOrder;
use crate::profile::Profile;
use crate::transitive::{
    find_transitive_recursive, log_floor_bound, max_transitive_with_limit, DEFAULT_MEMO_CAP,
    TRANSITIVE_ORACLE_LIMIT,
};

/// Default cap on `(n!)^(2k-1)` for [`exact_distribution`].
pub const EXACT_ENUMERATION_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    MonteCarlo,
    /// Some values came from the recursive extraction and only bound `X` from below.
    LowerBound,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    #[default]
    Distribution,
    Mean,
    AllTransitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub master_seed: u64,
    pub statistic: Statistic,
    /// Largest `n` for which `X` is computed exactly.
    pub oracle_limit: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, k: usize, trials: u64, master_seed: u64) -> Self {
        Self {
            n,
            k,
            trials,
            master_seed,
            statistic: Statistic::Distribution,
            oracle_limit: TRANSITIVE_ORACLE_LIMIT,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 || self.trials == 0 {
            return invalid("n, k and trials must all be at least 1");
        }
        Ok(())
    }
}

/// Counts of observed values of `X`. Exact and sampled results share this type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub counts: BTreeMap<usize, u64>,
    pub trials: u64,
    pub mode: Mode,
}

impl Histogram {
    fn from_values(values: impl IntoIterator<Item = usize>, mode: Mode) -> Self {
        let mut counts = BTreeMap::new();
        let mut trials = 0;
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
            trials += 1;
        }
        Self { counts, trials, mode }
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// Exact relative frequency of `value`, reduced.
    pub fn probability(&self, value: usize) -> Ratio<u64> {
        Ratio::new(self.count(value), self.trials)
    }

    pub fn estimate(&self, value: usize) -> f64 {
        self.count(value) as f64 / self.trials as f64
    }

    /// Binomial standard error of [`Histogram::estimate`]; zero for exact histograms.
    pub fn standard_error(&self, value: usize) -> f64 {
        if self.mode == Mode::Exact {
            return 0.0;
        }
        let p = self.estimate(value);
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }

    pub fn mean(&self) -> f64 {
        self.counts.iter().map(|(&v, &c)| v as f64 * c as f64).sum::<f64>() / self.trials as f64
    }

    pub fn mean_standard_error(&self) -> f64 {
        if self.mode == Mode::Exact || self.trials < 2 {
            return 0.0;
        }
        let mean = self.mean();
        let ss: f64 = self.counts.iter().map(|(&v, &c)| c as f64 * (v as f64 - mean).powi(2)).sum();
        (ss / (self.trials - 1) as f64 / self.trials as f64).sqrt()
    }

    /// JSON summary: counts, point estimates and standard errors per value.
    pub fn summary(&self) -> serde_json::Value {
        let estimates: BTreeMap<String, f64> = self.counts.keys().map(|&v| (v.to_string(), self.estimate(v))).collect();
        let errors: BTreeMap<String, f64> =
            self.counts.keys().map(|&v| (v.to_string(), self.standard_error(v))).collect();
        let exact: BTreeMap<String, String> =
            self.counts.keys().map(|&v| (v.to_string(), self.probability(v).to_string())).collect();
        serde_json::json!({
            "histogram": self.counts.iter().map(|(v, c)| (v.to_string(), c)).collect::<BTreeMap<_, _>>(),
            "trials": self.trials,
            "mode": self.mode,
            "estimates": estimates,
            "standard_errors": errors,
            "probabilities": exact,
            "mean": self.mean(),
            "mean_standard_error": self.mean_standard_error(),
        })
    }
}

/// `2k - 1` uniform orders from a generator; Fisher–Yates on the identity.
pub fn sample_profile_with<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Profile> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let orders = (0..2 * k - 1)
        .map(|_| {
            let mut seq: Vec<usize> = (0..n).collect();
            seq.shuffle(rng);
            LinearOrder::new(seq)
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(k, orders)
}

pub fn sample_profile(n: usize, k: usize, seed: u64) -> Result<Profile> {
    sample_profile_with(n, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Generator for trial `index` of an experiment with the given master seed.
pub fn trial_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct XValue {
    pub value: usize,
    pub mode: Mode,
}

/// `X` for one profile: exact up to the default oracle limit, a lower bound beyond it.
pub fn x_statistic(p: &Profile) -> Result<XValue> {
    x_statistic_with_limit(p, TRANSITIVE_ORACLE_LIMIT)
}

pub fn x_statistic_with_limit(p: &Profile, limit: usize) -> Result<XValue> {
    if p.n() > limit.min(64) {
        let w = find_transitive_recursive(p)?;
        return Ok(XValue {
            value: w.size(),
            mode: Mode::LowerBound,
        });
    }
    let t = p.majority_tournament();
    let value = max_transitive_with_limit(&t, limit, DEFAULT_MEMO_CAP)?.size();
    if value < log_floor_bound(p.n()) {
        return Err(Error::Internal(format!(
            "exact X = {value} below floor(log2 {}) + 1",
            p.n()
        )));
    }
    Ok(XValue {
        value,
        mode: Mode::Exact,
    })
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Exact distribution of `X(n, k)` by enumerating all `(n!)^(2k-1)` order tuples.
pub fn exact_distribution(n: usize, k: usize) -> Result<Histogram> {
    exact_distribution_with_budget(n, k, EXACT_ENUMERATION_BUDGET)
}

pub fn exact_distribution_with_budget(n: usize, k: usize, budget: u128) -> Result<Histogram> {
    if n == 0 || k == 0 {
        return invalid("n and k must be at least 1");
    }
    let m = 2 * k - 1;
    let f = factorial(n);
    let total = f.checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::ResourceLimit {
            what: "order tuples to enumerate",
            actual: total,
            limit: budget,
        });
    }
    let perms: Vec<LinearOrder> = permutations(n)
        .into_iter()
        .map(|s| LinearOrder::new(s).expect("permutation"))
        .collect();
    let f = perms.len();
    // partitioned by the index of the first order; merged in index order
    let per_lead: Vec<Vec<usize>> = (0..f)
        .into_par_iter()
        .map(|lead| {
            let rest = f.pow(m as u32 - 1);
            (0..rest)
                .map(|mut code| {
                    let mut orders = Vec::with_capacity(m);
                    orders.push(perms[lead].clone());
                    for _ in 1..m {
                        orders.push(perms[code % f].clone());
                        code /= f;
                    }
                    let p = Profile::new(k, orders).expect("valid");
                    x_statistic(&p).map(|x| x.value)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Histogram::from_values(per_lead.into_iter().flatten(), Mode::Exact))
}

/// Monte Carlo histogram of `X(n, k)`.
pub fn estimate_distribution(cfg: &ExperimentConfig) -> Result<Histogram> {
    cfg.validate()?;
    let values = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let p = sample_profile_with(cfg.n, cfg.k, &mut trial_rng(cfg.master_seed, i))?;
            x_statistic_with_limit(&p, cfg.oracle_limit)
        })
        .collect::<Result<Vec<XValue>>>()?;
    let mode = if values.iter().all(|x| x.mode == Mode::Exact) {
        Mode::MonteCarlo
    } else {
        Mode::LowerBound
    };
    Ok(Histogram::from_values(values.into_iter().map(|x| x.value), mode))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GuilbaudEstimate {
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    /// Estimated probability that three vertices form a transitive triple.
    pub estimate: f64,
    pub standard_error: f64,
}

/// Estimates `Pr[X(3, k) = 3]`, the chance that three alternatives have no majority cycle.
pub fn guilbaud_experiment(k: usize, trials: u64, seed: u64) -> Result<GuilbaudEstimate> {
    let h = estimate_distribution(&ExperimentConfig::new(3, k, trials, seed))?;
    Ok(GuilbaudEstimate {
        k,
        trials,
        seed,
        estimate: h.estimate(3),
        standard_error: h.standard_error(3),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub mean: f64,
    pub standard_error: f64,
    /// `MonteCarlo` when every sampled `X` was computed exactly, `LowerBound` otherwise.
    pub mode: Mode,
}

/// Exploratory table of `E[X(n, k)]` against `n`. Carries no pass/fail verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthTable {
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub rows: Vec<GrowthRow>,
    /// Least-squares slope of `ln E[X]` on `ln n`; absent with fewer than two rows.
    pub slope: Option<f64>,
    pub exploratory: bool,
}

impl GrowthTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,mean,standard_error,log_n,log_mean,mode\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.n,
                r.mean,
                r.standard_error,
                (r.n as f64).ln(),
                r.mean.ln(),
                serde_json::to_value(r.mode).expect("mode").as_str().expect("string")
            ));
        }
        out
    }
}

/// Seed used for the row with `n` vertices.
pub fn growth_row_seed(seed: u64, n: usize) -> u64 {
    seed.wrapping_add((n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn growth_exponent_experiment(
    k: usize,
    n_list: &[usize],
    trials: u64,
    seed: u64,
    oracle_limit: usize,
) -> Result<GrowthTable> {
    let rows = n_list
        .iter()
        .map(|&n| {
            let mut cfg = ExperimentConfig::new(n, k, trials, growth_row_seed(seed, n));
            cfg.statistic = Statistic::Mean;
            cfg.oracle_limit = oracle_limit;
            let h = estimate_distribution(&cfg)?;
            Ok(GrowthRow {
                n,
                mean: h.mean(),
                standard_error: h.mean_standard_error(),
                mode: h.mode,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), r.mean.ln())).collect();
    Ok(GrowthTable {
        k,
        trials,
        seed,
        slope: least_squares_slope(&points),
        rows,
        exploratory: true,
    })
}

pub fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
