//! Replicated experiments: simulate, test, estimate, aggregate.
//!
//! Replication `i` of the `k`-th response count draws from stream
//! `(k << 32) | i` of the master seed, so records do not depend on how the
//! work is scheduled. Aggregation sorts records before reducing.

pub mod export;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ensembles::{simulate_model, Dataset, ModelConfig, SignalConvention};
use crate::error::{Error, Result};
use crate::estimation::{
    clt_parameters, empirical_correction, estimate_thetas_from_a, estimate_thetas_from_y, studentized_error,
    CorrectionFunction, EstimateRecord, OutlierRule,
};
use crate::ranktests::{
    select_rank_bsw, select_rank_tw, stat_coefficients, stat_fitted, stat_responses, tw_cdf, Algorithm, StatisticKind,
    DEFAULT_SIGNIFICANCE,
};
use crate::regression::{fitted_responses, ols_coefficients, singular_values, squared_singular_values};
use crate::spectra::{AbLaw, Esd, MpLaw, SpectralLaw};

pub use export::{export_results, Artifact, Format, Series};

pub const DEFAULT_REPLICATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Estimator {
    FromA,
    FromY,
    EmpiricalA,
}

impl Estimator {
    pub const ALL: [Estimator; 3] = [Estimator::FromA, Estimator::FromY, Estimator::EmpiricalA];

    pub fn name(&self) -> &'static str {
        match self {
            Estimator::FromA => "FromA",
            Estimator::FromY => "FromY",
            Estimator::EmpiricalA => "EmpiricalA",
        }
    }
}

impl std::fmt::Display for Estimator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Estimator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Estimator::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown estimator {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Output {
    RankTable,
    EstimateTable,
    EsdOverlay,
    TwNullCdf,
    CltHistogram,
    ThresholdSurface,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(usize),
    Many(Vec<usize>),
}

/// On-disk form of [`ExperimentConfig`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExperimentFile {
    #[serde(rename = "N")]
    n_obs: usize,
    p: usize,
    r: OneOrMany,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(default)]
    thetas: Vec<f64>,
    #[serde(default)]
    signal_convention: SignalConvention,
    #[serde(default = "default_replications")]
    replications: usize,
    #[serde(default)]
    master_seed: u64,
    #[serde(default = "default_algorithms")]
    algorithms: Vec<Algorithm>,
    #[serde(default)]
    estimators: Vec<Estimator>,
    #[serde(default = "default_outputs")]
    outputs: Vec<Output>,
    #[serde(default = "default_significance")]
    significance: f64,
}

fn default_replications() -> usize {
    DEFAULT_REPLICATIONS
}

fn default_algorithms() -> Vec<Algorithm> {
    Algorithm::ALL.to_vec()
}

fn default_outputs() -> Vec<Output> {
    vec![Output::RankTable]
}

fn default_significance() -> f64 {
    DEFAULT_SIGNIFICANCE
}

/// A family of models sharing `N`, `p` and the signal, one per response count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ExperimentFile", into = "ExperimentFile")]
pub struct ExperimentConfig {
    pub n_obs: usize,
    pub p: usize,
    pub r_values: Vec<usize>,
    pub thetas: Vec<f64>,
    pub convention: SignalConvention,
    pub replications: usize,
    pub master_seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub estimators: Vec<Estimator>,
    pub outputs: Vec<Output>,
    pub significance: f64,
}

impl TryFrom<ExperimentFile> for ExperimentConfig {
    type Error = Error;

    fn try_from(f: ExperimentFile) -> Result<Self> {
        let r_values = match f.r {
            OneOrMany::One(r) => vec![r],
            OneOrMany::Many(v) => v,
        };
        let thetas = match (f.rank, f.thetas.len()) {
            (None, _) => f.thetas,
            (Some(k), n) if k == n => f.thetas,
            (Some(k), 1) => vec![f.thetas[0]; k],
            (Some(k), n) => {
                return Err(Error::Parameter(format!("rank {k} does not match {n} thetas")));
            }
        };
        let config = ExperimentConfig {
            n_obs: f.n_obs,
            p: f.p,
            r_values,
            thetas,
            convention: f.signal_convention,
            replications: f.replications,
            master_seed: f.master_seed,
            algorithms: f.algorithms,
            estimators: f.estimators,
            outputs: f.outputs,
            significance: f.significance,
        };
        config.validate()?;
        Ok(config)
    }
}

impl From<ExperimentConfig> for ExperimentFile {
    fn from(c: ExperimentConfig) -> Self {
        ExperimentFile {
            n_obs: c.n_obs,
            p: c.p,
            r: if c.r_values.len() == 1 {
                OneOrMany::One(c.r_values[0])
            } else {
                OneOrMany::Many(c.r_values)
            },
            rank: Some(c.thetas.len()),
            thetas: c.thetas,
            signal_convention: c.convention,
            replications: c.replications,
            master_seed: c.master_seed,
            algorithms: c.algorithms,
            estimators: c.estimators,
            outputs: c.outputs,
            significance: c.significance,
        }
    }
}

impl ExperimentConfig {
    /// Null experiment with every algorithm and the rank table.
    pub fn new(n_obs: usize, p: usize, r_values: Vec<usize>) -> Self {
        ExperimentConfig {
            n_obs,
            p,
            r_values,
            thetas: Vec::new(),
            convention: SignalConvention::UnitVectors,
            replications: DEFAULT_REPLICATIONS,
            master_seed: 0,
            algorithms: default_algorithms(),
            estimators: Vec::new(),
            outputs: default_outputs(),
            significance: DEFAULT_SIGNIFICANCE,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parameter(format!("experiment config: {e}")))
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 {
            return Err(Error::Parameter("replications must be at least 1".into()));
        }
        if self.outputs.is_empty() {
            return Err(Error::Parameter("at least one output must be requested".into()));
        }
        if self.r_values.is_empty() {
            return Err(Error::Parameter("at least one value of r is required".into()));
        }
        if !(self.significance > 0.0 && self.significance < 1.0) {
            return Err(Error::Parameter(format!(
                "significance must be in (0, 1), got {}",
                self.significance
            )));
        }
        for &r in &self.r_values {
            self.model(r)?;
        }
        Ok(())
    }

    pub fn model(&self, r: usize) -> Result<ModelConfig> {
        Ok(ModelConfig::new(self.n_obs, self.p, r, self.thetas.clone())?.with_convention(self.convention))
    }

    fn stream(&self, r_position: usize, index: u64) -> u64 {
        ((r_position as u64) << 32) | index
    }
}

/// Everything computed from one simulated dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicationRecord {
    pub r: usize,
    pub index: u64,
    pub ranks: BTreeMap<Algorithm, usize>,
    /// Largest centered and scaled statistic of each TW test that ran.
    pub largest_statistics: BTreeMap<StatisticKind, f64>,
    pub estimates: BTreeMap<Estimator, Vec<EstimateRecord>>,
}

/// Least squares fit of one dataset.
pub struct Fit {
    pub a_hat: DMatrix<f64>,
    pub y_hat: DMatrix<f64>,
}

pub fn fit(data: &Dataset) -> Result<Fit> {
    let a_hat = ols_coefficients(&data.x, &data.y)?;
    let y_hat = fitted_responses(&data.x, &a_hat)?;
    Ok(Fit { a_hat, y_hat })
}

/// Singular values of `X \ U`.
pub fn noise_coefficient_singulars(data: &Dataset) -> Result<Vec<f64>> {
    singular_values(&ols_coefficients(&data.x, &data.noise)?)
}

fn estimate(
    estimator: Estimator,
    model: &ModelConfig,
    data: &Dataset,
    fit: &Fit,
    s: usize,
) -> Result<Vec<EstimateRecord>> {
    let (lambda, beta) = (model.lambda(), model.beta());
    let rule = OutlierRule::default();
    match estimator {
        Estimator::FromA => {
            let correction = CorrectionFunction::from_a(lambda, beta)?;
            estimate_thetas_from_a(&fit.a_hat, s, &correction, lambda, beta, rule)
        }
        Estimator::FromY => estimate_thetas_from_y(&fit.y_hat, model.p, s, rule),
        Estimator::EmpiricalA => {
            let correction = empirical_correction(&noise_coefficient_singulars(data)?, model.p, model.r)?;
            estimate_thetas_from_a(&fit.a_hat, s, &correction, lambda, beta, rule)
        }
    }
}

fn replication_for(config: &ExperimentConfig, r_position: usize, index: u64) -> Result<ReplicationRecord> {
    let r = config.r_values[r_position];
    let model = config.model(r)?;
    let data = simulate_model(&model, config.master_seed, config.stream(r_position, index))?;
    let fit = fit(&data)?;
    let mut ranks = BTreeMap::new();
    let mut largest = BTreeMap::new();
    for &algorithm in &config.algorithms {
        let decision = match algorithm {
            Algorithm::Bsw => select_rank_bsw(&squared_singular_values(&fit.y_hat)?, model.p, r),
            _ => {
                let stats = match algorithm {
                    Algorithm::TwY => stat_responses(&data.y)?,
                    Algorithm::TwYhat => stat_fitted(&fit.y_hat, model.p, r)?,
                    _ => stat_coefficients(&fit.a_hat, model.n_obs)?,
                };
                largest.insert(stats.kind, stats.largest());
                select_rank_tw(&stats, config.significance)?
            }
        };
        ranks.insert(algorithm, decision.selected_rank);
    }
    let s = model.rank().max(1);
    let mut estimates = BTreeMap::new();
    for &estimator in &config.estimators {
        estimates.insert(estimator, estimate(estimator, &model, &data, &fit, s)?);
    }
    Ok(ReplicationRecord {
        r,
        index,
        ranks,
        largest_statistics: largest,
        estimates,
    })
}

/// Replication `index` of the first response count in `config`.
pub fn run_replication(config: &ExperimentConfig, index: u64) -> Result<ReplicationRecord> {
    replication_for(config, 0, index)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailedReplication {
    pub r: usize,
    pub index: u64,
    pub error: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentOutcome {
    pub config: ExperimentConfig,
    pub records: Vec<ReplicationRecord>,
    pub failures: Vec<FailedReplication>,
}

/// Runs every replication for every response count on the current rayon pool.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let jobs: Vec<(usize, u64)> = (0..config.r_values.len())
        .flat_map(|k| (0..config.replications as u64).map(move |i| (k, i)))
        .collect();
    let results: Vec<Result<ReplicationRecord>> =
        jobs.par_iter().map(|&(k, i)| replication_for(config, k, i)).collect();
    collect_outcome(config, &jobs, results)
}

/// Serial counterpart of [`run_experiment`].
pub fn run_experiment_serial(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let jobs: Vec<(usize, u64)> = (0..config.r_values.len())
        .flat_map(|k| (0..config.replications as u64).map(move |i| (k, i)))
        .collect();
    let results = jobs.iter().map(|&(k, i)| replication_for(config, k, i)).collect();
    collect_outcome(config, &jobs, results)
}

/// Like [`run_experiment`] on a dedicated pool of `threads` workers.
pub fn run_experiment_with_threads(config: &ExperimentConfig, threads: usize) -> Result<ExperimentOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    pool.install(|| run_experiment(config))
}

fn collect_outcome(
    config: &ExperimentConfig,
    jobs: &[(usize, u64)],
    results: Vec<Result<ReplicationRecord>>,
) -> Result<ExperimentOutcome> {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for (&(k, index), result) in jobs.iter().zip(results) {
        match result {
            Ok(rec) => records.push(rec),
            Err(e) if e.is_usage() => {
                return Err(Error::Replication {
                    index,
                    source: Box::new(e),
                })
            }
            Err(e) => failures.push(FailedReplication {
                r: config.r_values[k],
                index,
                error: e.to_string(),
            }),
        }
    }
    if records.is_empty() {
        return Err(Error::Aggregation("every replication failed".into()));
    }
    Ok(ExperimentOutcome {
        config: config.clone(),
        records,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub r: usize,
    pub algorithm: Algorithm,
    pub mean_rank: f64,
    pub std_err: f64,
    pub replications: usize,
    pub failures: usize,
}

/// Mean selected rank per `(r, algorithm)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub fn get(&self, r: usize, algorithm: Algorithm) -> Option<&ResultRow> {
        self.rows.iter().find(|row| row.r == r && row.algorithm == algorithm)
    }
}

fn sorted_records(records: &[ReplicationRecord]) -> Vec<&ReplicationRecord> {
    let mut sorted: Vec<&ReplicationRecord> = records.iter().collect();
    sorted.sort_by_key(|rec| (rec.r, rec.index));
    sorted
}

/// Averages selected ranks; the result does not depend on record order.
pub fn aggregate(records: &[ReplicationRecord]) -> Result<ResultTable> {
    aggregate_with_failures(records, &[])
}

pub fn aggregate_with_failures(records: &[ReplicationRecord], failures: &[FailedReplication]) -> Result<ResultTable> {
    if records.is_empty() {
        return Err(Error::Empty("replication records"));
    }
    let algorithms: Vec<Algorithm> = records[0].ranks.keys().copied().collect();
    if records
        .iter()
        .any(|rec| !rec.ranks.keys().copied().eq(algorithms.iter().copied()))
    {
        return Err(Error::Aggregation("records ran different algorithms".into()));
    }
    let sorted = sorted_records(records);
    let mut r_values: Vec<usize> = sorted.iter().map(|rec| rec.r).collect();
    r_values.dedup();
    let mut rows = Vec::new();
    for &r in &r_values {
        let group: Vec<&&ReplicationRecord> = sorted.iter().filter(|rec| rec.r == r).collect();
        let failed = failures.iter().filter(|f| f.r == r).count();
        for &algorithm in &algorithms {
            let ranks: Vec<f64> = group.iter().map(|rec| rec.ranks[&algorithm] as f64).collect();
            rows.push(ResultRow {
                r,
                algorithm,
                mean_rank: crate::stats::mean(&ranks),
                std_err: crate::stats::std_error(&ranks),
                replications: ranks.len(),
                failures: failed,
            });
        }
    }
    Ok(ResultTable { rows })
}

/// Per-spike summary of one estimator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateRow {
    pub r: usize,
    pub estimator: Estimator,
    pub spike: usize,
    /// True strength, when the model has this spike.
    pub theta: Option<f64>,
    pub detected_fraction: f64,
    /// Mean and median of the estimates over detections.
    pub mean_theta_hat: Option<f64>,
    pub median_theta_hat: Option<f64>,
    pub median_sigma_hat: f64,
    pub replications: usize,
}

pub fn aggregate_estimates(records: &[ReplicationRecord], thetas: &[f64]) -> Result<Vec<EstimateRow>> {
    if records.is_empty() {
        return Err(Error::Empty("replication records"));
    }
    let sorted = sorted_records(records);
    let mut keys: Vec<(usize, Estimator, usize)> = Vec::new();
    for rec in &sorted {
        for (est, list) in &rec.estimates {
            for e in list {
                keys.push((rec.r, *est, e.index));
            }
        }
    }
    keys.sort();
    keys.dedup();
    let mut rows = Vec::new();
    for (r, estimator, spike) in keys {
        let hits: Vec<&EstimateRecord> = sorted
            .iter()
            .filter(|rec| rec.r == r)
            .filter_map(|rec| rec.estimates.get(&estimator).and_then(|l| l.get(spike)))
            .collect();
        let detected: Vec<f64> = hits.iter().filter_map(|e| e.theta_hat).collect();
        let sigmas: Vec<f64> = hits.iter().map(|e| e.sigma_hat).collect();
        rows.push(EstimateRow {
            r,
            estimator,
            spike,
            theta: thetas.get(spike).copied(),
            detected_fraction: detected.len() as f64 / hits.len() as f64,
            mean_theta_hat: (!detected.is_empty()).then(|| crate::stats::mean(&detected)),
            median_theta_hat: (!detected.is_empty()).then(|| crate::stats::median(&detected)),
            median_sigma_hat: crate::stats::median(&sigmas),
            replications: hits.len(),
        });
    }
    Ok(rows)
}

/// Studentized errors of the top estimate of a rank-one experiment, with
/// `omega` from the limit parameters of the model.
pub fn clt_errors(outcome: &ExperimentOutcome, estimator: Estimator) -> Result<Vec<f64>> {
    let config = &outcome.config;
    if config.thetas.len() != 1 {
        return Err(Error::Parameter("the CLT needs a rank-one signal".into()));
    }
    let theta = config.thetas[0];
    let mut out = Vec::new();
    for &r in &config.r_values {
        let model = config.model(r)?;
        let omega = clt_parameters(theta, model.lambda(), model.beta())?.omega;
        for rec in sorted_records(&outcome.records).into_iter().filter(|rec| rec.r == r) {
            let est = rec
                .estimates
                .get(&estimator)
                .and_then(|l| l.first())
                .ok_or_else(|| Error::Parameter(format!("estimator {estimator} did not run")))?;
            if let Some(theta_hat) = est.theta_hat {
                out.push(studentized_error(theta_hat, theta, r, omega)?);
            }
        }
    }
    Ok(out)
}

/// Empirical CDF steps of `values` as `(x, F(x))`.
pub fn empirical_cdf_series(values: &[f64]) -> Vec<(f64, f64)> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, (i + 1) as f64 / n))
        .collect()
}

/// Empirical distribution of the largest statistic of one test next to TW1.
pub fn tw_null_series(records: &[ReplicationRecord], kind: StatisticKind, grid: usize) -> (Series, Series) {
    let values: Vec<f64> = sorted_records(records)
        .iter()
        .filter_map(|rec| rec.largest_statistics.get(&kind).copied())
        .collect();
    let empirical = Series::new("statistic", "ecdf", empirical_cdf_series(&values));
    let law = Series::new(
        "x",
        "tw1_cdf",
        (0..grid)
            .map(|i| {
                let x = -5.0 + 10.0 * i as f64 / (grid - 1) as f64;
                (x, tw_cdf(x))
            })
            .collect(),
    );
    (empirical, law)
}

/// Which squared-singular-value spectrum to compare with its limit law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumSource {
    /// Eigenvalues of `Y_hat^T Y_hat / r` against Marchenko-Pastur.
    Fitted,
    /// Eigenvalues of `A_hat^T A_hat` against its two-parameter limit.
    Coefficients,
}

/// Spectrum of one simulated dataset as an [`Esd`] over all `r` eigenvalues.
pub fn spectrum(model: &ModelConfig, fit: &Fit, source: SpectrumSource) -> Result<Esd> {
    match source {
        SpectrumSource::Fitted => {
            Esd::from_squared_singulars(&squared_singular_values(&fit.y_hat)?, model.r, 1.0 / model.r as f64)
        }
        SpectrumSource::Coefficients => {
            Esd::from_squared_singulars(&squared_singular_values(&fit.a_hat)?, model.r, 1.0)
        }
    }
}

pub fn limit_law(model: &ModelConfig, source: SpectrumSource) -> Result<Box<dyn SpectralLaw + Send + Sync>> {
    Ok(match source {
        SpectrumSource::Fitted => Box::new(MpLaw::new(model.beta())?),
        SpectrumSource::Coefficients => Box::new(AbLaw::new(model.lambda(), model.beta())?),
    })
}

/// ESD of replication 0 of the first response count, with its limit CDF on
/// `grid` points.
pub fn esd_overlay(config: &ExperimentConfig, source: SpectrumSource, grid: usize) -> Result<(Series, Series)> {
    let model = config.model(config.r_values[0])?;
    let data = simulate_model(&model, config.master_seed, config.stream(0, 0))?;
    let esd = spectrum(&model, &fit(&data)?, source)?;
    let law = limit_law(&model, source)?;
    let (lo, hi) = law.support();
    let top = esd.points().last().copied().unwrap_or(0.0);
    let hi = if hi.is_finite() { hi.max(top) } else { top * 1.05 };
    let xs: Vec<f64> = (0..grid)
        .map(|i| lo.min(0.0) + (hi - lo.min(0.0)) * i as f64 / (grid - 1) as f64)
        .collect();
    let law_cdf = law.cdf_sorted(&xs);
    Ok((
        Series::new("eigenvalue", "ecdf", empirical_cdf_series(esd.points())),
        Series::new("x", "law_cdf", xs.into_iter().zip(law_cdf).collect()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(r: usize, index: u64, rank: usize) -> ReplicationRecord {
        ReplicationRecord {
            r,
            index,
            ranks: BTreeMap::from([(Algorithm::TwY, rank)]),
            largest_statistics: BTreeMap::new(),
            estimates: BTreeMap::new(),
        }
    }

    #[test]
    fn aggregate_small_cases() {
        let t = aggregate(&[record(25, 0, 0), record(25, 1, 0)]).unwrap();
        assert_eq!(t.rows[0].mean_rank, 0.0);
        assert_eq!(t.rows[0].std_err, 0.0);
        let t = aggregate(&[record(25, 1, 1), record(25, 0, 0)]).unwrap();
        assert_eq!(t.rows[0].mean_rank, 0.5);
        assert_eq!(t.rows[0].replications, 2);
        assert!(aggregate(&[]).is_err());
    }

    #[test]
    fn aggregate_rejects_mixed_records() {
        let mut other = record(25, 1, 0);
        other.ranks = BTreeMap::from([(Algorithm::Bsw, 0)]);
        assert!(matches!(
            aggregate(&[record(25, 0, 0), other]),
            Err(Error::Aggregation(_))
        ));
    }

    #[test]
    fn config_file_round_trip() {
        let text = r#"{"N": 100, "p": 25, "r": [25, 75], "rank": 1, "thetas": [0.025],
            "signal_convention": "RowColScaled", "replications": 10, "master_seed": 7,
            "algorithms": ["BSW", "TW_Y"], "estimators": ["FromY"], "outputs": ["rank_table"]}"#;
        let c = ExperimentConfig::from_json(text).unwrap();
        assert_eq!(c.r_values, vec![25, 75]);
        assert_eq!(c.convention, SignalConvention::RowColScaled);
        assert_eq!(c.algorithms, vec![Algorithm::Bsw, Algorithm::TwY]);
        let back = ExperimentConfig::from_json(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        let single = ExperimentConfig::from_json(r#"{"N": 100, "p": 25, "r": 25}"#).unwrap();
        assert_eq!(single.replications, DEFAULT_REPLICATIONS);
        assert!(single.thetas.is_empty());
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::from_json(r#"{"N": 100, "p": 25, "r": 25, "replications": 0}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"N": 100, "p": 25, "r": 25, "outputs": []}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"N": 10, "p": 25, "r": 25}"#).is_err());
        assert!(ExperimentConfig::from_json(r#"{"N": 100, "p": 25, "r": 25, "bogus": 1}"#).is_err());
        assert!(
            ExperimentConfig::from_json(r#"{"N": 100, "p": 25, "r": 25, "rank": 2, "thetas": [1, 2, 3]}"#).is_err()
        );
    }

    #[test]
    fn replication_is_deterministic() {
        let mut c = ExperimentConfig::new(60, 20, vec![20]);
        c.estimators = vec![Estimator::FromY];
        let a = run_replication(&c, 3).unwrap();
        let b = run_replication(&c, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.ranks.len(), 4);
    }
}
