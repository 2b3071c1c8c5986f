//! Largest-singular-value tests of `A = 0` and the rank selectors built on them.
//!
//! Each test centers and scales the squared singular values of one matrix so
//! that, under the null, the largest statistic is approximately TW1:
//!
//! * responses `Y` (Wishart `W_r(I, N)` scaling),
//! * fitted responses `Y_hat` (Wishart `W_r(I, p)` scaling),
//! * coefficients `A_hat` (Jacobi ensemble, on the log scale).
//!
//! A rank selector counts the statistics strictly above a TW1 quantile. The
//! baseline selector counts squared singular values of `Y_hat` above `2(p + r)`.

mod tw;
mod tw1_table;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::regression::squared_singular_values;

pub use tw::{tw_cdf, tw_quantile};

/// Default test level.
pub const DEFAULT_SIGNIFICANCE: f64 = 0.10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StatisticKind {
    Responses,
    Fitted,
    Coefficients,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "BSW")]
    Bsw,
    #[serde(rename = "TW_Y")]
    TwY,
    #[serde(rename = "TW_Yhat")]
    TwYhat,
    #[serde(rename = "TW_Ahat")]
    TwAhat,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Bsw, Algorithm::TwY, Algorithm::TwYhat, Algorithm::TwAhat];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Bsw => "BSW",
            Algorithm::TwY => "TW_Y",
            Algorithm::TwYhat => "TW_Yhat",
            Algorithm::TwAhat => "TW_Ahat",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown algorithm {s:?}")))
    }
}

/// Centered and scaled statistics for one test, one per singular value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwStatistics {
    pub kind: StatisticKind,
    /// Statistics, descending.
    pub values: Vec<f64>,
    /// Squared singular values the statistics were computed from, descending.
    pub raw_squared_singulars: Vec<f64>,
    pub center: f64,
    pub scale: f64,
}

impl TwStatistics {
    pub fn largest(&self) -> f64 {
        self.values[0]
    }
}

/// Wishart centering and scaling for the largest eigenvalue of `W_dim(I, dof)`.
fn wishart_constants(dof: usize, dim: usize) -> (f64, f64) {
    let a = (dof as f64 - 1.0).sqrt();
    let b = (dim as f64).sqrt();
    let center = (a + b).powi(2);
    let scale = (a + b) * (1.0 / a + 1.0 / b).cbrt();
    (center, scale)
}

fn need_at_least_two(what: &str, values: &[(char, usize)]) -> Result<()> {
    for (name, v) in values {
        if *v < 2 {
            return Err(Error::Dimension(format!("{what} needs {name} >= 2, got {v}")));
        }
    }
    Ok(())
}

fn scaled(kind: StatisticKind, raw: Vec<f64>, center: f64, scale: f64, log: bool) -> Result<TwStatistics> {
    let values: Vec<f64> = raw
        .iter()
        .map(|&l| {
            let l = if log { l.ln() } else { l };
            (l - center) / scale
        })
        .collect();
    if values.is_empty() {
        return Err(Error::Empty("singular values"));
    }
    if log && values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("log of a zero singular value"));
    }
    Ok(TwStatistics {
        kind,
        values,
        raw_squared_singulars: raw,
        center,
        scale,
    })
}

/// Test on the raw responses, from their squared singular values.
pub fn stat_responses_from_squared(squared: &[f64], n_obs: usize, r: usize) -> Result<TwStatistics> {
    need_at_least_two("response test", &[('N', n_obs), ('r', r)])?;
    let (center, scale) = wishart_constants(n_obs, r);
    let raw = squared.iter().take(n_obs.min(r)).copied().collect();
    scaled(StatisticKind::Responses, raw, center, scale, false)
}

pub fn stat_responses(y: &DMatrix<f64>) -> Result<TwStatistics> {
    stat_responses_from_squared(&squared_singular_values(y)?, y.nrows(), y.ncols())
}

/// Test on the fitted responses, from their squared singular values.
pub fn stat_fitted_from_squared(squared: &[f64], p: usize, r: usize) -> Result<TwStatistics> {
    need_at_least_two("fitted test", &[('p', p), ('r', r)])?;
    let (center, scale) = wishart_constants(p, r);
    let raw = squared.iter().take(p.min(r)).copied().collect();
    scaled(StatisticKind::Fitted, raw, center, scale, false)
}

pub fn stat_fitted(y_hat: &DMatrix<f64>, p: usize, r: usize) -> Result<TwStatistics> {
    if y_hat.ncols() != r {
        return Err(Error::Dimension(format!(
            "Y_hat has {} columns, expected r = {r}",
            y_hat.ncols()
        )));
    }
    stat_fitted_from_squared(&squared_singular_values(y_hat)?, p, r)
}

/// Angles `(gamma, phi)` of the Jacobi centering.
pub fn jacobi_angles(n_obs: usize, p: usize, r: usize) -> Result<(f64, f64)> {
    let denom = (n_obs + r) as f64 - 1.0;
    let sg = (p.min(r) as f64 - 0.5) / denom;
    let sp = (p.max(r) as f64 - 0.5) / denom;
    for v in [sg, sp] {
        if !(v > 0.0 && v < 1.0) {
            return Err(Error::Parameter(format!("angle argument {v} outside (0, 1)")));
        }
    }
    Ok((2.0 * sg.sqrt().asin(), 2.0 * sp.sqrt().asin()))
}

/// Centering and scaling of the log of the largest squared singular value
/// of `A_hat`.
pub fn jacobi_constants(n_obs: usize, p: usize, r: usize) -> Result<(f64, f64)> {
    let (gamma, phi) = jacobi_angles(n_obs, p, r)?;
    let center = 2.0 * ((phi + gamma) / 2.0).tan().ln();
    let denom = (n_obs + r) as f64 - 1.0;
    let scale = (16.0 / (denom * denom) / ((phi + gamma).sin().powi(2) * phi.sin() * gamma.sin())).cbrt();
    Ok((center, scale))
}

pub fn stat_coefficients_from_squared(squared: &[f64], n_obs: usize, p: usize, r: usize) -> Result<TwStatistics> {
    need_at_least_two("coefficient test", &[('p', p), ('r', r)])?;
    if n_obs < p {
        return Err(Error::Regime(format!("need N >= p, got {n_obs} < {p}")));
    }
    let (center, scale) = jacobi_constants(n_obs, p, r)?;
    let raw = squared.iter().take(p.min(r)).copied().collect();
    scaled(StatisticKind::Coefficients, raw, center, scale, true)
}

pub fn stat_coefficients(a_hat: &DMatrix<f64>, n_obs: usize) -> Result<TwStatistics> {
    let (p, r) = a_hat.shape();
    stat_coefficients_from_squared(&squared_singular_values(a_hat)?, n_obs, p, r)
}

/// Outcome of one rank selector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankDecision {
    pub algorithm: Algorithm,
    pub selected_rank: usize,
    pub threshold_used: f64,
}

fn count_above(values: &[f64], threshold: f64) -> usize {
    values.iter().filter(|v| **v > threshold).count()
}

/// Number of statistics strictly above the TW1 quantile `1 - significance`.
pub fn select_rank_tw(stats: &TwStatistics, significance: f64) -> Result<RankDecision> {
    let threshold = tw_quantile(1.0 - significance)?;
    let algorithm = match stats.kind {
        StatisticKind::Responses => Algorithm::TwY,
        StatisticKind::Fitted => Algorithm::TwYhat,
        StatisticKind::Coefficients => Algorithm::TwAhat,
    };
    Ok(RankDecision {
        algorithm,
        selected_rank: count_above(&stats.values, threshold),
        threshold_used: threshold,
    })
}

/// Number of squared singular values of `Y_hat` strictly above `2(p + r)`.
pub fn select_rank_bsw(l_fitted: &[f64], p: usize, r: usize) -> RankDecision {
    let threshold = 2.0 * (p + r) as f64;
    RankDecision {
        algorithm: Algorithm::Bsw,
        selected_rank: count_above(&l_fitted[..l_fitted.len().min(p.min(r))], threshold),
        threshold_used: threshold,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn stats_from(values: Vec<f64>) -> TwStatistics {
        TwStatistics {
            kind: StatisticKind::Fitted,
            raw_squared_singulars: values.clone(),
            values,
            center: 0.0,
            scale: 1.0,
        }
    }

    #[test]
    fn response_constants() {
        let (center, scale) = wishart_constants(100, 133);
        assert_relative_eq!(center, (99f64.sqrt() + 133f64.sqrt()).powi(2), epsilon = 1e-12);
        assert_relative_eq!(center, 461.495, epsilon = 1e-3);
        let s = stat_responses_from_squared(&[center, 1.0], 100, 133).unwrap();
        assert_eq!(s.values[0], 0.0);
        assert!(scale > 0.0);
    }

    #[test]
    fn fitted_constants() {
        let (center, _) = wishart_constants(25, 25);
        assert_relative_eq!(center, 97.990, epsilon = 1e-3);
        let s = stat_fitted_from_squared(&[center], 25, 25).unwrap();
        assert_eq!(s.largest(), 0.0);
        assert!(stat_fitted_from_squared(&[1.0], 1, 25).is_err());
    }

    #[test]
    fn coefficient_angles() {
        let (g, f) = jacobi_angles(100, 66, 133).unwrap();
        assert_relative_eq!((g / 2.0).sin().powi(2), 65.5 / 232.0, epsilon = 1e-14);
        assert_relative_eq!((f / 2.0).sin().powi(2), 132.5 / 232.0, epsilon = 1e-14);
        let (g, f) = jacobi_angles(100, 40, 40).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn coefficient_statistic_centering() {
        let (center, _) = jacobi_constants(100, 66, 133).unwrap();
        let s = stat_coefficients_from_squared(&[center.exp()], 100, 66, 133).unwrap();
        assert!(s.largest().abs() < 1e-12);
        assert!(stat_coefficients_from_squared(&[0.0], 100, 66, 133).is_err());
        assert!(stat_coefficients_from_squared(&[1.0], 50, 66, 133).is_err());
    }

    #[test]
    fn tw_selection() {
        let d = select_rank_tw(&stats_from(vec![0.3, -1.0]), 0.10).unwrap();
        assert_eq!(d.selected_rank, 0);
        let d = select_rank_tw(&stats_from(vec![2.0, 0.5, -1.0]), 0.10).unwrap();
        assert_eq!(d.selected_rank, 2);
        assert_eq!(d.algorithm, Algorithm::TwYhat);
        assert!((d.threshold_used - 0.45).abs() < 0.01);
    }

    #[test]
    fn bsw_selection() {
        let d = select_rank_bsw(&[150.0, 100.0, 99.0], 25, 25);
        assert_eq!(d.threshold_used, 100.0);
        assert_eq!(d.selected_rank, 1);
        assert_eq!(select_rank_bsw(&[10.0, 5.0], 25, 25).selected_rank, 0);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
            let json = serde_json::to_string(&a).unwrap();
            assert_eq!(json, format!("\"{}\"", a.name()));
        }
    }

    proptest! {
        #[test]
        fn raising_level_never_adds_rank(
            values in proptest::collection::vec(-4.0f64..4.0, 1..20),
            a in 0.001f64..0.5,
            b in 0.001f64..0.5,
        ) {
            let stats = stats_from(values.clone());
            let (strict, loose) = if a < b { (a, b) } else { (b, a) };
            let k_strict = select_rank_tw(&stats, strict).unwrap().selected_rank;
            let k_loose = select_rank_tw(&stats, loose).unwrap().selected_rank;
            prop_assert!(k_strict <= k_loose);
            prop_assert!(k_loose <= values.len());
        }
    }
}
