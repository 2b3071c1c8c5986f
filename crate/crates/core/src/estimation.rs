//! De-biasing of outlier singular values.
//!
//! A spike of strength `theta` in `A` surfaces as an outlier singular value
//! `sigma` of `A_hat` (or of `Y_hat / sqrt(r)`) pushed away from `theta` by the
//! noise bulk. The correction functions invert that map:
//!
//! ```text
//! D(x) = 1 / (x sqrt(G(x^2) G~(x^2)))
//! ```
//!
//! where `G` is the Stieltjes transform of the noise spectrum on the `r x r`
//! side and `G~` that of its `p x p` companion. Spikes below the edge limit of
//! `D` do not separate from the bulk and cannot be estimated consistently.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ranktests::{stat_coefficients_from_squared, stat_fitted_from_squared, tw_quantile};
use crate::regression::singular_values;
use crate::spectra::{
    ab_support, stieltjes_ab, stieltjes_ab_at_or_above_edge, stieltjes_ab_deriv, stieltjes_mp,
    stieltjes_mp_at_or_above_edge, tilde_transform, tilde_transform_deriv, MpLaw,
};

/// Level of the Tracy-Widom test used by [`OutlierRule::default`].
pub const DEFAULT_OUTLIER_LEVEL: f64 = 0.01;

fn d_from_transforms(x: f64, g: f64, g_tilde: f64) -> Result<f64> {
    let prod = g * g_tilde;
    if !(prod > 0.0) || !prod.is_finite() {
        return Err(Error::NonFinite("correction function"));
    }
    Ok(1.0 / (x * prod.sqrt()))
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::Parameter(format!("lambda must be positive, got {lambda}")));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
    }
    Ok(())
}

/// `D_A`, defined for `x > sqrt(x2)`.
pub fn d_function_a(x: f64, lambda: f64, beta: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let edge = ab_support(lambda, beta).1.sqrt();
    if !(x > edge) || !x.is_finite() {
        return Err(Error::domain(x, format!("x > {edge}")));
    }
    let z = x * x;
    let g = stieltjes_ab(z, lambda, beta)?;
    d_from_transforms(x, g, tilde_transform(g, z, beta)?)
}

/// `D_Y`, defined above the square root of the Marchenko-Pastur edge.
pub fn d_function_y(x: f64, beta: f64) -> Result<f64> {
    let edge = MpLaw::new(beta)?.upper_edge().sqrt();
    if !(x > edge) || !x.is_finite() {
        return Err(Error::domain(x, format!("x > {edge}")));
    }
    let z = x * x;
    let g = stieltjes_mp(z, beta)?;
    d_from_transforms(x, g, tilde_transform(g, z, beta)?)
}

/// Detection threshold `lim D_A(x)` as `x` decreases to `sqrt(x2)`.
///
/// The transform stays finite at the edge (only its derivative blows up), so
/// the limit is the closed form evaluated with the discriminant at zero.
pub fn threshold_a(lambda: f64, beta: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_beta(beta)?;
    let x2 = ab_support(lambda, beta).1;
    let g = stieltjes_ab_at_or_above_edge(x2, lambda, beta);
    d_from_transforms(x2.sqrt(), g, tilde_transform(g, x2, beta)?)
}

/// Detection threshold `lim D_Y(x)` at the Marchenko-Pastur edge; equals
/// `beta^(1/4)`.
pub fn threshold_y(beta: f64) -> Result<f64> {
    let z = MpLaw::new(beta)?.upper_edge();
    let g = stieltjes_mp_at_or_above_edge(z, beta);
    d_from_transforms(z.sqrt(), g, tilde_transform(g, z, beta)?)
}

/// Smallest spike strength in `A` that the fitted-response route can detect:
/// `mu^(-1/2) * threshold_y(beta)`.
pub fn detection_bound_y(beta: f64, mu: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::Parameter(format!("mu must be positive, got {mu}")));
    }
    Ok(threshold_y(beta)? / mu.sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CorrectionKind {
    FromA {
        lambda: f64,
        beta: f64,
    },
    /// Evaluates `mu^(-1/2) D_Y`, so values are on the scale of the spikes of `A`.
    FromY {
        beta: f64,
        mu: f64,
    },
    /// Plug-in from a noise spectrum: `squared` holds squared singular values,
    /// each counted `weight` times; the remaining eigenvalues of the `r x r`
    /// Gram matrix are zero.
    EmpiricalA {
        squared: Vec<f64>,
        p: usize,
        r: usize,
        weight: f64,
    },
}

/// A de-biasing map, strictly increasing on `(domain_lower, inf)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrectionFunction {
    pub kind: CorrectionKind,
    pub domain_lower: f64,
}

impl CorrectionFunction {
    pub fn from_a(lambda: f64, beta: f64) -> Result<Self> {
        check_lambda(lambda)?;
        check_beta(beta)?;
        Ok(CorrectionFunction {
            kind: CorrectionKind::FromA { lambda, beta },
            domain_lower: ab_support(lambda, beta).1.sqrt(),
        })
    }

    pub fn from_y(beta: f64, mu: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::Parameter(format!("mu must be positive, got {mu}")));
        }
        Ok(CorrectionFunction {
            kind: CorrectionKind::FromY { beta, mu },
            domain_lower: MpLaw::new(beta)?.upper_edge().sqrt(),
        })
    }

    /// Squared-transform pair `(G(z), G~(z))` for the empirical kind.
    fn empirical_transforms(squared: &[f64], p: usize, r: usize, weight: f64, z: f64) -> (f64, f64) {
        let bulk: f64 = squared.iter().map(|s| 1.0 / (z - s)).sum();
        let zeros = r as f64 - weight * squared.len() as f64;
        let g = (weight * bulk + zeros / z) / r as f64;
        let ratio = r as f64 / p as f64;
        (g, ratio * g + (1.0 - ratio) / z)
    }

    /// Value at `x`; errors at or below `domain_lower`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match &self.kind {
            CorrectionKind::FromA { lambda, beta } => d_function_a(x, *lambda, *beta),
            CorrectionKind::FromY { beta, mu } => Ok(d_function_y(x, *beta)? / mu.sqrt()),
            CorrectionKind::EmpiricalA { squared, p, r, weight } => {
                if !(x > self.domain_lower) || !x.is_finite() {
                    return Err(Error::domain(x, format!("x > {}", self.domain_lower)));
                }
                let z = x * x;
                let (g, gt) = Self::empirical_transforms(squared, *p, *r, *weight, z);
                d_from_transforms(x, g, gt)
            }
        }
    }

    /// Limit of [`CorrectionFunction::eval`] at `domain_lower`: the smallest
    /// spike the map can return.
    pub fn edge_value(&self) -> Result<f64> {
        match &self.kind {
            CorrectionKind::FromA { lambda, beta } => threshold_a(*lambda, *beta),
            CorrectionKind::FromY { beta, mu } => detection_bound_y(*beta, *mu),
            // G blows up at the largest noise value, so D goes to zero.
            CorrectionKind::EmpiricalA { .. } => Ok(0.0),
        }
    }

    /// Solves `eval(x) = theta` for `x > domain_lower`.
    pub fn invert(&self, theta: f64) -> Result<f64> {
        let edge = self.edge_value()?;
        if !(theta > edge) || !theta.is_finite() {
            return Err(Error::NoRoot(format!(
                "theta = {theta} is not above the edge value {edge}"
            )));
        }
        let f = |x: f64| self.eval(x).map(|d| d - theta);
        let lower = self.domain_lower;
        let mut lo = if lower > 0.0 { lower * (1.0 + 1e-6) } else { 1e-300 };
        let mut hi = if lower > 0.0 {
            lower * (1.0 + theta)
        } else {
            theta.max(1.0)
        };
        if f(lo)? > 0.0 {
            // Root sits within 1e-6 of the edge.
            hi = lo;
            lo = lower;
        }
        while f(hi)? < 0.0 {
            lo = hi;
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(Error::NoRoot(format!("no bracket for theta = {theta}")));
            }
        }
        bisect_then_secant(f, lo, hi)
    }
}

/// Root of an increasing `f` bracketed by `[lo, hi]`; `f(lo)` may be an
/// error when `lo` sits on the edge of the domain.
fn bisect_then_secant<F: Fn(f64) -> Result<f64>>(f: F, mut lo: f64, mut hi: f64) -> Result<f64> {
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-8 * hi {
            break;
        }
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = match (f(a), f(b)) {
        (Ok(fa), Ok(fb)) => (fa, fb),
        _ => return Ok(0.5 * (lo + hi)),
    };
    for _ in 0..50 {
        if fb == fa {
            break;
        }
        let c = b - fb * (b - a) / (fb - fa);
        if !(c > lo && c < hi) {
            break;
        }
        let fc = f(c)?;
        if fc < 0.0 {
            lo = c;
        } else {
            hi = c;
        }
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        if fc == 0.0 || (b - a).abs() <= 1e-15 * b {
            return Ok(b);
        }
    }
    Ok(if fb.abs() <= fa.abs() { b } else { a })
}

/// `D_{A,N}` from the singular values of `X \ U`.
///
/// `G_{A,N}` is normalized as the transform of the full `r x r` Gram matrix
/// `Z^T Z`; missing singular values count as zeros. This keeps `G_{A,N}` and
/// `G~_{A,N}` consistent with the limit pair whenever `p != r`.
pub fn empirical_correction(noise_singulars: &[f64], p: usize, r: usize) -> Result<CorrectionFunction> {
    if p == 0 || r == 0 {
        return Err(Error::Dimension("p and r must be positive".into()));
    }
    if noise_singulars.len() > p.min(r) {
        return Err(Error::Dimension(format!(
            "{} noise singular values for a {p} x {r} matrix",
            noise_singulars.len()
        )));
    }
    if noise_singulars.iter().any(|s| !s.is_finite()) {
        return Err(Error::NonFinite("noise singular values"));
    }
    Ok(empirical_kind(noise_singulars, p, r, 1.0))
}

fn empirical_kind(singulars: &[f64], p: usize, r: usize, weight: f64) -> CorrectionFunction {
    let squared: Vec<f64> = singulars.iter().map(|s| s * s).collect();
    let domain_lower = singulars.iter().fold(0.0f64, |m, s| m.max(s.abs()));
    CorrectionFunction {
        kind: CorrectionKind::EmpiricalA { squared, p, r, weight },
        domain_lower,
    }
}

/// Plug-in variant that needs no access to the noise: the bulk of `A_hat`
/// itself, all but its top `s` singular values, stands in for the noise
/// spectrum, reweighted to the full count `min(p, r)`.
///
/// Not one of the estimators with proven guarantees.
pub fn plug_in_correction(a_hat_singulars: &[f64], s: usize, p: usize, r: usize) -> Result<CorrectionFunction> {
    let k = p.min(r);
    if a_hat_singulars.len() != k {
        return Err(Error::Dimension(format!(
            "expected {k} singular values, got {}",
            a_hat_singulars.len()
        )));
    }
    if s >= k {
        return Err(Error::Rank {
            rank: s,
            max: k.saturating_sub(1),
        });
    }
    let mut sorted = a_hat_singulars.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let weight = k as f64 / (k - s) as f64;
    Ok(empirical_kind(&sorted[s..], p, r, weight))
}

/// How an observed singular value is declared an outlier.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OutlierRule {
    /// Above the bulk edge of the correction function only.
    EdgeOnly,
    /// Additionally, the matching largest-singular-value test statistic must
    /// exceed its TW1 quantile at this level. At finite `N` the top noise
    /// singular value fluctuates above the limiting edge on the TW scale, so
    /// the edge alone flags noise as signal about half the time.
    TracyWidom { significance: f64 },
}

impl Default for OutlierRule {
    fn default() -> Self {
        OutlierRule::TracyWidom {
            significance: DEFAULT_OUTLIER_LEVEL,
        }
    }
}

impl OutlierRule {
    fn cutoff(&self) -> Result<Option<f64>> {
        match self {
            OutlierRule::EdgeOnly => Ok(None),
            OutlierRule::TracyWidom { significance } => Ok(Some(tw_quantile(1.0 - significance)?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateRecord {
    pub index: usize,
    pub sigma_hat: f64,
    pub theta_hat: Option<f64>,
    pub above_threshold: bool,
    /// `omega / sqrt(r)`, for rank-one coefficient estimates above threshold.
    pub std_error: Option<f64>,
}

fn records(
    singulars: &[f64],
    s: usize,
    correction: &CorrectionFunction,
    tw_values: Option<(&[f64], f64)>,
) -> Result<Vec<EstimateRecord>> {
    if s > singulars.len() {
        return Err(Error::Rank {
            rank: s,
            max: singulars.len(),
        });
    }
    (0..s)
        .map(|i| {
            let sigma_hat = singulars[i];
            let passes_test = tw_values.is_none_or(|(values, cutoff)| values[i] > cutoff);
            let above = sigma_hat > correction.domain_lower && passes_test;
            let theta_hat = if above { Some(correction.eval(sigma_hat)?) } else { None };
            Ok(EstimateRecord {
                index: i,
                sigma_hat,
                theta_hat,
                above_threshold: above,
                std_error: None,
            })
        })
        .collect()
}

/// Estimates of the top `s` spikes from the singular values of `A_hat`.
///
/// `lambda` and `beta` describe the design; they fix `N` for the outlier test
/// and the asymptotic standard error reported when `s = 1`.
pub fn estimate_thetas_from_a(
    a_hat: &DMatrix<f64>,
    s: usize,
    correction: &CorrectionFunction,
    lambda: f64,
    beta: f64,
    rule: OutlierRule,
) -> Result<Vec<EstimateRecord>> {
    check_lambda(lambda)?;
    check_beta(beta)?;
    let (p, r) = a_hat.shape();
    let sv = singular_values(a_hat)?;
    let stats = match rule.cutoff()? {
        Some(cutoff) => {
            let n_obs = (p as f64 * (1.0 + lambda)).round() as usize;
            let squared: Vec<f64> = sv.iter().map(|v| v * v).collect();
            Some((stat_coefficients_from_squared(&squared, n_obs, p, r)?.values, cutoff))
        }
        None => None,
    };
    let mut out = records(&sv, s, correction, stats.as_ref().map(|(v, c)| (v.as_slice(), *c)))?;
    if s == 1 {
        if let Some(theta_hat) = out[0].theta_hat {
            if theta_hat > threshold_a(lambda, beta)? {
                let omega = clt_parameters(theta_hat, lambda, beta)?.omega;
                out[0].std_error = Some(omega / (r as f64).sqrt());
            }
        }
    }
    Ok(out)
}

/// Estimates of the top `s` spikes from the singular values of
/// `Y_hat / sqrt(r)`, de-biased by `mu^(-1/2) D_Y`.
pub fn estimate_thetas_from_y(
    y_hat: &DMatrix<f64>,
    p: usize,
    s: usize,
    rule: OutlierRule,
) -> Result<Vec<EstimateRecord>> {
    let (n_obs, r) = y_hat.shape();
    if p == 0 || p > n_obs {
        return Err(Error::Dimension(format!("need 0 < p <= N, got p = {p}, N = {n_obs}")));
    }
    let beta = p as f64 / r as f64;
    let mu = n_obs as f64 / r as f64;
    let correction = CorrectionFunction::from_y(beta, mu)?;
    let scale = (r as f64).sqrt();
    let sv: Vec<f64> = singular_values(y_hat)?.iter().map(|v| v / scale).collect();
    let stats = match rule.cutoff()? {
        Some(cutoff) => {
            let squared: Vec<f64> = sv.iter().map(|v| v * v * r as f64).collect();
            Some((stat_fitted_from_squared(&squared, p, r)?.values, cutoff))
        }
        None => None,
    };
    records(&sv, s, &correction, stats.as_ref().map(|(v, c)| (v.as_slice(), *c)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CltParameters {
    pub sigma: f64,
    pub kappa1_sq: f64,
    pub kappa2_sq: f64,
    pub tau_sq: f64,
    pub kappa_sq: f64,
    pub omega: f64,
}

/// Limit location `sigma` of the outlier and asymptotic standard deviation
/// `omega` of `sqrt(r) (theta_hat - theta)` for a rank-one spike.
pub fn clt_parameters(theta: f64, lambda: f64, beta: f64) -> Result<CltParameters> {
    let sigma = CorrectionFunction::from_a(lambda, beta)?.invert(theta)?;
    let z = sigma * sigma;
    let g = stieltjes_ab(z, lambda, beta)?;
    let dg = stieltjes_ab_deriv(z, lambda, beta)?;
    let gt = tilde_transform(g, z, beta)?;
    let dgt = tilde_transform_deriv(dg, z, beta)?;
    let kappa1_sq = -2.0 * z * (dg + g * g);
    let kappa2_sq = -(2.0 / beta) * z * (dgt + gt * gt);
    let tau_sq = -(z * dgt + gt);
    let kappa_sq = z * gt * gt * kappa1_sq + z * g * g * kappa2_sq + 4.0 * tau_sq / (theta * theta);
    if !(kappa_sq > 0.0) {
        return Err(Error::NonFinite("CLT variance"));
    }
    Ok(CltParameters {
        sigma,
        kappa1_sq,
        kappa2_sq,
        tau_sq,
        kappa_sq,
        omega: 0.5 * theta.powi(3) * kappa_sq.sqrt(),
    })
}

/// `sqrt(r) (theta_hat - theta) / omega`.
pub fn studentized_error(theta_hat: f64, theta: f64, r: usize, omega: f64) -> Result<f64> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::Parameter(format!("omega must be positive, got {omega}")));
    }
    Ok((r as f64).sqrt() * (theta_hat - theta) / omega)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdPoint {
    pub lambda: f64,
    pub beta: f64,
    pub theta_a: f64,
    pub theta_y: f64,
    /// `theta_a - theta_y`.
    pub difference: f64,
}

/// Both thresholds on the product grid, `beta` varying fastest.
pub fn threshold_surface(lambdas: &[f64], betas: &[f64]) -> Result<Vec<ThresholdPoint>> {
    let mut out = Vec::with_capacity(lambdas.len() * betas.len());
    for &lambda in lambdas {
        for &beta in betas {
            let theta_a = threshold_a(lambda, beta)?;
            let theta_y = threshold_y(beta)?;
            out.push(ThresholdPoint {
                lambda,
                beta,
                theta_a,
                theta_y,
                difference: theta_a - theta_y,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const GRID: [(f64, f64); 9] = [
        (0.1, 0.5),
        (0.1, 1.0),
        (0.1, 2.0),
        (0.2, 0.5),
        (0.2, 1.0),
        (0.2, 2.0),
        (1.0, 0.5),
        (1.0, 1.0),
        (1.0, 2.0),
    ];

    #[test]
    fn thresholds_at_reference_point() {
        assert_relative_eq!(threshold_a(0.2, 0.5).unwrap(), 14.176, epsilon = 1e-3);
        assert_relative_eq!(threshold_y(0.5).unwrap(), 0.5f64.powf(0.25), epsilon = 1e-12);
        assert_relative_eq!(detection_bound_y(0.5, 0.6).unwrap(), 1.0856, epsilon = 1e-4);
    }

    #[test]
    fn threshold_y_is_quartic_root() {
        for beta in [0.1, 0.5, 1.0, 2.0, 7.0] {
            assert_relative_eq!(threshold_y(beta).unwrap(), beta.powf(0.25), max_relative = 1e-12);
        }
    }

    #[test]
    fn threshold_matches_richardson_extrapolation() {
        // D approaches its edge value like c0 + c1 sqrt(e) + c2 e; eliminate
        // the two correction terms from evaluations at e, e/4 and e/16.
        for (lambda, beta) in GRID {
            let edge = ab_support(lambda, beta).1.sqrt();
            let d = |e: f64| d_function_a(edge * (1.0 + e), lambda, beta).unwrap();
            let e = 1e-4;
            let (d0, d1, d2) = (d(e), d(e / 4.0), d(e / 16.0));
            let r1 = 2.0 * d1 - d0;
            let r2 = 2.0 * d2 - d1;
            let extrapolated = (4.0 * r2 - r1) / 3.0;
            let exact = threshold_a(lambda, beta).unwrap();
            assert_relative_eq!(exact, extrapolated, max_relative = 1e-6);
        }
    }

    #[test]
    fn threshold_below_edge_on_grid() {
        for (lambda, beta) in GRID {
            let t = threshold_a(lambda, beta).unwrap();
            let (_, x2) = ab_support(lambda, beta);
            assert!(t < x2.sqrt(), "({lambda}, {beta}): {t} vs {}", x2.sqrt());
        }
    }

    #[test]
    fn d_functions_grow_like_identity() {
        let x = 1e7;
        assert_relative_eq!(d_function_a(x, 0.2, 0.5).unwrap() / x, 1.0, epsilon = 1e-6);
        assert_relative_eq!(d_function_y(x, 0.5).unwrap() / x, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn domain_errors() {
        let edge = ab_support(0.2, 0.5).1.sqrt();
        assert!(matches!(d_function_a(edge, 0.2, 0.5), Err(Error::Domain { .. })));
        assert!(matches!(d_function_a(20.0, 0.0, 0.5), Err(Error::Parameter(_))));
        assert!(d_function_y(1.0, 0.5).is_err());
        let f = empirical_correction(&[1.0, 2.0], 2, 3).unwrap();
        assert!(f.eval(2.0).is_err());
        assert!(f.eval(2.0 + 1e-9).is_ok());
        assert!(empirical_correction(&[1.0, 2.0, 3.0], 2, 3).is_err());
    }

    #[test]
    fn mp_edge_value() {
        let law = MpLaw::new(0.5).unwrap();
        assert_relative_eq!(law.upper_edge(), 2.914_213_562_373_095, epsilon = 1e-12);
    }

    #[test]
    fn degenerate_plug_in() {
        let f = empirical_correction(&[0.0], 1, 1).unwrap();
        for x in [0.5, 1.0, 3.0] {
            assert_relative_eq!(f.eval(x).unwrap(), x, epsilon = 1e-14);
        }
    }

    #[test]
    fn monotone_on_grid() {
        for (lambda, beta) in GRID {
            let edge = ab_support(lambda, beta).1.sqrt();
            let values: Vec<f64> = (1..200)
                .map(|k| d_function_a(edge * (1.0 + 0.01 * k as f64), lambda, beta).unwrap())
                .collect();
            assert!(values.windows(2).all(|w| w[1] > w[0]));
        }
    }

    #[test]
    fn clt_round_trip_and_signs() {
        for (lambda, beta) in GRID {
            let bar = threshold_a(lambda, beta).unwrap();
            for factor in [1.1, 1.5, 3.0] {
                let theta = factor * bar;
                let c = clt_parameters(theta, lambda, beta).unwrap();
                assert_relative_eq!(
                    d_function_a(c.sigma, lambda, beta).unwrap(),
                    theta,
                    max_relative = 1e-10
                );
                assert!(c.kappa1_sq > 0.0 && c.kappa2_sq > 0.0 && c.tau_sq > 0.0);
                assert!(c.omega > 0.0);
            }
        }
        assert!(matches!(clt_parameters(5.0, 0.2, 0.5), Err(Error::NoRoot(_))));
    }

    #[test]
    fn clt_reference_values() {
        let c = clt_parameters(9.0, 0.2, 2.0).unwrap();
        assert_relative_eq!(c.sigma, 9.513, epsilon = 1e-3);
        assert_relative_eq!(c.omega, 2.397, epsilon = 1e-3);
    }

    #[test]
    fn studentized() {
        assert_eq!(studentized_error(3.0, 3.0, 100, 2.0).unwrap(), 0.0);
        assert_relative_eq!(studentized_error(3.2, 3.0, 100, 2.0).unwrap(), 1.0, epsilon = 1e-12);
        assert!(studentized_error(1.0, 1.0, 10, 0.0).is_err());
    }

    #[test]
    fn surface_sign_at_small_parameters() {
        let s = threshold_surface(&[0.2], &[0.5]).unwrap();
        assert!(s[0].difference > 0.0);
        assert_eq!(threshold_surface(&[0.1, 0.2], &[0.5, 1.0, 2.0]).unwrap().len(), 6);
    }

    #[test]
    fn plug_in_weights_bulk() {
        let f = plug_in_correction(&[5.0, 1.0, 1.0], 1, 3, 3).unwrap();
        assert_eq!(f.domain_lower, 1.0);
        // Two unit values stand in for three: G(x) = 1/(x - 1).
        let x: f64 = 2.0;
        assert_relative_eq!(f.eval(x).unwrap(), 1.0 / (x * (1.0 / (x * x - 1.0))), epsilon = 1e-12);
        assert!(plug_in_correction(&[1.0], 1, 1, 1).is_err());
    }

    proptest! {
        #[test]
        fn inversion_round_trip(k in 1usize..9, t in 0.001f64..5.0) {
            let (lambda, beta) = GRID[k - 1];
            let f = CorrectionFunction::from_a(lambda, beta).unwrap();
            let x = f.domain_lower * (1.0 + t);
            let back = f.invert(f.eval(x).unwrap()).unwrap();
            prop_assert!((back - x).abs() <= 1e-9 * x);
        }

        #[test]
        fn empirical_inversion_round_trip(
            noise in proptest::collection::vec(0.0f64..3.0, 1..6),
            t in 0.01f64..4.0,
        ) {
            let f = empirical_correction(&noise, 6, 8).unwrap();
            let x = f.domain_lower.max(0.1) * (1.0 + t);
            let back = f.invert(f.eval(x).unwrap()).unwrap();
            prop_assert!((back - x).abs() <= 1e-9 * x);
        }
    }
}
