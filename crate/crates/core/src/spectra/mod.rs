//! Limiting spectral laws of the null model.
//!
//! [`MpLaw`] is the Marchenko-Pastur law with ratio `beta`, the limit of the
//! spectrum of `Y_hat^T Y_hat / r`. [`AbLaw`] is the two-parameter family
//! limiting the spectrum of `A_hat^T A_hat`. Both carry an atom of mass
//! `1 - beta` at zero when `beta < 1`.
//!
//! Stieltjes transforms `G(z) = \int dP(t) / (z - t)` are evaluated in closed
//! form for real `z` above the support only. The closed forms are
//! rationalized so the square root never cancels against the leading term:
//! the branch with `G(z) ~ 1/z` falls out directly.

pub mod quadrature;

use std::f64::consts::PI;

use crate::error::{Error, Result};
use quadrature::integrate_edges;

/// Absolute tolerance for density quadrature.
pub const QUAD_TOL: f64 = 1e-9;

pub trait SpectralLaw {
    /// Closed support `[lower, upper]` of the continuous part; `upper` may be infinite.
    fn support(&self) -> (f64, f64);

    /// Mass of the atom at zero.
    fn atom(&self) -> f64;

    /// Density of the continuous part.
    fn density(&self, x: f64) -> f64;

    /// Continuous mass on `[a, b]`.
    fn mass_between(&self, a: f64, b: f64) -> f64 {
        let (lo, hi) = self.support();
        let (a, b) = (a.max(lo), b.min(hi));
        if !(b > a) || !b.is_finite() {
            return 0.0;
        }
        integrate_edges(|t| self.density(t), a, b, QUAD_TOL)
    }

    /// Right-continuous distribution function, atom included.
    fn cdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let (lo, hi) = self.support();
        let continuous = if x >= hi {
            1.0 - self.atom()
        } else {
            self.mass_between(lo, x)
        };
        (self.atom() + continuous).min(1.0)
    }

    /// Distribution function at every point of an ascending slice, integrating
    /// only over consecutive gaps.
    fn cdf_sorted(&self, points: &[f64]) -> Vec<f64> {
        let (lo, hi) = self.support();
        let atom = self.atom();
        let mut acc = 0.0;
        let mut prev = lo;
        points
            .iter()
            .map(|&x| {
                if x < 0.0 {
                    return 0.0;
                }
                if x >= hi {
                    return 1.0;
                }
                if x > prev {
                    acc += self.mass_between(prev, x);
                    prev = x;
                }
                (atom + acc).min(1.0)
            })
            .collect()
    }

    /// Inverse of [`SpectralLaw::cdf`] by bisection.
    fn quantile(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::domain(q, "(0, 1)"));
        }
        if q <= self.atom() {
            return Ok(0.0);
        }
        let (lo, hi) = self.support();
        let mut a = lo;
        let mut b = if hi.is_finite() { hi } else { (lo + 1.0) * 2.0 };
        while self.cdf(b) < q {
            b *= 2.0;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if self.cdf(m) < q {
                a = m;
            } else {
                b = m;
            }
            if b - a <= 1e-12 * b.abs().max(1.0) {
                break;
            }
        }
        Ok(0.5 * (a + b))
    }
}

/// Marchenko-Pastur law with ratio `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpLaw {
    beta: f64,
}

impl MpLaw {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
        }
        Ok(MpLaw { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Upper support edge `(sqrt(beta) + 1)^2`.
    pub fn upper_edge(&self) -> f64 {
        (self.beta.sqrt() + 1.0).powi(2)
    }
}

impl SpectralLaw for MpLaw {
    fn support(&self) -> (f64, f64) {
        let s = self.beta.sqrt();
        ((s - 1.0).powi(2), (s + 1.0).powi(2))
    }

    fn atom(&self) -> f64 {
        (1.0 - self.beta).max(0.0)
    }

    fn density(&self, x: f64) -> f64 {
        mp_density(x, self.beta)
    }
}

/// Continuous part of the Marchenko-Pastur density.
pub fn mp_density(x: f64, beta: f64) -> f64 {
    if !(x > 0.0) {
        return 0.0;
    }
    let v = 4.0 * beta - (beta + 1.0 - x).powi(2);
    if v <= 0.0 {
        0.0
    } else {
        v.sqrt() / (2.0 * PI * x)
    }
}

/// Limit law of the squared singular values of the least squares estimator
/// under the null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbLaw {
    lambda: f64,
    beta: f64,
}

impl AbLaw {
    pub fn new(lambda: f64, beta: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda >= 0.0) {
            return Err(Error::Parameter(format!("lambda must be >= 0, got {lambda}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
        }
        Ok(AbLaw { lambda, beta })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl SpectralLaw for AbLaw {
    fn support(&self) -> (f64, f64) {
        ab_support(self.lambda, self.beta)
    }

    fn atom(&self) -> f64 {
        (1.0 - self.beta).max(0.0)
    }

    fn density(&self, x: f64) -> f64 {
        ab_density(x, self.lambda, self.beta)
    }
}

/// Edges `(x1, x2)` of the continuous part; `x2` is infinite when `lambda = 0`.
pub fn ab_support(lambda: f64, beta: f64) -> (f64, f64) {
    if lambda == 0.0 {
        return ((beta - 1.0).powi(2) / (4.0 * beta), f64::INFINITY);
    }
    let c = (1.0 + beta) * lambda + 2.0;
    let d = 2.0 * (lambda * lambda * beta + lambda * (beta + 1.0) + 1.0).sqrt();
    let x2 = (c + d) / (lambda * lambda * beta);
    // x1 x2 = (beta - 1)^2 / (lambda beta)^2 avoids cancellation in c - d.
    let x1 = (beta - 1.0).powi(2) / ((lambda * beta).powi(2) * x2);
    (x1, x2)
}

pub fn ab_density(x: f64, lambda: f64, beta: f64) -> f64 {
    if !(x > 0.0) {
        return 0.0;
    }
    let (x1, x2) = ab_support(lambda, beta);
    if x <= x1 || x >= x2 {
        return 0.0;
    }
    let v = -(beta - 1.0).powi(2) + 2.0 * beta * ((1.0 + beta) * lambda + 2.0) * x - (beta * lambda * x).powi(2);
    if v <= 0.0 {
        0.0
    } else {
        v.sqrt() / (2.0 * PI * x * (x + 1.0))
    }
}

fn check_above(z: f64, edge: f64) -> Result<()> {
    if z.is_finite() && z > edge {
        Ok(())
    } else {
        Err(Error::domain(z, format!("z > {edge}")))
    }
}

/// Marchenko-Pastur Stieltjes transform for real `z` above the support.
pub fn stieltjes_mp(z: f64, beta: f64) -> Result<f64> {
    let law = MpLaw::new(beta)?;
    check_above(z, law.upper_edge())?;
    let a = 1.0 - beta + z;
    let s = (a * a - 4.0 * z).max(0.0).sqrt();
    Ok(2.0 / (a + s))
}

pub fn stieltjes_mp_deriv(z: f64, beta: f64) -> Result<f64> {
    let law = MpLaw::new(beta)?;
    check_above(z, law.upper_edge())?;
    let a = 1.0 - beta + z;
    let s = (a * a - 4.0 * z).max(0.0).sqrt();
    let ds = (a - 2.0) / s;
    Ok(-2.0 * (1.0 + ds) / (a + s).powi(2))
}

fn ab_parts(z: f64, lambda: f64, beta: f64) -> (f64, f64, f64) {
    let lb = lambda * beta;
    let c = 1.0 - beta + (2.0 + lb) * z;
    let disc = (lb * z).powi(2) - 2.0 * beta * (lambda * (1.0 + beta) + 2.0) * z + (beta - 1.0).powi(2);
    (lb, c, disc.max(0.0).sqrt())
}

fn check_ab_domain(z: f64, lambda: f64, beta: f64) -> Result<()> {
    AbLaw::new(lambda, beta)?;
    if lambda == 0.0 {
        return Err(Error::Parameter(
            "Stieltjes transform needs lambda > 0 (support is unbounded)".into(),
        ));
    }
    check_above(z, ab_support(lambda, beta).1)
}

/// Stieltjes transform of [`AbLaw`] for real `z` above the support.
pub fn stieltjes_ab(z: f64, lambda: f64, beta: f64) -> Result<f64> {
    check_ab_domain(z, lambda, beta)?;
    Ok(stieltjes_ab_at_or_above_edge(z, lambda, beta))
}

/// Closed form without the domain check; valid for `z >= x2`.
pub(crate) fn stieltjes_ab_at_or_above_edge(z: f64, lambda: f64, beta: f64) -> f64 {
    let (lb, c, s) = ab_parts(z, lambda, beta);
    // (c - s) / (2 z (1 + z)) with c^2 - s^2 = 4 (1 + lambda beta) z (1 + z).
    2.0 * (1.0 + lb) / (c + s)
}

/// Closed form of the Marchenko-Pastur transform for `z` at or above the edge.
pub(crate) fn stieltjes_mp_at_or_above_edge(z: f64, beta: f64) -> f64 {
    let a = 1.0 - beta + z;
    let s = (a * a - 4.0 * z).max(0.0).sqrt();
    2.0 / (a + s)
}

pub fn stieltjes_ab_deriv(z: f64, lambda: f64, beta: f64) -> Result<f64> {
    check_ab_domain(z, lambda, beta)?;
    let (lb, c, s) = ab_parts(z, lambda, beta);
    let dc = 2.0 + lb;
    let ddisc = 2.0 * lb * lb * z - 2.0 * beta * (lambda * (1.0 + beta) + 2.0);
    let ds = ddisc / (2.0 * s);
    Ok(-2.0 * (1.0 + lb) * (dc + ds) / (c + s).powi(2))
}

/// `g / beta + (1 - 1/beta) / x`: turns the transform of an `r x r` spectrum
/// into that of the companion `p x p` spectrum when `beta = p / r`.
pub fn tilde_transform(g_value: f64, x: f64, beta: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::domain(x, "x != 0"));
    }
    if !(beta > 0.0) {
        return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
    }
    Ok(g_value / beta + (1.0 - 1.0 / beta) / x)
}

/// Derivative in `x` of [`tilde_transform`] given `g'(x)`.
pub fn tilde_transform_deriv(g_deriv: f64, x: f64, beta: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::domain(x, "x != 0"));
    }
    Ok(g_deriv / beta - (1.0 - 1.0 / beta) / (x * x))
}

/// Empirical spectral distribution: uniform mass on sorted points.
#[derive(Debug, Clone, PartialEq)]
pub struct Esd {
    points: Vec<f64>,
}

impl Esd {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("spectral values"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("spectral values"));
        }
        values.sort_by(f64::total_cmp);
        Ok(Esd { points: values })
    }

    /// Spectrum of a `dim x dim` Gram matrix from its nonzero squared singular
    /// values, padding with exact zeros.
    pub fn from_squared_singulars(squared: &[f64], dim: usize, scale: f64) -> Result<Self> {
        let mut values: Vec<f64> = squared.iter().take(dim).map(|v| v * scale).collect();
        values.resize(dim, 0.0);
        Self::new(values)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.points.partition_point(|v| *v <= x) as f64 / self.points.len() as f64
    }
}

pub fn esd_from_values(values: Vec<f64>) -> Result<Esd> {
    Esd::new(values)
}

/// Kolmogorov-Smirnov distance `sup |F_emp - F_law|`.
///
/// Both one-sided limits are compared at every sample point and at the atom.
pub fn ks_distance<L: SpectralLaw + ?Sized>(esd: &Esd, law: &L) -> f64 {
    let points = esd.points();
    let n = points.len() as f64;
    let law_cdf = law.cdf_sorted(points);
    let atom = law.atom();
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < points.len() {
        let x = points[i];
        let mut j = i;
        while j + 1 < points.len() && points[j + 1] == x {
            j += 1;
        }
        let below = i as f64 / n;
        let at = (j + 1) as f64 / n;
        let f = law_cdf[i];
        let f_left = if x == 0.0 { f - atom } else { f };
        d = d.max((at - f).abs()).max((below - f_left).abs());
        i = j + 1;
    }
    if atom > 0.0 {
        let below = esd.points().partition_point(|v| *v < 0.0) as f64 / n;
        let at = esd.cdf(0.0);
        d = d.max(below.abs()).max((at - atom).abs());
    }
    d
}

/// Which function a plot table tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Density,
    Cdf,
}

/// `(x, value)` on `n` equally spaced points of `[from, to]`, endpoints included.
pub fn law_table<L: SpectralLaw + ?Sized>(
    law: &L,
    kind: TableKind,
    from: f64,
    to: f64,
    n: usize,
) -> Result<Vec<(f64, f64)>> {
    if n < 2 || !(to > from) || !to.is_finite() {
        return Err(Error::Parameter(format!(
            "table needs n >= 2 and a finite range, got n = {n} on [{from}, {to}]"
        )));
    }
    let xs: Vec<f64> = (0..n).map(|i| from + (to - from) * i as f64 / (n - 1) as f64).collect();
    Ok(match kind {
        TableKind::Density => xs.iter().map(|&x| (x, law.density(x))).collect(),
        TableKind::Cdf => xs.iter().copied().zip(law.cdf_sorted(&xs)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const LAMBDAS: [f64; 4] = [0.1, 0.2, 1.0, 3.0];
    const BETAS: [f64; 3] = [0.5, 1.0, 2.0];

    #[test]
    fn mp_density_values() {
        assert_relative_eq!(mp_density(2.0, 1.0), 1.0 / (2.0 * PI), epsilon = 1e-15);
        assert_eq!(mp_density(4.0, 1.0), 0.0);
        let (lo, hi) = MpLaw::new(0.5).unwrap().support();
        assert_relative_eq!(lo, 0.085_786_437_626_905, epsilon = 1e-12);
        assert_relative_eq!(hi, 2.914_213_562_373_095, epsilon = 1e-12);
    }

    #[test]
    fn ab_support_values() {
        let (x1, x2) = ab_support(0.2, 0.5);
        assert_relative_eq!(x1, 0.108_747_069_239_423, epsilon = 1e-10);
        assert_relative_eq!(x2, 229.891_252_930_760_5, epsilon = 1e-9);
        let (x1, x2) = ab_support(0.0, 2.0);
        assert_relative_eq!(x1, 0.125);
        assert!(x2.is_infinite());
        // beta = 1 puts the lower edge at zero.
        assert!(ab_support(0.7, 1.0).0.abs() < 1e-15);
    }

    #[test]
    fn normalization_grid() {
        for &lambda in &LAMBDAS {
            for &beta in &BETAS {
                let law = AbLaw::new(lambda, beta).unwrap();
                let (lo, hi) = law.support();
                let total = law.mass_between(lo, hi) + law.atom();
                assert!((total - 1.0).abs() < 1e-8, "ab({lambda},{beta}) mass {total}");
            }
        }
        for &beta in &BETAS {
            let law = MpLaw::new(beta).unwrap();
            let (lo, hi) = law.support();
            let total = law.mass_between(lo, hi) + law.atom();
            assert!((total - 1.0).abs() < 1e-8, "mp({beta}) mass {total}");
        }
    }

    #[test]
    fn densities_vanish_at_edges() {
        for &lambda in &LAMBDAS {
            for &beta in &BETAS {
                let (x1, x2) = ab_support(lambda, beta);
                for x in [x1 - 1e-12, x2, x2 + 1e-12] {
                    assert!(ab_density(x, lambda, beta) < 1e-4, "ab({lambda},{beta}) at {x}");
                }
                if x1 > 0.0 {
                    assert!(ab_density(x1, lambda, beta) < 1e-4);
                }
            }
        }
        for &beta in &[0.5, 2.0] {
            let (lo, hi) = MpLaw::new(beta).unwrap().support();
            for x in [lo, lo - 1e-12, hi, hi + 1e-12] {
                assert!(mp_density(x, beta) < 1e-4);
            }
        }
    }

    #[test]
    fn stieltjes_mp_values() {
        // Edge limit at beta = 1, z = 4.
        assert_relative_eq!(stieltjes_mp(4.0 + 1e-14, 1.0).unwrap(), 0.5, epsilon = 1e-6);
        for beta in [0.3, 1.0, 2.5] {
            let g = stieltjes_mp(1e6, beta).unwrap();
            assert!((g * 1e6 - 1.0).abs() < 0.01);
        }
        assert!(matches!(stieltjes_mp(2.0, 1.0), Err(Error::Domain { .. })));
        assert!(stieltjes_mp(4.0, 1.0).is_err());
    }

    #[test]
    fn stieltjes_ab_asymptote_and_domain() {
        let g = stieltjes_ab(1e8, 0.2, 0.5).unwrap();
        assert!((1e8 * g - 1.0).abs() < 1e-6);
        assert!(stieltjes_ab(100.0, 0.2, 0.5).is_err());
        assert!(matches!(stieltjes_ab(10.0, 0.0, 2.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn transforms_decrease_above_support() {
        for &lambda in &LAMBDAS {
            for &beta in &BETAS {
                let x2 = ab_support(lambda, beta).1;
                let values: Vec<f64> = (1..60)
                    .map(|k| stieltjes_ab(x2 * (1.0 + 0.05 * k as f64), lambda, beta).unwrap())
                    .collect();
                assert!(values.windows(2).all(|w| w[1] < w[0]));
            }
        }
        for &beta in &BETAS {
            let e = MpLaw::new(beta).unwrap().upper_edge();
            let values: Vec<f64> = (1..60)
                .map(|k| stieltjes_mp(e * (1.0 + 0.05 * k as f64), beta).unwrap())
                .collect();
            assert!(values.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn tilde_transform_cases() {
        assert_eq!(tilde_transform(0.37, 3.0, 1.0).unwrap(), 0.37);
        assert_relative_eq!(tilde_transform(0.1, 2.0, 0.5).unwrap(), -0.3, epsilon = 1e-15);
        assert!(tilde_transform(0.1, 0.0, 0.5).is_err());
        // Asymptote: with g ~ 1/x the tilde transform is ~ 1/x too.
        let x = 1e9;
        let g = stieltjes_ab(x, 0.2, 0.5).unwrap();
        assert!((x * tilde_transform(g, x, 0.5).unwrap() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn esd_single_point_at_median() {
        let law = MpLaw::new(2.0).unwrap();
        let median = law.quantile(0.5).unwrap();
        let esd = esd_from_values(vec![median]).unwrap();
        assert_relative_eq!(ks_distance(&esd, &law), 0.5, epsilon = 1e-7);
        assert!(esd_from_values(vec![]).is_err());
    }

    #[test]
    fn esd_cdf_is_right_continuous() {
        let esd = Esd::new(vec![2.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(esd.cdf(0.5), 0.0);
        assert_eq!(esd.cdf(1.0), 0.25);
        assert_eq!(esd.cdf(2.0), 0.75);
        assert_eq!(esd.cdf(3.0), 1.0);
    }

    #[test]
    fn zero_padding_matches_atom() {
        // Only zeros: the ESD equals the atom part exactly at zero.
        let law = MpLaw::new(0.5).unwrap();
        let esd = Esd::from_squared_singulars(&[], 4, 1.0).unwrap();
        assert_relative_eq!(ks_distance(&esd, &law), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn cdf_sorted_matches_pointwise() {
        let law = AbLaw::new(0.2, 0.5).unwrap();
        let xs = [0.0, 0.5, 3.0, 10.0, 100.0, 300.0];
        let batch = law.cdf_sorted(&xs);
        for (x, f) in xs.iter().zip(&batch) {
            assert_relative_eq!(law.cdf(*x), *f, epsilon = 1e-8);
        }
        assert_relative_eq!(batch[0], 0.5, epsilon = 1e-12);
        assert_eq!(batch[5], 1.0);
    }

    #[test]
    fn table_shapes() {
        let law = AbLaw::new(0.2, 0.5).unwrap();
        let (x1, x2) = law.support();
        let t = law_table(&law, TableKind::Density, x1, x2, 1000).unwrap();
        assert_eq!(t.len(), 1000);
        assert_relative_eq!(t[0].0, x1);
        assert_relative_eq!(t[999].0, x2);
        assert!(law_table(&law, TableKind::Cdf, 0.0, f64::INFINITY, 10).is_err());
    }
}
