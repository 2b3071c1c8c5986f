//! Random objects of the regression model `Y = X A + U`.
//!
//! Every sampler takes an explicit generator. Reproducible streams come from
//! [`replication_rng`], which maps `(master_seed, index)` onto an independent
//! ChaCha20 stream, so a replication draws the same numbers whether it runs
//! serially or on a worker thread.
//!
//! Gaussian entries use the ziggurat sampler of `rand_distr::StandardNormal`
//! and matrices are filled in column-major order.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator for stream `index` of `master_seed`.
pub fn replication_rng(master_seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// How the rank-`s` signal factors are normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SignalConvention {
    /// Orthonormal `u_j`, `v_j`; the singular values of `A` are the thetas.
    #[default]
    UnitVectors,
    /// `u_j` scaled to norm `sqrt(p)` and `v_j` to norm `sqrt(r)`; the
    /// singular values of `A` are `theta_j * sqrt(p r)`.
    RowColScaled,
}

/// Dimensions and signal of one regression model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    /// Number of observations `N`.
    pub n_obs: usize,
    /// Number of predictors.
    pub p: usize,
    /// Number of responses.
    pub r: usize,
    /// Nonzero singular values of the signal, nonincreasing. Empty under the null.
    pub thetas: Vec<f64>,
    pub convention: SignalConvention,
    pub noise_sd: f64,
}

impl ModelConfig {
    pub fn new(n_obs: usize, p: usize, r: usize, thetas: Vec<f64>) -> Result<Self> {
        let config = ModelConfig {
            n_obs,
            p,
            r,
            thetas,
            convention: SignalConvention::UnitVectors,
            noise_sd: 1.0,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn null(n_obs: usize, p: usize, r: usize) -> Result<Self> {
        Self::new(n_obs, p, r, Vec::new())
    }

    /// Picks `p = round(N / (1 + lambda))` and `r = round(p / beta)`.
    pub fn from_ratios(n_obs: usize, lambda: f64, beta: f64, thetas: Vec<f64>) -> Result<Self> {
        if !(lambda >= 0.0 && beta > 0.0) {
            return Err(Error::Parameter(format!(
                "need lambda >= 0 and beta > 0, got ({lambda}, {beta})"
            )));
        }
        let p = (n_obs as f64 / (1.0 + lambda)).round() as usize;
        let r = (p as f64 / beta).round() as usize;
        Self::new(n_obs, p, r, thetas)
    }

    pub fn with_convention(mut self, convention: SignalConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_obs == 0 || self.p == 0 || self.r == 0 {
            return Err(Error::Dimension(format!(
                "N, p, r must be positive, got ({}, {}, {})",
                self.n_obs, self.p, self.r
            )));
        }
        if self.n_obs < self.p {
            return Err(Error::Regime(format!(
                "least squares needs N >= p, got N = {} < p = {}",
                self.n_obs, self.p
            )));
        }
        let max = self.p.min(self.r);
        if self.rank() > max {
            return Err(Error::Rank { rank: self.rank(), max });
        }
        if self.thetas.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
            return Err(Error::Parameter("thetas must be positive and finite".into()));
        }
        if self.thetas.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parameter("thetas must be nonincreasing".into()));
        }
        if !(self.noise_sd.is_finite() && self.noise_sd > 0.0) {
            return Err(Error::Parameter("noise_sd must be positive".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.thetas.len()
    }

    /// `N / p - 1`.
    pub fn lambda(&self) -> f64 {
        self.n_obs as f64 / self.p as f64 - 1.0
    }

    /// `p / r`.
    pub fn beta(&self) -> f64 {
        self.p as f64 / self.r as f64
    }

    /// `N / r`.
    pub fn mu(&self) -> f64 {
        self.n_obs as f64 / self.r as f64
    }
}

/// Factors of the low-rank signal `A = U_vecs * diag(thetas) * V_vecs^T`.
#[derive(Debug, Clone)]
pub struct SignalFactors {
    /// p x s left factors.
    pub left: DMatrix<f64>,
    /// r x s right factors.
    pub right: DMatrix<f64>,
    pub thetas: Vec<f64>,
}

impl SignalFactors {
    /// Assembles the p x r signal matrix.
    pub fn matrix(&self) -> DMatrix<f64> {
        let mut scaled = self.left.clone();
        for (j, theta) in self.thetas.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*theta);
        }
        scaled * self.right.transpose()
    }
}

/// One realization of the model.
#[derive(Debug, Clone)]
pub struct Dataset {
    /// N x p design.
    pub x: DMatrix<f64>,
    /// N x r noise.
    pub noise: DMatrix<f64>,
    /// p x r coefficients.
    pub a: DMatrix<f64>,
    /// N x r responses.
    pub y: DMatrix<f64>,
    pub seed: u64,
    pub stream: u64,
}

pub fn sample_gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Result<DMatrix<f64>> {
    if rows == 0 || cols == 0 {
        return Err(Error::Dimension(format!(
            "gaussian matrix must be nonempty, got {rows}x{cols}"
        )));
    }
    let values = (0..rows * cols).map(|_| rng.sample::<f64, _>(StandardNormal));
    Ok(DMatrix::from_iterator(rows, cols, values))
}

/// Haar-distributed `n x k` matrix with orthonormal columns.
fn haar_columns<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<DMatrix<f64>> {
    let g = sample_gaussian_matrix(n, k, rng)?;
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    // Fixing the signs of diag(R) makes Q exactly Haar.
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    Ok(q)
}

pub fn build_signal<R: Rng + ?Sized>(config: &ModelConfig, rng: &mut R) -> Result<SignalFactors> {
    config.validate()?;
    let s = config.rank();
    if s == 0 {
        return Err(Error::Parameter("build_signal needs at least one theta".into()));
    }
    let mut left = haar_columns(config.p, s, rng)?;
    let mut right = haar_columns(config.r, s, rng)?;
    if config.convention == SignalConvention::RowColScaled {
        left.scale_mut((config.p as f64).sqrt());
        right.scale_mut((config.r as f64).sqrt());
    }
    Ok(SignalFactors {
        left,
        right,
        thetas: config.thetas.clone(),
    })
}

/// Draws `X`, then the noise, then the signal factors, all from `rng`.
pub fn simulate_model_with<R: Rng + ?Sized>(config: &ModelConfig, rng: &mut R) -> Result<Dataset> {
    config.validate()?;
    let x = sample_gaussian_matrix(config.n_obs, config.p, rng)?;
    let mut noise = sample_gaussian_matrix(config.n_obs, config.r, rng)?;
    if config.noise_sd != 1.0 {
        noise.scale_mut(config.noise_sd);
    }
    let a = if config.rank() == 0 {
        DMatrix::zeros(config.p, config.r)
    } else {
        build_signal(config, rng)?.matrix()
    };
    let y = &x * &a + &noise;
    Ok(Dataset {
        x,
        noise,
        a,
        y,
        seed: 0,
        stream: 0,
    })
}

/// Realization for stream `stream` of `seed`.
pub fn simulate_model(config: &ModelConfig, seed: u64, stream: u64) -> Result<Dataset> {
    let mut rng = replication_rng(seed, stream);
    let mut data = simulate_model_with(config, &mut rng)?;
    data.seed = seed;
    data.stream = stream;
    Ok(data)
}

/// Sizes of the Wishart pair whose Jacobi spectrum matches the squared
/// singular values of `X \ U` after the map `f = l / (1 + l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParameters {
    pub m: usize,
    /// Degrees of freedom of the denominator Wishart.
    pub n1: usize,
    /// Degrees of freedom of the numerator Wishart.
    pub n2: usize,
}

impl JacobiParameters {
    pub fn for_regression(n_obs: usize, p: usize, r: usize) -> Result<Self> {
        if n_obs < p || p == 0 || r == 0 {
            return Err(Error::Regime(format!(
                "need N >= p >= 1 and r >= 1, got ({n_obs}, {p}, {r})"
            )));
        }
        let m = p.min(r);
        Ok(JacobiParameters {
            m,
            n1: n_obs - p + m,
            n2: p.max(r),
        })
    }

    /// Exponent of `f` in the eigenvalue density.
    pub fn alpha1(&self) -> f64 {
        (self.n2 as f64 - self.m as f64 - 1.0) / 2.0
    }

    /// Exponent of `1 - f` in the eigenvalue density.
    pub fn alpha2(&self) -> f64 {
        (self.n1 as f64 - self.m as f64 - 1.0) / 2.0
    }
}

/// Eigenvalues of `(B + C)^{-1} C` for independent `B ~ W_m(I, n1)` and
/// `C ~ W_m(I, n2)`, sorted descending.
pub fn sample_jacobi_spectrum<R: Rng + ?Sized>(m: usize, n1: usize, n2: usize, rng: &mut R) -> Result<Vec<f64>> {
    if m == 0 || m > n1.min(n2) {
        return Err(Error::Parameter(format!(
            "need 1 <= m <= min(n1, n2), got m = {m}, n1 = {n1}, n2 = {n2}"
        )));
    }
    let g1 = sample_gaussian_matrix(n1, m, rng)?;
    let g2 = sample_gaussian_matrix(n2, m, rng)?;
    let b = g1.tr_mul(&g1);
    let c = g2.tr_mul(&g2);
    let chol = (&b + &c)
        .cholesky()
        .ok_or_else(|| Error::Parameter("B + C is not positive definite".into()))?;
    let l = chol.l();
    // L^{-1} C L^{-T} is symmetric with the same spectrum.
    let left = l
        .solve_lower_triangular(&c)
        .ok_or(Error::NonFinite("jacobi whitening"))?;
    let whitened = l
        .solve_lower_triangular(&left.transpose())
        .ok_or(Error::NonFinite("jacobi whitening"))?;
    let sym = (&whitened + whitened.transpose()) * 0.5;
    let mut values: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}
