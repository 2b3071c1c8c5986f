//! Exact finite-size description of outliers under a low-rank perturbation.
//!
//! For `A_hat = Z + U Theta V^T`, every singular value of `A_hat` that is not a
//! singular value of `Z` is a zero of `det M(t)`, where `M(t)` is a `2s x 2s`
//! matrix built from resolvents of `Z`. Used as an oracle in tests.

use nalgebra::DMatrix;

use crate::ensembles::SignalFactors;
use crate::error::{Error, Result};
use crate::regression::svd;

/// Distance below which `t` counts as hitting a singular value of `Z`.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Both sides of
/// `|tI - Psi - W1 D W2| = |D| |tI - Psi| |D^{-1} - W2 (tI - Psi)^{-1} W1|`.
pub fn det_identity_check(
    psi: &DMatrix<f64>,
    d: &DMatrix<f64>,
    w1: &DMatrix<f64>,
    w2: &DMatrix<f64>,
    t: f64,
) -> Result<(f64, f64)> {
    let n = psi.nrows();
    let s = d.nrows();
    if psi.ncols() != n || d.ncols() != s || w1.shape() != (n, s) || w2.shape() != (s, n) {
        return Err(Error::Dimension(format!(
            "Psi {:?}, D {:?}, W1 {:?}, W2 {:?}",
            psi.shape(),
            d.shape(),
            w1.shape(),
            w2.shape()
        )));
    }
    let d_inv = d
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Parameter("D is singular".into()))?;
    let shifted = DMatrix::<f64>::identity(n, n) * t - psi;
    let shifted_inv = shifted
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Parameter(format!("t = {t} is an eigenvalue of Psi")))?;
    let lhs = (&shifted - w1 * d * w2).determinant();
    let inner = d_inv - w2 * shifted_inv * w1;
    let rhs = d.determinant() * shifted.determinant() * inner.determinant();
    Ok((lhs, rhs))
}

/// `t -> det M(t)` for a noise matrix `Z` and signal factors `U, Theta, V`.
#[derive(Debug, Clone)]
pub struct SecularFunction {
    singulars: Vec<f64>,
    /// `U^T P`, `s x k`, with `P` the left singular vectors of `Z`.
    u_left: DMatrix<f64>,
    /// `V^T Q`, `s x k`, with `Q` the right singular vectors of `Z`.
    v_right: DMatrix<f64>,
    /// Squared norms of the parts of the columns of `U` (`V`) outside the
    /// span of `P` (`Q`), as `s x s` Gram matrices.
    u_null: DMatrix<f64>,
    v_null: DMatrix<f64>,
    theta_inv: Vec<f64>,
}

impl SecularFunction {
    pub fn new(z: &DMatrix<f64>, signal: &SignalFactors) -> Result<Self> {
        let (p, r) = z.shape();
        let s = signal.thetas.len();
        if signal.left.shape() != (p, s) || signal.right.shape() != (r, s) {
            return Err(Error::Dimension(format!(
                "Z is {p} x {r}, factors are {:?} and {:?} for {s} spikes",
                signal.left.shape(),
                signal.right.shape()
            )));
        }
        if s == 0 {
            return Err(Error::Empty("spikes"));
        }
        if signal.thetas.iter().any(|t| *t == 0.0 || !t.is_finite()) {
            return Err(Error::Parameter("spike strengths must be finite and nonzero".into()));
        }
        let dec = svd(z)?;
        let u_left = signal.left.transpose() * &dec.left_vectors;
        let v_right = signal.right.transpose() * &dec.right_vectors;
        let u_null = signal.left.transpose() * &signal.left - &u_left * u_left.transpose();
        let v_null = signal.right.transpose() * &signal.right - &v_right * v_right.transpose();
        Ok(SecularFunction {
            singulars: dec.singulars,
            u_left,
            v_right,
            u_null,
            v_null,
            theta_inv: signal.thetas.iter().map(|t| 1.0 / t).collect(),
        })
    }

    /// Singular values of `Z`, descending.
    pub fn poles(&self) -> &[f64] {
        &self.singulars
    }

    /// `M(t)` assembled block by block through the singular value
    /// decomposition of `Z`.
    pub fn matrix(&self, t: f64) -> Result<DMatrix<f64>> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::domain(t, "t > 0"));
        }
        if self.singulars.iter().any(|sv| (t - sv).abs() <= POLE_TOLERANCE) {
            return Err(Error::Pole { t });
        }
        let s = self.theta_inv.len();
        let t2 = t * t;
        let k = self.singulars.len();
        // Diagonal weights of t(t^2 - ZZ^T)^{-1}, t(t^2 - Z^T Z)^{-1} and
        // (t^2 - ZZ^T)^{-1} Z in the singular bases.
        let diag_t: Vec<f64> = self.singulars.iter().map(|sv| t / (t2 - sv * sv)).collect();
        let diag_z: Vec<f64> = self.singulars.iter().map(|sv| sv / (t2 - sv * sv)).collect();
        let weighted = |a: &DMatrix<f64>, b: &DMatrix<f64>, w: &[f64]| {
            let mut out = DMatrix::zeros(s, s);
            for i in 0..s {
                for j in 0..s {
                    out[(i, j)] = (0..k).map(|l| a[(i, l)] * w[l] * b[(j, l)]).sum();
                }
            }
            out
        };
        let m11 = weighted(&self.v_right, &self.v_right, &diag_t) + &self.v_null / t;
        let m22 = weighted(&self.u_left, &self.u_left, &diag_t) + &self.u_null / t;
        let m21 = weighted(&self.u_left, &self.v_right, &diag_z);
        let mut m = DMatrix::zeros(2 * s, 2 * s);
        m.view_mut((0, 0), (s, s)).copy_from(&m11);
        m.view_mut((0, s), (s, s)).copy_from(&m21.transpose());
        m.view_mut((s, 0), (s, s)).copy_from(&m21);
        m.view_mut((s, s), (s, s)).copy_from(&m22);
        for (j, inv) in self.theta_inv.iter().enumerate() {
            m[(j, s + j)] -= inv;
            m[(s + j, j)] -= inv;
        }
        Ok(m)
    }

    /// Positive zeros of `det M(t)` below `upper`, by sign changes on
    /// `per_interval` points between consecutive poles, refined by bisection.
    pub fn zeros(&self, upper: f64, per_interval: usize) -> Result<Vec<f64>> {
        let mut edges: Vec<f64> = self.singulars.iter().rev().copied().filter(|v| *v > 0.0).collect();
        edges.dedup_by(|a, b| (*a - *b).abs() <= POLE_TOLERANCE);
        // Near t = 0 the null-space terms grow like 1/t and the determinant
        // loses all accuracy, so the scan starts a little above zero.
        let floor = 1e-6 * edges.first().copied().unwrap_or(upper);
        let mut cuts = vec![floor];
        cuts.extend(edges);
        cuts.push(upper);
        let mut found = Vec::new();
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if !(b > a) {
                continue;
            }
            // Cosine spacing keeps points dense next to the poles.
            let pad = 1e-10 * b;
            let grid: Vec<f64> = (0..=per_interval)
                .map(|i| {
                    let c = 0.5 * (1.0 - (std::f64::consts::PI * i as f64 / per_interval as f64).cos());
                    (a + pad) + (b - a - 2.0 * pad) * c
                })
                .collect();
            let values: Vec<Option<f64>> = grid.iter().map(|&t| secular_eval(self, t).ok()).collect();
            for i in 0..per_interval {
                if let (Some(f0), Some(f1)) = (values[i], values[i + 1]) {
                    if f0 == 0.0 {
                        found.push(grid[i]);
                    } else if f0 * f1 < 0.0 {
                        found.push(self.bisect(grid[i], grid[i + 1], f0)?);
                    }
                }
            }
        }
        found.sort_by(|a, b| b.total_cmp(a));
        Ok(found)
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, f_lo: f64) -> Result<f64> {
        let sign = f_lo.signum();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if secular_eval(self, mid)? * sign > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// `det M(t)`.
pub fn secular_eval(sf: &SecularFunction, t: f64) -> Result<f64> {
    Ok(sf.matrix(t)?.determinant())
}
