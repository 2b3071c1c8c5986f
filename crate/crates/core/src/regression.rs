//! Least squares fit and singular values.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Designs whose condition estimate exceeds this are rejected.
pub const MAX_CONDITION: f64 = 1e12;

/// Singular value decomposition with singular values sorted descending.
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub singulars: Vec<f64>,
    /// rows x k, columns matching `singulars`.
    pub left_vectors: DMatrix<f64>,
    /// cols x k, columns matching `singulars`.
    pub right_vectors: DMatrix<f64>,
}

impl SvdResult {
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let mut scaled = self.left_vectors.clone();
        for (j, s) in self.singulars.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*s);
        }
        scaled * self.right_vectors.transpose()
    }
}

fn check_finite(m: &DMatrix<f64>, what: &'static str) -> Result<()> {
    if m.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Indices that sort `values` descending; ties keep their original order.
fn descending_order(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    idx
}

/// `(X^T X)^{-1} X^T Y` through a Householder QR of `X`.
pub fn ols_coefficients(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (n, p) = x.shape();
    if y.nrows() != n {
        return Err(Error::Dimension(format!("X has {n} rows but Y has {}", y.nrows())));
    }
    if n < p {
        return Err(Error::Regime(format!("least squares needs N >= p, got {n} < {p}")));
    }
    check_finite(x, "design matrix")?;
    check_finite(y, "response matrix")?;

    let qr = x.clone().qr();
    let r = qr.r();
    let (mut dmin, mut dmax) = (f64::INFINITY, 0.0f64);
    for i in 0..p {
        let d = r[(i, i)].abs();
        dmin = dmin.min(d);
        dmax = dmax.max(d);
    }
    let condition = if dmin > 0.0 { dmax / dmin } else { f64::INFINITY };
    if condition > MAX_CONDITION {
        return Err(Error::SingularDesign { condition });
    }

    let mut qty = y.clone();
    qr.q_tr_mul(&mut qty);
    let rhs = qty.rows(0, p).into_owned();
    r.solve_upper_triangular(&rhs)
        .ok_or(Error::SingularDesign { condition })
}

/// `X A_hat`, the projection of the responses onto the column span of `X`.
pub fn fitted_responses(x: &DMatrix<f64>, a_hat: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if x.ncols() != a_hat.nrows() {
        return Err(Error::Dimension(format!(
            "X is {}x{} but A_hat is {}x{}",
            x.nrows(),
            x.ncols(),
            a_hat.nrows(),
            a_hat.ncols()
        )));
    }
    Ok(x * a_hat)
}

/// Descending singular values, `min(rows, cols)` of them.
pub fn singular_values(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if m.is_empty() {
        return Err(Error::Empty("matrix"));
    }
    check_finite(m, "matrix")?;
    // Bidiagonalizing the wide orientation is no cheaper; use the tall one.
    let sv = if m.nrows() >= m.ncols() {
        m.singular_values()
    } else {
        m.transpose().singular_values()
    };
    let mut values: Vec<f64> = sv.iter().map(|v| v.max(0.0)).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

/// Squared singular values, descending.
pub fn squared_singular_values(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    Ok(singular_values(m)?.into_iter().map(|s| s * s).collect())
}

pub fn svd(m: &DMatrix<f64>) -> Result<SvdResult> {
    if m.is_empty() {
        return Err(Error::Empty("matrix"));
    }
    check_finite(m, "matrix")?;
    let decomposition = m.clone().svd(true, true);
    let u = decomposition.u.ok_or(Error::NonFinite("svd"))?;
    let v_t = decomposition.v_t.ok_or(Error::NonFinite("svd"))?;
    let raw: Vec<f64> = decomposition.singular_values.iter().copied().collect();
    let order = descending_order(&raw);
    let k = raw.len();
    let mut left = DMatrix::zeros(m.nrows(), k);
    let mut right = DMatrix::zeros(m.ncols(), k);
    for (dst, &src) in order.iter().enumerate() {
        left.set_column(dst, &u.column(src));
        right.set_column(dst, &v_t.row(src).transpose());
    }
    Ok(SvdResult {
        singulars: order.iter().map(|&i| raw[i].max(0.0)).collect(),
        left_vectors: left,
        right_vectors: right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{replication_rng, sample_gaussian_matrix};
    use approx::assert_relative_eq;

    fn gaussian(rows: usize, cols: usize, seed: u64) -> DMatrix<f64> {
        sample_gaussian_matrix(rows, cols, &mut replication_rng(seed, 0)).unwrap()
    }

    #[test]
    fn orthonormal_design_gives_transpose_product() {
        let q = gaussian(30, 6, 1).qr().q();
        let y = gaussian(30, 4, 2);
        let a_hat = ols_coefficients(&q, &y).unwrap();
        assert!((a_hat - q.transpose() * &y).amax() < 1e-12);
    }

    #[test]
    fn noiseless_recovery() {
        let x = gaussian(40, 8, 3);
        let a = gaussian(8, 5, 4);
        let a_hat = ols_coefficients(&x, &(&x * &a)).unwrap();
        assert!((a_hat - a).amax() < 1e-10);
    }

    #[test]
    fn residual_is_orthogonal_to_design() {
        let x = gaussian(50, 10, 5);
        let y = gaussian(50, 7, 6);
        let a_hat = ols_coefficients(&x, &y).unwrap();
        let normal = x.transpose() * (&y - &x * &a_hat);
        assert!(normal.norm() <= 1e-8 * (x.transpose() * &y).norm());
    }

    #[test]
    fn rejects_bad_designs() {
        let mut x = gaussian(20, 4, 7);
        let col = x.column(0).into_owned();
        x.set_column(3, &(col * 2.0));
        let y = gaussian(20, 3, 8);
        assert!(matches!(ols_coefficients(&x, &y), Err(Error::SingularDesign { .. })));
        assert!(matches!(
            ols_coefficients(&gaussian(3, 5, 9), &gaussian(3, 2, 10)),
            Err(Error::Regime(_))
        ));
        assert!(matches!(
            ols_coefficients(&gaussian(10, 2, 9), &gaussian(9, 2, 10)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn fitted_responses_zero_and_mismatch() {
        let x = gaussian(10, 3, 11);
        let y_hat = fitted_responses(&x, &DMatrix::zeros(3, 4)).unwrap();
        assert_eq!(y_hat, DMatrix::zeros(10, 4));
        assert!(fitted_responses(&x, &DMatrix::zeros(4, 4)).is_err());
    }

    #[test]
    fn projection_is_idempotent() {
        let x = gaussian(30, 5, 12);
        let y = gaussian(30, 6, 13);
        let y_hat = fitted_responses(&x, &ols_coefficients(&x, &y).unwrap()).unwrap();
        let twice = fitted_responses(&x, &ols_coefficients(&x, &y_hat).unwrap()).unwrap();
        assert!((twice - &y_hat).amax() < 1e-9);
    }

    #[test]
    fn elementary_singular_values() {
        assert_eq!(singular_values(&DMatrix::identity(3, 3)).unwrap(), vec![1.0; 3]);
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 3.0, 2.0]));
        let s = singular_values(&d).unwrap();
        assert_relative_eq!(s[0], 3.0, epsilon = 1e-14);
        assert_relative_eq!(s[1], 2.0, epsilon = 1e-14);
        assert_relative_eq!(s[2], 1.0, epsilon = 1e-14);

        let u = gaussian(5, 1, 14).normalize();
        let v = gaussian(4, 1, 15).normalize();
        let s = singular_values(&(&u * v.transpose() * 2.5)).unwrap();
        assert_eq!(s.len(), 4);
        assert_relative_eq!(s[0], 2.5, epsilon = 1e-12);
        assert!(s[1..].iter().all(|v| *v < 1e-12));
    }

    #[test]
    fn non_finite_is_rejected() {
        let mut m = DMatrix::identity(2, 2);
        m[(0, 1)] = f64::NAN;
        assert!(matches!(singular_values(&m), Err(Error::NonFinite(_))));
    }

    #[test]
    fn svd_reconstructs_sorted() {
        for (rows, cols) in [(7, 4), (4, 7), (5, 5)] {
            let m = gaussian(rows, cols, (rows * 10 + cols) as u64);
            let d = svd(&m).unwrap();
            assert!(d.singulars.windows(2).all(|w| w[0] >= w[1]));
            assert!((d.reconstruct() - &m).norm() <= 1e-10 * m.norm());
        }
    }

    #[test]
    fn rotation_invariance() {
        let x = gaussian(40, 6, 16);
        let y = gaussian(40, 9, 17);
        let rot = gaussian(9, 9, 18).qr().q();
        let a1 = ols_coefficients(&x, &y).unwrap();
        let a2 = ols_coefficients(&x, &(&y * &rot)).unwrap();
        let s1 = singular_values(&a1).unwrap();
        let s2 = singular_values(&a2).unwrap();
        for (a, b) in s1.iter().zip(&s2) {
            assert_relative_eq!(a, b, max_relative = 1e-8);
        }
        let f1 = singular_values(&fitted_responses(&x, &a1).unwrap()).unwrap();
        let f2 = singular_values(&fitted_responses(&x, &a2).unwrap()).unwrap();
        for (a, b) in f1.iter().zip(&f2) {
            assert_relative_eq!(a, b, max_relative = 1e-8);
        }
    }
}
