//! Tracy-Widom distribution for real symmetric ensembles (TW1).
//!
//! Tabulated on `[-9, 7]` with step 0.01 from the Fredholm determinant
//! `det(I - K)`, `K(x, y) = Ai((x + y)/2 + s)/2`, and interpolated with a
//! monotone cubic (Fritsch-Butland slopes). Outside the table the tails follow
//! the leading asymptotics `log F ~ -|s|^3/24` and
//! `log(1 - F) ~ -(2/3) s^{3/2}`, matched to the last tabulated values.

use std::sync::OnceLock;

use super::tw1_table::{GRID_START, GRID_STEP, TW1_CDF};
use crate::error::{Error, Result};

fn slopes() -> &'static [f64] {
    static SLOPES: OnceLock<Vec<f64>> = OnceLock::new();
    SLOPES.get_or_init(|| {
        let n = TW1_CDF.len();
        let secant: Vec<f64> = TW1_CDF.windows(2).map(|w| (w[1] - w[0]) / GRID_STEP).collect();
        let mut d = vec![0.0; n];
        d[0] = secant[0];
        d[n - 1] = secant[n - 2];
        for i in 1..n - 1 {
            let (a, b) = (secant[i - 1], secant[i]);
            d[i] = if a * b <= 0.0 { 0.0 } else { 2.0 * a * b / (a + b) };
        }
        d
    })
}

fn grid_end() -> f64 {
    GRID_START + GRID_STEP * (TW1_CDF.len() - 1) as f64
}

pub fn tw_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let last = TW1_CDF.len() - 1;
    let end = grid_end();
    if x <= GRID_START {
        let s0 = GRID_START.abs();
        return TW1_CDF[0] * (-(x.abs().powi(3) - s0.powi(3)) / 24.0).exp();
    }
    if x >= end {
        let tail = 1.0 - TW1_CDF[last];
        return 1.0 - tail * (-(2.0 / 3.0) * (x.powf(1.5) - end.powf(1.5))).exp();
    }
    let pos = (x - GRID_START) / GRID_STEP;
    let i = (pos.floor() as usize).min(last - 1);
    let t = pos - i as f64;
    let d = slopes();
    let (y0, y1) = (TW1_CDF[i], TW1_CDF[i + 1]);
    let (m0, m1) = (d[i] * GRID_STEP, d[i + 1] * GRID_STEP);
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * m0 + (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * m1
}

/// Inverse of [`tw_cdf`].
pub fn tw_quantile(q: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::domain(q, "(0, 1)"));
    }
    let (mut lo, mut hi) = (GRID_START, grid_end());
    while tw_cdf(lo) > q {
        lo -= 1.0;
    }
    while tw_cdf(hi) < q {
        hi += 1.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tw_cdf(mid) < q {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn table_is_monotone() {
        assert!(TW1_CDF.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn interpolation_hits_nodes() {
        for i in [0usize, 17, 800, 1599] {
            let x = GRID_START + GRID_STEP * i as f64;
            assert_relative_eq!(tw_cdf(x), TW1_CDF[i], max_relative = 1e-12);
        }
    }

    #[test]
    fn tails_are_continuous_and_bounded() {
        let end = grid_end();
        assert_relative_eq!(tw_cdf(end), TW1_CDF[TW1_CDF.len() - 1], epsilon = 1e-15);
        assert!(tw_cdf(-20.0) >= 0.0 && tw_cdf(-20.0) < 1e-100);
        assert!(tw_cdf(20.0) <= 1.0 && tw_cdf(20.0) > 1.0 - 1e-12);
    }

    #[test]
    fn moments_match_known_values() {
        // Mean -1.2065335745820 and variance 1.6077810345810 of TW1.
        let (a, b) = (-12.0, 10.0);
        let n = 22_000;
        let h = (b - a) / n as f64;
        let (mut m1, mut m2) = (0.0, 0.0);
        for k in 0..n {
            let x0 = a + h * k as f64;
            let dp = tw_cdf(x0 + h) - tw_cdf(x0);
            let xm = x0 + 0.5 * h;
            m1 += xm * dp;
            m2 += xm * xm * dp;
        }
        assert_relative_eq!(m1, -1.206_533_574_582, epsilon = 1e-4);
        assert_relative_eq!(m2 - m1 * m1, 1.607_781_034_581, epsilon = 1e-3);
    }

    #[test]
    fn quantile_inverts_cdf() {
        for q in [0.5, 0.9, 0.95, 1e-6, 0.999_999] {
            assert_relative_eq!(tw_cdf(tw_quantile(q).unwrap()), q, epsilon = 1e-9);
        }
        assert!(tw_quantile(0.0).is_err());
        assert!(tw_quantile(1.0).is_err());
    }
}
