//! Rank selection and singular-value estimation for reduced-rank regression
//! `Y = X A + U` when the numbers of observations, predictors and responses
//! grow together.

// `!(x > y)` is used on purpose so that NaN fails range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ensembles;
pub mod error;
pub mod estimation;
pub mod montecarlo;
pub mod perturbation;
pub mod ranktests;
pub mod regression;
pub mod spectra;
pub mod stats;

pub use error::{Error, Result};
