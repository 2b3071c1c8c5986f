use rrr_core::ensembles::{simulate_model, ModelConfig};
use rrr_core::estimation::{
    estimate_thetas_from_a, estimate_thetas_from_y, plug_in_correction, threshold_a, CorrectionFunction, OutlierRule,
};
use rrr_core::montecarlo::fit;
use rrr_core::regression::singular_values;
use rrr_core::spectra::ab_support;

const LAMBDA: f64 = 0.2;
const BETA: f64 = 0.5;

fn model(n_obs: usize, theta: f64) -> ModelConfig {
    ModelConfig::from_ratios(n_obs, LAMBDA, BETA, vec![theta]).unwrap()
}

fn plug_in_error(n_obs: usize, theta: f64, reps: u64) -> f64 {
    let model = model(n_obs, theta);
    let errors: f64 = (0..reps)
        .map(|i| {
            let data = simulate_model(&model, 31, i).unwrap();
            let sv = singular_values(&fit(&data).unwrap().a_hat).unwrap();
            let d = plug_in_correction(&sv, 1, model.p, model.r).unwrap();
            (d.eval(sv[0]).unwrap() - theta).abs()
        })
        .sum();
    errors / reps as f64
}

#[test]
fn plug_in_error_shrinks_with_n() {
    let small = plug_in_error(200, 25.0, 6);
    let large = plug_in_error(800, 25.0, 6);
    assert!(large < small, "N=200 {small}, N=800 {large}");
}

// Below the threshold the top singular value sticks to the bulk edge. The
// edge is approached slowly from below, so the tolerance is relative.
#[test]
fn sub_threshold_spike_collapses_to_edge() {
    let model = model(800, 0.5 * threshold_a(LAMBDA, BETA).unwrap());
    let data = simulate_model(&model, 32, 0).unwrap();
    let fit = fit(&data).unwrap();
    let top = singular_values(&fit.a_hat).unwrap()[0];
    let edge = ab_support(model.lambda(), model.beta()).1.sqrt();
    assert!((top / edge - 1.0).abs() < 0.1, "top {top}, edge {edge}");
    let d = CorrectionFunction::from_a(model.lambda(), model.beta()).unwrap();
    let est = estimate_thetas_from_a(&fit.a_hat, 1, &d, model.lambda(), model.beta(), OutlierRule::default()).unwrap();
    assert!(!est[0].above_threshold);
}

#[test]
fn both_routes_are_consistent_above_threshold() {
    let model = model(500, 20.0);
    let data = simulate_model(&model, 33, 0).unwrap();
    let fit = fit(&data).unwrap();
    let d = CorrectionFunction::from_a(model.lambda(), model.beta()).unwrap();
    let from_a =
        estimate_thetas_from_a(&fit.a_hat, 1, &d, model.lambda(), model.beta(), OutlierRule::default()).unwrap();
    let theta_a = from_a[0].theta_hat.unwrap();
    assert!((theta_a - 20.0).abs() < 1.5, "{theta_a}");
    assert!(from_a[0].std_error.unwrap() > 0.0);
    let from_y = estimate_thetas_from_y(&fit.y_hat, model.p, 1, OutlierRule::default()).unwrap();
    let theta_y = from_y[0].theta_hat.unwrap();
    assert!((theta_y - 20.0).abs() < 1.5, "{theta_y}");
}

#[test]
fn null_is_not_flagged() {
    let model = ModelConfig::null(500, 417, 834).unwrap();
    let data = simulate_model(&model, 34, 0).unwrap();
    let fit = fit(&data).unwrap();
    let d = CorrectionFunction::from_a(model.lambda(), model.beta()).unwrap();
    let est = estimate_thetas_from_a(&fit.a_hat, 1, &d, model.lambda(), model.beta(), OutlierRule::default()).unwrap();
    assert!(!est[0].above_threshold);
    assert!(est[0].theta_hat.is_none());
}
