use approx::assert_relative_eq;
use rrr_core::ensembles::{
    replication_rng, sample_jacobi_spectrum, simulate_model, JacobiParameters, ModelConfig, SignalConvention,
};
use rrr_core::montecarlo::noise_coefficient_singulars;
use rrr_core::regression::singular_values;
use rrr_core::stats::{mean, std_error};

fn first_two_moments(values: &[f64]) -> (f64, f64) {
    let m1 = mean(values);
    let m2 = values.iter().map(|v| v * v).sum::<f64>() / values.len() as f64;
    (m1, m2)
}

// The Jacobi spectrum can be drawn directly or through the regression.
#[test]
fn jacobi_spectrum_two_routes() {
    let (n_obs, p, r) = (40, 12, 20);
    let params = JacobiParameters::for_regression(n_obs, p, r).unwrap();
    let model = ModelConfig::null(n_obs, p, r).unwrap();
    let reps = 400;
    let mut direct = (Vec::new(), Vec::new());
    let mut regression = (Vec::new(), Vec::new());
    let mut rng = replication_rng(11, 0);
    for i in 0..reps {
        let f = sample_jacobi_spectrum(params.m, params.n1, params.n2, &mut rng).unwrap();
        let (a, b) = first_two_moments(&f);
        direct.0.push(a);
        direct.1.push(b);
        let data = simulate_model(&model, 12, i).unwrap();
        let f: Vec<f64> = noise_coefficient_singulars(&data)
            .unwrap()
            .iter()
            .map(|s| s * s / (1.0 + s * s))
            .collect();
        let (a, b) = first_two_moments(&f);
        regression.0.push(a);
        regression.1.push(b);
    }
    for (x, y) in [(&direct.0, &regression.0), (&direct.1, &regression.1)] {
        let se = std_error(x).hypot(std_error(y));
        assert!(
            (mean(x) - mean(y)).abs() < 4.0 * se,
            "{} vs {} (se {se})",
            mean(x),
            mean(y)
        );
    }
}

#[test]
fn unit_vector_signal_has_theta_singular_values() {
    let thetas = vec![5.0, 2.5, 0.75];
    let model = ModelConfig::new(60, 20, 30, thetas.clone()).unwrap();
    let data = simulate_model(&model, 1, 0).unwrap();
    let sv = singular_values(&data.a).unwrap();
    for (got, want) in sv.iter().zip(&thetas) {
        assert_relative_eq!(*got, *want, epsilon = 1e-12);
    }
    assert!(sv[3..].iter().all(|v| v.abs() < 1e-12));
}

#[test]
fn row_col_scaled_signal() {
    let model = ModelConfig::new(60, 20, 30, vec![0.1])
        .unwrap()
        .with_convention(SignalConvention::RowColScaled);
    let data = simulate_model(&model, 1, 0).unwrap();
    let sv = singular_values(&data.a).unwrap();
    assert_relative_eq!(sv[0], 0.1 * (20.0f64 * 30.0).sqrt(), max_relative = 1e-12);
}

#[test]
fn same_seed_same_data() {
    let model = ModelConfig::new(30, 10, 15, vec![1.0]).unwrap();
    let a = simulate_model(&model, 5, 3).unwrap();
    let b = simulate_model(&model, 5, 3).unwrap();
    let c = simulate_model(&model, 5, 4).unwrap();
    assert_eq!(a.y, b.y);
    assert_ne!(a.y, c.y);
}
