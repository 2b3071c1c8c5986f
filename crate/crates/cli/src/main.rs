use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rrr_core::ensembles::SignalConvention;
use rrr_core::estimation::{clt_parameters, threshold_surface};
use rrr_core::montecarlo::{
    aggregate_estimates, aggregate_with_failures, clt_errors, esd_overlay, export_results, run_experiment_with_threads,
    tw_null_series, Artifact, Estimator, ExperimentConfig, ExperimentOutcome, Format, Output, Series, SpectrumSource,
};
use rrr_core::ranktests::{Algorithm, StatisticKind};
use rrr_core::spectra::{law_table, AbLaw, MpLaw, SpectralLaw, TableKind};
use rrr_core::stats::{ks_statistic, normal_cdf, variance};
use rrr_core::Error;

/// Rank selection and spike estimation experiments for reduced-rank regression.
#[derive(Parser, Debug)]
#[command(name = "rrr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an experiment and write every requested output.
    Simulate(ExperimentArgs),
    /// Mean selected rank per response count and algorithm.
    RankSelect(ExperimentArgs),
    /// Summaries of the de-biased spike estimates.
    Estimate(ExperimentArgs),
    /// Studentized errors of a rank-one spike estimate against N(0, 1).
    CltCheck(ExperimentArgs),
    /// Tabulate a limiting spectral law.
    Law(LawArgs),
    /// Detection thresholds on a (lambda, beta) grid.
    Thresholds(ThresholdArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Master seed; defaults to RRR_SEED, then to the config file.
    #[arg(long, env = "RRR_SEED")]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct ExperimentArgs {
    #[command(flatten)]
    common: Common,
    /// Experiment config (JSON); flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long = "N")]
    n_obs: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// One or more response counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    r: Option<Vec<usize>>,
    #[arg(long)]
    rank: Option<usize>,
    /// Spike strengths, comma separated; a single value is repeated `rank` times.
    #[arg(long, value_delimiter = ',')]
    theta: Option<Vec<f64>>,
    #[arg(long, value_enum)]
    convention: Option<Convention>,
    /// Algorithms, comma separated (BSW, TW_Y, TW_Yhat, TW_Ahat).
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<String>>,
    /// Estimators, comma separated (FromA, FromY, EmpiricalA).
    #[arg(long, value_delimiter = ',')]
    estimators: Option<Vec<String>>,
    /// Test level of the rank selectors.
    #[arg(long)]
    significance: Option<f64>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Convention {
    UnitVectors,
    RowColScaled,
}

#[derive(ValueEnum, Debug, Clone, Copy, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum LawKind {
    Ab,
    Mp,
}

#[derive(Args, Debug, Clone)]
struct LawArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    kind: LawKind,
    #[arg(long, default_value_t = 0.0)]
    lambda: f64,
    #[arg(long)]
    beta: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = 1000)]
    grid: usize,
    /// Tabulate the distribution function instead of the density.
    #[arg(long)]
    cdf: bool,
    /// Range start (default: lower support edge).
    #[arg(long)]
    from: Option<f64>,
    /// Range end (default: upper support edge).
    #[arg(long)]
    to: Option<f64>,
}

#[derive(Args, Debug, Clone)]
struct ThresholdArgs {
    #[command(flatten)]
    common: Common,
    /// start:stop:count, endpoints included.
    #[arg(long, value_parser = parse_grid, default_value = "0.05:2:40")]
    lambda_grid: Grid,
    /// start:stop:count, endpoints included.
    #[arg(long, value_parser = parse_grid, default_value = "0.1:3:40")]
    beta_grid: Grid,
}

#[derive(Debug, Clone, serde::Serialize)]
struct Grid {
    start: f64,
    stop: f64,
    count: usize,
}

impl Grid {
    fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        (0..self.count)
            .map(|i| self.start + (self.stop - self.start) * i as f64 / (self.count - 1) as f64)
            .collect()
    }
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts.as_slice() else {
        return Err(format!("expected start:stop:count, got {s:?}"));
    };
    let start: f64 = a.parse().map_err(|e| format!("start: {e}"))?;
    let stop: f64 = b.parse().map_err(|e| format!("stop: {e}"))?;
    let count: usize = n.parse().map_err(|e| format!("count: {e}"))?;
    if count == 0 || stop.partial_cmp(&start).is_none_or(|o| o.is_lt()) {
        return Err(format!("need count >= 1 and stop >= start, got {s:?}"));
    }
    Ok(Grid { start, stop, count })
}

type Result<T> = std::result::Result<T, Error>;

/// Config file, then flags; `default_convention` applies when neither sets one.
fn resolve(args: &ExperimentArgs, default_convention: SignalConvention) -> Result<ExperimentConfig> {
    let mut value = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.clone(),
                source: e,
            })?;
            serde_json::from_str::<serde_json::Value>(&text).map_err(|source| Error::Json {
                path: path.clone(),
                source,
            })?
        }
        None => json!({}),
    };
    let obj = value
        .as_object_mut()
        .ok_or_else(|| Error::Parameter("config must be a JSON object".into()))?;
    let mut set = |key: &str, v: serde_json::Value| {
        obj.insert(key.to_string(), v);
    };
    if let Some(v) = args.n_obs {
        set("N", json!(v));
    }
    if let Some(v) = args.p {
        set("p", json!(v));
    }
    if let Some(v) = &args.r {
        set("r", json!(v));
    }
    if let Some(v) = args.rank {
        set("rank", json!(v));
        if v == 0 {
            set("thetas", json!([]));
        }
    }
    if let Some(v) = &args.theta {
        set("thetas", json!(v));
    }
    if let Some(c) = args.convention {
        let c = match c {
            Convention::UnitVectors => SignalConvention::UnitVectors,
            Convention::RowColScaled => SignalConvention::RowColScaled,
        };
        set("signal_convention", json!(c));
    }
    if let Some(v) = args.reps {
        set("replications", json!(v));
    }
    if let Some(v) = args.common.seed {
        set("master_seed", json!(v));
    }
    if let Some(v) = &args.algorithms {
        let parsed: Vec<Algorithm> = v.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        set("algorithms", json!(parsed));
    }
    if let Some(v) = &args.estimators {
        let parsed: Vec<Estimator> = v.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        set("estimators", json!(parsed));
    }
    if let Some(v) = args.significance {
        set("significance", json!(v));
    }
    if !obj.contains_key("signal_convention") {
        obj.insert("signal_convention".into(), json!(default_convention));
    }
    for key in ["N", "p", "r"] {
        if !obj.contains_key(key) {
            return Err(Error::Parameter(format!("missing {key} (use --config or --{key})")));
        }
    }
    serde_json::from_value(value).map_err(|e| Error::Parameter(format!("experiment config: {e}")))
}

struct Run {
    out: PathBuf,
    written: Vec<PathBuf>,
}

impl Run {
    fn new(out: &Path) -> Result<Self> {
        std::fs::create_dir_all(out).map_err(|e| Error::Io {
            path: out.to_path_buf(),
            source: e,
        })?;
        Ok(Run {
            out: out.to_path_buf(),
            written: Vec::new(),
        })
    }

    fn export(&mut self, artifact: Artifact<'_>, name: &str, format: Format) -> Result<()> {
        let path = self.out.join(format!("{name}.{}", format.extension()));
        export_results(artifact, &path, format)?;
        self.written.push(path);
        Ok(())
    }

    fn manifest(&self, command: &str, parameters: serde_json::Value, status: &str) -> Result<()> {
        let path = self.out.join("manifest.json");
        let manifest = json!({
            "command": command,
            "argv": std::env::args().collect::<Vec<_>>(),
            "parameters": parameters,
            "status": status,
            "outputs": self.written.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            "versions": {
                "rrr": env!("CARGO_PKG_VERSION"),
                "rrr-core": env!("CARGO_PKG_VERSION"),
            },
        });
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        std::fs::write(&path, text + "\n").map_err(|e| Error::Io { path, source: e })
    }
}

fn run_config(config: &ExperimentConfig, threads: Option<usize>) -> Result<ExperimentOutcome> {
    let threads = threads.unwrap_or(0);
    run_experiment_with_threads(config, threads)
}

fn write_outputs(run: &mut Run, outcome: &ExperimentOutcome, outputs: &[Output]) -> Result<()> {
    let config = &outcome.config;
    for output in outputs {
        match output {
            Output::RankTable => {
                let table = aggregate_with_failures(&outcome.records, &outcome.failures)?;
                run.export(Artifact::Table(&table), "rank_table", Format::Csv)?;
                run.export(Artifact::Table(&table), "rank_table", Format::Json)?;
                for row in &table.rows {
                    println!(
                        "r={:<4} {:<8} mean rank {:.3} (se {:.3}, {} reps)",
                        row.r,
                        row.algorithm.name(),
                        row.mean_rank,
                        row.std_err,
                        row.replications
                    );
                }
            }
            Output::EstimateTable => {
                let rows = aggregate_estimates(&outcome.records, &config.thetas)?;
                run.export(Artifact::Estimates(&rows), "estimates", Format::Csv)?;
                for row in &rows {
                    let shown = row.median_theta_hat.map_or("-".to_string(), |v| format!("{v:.4}"));
                    println!(
                        "r={:<4} {:<10} spike {} detected {:.2} median theta_hat {}",
                        row.r,
                        row.estimator.name(),
                        row.spike + 1,
                        row.detected_fraction,
                        shown
                    );
                }
            }
            Output::EsdOverlay => {
                for (source, tag) in [
                    (SpectrumSource::Fitted, "fitted"),
                    (SpectrumSource::Coefficients, "coefficients"),
                ] {
                    let (esd, law) = esd_overlay(config, source, 1000)?;
                    run.export(Artifact::Series(&esd), &format!("esd_{tag}_empirical"), Format::Tsv)?;
                    run.export(Artifact::Series(&law), &format!("esd_{tag}_law"), Format::Tsv)?;
                }
            }
            Output::TwNullCdf => {
                for (kind, tag) in [
                    (StatisticKind::Responses, "responses"),
                    (StatisticKind::Fitted, "fitted"),
                    (StatisticKind::Coefficients, "coefficients"),
                ] {
                    let (emp, law) = tw_null_series(&outcome.records, kind, 1001);
                    if !emp.points.is_empty() {
                        run.export(Artifact::Series(&emp), &format!("tw_null_{tag}"), Format::Tsv)?;
                        run.export(Artifact::Series(&law), "tw1_cdf", Format::Tsv)?;
                    }
                }
            }
            Output::CltHistogram => {
                for &est in &config.estimators {
                    if est == Estimator::FromY {
                        continue;
                    }
                    let errors = clt_errors(outcome, est)?;
                    run.export(Artifact::Values(&errors), &format!("clt_{}", est.name()), Format::Tsv)?;
                }
            }
            Output::ThresholdSurface => {
                let lambdas = parse_grid("0.05:2:40").expect("default grid").points();
                let betas = parse_grid("0.1:3:40").expect("default grid").points();
                let surface = threshold_surface(&lambdas, &betas)?;
                run.export(Artifact::Surface(&surface), "threshold_surface", Format::Csv)?;
            }
        }
    }
    if !outcome.failures.is_empty() {
        println!("{} replications failed and were excluded", outcome.failures.len());
    }
    Ok(())
}

fn experiment(name: &str, args: &ExperimentArgs, adjust: impl FnOnce(&mut ExperimentConfig)) -> Result<()> {
    let mut run = Run::new(&args.common.out)?;
    // Rank selection defaults to scaled factors, estimation to unit vectors.
    let convention = if name == "rank-select" {
        SignalConvention::RowColScaled
    } else {
        SignalConvention::UnitVectors
    };
    let mut config = match resolve(args, convention) {
        Ok(c) => c,
        Err(e) => {
            run.manifest(name, json!({ "error": e.to_string() }), "error")?;
            return Err(e);
        }
    };
    adjust(&mut config);
    let params = serde_json::to_value(&config).expect("config serializes");
    run.manifest(name, params.clone(), "running")?;
    let result = run_config(&config, args.common.threads).and_then(|outcome| {
        let outputs = config.outputs.clone();
        if name == "clt-check" {
            clt_summary(&mut run, &outcome)
        } else {
            write_outputs(&mut run, &outcome, &outputs)
        }
    });
    run.manifest(name, params, if result.is_ok() { "ok" } else { "error" })?;
    result
}

fn clt_summary(run: &mut Run, outcome: &ExperimentOutcome) -> Result<()> {
    let config = &outcome.config;
    let r = config.r_values[0];
    let model = config.model(r)?;
    let theta = config.thetas[0];
    let params = clt_parameters(theta, model.lambda(), model.beta())?;
    let mut summary = serde_json::Map::new();
    for &est in &config.estimators {
        if est == Estimator::FromY {
            continue;
        }
        let errors = clt_errors(outcome, est)?;
        run.export(Artifact::Values(&errors), &format!("clt_{}", est.name()), Format::Tsv)?;
        let ks = ks_statistic(&errors, normal_cdf);
        let var = if errors.len() > 1 { variance(&errors) } else { f64::NAN };
        println!(
            "{:<10} n={} KS vs N(0,1) {:.4}, variance of studentized errors {:.3}",
            est.name(),
            errors.len(),
            ks,
            var
        );
        summary.insert(
            est.name().into(),
            json!({ "count": errors.len(), "ks": ks, "variance": var }),
        );
    }
    println!("sigma = {:.4}, omega = {:.4}", params.sigma, params.omega);
    summary.insert(
        "clt_parameters".into(),
        serde_json::to_value(params).expect("serializes"),
    );
    let path = run.out.join("clt_summary.json");
    std::fs::write(
        &path,
        serde_json::to_string_pretty(&summary).expect("serializes") + "\n",
    )
    .map_err(|e| Error::Io {
        path: path.clone(),
        source: e,
    })?;
    run.written.push(path);
    Ok(())
}

fn law(args: &LawArgs) -> Result<()> {
    let mut run = Run::new(&args.common.out)?;
    let params = json!({
        "kind": args.kind, "lambda": args.lambda, "beta": args.beta,
        "grid": args.grid, "cdf": args.cdf, "from": args.from, "to": args.to,
    });
    let result = (|| {
        let law: Box<dyn SpectralLaw> = match args.kind {
            LawKind::Ab => Box::new(AbLaw::new(args.lambda, args.beta)?),
            LawKind::Mp => Box::new(MpLaw::new(args.beta)?),
        };
        let (lo, hi) = law.support();
        let from = args.from.unwrap_or(lo);
        let to = args.to.unwrap_or(hi);
        let kind = if args.cdf { TableKind::Cdf } else { TableKind::Density };
        let table = law_table(law.as_ref(), kind, from, to, args.grid)?;
        let y_name = if args.cdf { "cdf" } else { "density" };
        let name = format!(
            "law_{}",
            match args.kind {
                LawKind::Ab => "ab",
                LawKind::Mp => "mp",
            }
        );
        run.export(Artifact::Series(&Series::new("x", y_name, table)), &name, Format::Tsv)?;
        println!(
            "support [{lo}, {hi}], atom {}; {} points on [{from}, {to}]",
            law.atom(),
            args.grid
        );
        Ok(())
    })();
    run.manifest("law", params, if result.is_ok() { "ok" } else { "error" })?;
    result
}

fn thresholds(args: &ThresholdArgs) -> Result<()> {
    let mut run = Run::new(&args.common.out)?;
    let params = json!({ "lambda_grid": args.lambda_grid, "beta_grid": args.beta_grid });
    let result = (|| {
        let surface = threshold_surface(&args.lambda_grid.points(), &args.beta_grid.points())?;
        run.export(Artifact::Surface(&surface), "threshold_surface", Format::Csv)?;
        let below = surface.iter().filter(|p| p.difference > 0.0).count();
        println!(
            "{} grid points; fitted-response threshold lower at {below}",
            surface.len()
        );
        Ok(())
    })();
    run.manifest("thresholds", params, if result.is_ok() { "ok" } else { "error" })?;
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Simulate(a) => experiment("simulate", a, |_| {}),
        Command::RankSelect(a) => experiment("rank-select", a, |c| c.outputs = vec![Output::RankTable]),
        Command::Estimate(a) => experiment("estimate", a, |c| {
            if c.estimators.is_empty() {
                c.estimators = Estimator::ALL.to_vec();
            }
            c.outputs = vec![Output::EstimateTable];
        }),
        Command::CltCheck(a) => experiment("clt-check", a, |c| {
            if c.estimators.is_empty() {
                c.estimators = vec![Estimator::FromA, Estimator::EmpiricalA];
            }
            c.outputs = vec![Output::CltHistogram];
        }),
        Command::Law(a) => law(a),
        Command::Thresholds(a) => thresholds(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 1 } else { 2 })
        }
    }
}
