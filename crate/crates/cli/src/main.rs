
use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use matstep::lienard::{circle_of_initial_states, test_boundedness, LienardSpec};
use matstep::metrics::ErrorReport;
use matstep::system::Grid;
use matstep::Error;

use matstep_cli::config::{parse_config, parse_f64, parse_f64_list};
use matstep_cli::presets::preset;
use matstep_cli::registry::{build_model, ModelParams};
use matstep_cli::run::{reports_to_csv, run_burgers, run_method, run_order, run_table, Method, MetricKind, TableConfig};

#[derive(Parser)]
#[command(
    name = "matstep",
    about = "Matrix-exponential one-step ODE integrator and experiment runner",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one model and emit the trajectory or a metric report.
    Solve(SolveArgs),
    /// Run a canned experiment table (table1..table7).
    Table(TableArgs),
    /// Burgers method-of-lines experiment with field dump.
    Burgers(BurgersArgs),
    /// Lienard boundedness experiment; emits a JSON verdict.
    Lienard(LienardArgs),
    /// Refinement study: observed convergence order of the matrix method.
    Order(OrderArgs),
}

#[derive(Args, Clone, Default)]
struct ModelFlags {
    /// Model name (van_der_pol, duffing, lorenz, neutral_damping, epidemic,
    /// lotka_volterra).
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    model: ModelFlags,
    /// Integration method.
    #[arg(long, default_value = "matrix")]
    method: String,
    /// Step size.
    #[arg(long)]
    h: Option<f64>,
    /// Horizon (integrates over [0, T]).
    #[arg(long = "T")]
    horizon: Option<f64>,
    /// Initial state, comma separated.
    #[arg(long)]
    initial: Option<String>,
    /// Optional metric; when given, emits a report row instead of the
    /// trajectory (node_mse, residual, first_integral_drift).
    #[arg(long)]
    metric: Option<String>,
    /// Flat key=value config file; command-line flags win.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct TableArgs {
    /// Preset name: table1..table7.
    preset: String,
    #[arg(long)]
    out: Option<String>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct BurgersArgs {
    /// Number of spatial intervals.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Number of time steps on [0, 1].
    #[arg(long, default_value_t = 10)]
    m: usize,
    /// Initial profile: sin (sin pi x), parabola (4x(1-x)), zero.
    #[arg(long, default_value = "sin")]
    profile: String,
    /// Where to write the space-time field dump (CSV).
    #[arg(long)]
    out: Option<String>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct LienardArgs {
    /// Config file with keys f, g (const:V | poly:C0,C1,.. | vdp:MU),
    /// T, h, threshold, radius, count, y_range.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct OrderArgs {
    #[command(flatten)]
    model: ModelFlags,
    /// Horizon.
    #[arg(long = "T")]
    horizon: Option<f64>,
    /// Initial state, comma separated.
    #[arg(long)]
    initial: Option<String>,
    /// Nested refinement levels, comma separated (each divides the next).
    #[arg(long, default_value = "100,200,400,800")]
    n_list: String,
    #[arg(long)]
    out: Option<String>,
}

enum CliError {
    Usage(String),
    Divergence(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Divergence(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Divergence(m) => m,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn emit(out: &Option<String>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| CliError::Usage(format!("cannot write {path}: {e}"))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn model_params(flags: &ModelFlags, cfg: &BTreeMap<String, String>) -> Result<ModelParams, CliError> {
    Ok(ModelParams {
        mu: flags.mu.or(parse_f64(cfg, "mu").map_err(CliError::Usage)?),
        eps: flags.eps.or(parse_f64(cfg, "eps").map_err(CliError::Usage)?),
        a: flags.a.or(parse_f64(cfg, "a").map_err(CliError::Usage)?),
        b: flags.b.or(parse_f64(cfg, "b").map_err(CliError::Usage)?),
        c: flags.c.or(parse_f64(cfg, "c").map_err(CliError::Usage)?),
        d: flags.d.or(parse_f64(cfg, "d").map_err(CliError::Usage)?),
    })
}

fn load_config(path: &Option<String>) -> Result<BTreeMap<String, String>, CliError> {
    match path {
        None => Ok(BTreeMap::new()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {p}: {e}")))?;
            parse_config(&text).map_err(CliError::Usage)
        }
    }
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let model_name = args
        .model
        .model
        .clone()
        .or_else(|| cfg.get("model").cloned())
        .ok_or_else(|| CliError::Usage("solve needs --model (or model= in config)".into()))?;
    let params = model_params(&args.model, &cfg)?;
    let entry = build_model(&model_name, &params).map_err(CliError::Usage)?;
    let method = Method::parse(
        &cfg.get("method")
            .cloned()
            .filter(|_| args.method == "matrix")
            .unwrap_or_else(|| args.method.clone()),
    )
    .map_err(CliError::Usage)?;
    let horizon = args
        .horizon
        .or(parse_f64(&cfg, "T").map_err(CliError::Usage)?)
        .unwrap_or(entry.default_horizon);
    let h = args
        .h
        .or(parse_f64(&cfg, "h").map_err(CliError::Usage)?)
        .unwrap_or(0.01);
    let initial = match args.initial.clone().or_else(|| cfg.get("initial").cloned()) {
        Some(s) => parse_f64_list(&s).map_err(CliError::Usage)?,
        None => entry.default_initial.clone(),
    };
    if h <= 0.0 || horizon <= 0.0 {
        return usage("h and T must be positive");
    }
    let n = (horizon / h).round().max(1.0) as usize;
    let grid = Grid::new(0.0, horizon, n).map_err(|e| CliError::Usage(e.to_string()))?;
    let metric = match args.metric.clone().or_else(|| cfg.get("metric").cloned()) {
        Some(m) => Some(MetricKind::parse(&m).map_err(CliError::Usage)?),
        None => None,
    };

    if let Some(metric) = metric {
        let table = TableConfig {
            model_label: model_name,
            initial,
            horizon,
            methods: vec![method],
            h_list: vec![h],
            metric,
            residual_eps: entry.residual_eps.unwrap_or(0.0),
        };
        let reports = run_table(&table, &entry.system).map_err(CliError::Usage)?;
        if reports.iter().any(|r| r.status != "ok") {
            return Err(CliError::Divergence("run diverged".into()));
        }
        let payload = render_reports(&reports, &args.format)?;
        return emit(&args.out, &payload);
    }

    let traj = run_method(
        &entry.system,
        &initial,
        grid,
        method,
        entry.residual_eps.unwrap_or(0.0),
    )
    .map_err(|e| match e {
        Error::Divergence { step } => {
            CliError::Divergence(format!("diverged at step {step} (t = {})", grid.node(step)))
        }
        other => CliError::Usage(other.to_string()),
    })?;
    let mut payload = String::from("t");
    for i in 0..entry.system.dim() {
        payload.push_str(&format!(",y{}", i + 1));
    }
    payload.push('\n');
    for (k, state) in traj.states.iter().enumerate() {
        payload.push_str(&format!("{}", grid.node(k)));
        for v in state {
            payload.push_str(&format!(",{v}"));
        }
        payload.push('\n');
    }
    emit(&args.out, &payload)
}

fn render_reports(reports: &[ErrorReport], format: &str) -> Result<String, CliError> {
    match format {
        "csv" => Ok(reports_to_csv(reports)),
        "json" => serde_json::to_string_pretty(reports)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| CliError::Usage(e.to_string())),
        other => Err(CliError::Usage(format!(
            "unknown format '{other}'; valid formats: csv, json"
        ))),
    }
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let (table, entry) = preset(&args.preset).map_err(CliError::Usage)?;
    let reports = run_table(&table, &entry.system).map_err(CliError::Usage)?;
    let payload = render_reports(&reports, &args.format)?;
    emit(&args.out, &payload)
}

fn cmd_burgers(args: BurgersArgs) -> Result<(), CliError> {
    let profile: fn(f64) -> f64 = match args.profile.as_str() {
        "sin" => |x| (std::f64::consts::PI * x).sin(),
        "parabola" => |x| 4.0 * x * (1.0 - x),
        "zero" => |_| 0.0,
        other => {
            return usage(format!(
                "unknown profile '{other}'; valid profiles: sin, parabola, zero"
            ))
        }
    };
    let outcome = run_burgers(args.n, args.m, profile).map_err(|msg| {
        if msg.contains("diverg") {
            CliError::Divergence(msg)
        } else {
            CliError::Usage(msg)
        }
    })?;
    match args.format.as_str() {
        "csv" => {
            let mut payload = reports_to_csv(std::slice::from_ref(&outcome.report));
            payload.push('\n');
            payload.push_str("t");
            for x in &outcome.nodes {
                payload.push_str(&format!(",u(x={x})"));
            }
            payload.push('\n');
            for (t, row) in outcome.times.iter().zip(&outcome.field) {
                payload.push_str(&format!("{t}"));
                for v in row {
                    payload.push_str(&format!(",{v}"));
                }
                payload.push('\n');
            }
            emit(&args.out, &payload)
        }
        "json" => {
            let doc = serde_json::json!({
                "report": outcome.report,
                "nodes": outcome.nodes,
                "times": outcome.times,
                "field": outcome.field,
            });
            emit(&args.out, &format!("{:#}\n", doc))
        }
        other => usage(format!("unknown format '{other}'; valid formats: csv, json")),
    }
}

fn parse_scalar_function(
    spec: &str,
) -> Result<Box<dyn Fn(f64) -> f64 + Send + Sync>, String> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "const" => {
            let v: f64 = rest.parse().map_err(|_| format!("bad constant '{rest}'"))?;
            Ok(Box::new(move |_| v))
        }
        "poly" => {
            let coeffs = parse_f64_list(rest)?;
            Ok(Box::new(move |y| {
                coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c)
            }))
        }
        "vdp" => {
            let mu: f64 = rest.parse().map_err(|_| format!("bad parameter '{rest}'"))?;
            Ok(Box::new(move |y| mu * (y * y - 1.0)))
        }
        other => Err(format!(
            "unknown function '{other}'; valid kinds: const:V, poly:C0,C1,.., vdp:MU"
        )),
    }
}

fn cmd_lienard(args: LienardArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.config)?;
    let f_spec = cfg.get("f").cloned().unwrap_or_else(|| "const:1".into());
    let g_spec = cfg.get("g").cloned().unwrap_or_else(|| "const:0.5".into());
    let f = parse_scalar_function(&f_spec).map_err(CliError::Usage)?;
    let g = parse_scalar_function(&g_spec).map_err(CliError::Usage)?;
    let horizon = parse_f64(&cfg, "T").map_err(CliError::Usage)?.unwrap_or(100.0);
    let h = parse_f64(&cfg, "h").map_err(CliError::Usage)?.unwrap_or(1e-2);
    let radius = parse_f64(&cfg, "radius").map_err(CliError::Usage)?.unwrap_or(2.0);
    let count = parse_f64(&cfg, "count").map_err(CliError::Usage)?.unwrap_or(20.0) as usize;
    let threshold = parse_f64(&cfg, "threshold")
        .map_err(CliError::Usage)?
        .unwrap_or(10.0 * radius);
    let y_range = match cfg.get("y_range") {
        Some(s) => {
            let v = parse_f64_list(s).map_err(CliError::Usage)?;
            if v.len() != 2 {
                return usage("y_range needs exactly two numbers");
            }
            (v[0], v[1])
        }
        None => (-radius * 1.5, radius * 1.5),
    };
    let spec = LienardSpec::new(
        move |y| f(y),
        move |y| g(y),
        y_range,
        horizon,
        threshold,
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let states = circle_of_initial_states(count.max(1), radius);
    let verdict =
        test_boundedness(&spec, &states, h).map_err(|e| CliError::Usage(e.to_string()))?;
    let payload = serde_json::to_string_pretty(&verdict)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Usage(e.to_string()))?;
    emit(&args.out, &payload)
}

fn cmd_order(args: OrderArgs) -> Result<(), CliError> {
    let cfg = BTreeMap::new();
    let model_name = args
        .model
        .model
        .clone()
        .ok_or_else(|| CliError::Usage("order needs --model".into()))?;
    let params = model_params(&args.model, &cfg)?;
    let entry = build_model(&model_name, &params).map_err(CliError::Usage)?;
    let horizon = args.horizon.unwrap_or(entry.default_horizon);
    let initial = match &args.initial {
        Some(s) => parse_f64_list(s).map_err(CliError::Usage)?,
        None => entry.default_initial.clone(),
    };
    let n_list: Vec<usize> = args
        .n_list
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad refinement level '{}'", s.trim())))
        })
        .collect::<Result<_, _>>()?;
    let outcome = run_order(&entry.system, &initial, horizon, &n_list).map_err(|msg| {
        if msg.contains("diverg") {
            CliError::Divergence(msg)
        } else {
            CliError::Usage(msg)
        }
    })?;
    let doc = serde_json::json!({
        "model": model_name,
        "pairs": outcome.pairs.iter().map(|&(h, e)| {
            serde_json::json!({"h": h, "error": e})
        }).collect::<Vec<_>>(),
        "observed_order": outcome.order,
    });
    emit(&args.out, &format!("{:#}\n", doc))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are success, not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Table(args) => cmd_table(args),
        Command::Burgers(args) => cmd_burgers(args),
        Command::Lienard(args) => cmd_lienard(args),
        Command::Order(args) => cmd_order(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
