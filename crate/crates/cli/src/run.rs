//! Experiment execution: integrate with one of the methods, evaluate the
//! configured metric, and package report rows.

use std::time::Instant;

use matstep::integrator::integrate;
use matstep::metrics::{
    first_integral_drift, node_mse, pde_mse, residual_error, ErrorReport,
};
use matstep::models::{self, PerturbativeSolution};
use matstep::reference::{
    integrate_reference, rk_reference, ReferenceConfig, ReferenceMethod,
};
use matstep::spline::{CubicSpline, SplineBoundary};
use matstep::system::{Grid, OdeSystem, Trajectory};
use matstep::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Matrix,
    Taylor2,
    Taylor3,
    Taylor4,
    Rk4,
    Lindstedt,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Matrix => "matrix",
            Method::Taylor2 => "taylor2",
            Method::Taylor3 => "taylor3",
            Method::Taylor4 => "taylor4",
            Method::Rk4 => "rk4",
            Method::Lindstedt => "lindstedt",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "matrix" => Ok(Method::Matrix),
            "taylor2" => Ok(Method::Taylor2),
            "taylor3" => Ok(Method::Taylor3),
            "taylor4" => Ok(Method::Taylor4),
            "rk4" => Ok(Method::Rk4),
            "lindstedt" => Ok(Method::Lindstedt),
            other => Err(format!(
                "unknown method '{other}'; valid methods: matrix, taylor2, taylor3, taylor4, rk4, lindstedt"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricKind {
    NodeMse,
    Residual,
    FirstIntegralDrift,
}

impl MetricKind {
    pub fn label(&self) -> &'static str {
        match self {
            MetricKind::NodeMse => "node_mse",
            MetricKind::Residual => "residual",
            MetricKind::FirstIntegralDrift => "first_integral_drift",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "node_mse" => Ok(MetricKind::NodeMse),
            "residual" => Ok(MetricKind::Residual),
            "first_integral_drift" => Ok(MetricKind::FirstIntegralDrift),
            other => Err(format!(
                "unknown metric '{other}'; valid metrics: node_mse, residual, first_integral_drift"
            )),
        }
    }
}

pub struct TableConfig {
    pub model_label: String,
    pub initial: Vec<f64>,
    pub horizon: f64,
    pub methods: Vec<Method>,
    pub h_list: Vec<f64>,
    pub metric: MetricKind,
    /// Damping parameter of the residual functional.
    pub residual_eps: f64,
}

/// Effective reference substep count: reference step near 1e-4 regardless
/// of the test step, capped to keep cost bounded.
pub fn reference_substeps(h: f64) -> usize {
    ((h / 1e-4).round() as i64).clamp(1, 1000) as usize
}

fn grid_for(horizon: f64, h: f64) -> Result<(Grid, f64), String> {
    // when h does not divide the horizon, N is rounded and the recomputed
    // step is what the report rows carry
    let n = (horizon / h).round().max(1.0) as usize;
    let grid = Grid::new(0.0, horizon, n).map_err(|e| e.to_string())?;
    Ok((grid, grid.step()))
}

fn lindstedt_trajectory(eps: f64, grid: Grid) -> Trajectory {
    let p = PerturbativeSolution::new(eps);
    let states = (0..=grid.num_steps())
        .map(|k| {
            let t = grid.node(k);
            vec![p.value(t), p.derivative(t)]
        })
        .collect();
    Trajectory {
        grid,
        states,
        midpoints: Vec::new(),
    }
}

pub fn run_method(
    sys: &OdeSystem,
    initial: &[f64],
    grid: Grid,
    method: Method,
    residual_eps: f64,
) -> Result<Trajectory, Error> {
    match method {
        Method::Matrix => integrate(sys, initial, grid),
        Method::Taylor2 => integrate_reference(
            sys,
            initial,
            grid,
            ReferenceConfig::new(ReferenceMethod::Taylor2, 1)?,
        ),
        Method::Taylor3 => integrate_reference(
            sys,
            initial,
            grid,
            ReferenceConfig::new(ReferenceMethod::Taylor3, 1)?,
        ),
        Method::Taylor4 => integrate_reference(
            sys,
            initial,
            grid,
            ReferenceConfig::new(ReferenceMethod::Taylor4, 1)?,
        ),
        Method::Rk4 => integrate_reference(
            sys,
            initial,
            grid,
            ReferenceConfig::new(ReferenceMethod::Rk4, 1)?,
        ),
        Method::Lindstedt => Ok(lindstedt_trajectory(residual_eps, grid)),
    }
}

fn evaluate_metric(
    cfg: &TableConfig,
    sys: &OdeSystem,
    traj: &Trajectory,
    grid: Grid,
    h: f64,
) -> Result<f64, Error> {
    match cfg.metric {
        MetricKind::NodeMse => {
            let reference = rk_reference(sys, &cfg.initial, grid, reference_substeps(h))?;
            node_mse(traj, &reference)
        }
        MetricKind::Residual => {
            let nodes: Vec<f64> = (0..=grid.num_steps()).map(|k| grid.node(k)).collect();
            let values: Vec<f64> = traj.states.iter().map(|s| s[0]).collect();
            let spline = CubicSpline::new(nodes, values, SplineBoundary::NotAKnot)?;
            residual_error(&spline, cfg.residual_eps)
        }
        MetricKind::FirstIntegralDrift => first_integral_drift(traj, sys),
    }
}

/// One run per (method, h) pair, emitted in that sorted order. Divergent
/// runs produce a row with status "error" and a NaN value rather than
/// aborting the table.
pub fn run_table(cfg: &TableConfig, sys: &OdeSystem) -> Result<Vec<ErrorReport>, String> {
    let mut pairs: Vec<(Method, f64)> = Vec::new();
    for &m in &cfg.methods {
        for &h in &cfg.h_list {
            pairs.push((m, h));
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.partial_cmp(&b.1).unwrap()));
    let mut reports = Vec::with_capacity(pairs.len());
    for (method, h) in pairs {
        let (grid, h_eff) = grid_for(cfg.horizon, h)?;
        let start = Instant::now();
        let outcome = run_method(sys, &cfg.initial, grid, method, cfg.residual_eps)
            .and_then(|traj| evaluate_metric(cfg, sys, &traj, grid, h_eff));
        let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        let (value, status) = match outcome {
            Ok(v) => (v, "ok".to_string()),
            Err(Error::Divergence { .. }) => (f64::NAN, "error".to_string()),
            Err(e) => return Err(e.to_string()),
        };
        reports.push(ErrorReport {
            model: cfg.model_label.clone(),
            method: method.label().to_string(),
            metric: cfg.metric.label().to_string(),
            h: h_eff,
            value,
            runtime_ms,
            status,
        });
    }
    Ok(reports)
}

pub struct BurgersOutcome {
    pub report: ErrorReport,
    /// u(x_k, t_j) for interior nodes k at every coarse time node j.
    pub field: Vec<Vec<f64>>,
    pub times: Vec<f64>,
    pub nodes: Vec<f64>,
}

/// Matrix-method run of the semidiscrete Burgers system, compared in
/// space-time samples against an independent fine discretization
/// (n = 64 intervals, substepped RK4 in time, cubic-spline sampled at the
/// coarse abscissas).
pub fn run_burgers(
    n_space: usize,
    m_time: usize,
    profile: impl Fn(f64) -> f64 + Copy,
) -> Result<BurgersOutcome, String> {
    if n_space < 2 || m_time < 1 {
        return Err("burgers needs n >= 2 and m >= 1".into());
    }
    let coarse = models::burgers(n_space, profile);
    let grid = Grid::new(0.0, 1.0, m_time).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let traj = integrate(&coarse.system, &coarse.initial_state, grid).map_err(|e| e.to_string())?;
    let field: Vec<Vec<f64>> = traj.states.clone();

    // independent reference on a fine spatial grid
    let n_fine = 64;
    let fine = models::burgers(n_fine, profile);
    let h_t_stable = 0.1 * fine.h_x * fine.h_x;
    let substeps = ((1.0 / m_time as f64) / h_t_stable).ceil() as usize;
    let fine_traj = rk_reference(&fine.system, &fine.initial_state, grid, substeps)
        .map_err(|e| e.to_string())?;
    let coarse_x = models::burgers_nodes(n_space);
    let mut fine_x = vec![0.0];
    fine_x.extend(models::burgers_nodes(n_fine));
    fine_x.push(1.0);
    let reference: Vec<Vec<f64>> = fine_traj
        .states
        .iter()
        .map(|state| {
            let mut values = vec![0.0];
            values.extend(state.iter().copied());
            values.push(0.0);
            let s = CubicSpline::new(fine_x.clone(), values, SplineBoundary::NotAKnot)
                .expect("fine spatial spline");
            coarse_x.iter().map(|&x| s.eval(x).unwrap()).collect()
        })
        .collect();
    let value = pde_mse(&field, &reference).map_err(|e| e.to_string())?;
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(BurgersOutcome {
        report: ErrorReport {
            model: "burgers".into(),
            method: "matrix".into(),
            metric: "pde_mse".into(),
            h: 1.0 / m_time as f64,
            value,
            runtime_ms,
            status: "ok".into(),
        },
        field,
        times: (0..=m_time).map(|j| j as f64 / m_time as f64).collect(),
        nodes: coarse_x,
    })
}

pub struct OrderOutcome {
    pub pairs: Vec<(f64, f64)>,
    pub order: f64,
}

/// Refinement study: integrate at each N, use the sup-node distance to the
/// next finer run as the error estimate at that step size, and fit the
/// observed order.
pub fn run_order(
    sys: &OdeSystem,
    initial: &[f64],
    horizon: f64,
    n_list: &[usize],
) -> Result<OrderOutcome, String> {
    if n_list.len() < 3 {
        return Err("order study needs at least 3 refinement levels".into());
    }
    let trajs = matstep::refine_sequence(sys, initial, 0.0, horizon, n_list)
        .map_err(|e| e.to_string())?;
    let mut pairs = Vec::new();
    for (i, traj) in trajs.iter().enumerate() {
        let h = horizon / n_list[i] as f64;
        let reference = rk_reference(sys, initial, traj.grid, reference_substeps(h))
            .map_err(|e| e.to_string())?;
        let err = traj.sup_node_distance(&reference).map_err(|e| e.to_string())?;
        pairs.push((h, err));
    }
    let order = matstep::observed_order(&pairs).map_err(|e| e.to_string())?;
    Ok(OrderOutcome { pairs, order })
}

pub fn reports_to_csv(reports: &[ErrorReport]) -> String {
    let mut out = String::from(ErrorReport::CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
