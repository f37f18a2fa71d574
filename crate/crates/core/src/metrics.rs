//! Error functionals used by the experiments: node mean-square error,
//! spline residual of the neutral damping equation, first-integral drift,
//! PDE sample error, and empirical order estimation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spline::CubicSpline;
use crate::system::{OdeSystem, Trajectory};

/// Mean over nodes j = 0..N-1 (final node excluded) of the squared
/// difference of the first state component.
pub fn node_mse(test: &Trajectory, reference: &Trajectory) -> Result<f64> {
    if test.grid != reference.grid {
        return Err(Error::GridMismatch);
    }
    let n = test.grid.num_steps();
    let sum: f64 = (0..n)
        .map(|j| {
            let d = test.states[j][0] - reference.states[j][0];
            d * d
        })
        .sum();
    Ok(sum / n as f64)
}

/// Variant of [`node_mse`] summing the squared difference over all state
/// components.
pub fn node_mse_all_components(test: &Trajectory, reference: &Trajectory) -> Result<f64> {
    if test.grid != reference.grid {
        return Err(Error::GridMismatch);
    }
    let n = test.grid.num_steps();
    let sum: f64 = (0..n)
        .map(|j| {
            test.states[j]
                .iter()
                .zip(&reference.states[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
        })
        .sum();
    Ok(sum / n as f64)
}

/// Residual functional of the neutral damping equation applied to a spline
/// interpolant: (1/T) Int_0^T (s'' + eps (s')^2 + s)^2 dt, with composite
/// Simpson quadrature using `subpoints` subintervals per spline interval.
pub fn residual_error_with_subpoints(
    spline: &CubicSpline,
    eps: f64,
    subpoints: usize,
) -> Result<f64> {
    if subpoints < 10 {
        return Err(Error::InvalidInput(
            "residual quadrature needs >= 10 subpoints per interval".into(),
        ));
    }
    let sub = subpoints + subpoints % 2; // Simpson needs an even count
    let nodes = spline.nodes();
    let integrand = |t: f64| -> Result<f64> {
        let r = spline.deriv2(t)? + eps * spline.deriv1(t)?.powi(2) + spline.eval(t)?;
        Ok(r * r)
    };
    let mut total = 0.0;
    for w in nodes.windows(2) {
        let h = (w[1] - w[0]) / sub as f64;
        let mut acc = integrand(w[0])? + integrand(w[1])?;
        for j in 1..sub {
            let weight = if j % 2 == 1 { 4.0 } else { 2.0 };
            acc += weight * integrand(w[0] + j as f64 * h)?;
        }
        total += acc * h / 3.0;
    }
    let (t0, t1) = spline.span();
    Ok(total / (t1 - t0))
}

pub fn residual_error(spline: &CubicSpline, eps: f64) -> Result<f64> {
    residual_error_with_subpoints(spline, eps, 10)
}

/// Drift of a system's first integral along a trajectory:
/// (1/T) Int_0^T (f(y_0) - f(y(t)))^2 dt by the trapezoid rule on nodes.
pub fn first_integral_drift(traj: &Trajectory, sys: &OdeSystem) -> Result<f64> {
    let f0 = sys.first_integral(&traj.states[0])?;
    let n = traj.grid.num_steps();
    let h = traj.grid.step();
    let mut total = 0.0;
    for j in 0..=n {
        let d = f0 - sys.first_integral(&traj.states[j])?;
        let w = if j == 0 || j == n { 0.5 } else { 1.0 };
        total += w * d * d * h;
    }
    Ok(total / traj.grid.span())
}

/// Space-time sample error (1/m) Sum_{j=0..m} Sum_k (u_jk - v_jk)^2, where
/// each row holds the interior spatial samples at one time node.
pub fn pde_mse(u: &[Vec<f64>], v: &[Vec<f64>]) -> Result<f64> {
    if u.len() != v.len() || u.is_empty() {
        return Err(Error::GridMismatch);
    }
    let m = u.len() - 1;
    if m == 0 {
        return Err(Error::GridMismatch);
    }
    let width = u[0].len();
    let mut total = 0.0;
    for (ru, rv) in u.iter().zip(v) {
        if ru.len() != width || rv.len() != width {
            return Err(Error::GridMismatch);
        }
        total += ru
            .iter()
            .zip(rv)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>();
    }
    Ok(total / m as f64)
}

/// Least-squares slope of log e versus log h.
pub fn observed_order(errors: &[(f64, f64)]) -> Result<f64> {
    if errors.len() < 2 {
        return Err(Error::InvalidInput("observed_order needs >= 2 points".into()));
    }
    if errors.windows(2).any(|w| w[1].0 >= w[0].0) {
        return Err(Error::InvalidInput(
            "step sizes must be strictly decreasing".into(),
        ));
    }
    if errors.iter().any(|&(h, e)| h <= 0.0 || e <= 0.0) {
        return Err(Error::InvalidInput(
            "observed_order needs positive h and e".into(),
        ));
    }
    let n = errors.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(h, e) in errors {
        let (x, y) = (h.ln(), e.ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    Ok((n * sxy - sx * sy) / (n * sxx - sx * sx))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub model: String,
    pub method: String,
    pub metric: String,
    pub h: f64,
    pub value: f64,
    pub runtime_ms: f64,
    pub status: String,
}

impl ErrorReport {
    pub const CSV_HEADER: &'static str = "model,method,metric,h,value,runtime_ms,status";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.model, self.method, self.metric, self.h, self.value, self.runtime_ms, self.status
        )
    }

    pub fn parse_csv_row(row: &str) -> Result<Self> {
        let parts: Vec<&str> = row.trim().split(',').collect();
        if parts.len() != 7 {
            return Err(Error::InvalidInput(format!(
                "expected 7 CSV fields, got {}",
                parts.len()
            )));
        }
        let num = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|_| Error::InvalidInput(format!("bad number in CSV row: {s}")))
        };
        Ok(Self {
            model: parts[0].to_string(),
            method: parts[1].to_string(),
            metric: parts[2].to_string(),
            h: num(parts[3])?,
            value: num(parts[4])?,
            runtime_ms: num(parts[5])?,
            status: parts[6].to_string(),
        })
    }
}
