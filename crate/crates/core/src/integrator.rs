//! The one-step matrix method: predict a midpoint state with the frozen
//! matrix, then propagate the step with the exponential of the matrix frozen
//! at that prediction.

use crate::error::{Error, Result};
use crate::expm::{expm_2x2_closed, expm_putzer, expm_series};
use crate::matrix::SquareMatrix;
use crate::system::{Grid, OdeSystem, Trajectory};

/// States beyond this norm abort the run as divergent rather than poisoning
/// downstream metrics.
pub const DIVERGENCE_BOUND: f64 = 1e12;

/// Exponential dispatch used by every step: closed form for n = 2, Putzer for
/// n = 3, scaling-and-squaring series otherwise.
pub fn expm_dispatch(m: &SquareMatrix, t: f64) -> Result<SquareMatrix> {
    match m.dim() {
        2 => expm_2x2_closed(m, t),
        3 => expm_putzer(m, t),
        _ => Ok(expm_series(m, t)),
    }
}

fn state_ok(y: &[f64]) -> bool {
    y.iter().all(|x| x.is_finite()) && y.iter().map(|x| x * x).sum::<f64>().sqrt() <= DIVERGENCE_BOUND
}

/// One step: returns (y_next, y_star) where y_star is the predicted midpoint
/// state and y_next = exp(A(y_star) h) y_k.
pub fn step_matrix(sys: &OdeSystem, y_k: &[f64], h: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let half = expm_dispatch(&sys.matrix(y_k), 0.5 * h)?;
    let y_star = half.mul_vec(y_k);
    if !state_ok(&y_star) {
        return Err(Error::Divergence { step: 0 });
    }
    let full = expm_dispatch(&sys.matrix(&y_star), h)?;
    let y_next = full.mul_vec(y_k);
    Ok((y_next, y_star))
}

/// Integrate over the whole grid, recording every node state and midpoint
/// prediction. Divergence aborts with the offending step index.
pub fn integrate(sys: &OdeSystem, y0: &[f64], grid: Grid) -> Result<Trajectory> {
    if y0.len() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            got: y0.len(),
        });
    }
    let h = grid.step();
    let mut states = Vec::with_capacity(grid.num_steps() + 1);
    let mut midpoints = Vec::with_capacity(grid.num_steps());
    states.push(y0.to_vec());
    let mut y = y0.to_vec();
    for k in 0..grid.num_steps() {
        let (y_next, y_star) = step_matrix(sys, &y, h).map_err(|e| match e {
            Error::Divergence { .. } => Error::Divergence { step: k },
            other => other,
        })?;
        if !state_ok(&y_next) || !state_ok(&y_star) {
            return Err(Error::Divergence { step: k });
        }
        midpoints.push(y_star);
        states.push(y_next.clone());
        y = y_next;
    }
    Ok(Trajectory {
        grid,
        states,
        midpoints,
    })
}

/// Evaluate the segmentary solution between nodes: inside interval k the
/// solution is exp(A(y*_k)(t - t_k)) applied to the stored node state, which
/// glues continuously at the nodes.
pub fn evaluate_dense(traj: &Trajectory, sys: &OdeSystem, t: f64) -> Result<Vec<f64>> {
    let g = &traj.grid;
    if t < g.t0() || t > g.tn() {
        return Err(Error::OutOfSpan {
            t,
            t0: g.t0(),
            t1: g.tn(),
        });
    }
    let h = g.step();
    let k = (((t - g.t0()) / h).floor() as usize).min(g.num_steps().saturating_sub(1));
    let dt = t - g.node(k);
    if dt == 0.0 {
        return Ok(traj.states[k].clone());
    }
    if t == g.tn() {
        return Ok(traj.states[g.num_steps()].clone());
    }
    let e = expm_dispatch(&sys.matrix(&traj.midpoints[k]), dt)?;
    Ok(e.mul_vec(&traj.states[k]))
}

/// One trajectory per requested N (same initial data), the refinement
/// sequence whose successive differences vanish as h -> 0.
pub fn refine_sequence(
    sys: &OdeSystem,
    y0: &[f64],
    t0: f64,
    tn: f64,
    n_list: &[usize],
) -> Result<Vec<Trajectory>> {
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput(
            "refinement list must be strictly increasing".into(),
        ));
    }
    n_list
        .iter()
        .map(|&n| integrate(sys, y0, Grid::new(t0, tn, n)?))
        .collect()
}
