//! Baseline integrators the matrix method is compared against: Taylor
//! methods of orders 2-4 driven by jet propagation, and a substepped
//! classical Runge-Kutta reference.

use crate::error::{Error, Result};
use crate::integrator::DIVERGENCE_BOUND;
use crate::jet::Jet;
use crate::system::{Grid, OdeSystem, Trajectory};

/// Which baseline to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReferenceMethod {
    Taylor2,
    Taylor3,
    Taylor4,
    Rk4,
    /// RK4 with each grid interval subdivided; a stand-in for a high-order
    /// reference (only the reference's accuracy matters, not its order).
    RkReference,
}

impl ReferenceMethod {
    pub fn label(&self) -> &'static str {
        match self {
            ReferenceMethod::Taylor2 => "taylor2",
            ReferenceMethod::Taylor3 => "taylor3",
            ReferenceMethod::Taylor4 => "taylor4",
            ReferenceMethod::Rk4 => "rk4",
            ReferenceMethod::RkReference => "rk_reference",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReferenceConfig {
    pub method: ReferenceMethod,
    /// Refinement factor for `RkReference`; ignored by the others.
    pub substeps: usize,
}

impl ReferenceConfig {
    pub fn new(method: ReferenceMethod, substeps: usize) -> Result<Self> {
        if substeps == 0 {
            return Err(Error::InvalidInput("substeps must be >= 1".into()));
        }
        Ok(Self { method, substeps })
    }
}

fn state_ok(y: &[f64]) -> bool {
    y.iter().all(|x| x.is_finite())
        && y.iter().map(|x| x * x).sum::<f64>().sqrt() <= DIVERGENCE_BOUND
}

/// One Taylor step of the given order. The time derivatives come from
/// recursive jet propagation: coefficient i+1 of each state jet is
/// coefficient i of the right-hand-side jet divided by i+1.
pub fn taylor_step(sys: &OdeSystem, y_k: &[f64], h: f64, order: usize) -> Result<Vec<f64>> {
    assert!((2..=4).contains(&order), "supported Taylor orders are 2..=4");
    let len = order + 1;
    let mut jets: Vec<Jet> = y_k.iter().map(|&v| Jet::constant(v, len)).collect();
    for i in 0..order {
        let f = sys.series_rhs(&jets)?;
        for (jet, fj) in jets.iter_mut().zip(&f) {
            jet.set_coefficient(i + 1, fj.coefficient(i) / (i + 1) as f64);
        }
    }
    let next: Vec<f64> = jets.iter().map(|jet| jet.eval(h)).collect();
    if !state_ok(&next) {
        return Err(Error::Divergence { step: 0 });
    }
    Ok(next)
}

fn rk4_step(sys: &OdeSystem, y: &[f64], h: f64) -> Vec<f64> {
    let k1 = sys.rhs(y);
    let y2: Vec<f64> = y.iter().zip(&k1).map(|(a, b)| a + 0.5 * h * b).collect();
    let k2 = sys.rhs(&y2);
    let y3: Vec<f64> = y.iter().zip(&k2).map(|(a, b)| a + 0.5 * h * b).collect();
    let k3 = sys.rhs(&y3);
    let y4: Vec<f64> = y.iter().zip(&k3).map(|(a, b)| a + h * b).collect();
    let k4 = sys.rhs(&y4);
    y.iter()
        .enumerate()
        .map(|(i, a)| a + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// High-accuracy reference: classical RK4 with each grid interval subdivided
/// `substeps` times; states are recorded at the coarse nodes only.
pub fn rk_reference(
    sys: &OdeSystem,
    y0: &[f64],
    grid: Grid,
    substeps: usize,
) -> Result<Trajectory> {
    if substeps == 0 {
        return Err(Error::InvalidInput("substeps must be >= 1".into()));
    }
    let h = grid.step() / substeps as f64;
    let mut states = Vec::with_capacity(grid.num_steps() + 1);
    states.push(y0.to_vec());
    let mut y = y0.to_vec();
    for k in 0..grid.num_steps() {
        for _ in 0..substeps {
            y = rk4_step(sys, &y, h);
        }
        if !state_ok(&y) {
            return Err(Error::Divergence { step: k });
        }
        states.push(y.clone());
    }
    Ok(Trajectory {
        grid,
        states,
        midpoints: Vec::new(),
    })
}

/// Run the configured baseline over the grid with the same trajectory
/// contract as the matrix integrator.
pub fn integrate_reference(
    sys: &OdeSystem,
    y0: &[f64],
    grid: Grid,
    cfg: ReferenceConfig,
) -> Result<Trajectory> {
    match cfg.method {
        ReferenceMethod::Rk4 => rk_reference(sys, y0, grid, 1),
        ReferenceMethod::RkReference => rk_reference(sys, y0, grid, cfg.substeps),
        ReferenceMethod::Taylor2 | ReferenceMethod::Taylor3 | ReferenceMethod::Taylor4 => {
            let order = match cfg.method {
                ReferenceMethod::Taylor2 => 2,
                ReferenceMethod::Taylor3 => 3,
                _ => 4,
            };
            let h = grid.step();
            let mut states = Vec::with_capacity(grid.num_steps() + 1);
            states.push(y0.to_vec());
            let mut y = y0.to_vec();
            for k in 0..grid.num_steps() {
                y = taylor_step(sys, &y, h, order).map_err(|e| match e {
                    Error::Divergence { .. } => Error::Divergence { step: k },
                    other => other,
                })?;
                if !state_ok(&y) {
                    return Err(Error::Divergence { step: k });
                }
                states.push(y.clone());
            }
            Ok(Trajectory {
                grid,
                states,
                midpoints: Vec::new(),
            })
        }
    }
}
