//! Numerical experiment harness for a boundedness conjecture on Lienard
//! equations y'' + f(y) y' + g(y) y = 0, factored as the first-order system
//! (y, z)' = A(y) (y, z) with A = [[0, 1], [-g(y), -f(y)]].
//!
//! Conjectured sufficient conditions for bounded solutions, checked by
//! sampling: (i) f^2 - 4g < 0, (ii) f >= 0, (iii) 0 < g < 1 on the range
//! of interest.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrator::integrate;
use crate::matrix::SquareMatrix;
use crate::system::{Grid, OdeSystem};

#[derive(Clone)]
pub struct LienardSpec {
    pub f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub g: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub y_range: (f64, f64),
    pub horizon: f64,
    pub bound_threshold: f64,
}

impl LienardSpec {
    pub fn new(
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
        y_range: (f64, f64),
        horizon: f64,
        bound_threshold: f64,
    ) -> Result<Self> {
        if !(horizon > 0.0) {
            return Err(Error::InvalidInput("lienard horizon must be > 0".into()));
        }
        if !(y_range.1 > y_range.0) {
            return Err(Error::InvalidInput("lienard y_range is empty".into()));
        }
        Ok(Self {
            f: Arc::new(f),
            g: Arc::new(g),
            y_range,
            horizon,
            bound_threshold,
        })
    }

    /// The factored first-order system (y, z)' = A(y) (y, z).
    pub fn system(&self) -> OdeSystem {
        let f = Arc::clone(&self.f);
        let g = Arc::clone(&self.g);
        OdeSystem::new("lienard", 2, move |y: &[f64]| {
            SquareMatrix::from_rows2([[0.0, 1.0], [-g(y[0]), -f(y[0])]])
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionChecks {
    /// f^2 - 4g < 0 everywhere on the samples.
    pub discriminant_negative: bool,
    /// f >= 0 everywhere on the samples.
    pub f_nonnegative: bool,
    /// 0 < g < 1 everywhere on the samples.
    pub g_in_unit_interval: bool,
}

impl ConditionChecks {
    pub fn all_hold(&self) -> bool {
        self.discriminant_negative && self.f_nonnegative && self.g_in_unit_interval
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub initial_state: Vec<f64>,
    /// First time at which the node norm exceeded the threshold (or the
    /// run diverged).
    pub escape_time: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub conditions: ConditionChecks,
    pub bounded: bool,
    pub sup_norm: f64,
    pub horizon: f64,
    pub counterexample: Option<Counterexample>,
}

/// Evaluate the three conjecture conditions on uniform samples of y_range.
pub fn check_conditions(spec: &LienardSpec, samples: usize) -> Result<ConditionChecks> {
    if samples < 100 {
        return Err(Error::InvalidInput(
            "condition sampling needs >= 100 samples".into(),
        ));
    }
    let (lo, hi) = spec.y_range;
    let mut checks = ConditionChecks {
        discriminant_negative: true,
        f_nonnegative: true,
        g_in_unit_interval: true,
    };
    for i in 0..samples {
        let y = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
        let fv = (spec.f)(y);
        let gv = (spec.g)(y);
        if !fv.is_finite() || !gv.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite f or g at y = {y}"
            )));
        }
        if fv * fv - 4.0 * gv >= 0.0 {
            checks.discriminant_negative = false;
        }
        if fv < 0.0 {
            checks.f_nonnegative = false;
        }
        if !(gv > 0.0 && gv < 1.0) {
            checks.g_in_unit_interval = false;
        }
    }
    Ok(checks)
}

fn norm(y: &[f64]) -> f64 {
    y.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Integrate from each initial state with the matrix method and report
/// whether every run stayed under the bound threshold.
pub fn test_boundedness(
    spec: &LienardSpec,
    initial_states: &[Vec<f64>],
    h: f64,
) -> Result<ConjectureVerdict> {
    if !(h > 0.0) {
        return Err(Error::InvalidInput("step size must be > 0".into()));
    }
    if initial_states.is_empty() {
        return Err(Error::InvalidInput("no initial states given".into()));
    }
    let conditions = check_conditions(spec, 200)?;
    let sys = spec.system();
    let steps = (spec.horizon / h).round().max(1.0) as usize;
    let grid = Grid::new(0.0, spec.horizon, steps)?;
    let mut sup_norm: f64 = 0.0;
    let mut counterexample: Option<Counterexample> = None;
    for y0 in initial_states {
        match integrate(&sys, y0, grid) {
            Ok(traj) => {
                for (k, state) in traj.states.iter().enumerate() {
                    let n = norm(state);
                    sup_norm = sup_norm.max(n);
                    if n > spec.bound_threshold && counterexample.is_none() {
                        counterexample = Some(Counterexample {
                            initial_state: y0.clone(),
                            escape_time: grid.node(k),
                        });
                    }
                }
            }
            Err(Error::Divergence { step }) => {
                sup_norm = f64::INFINITY;
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        initial_state: y0.clone(),
                        escape_time: grid.node(step.min(steps)),
                    });
                }
            }
            Err(e) => return Err(e),
        }
    }
    let bounded = counterexample.is_none();
    // a counterexample to the conjecture is only meaningful when the
    // premises hold; otherwise the escape record is informational
    let verdict = ConjectureVerdict {
        conditions,
        bounded,
        sup_norm,
        horizon: spec.horizon,
        counterexample,
    };
    Ok(verdict)
}

/// Default battery: `count` initial states on a circle of the given radius.
pub fn circle_of_initial_states(count: usize, radius: f64) -> Vec<Vec<f64>> {
    (0..count)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
            vec![radius * theta.cos(), radius * theta.sin()]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_const(f: f64, g: f64, threshold: f64) -> LienardSpec {
        LienardSpec::new(move |_| f, move |_| g, (-3.0, 3.0), 50.0, threshold).unwrap()
    }

    #[test]
    fn conditions_on_constant_coefficients() {
        let c = check_conditions(&spec_const(1.0, 0.5, 10.0), 200).unwrap();
        assert!(c.discriminant_negative && c.f_nonnegative && c.g_in_unit_interval);
        assert!(c.all_hold());

        let c = check_conditions(&spec_const(0.0, 0.5, 10.0), 200).unwrap();
        assert!(c.all_hold());

        // van der Pol damping f(y) = mu (y^2 - 1) is negative near y = 0
        let vdp = LienardSpec::new(
            |y| 0.5 * (y * y - 1.0),
            |_| 0.5,
            (-3.0, 3.0),
            50.0,
            10.0,
        )
        .unwrap();
        let c = check_conditions(&vdp, 200).unwrap();
        assert!(!c.f_nonnegative);

        assert!(check_conditions(&spec_const(1.0, 0.5, 10.0), 50).is_err());
    }

    #[test]
    fn hamiltonian_case_is_bounded_and_periodic() {
        // f = 0, 0 < g < 1 constant: ellipse orbits with period 2 pi / sqrt g
        let spec = spec_const(0.0, 0.5, 20.0);
        let v = test_boundedness(&spec, &[vec![1.0, 0.0]], 1e-3).unwrap();
        assert!(v.bounded);
        assert!(v.counterexample.is_none());
        assert!(v.sup_norm <= 1.5);

        // exactness on the constant-coefficient case: return to start after
        // one period
        let period = 2.0 * std::f64::consts::PI / 0.5_f64.sqrt();
        let g = 0.5;
        let sys = OdeSystem::new("ell", 2, move |_: &[f64]| {
            SquareMatrix::from_rows2([[0.0, 1.0], [-g, 0.0]])
        });
        let grid = Grid::new(0.0, period, 1000).unwrap();
        let traj = integrate(&sys, &[1.0, 0.0], grid).unwrap();
        let fs = traj.final_state();
        assert!((fs[0] - 1.0).abs() < 1e-3 && fs[1].abs() < 1e-3);
    }

    #[test]
    fn damped_case_decays() {
        let spec = spec_const(1.0, 0.5, 1.2);
        let v = test_boundedness(&spec, &[vec![1.0, 0.0]], 1e-2).unwrap();
        assert!(v.bounded, "sup_norm {}", v.sup_norm);
        assert!(v.sup_norm <= 1.0 + 0.2);
    }

    #[test]
    fn negative_f_grows_unbounded() {
        // f = -1 violates condition (ii); eigenvalues have positive real part
        let spec = LienardSpec::new(|_| -1.0, |_| 0.5, (-3.0, 3.0), 50.0, 10.0).unwrap();
        let v = test_boundedness(&spec, &[vec![1.0, 0.0]], 1e-2).unwrap();
        assert!(!v.conditions.f_nonnegative);
        assert!(!v.bounded);
        let ce = v.counterexample.unwrap();
        assert!(ce.escape_time > 0.0);
    }

    #[test]
    fn hamiltonian_energy_drift_small() {
        // H = z^2/2 + g y^2/2 for constant g
        let g = 0.5;
        let sys = OdeSystem::new("ham", 2, move |_: &[f64]| {
            SquareMatrix::from_rows2([[0.0, 1.0], [-g, 0.0]])
        })
        .with_first_integral(move |y: &[f64]| 0.5 * y[1] * y[1] + 0.5 * g * y[0] * y[0]);
        let grid = Grid::new(0.0, 50.0, 50_000).unwrap();
        let traj = integrate(&sys, &[1.0, 0.0], grid).unwrap();
        let h0 = sys.first_integral(&traj.states[0]).unwrap();
        let max_drift = traj
            .states
            .iter()
            .map(|s| (sys.first_integral(s).unwrap() - h0).abs())
            .fold(0.0f64, f64::max);
        assert!(max_drift < 1e-6, "drift {max_drift}");
    }

    #[test]
    fn verdict_serializes_to_json() {
        let spec = spec_const(1.0, 0.5, 10.0);
        let v = test_boundedness(&spec, &circle_of_initial_states(4, 2.0), 1e-2).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        let back: ConjectureVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back.bounded, v.bounded);
        assert!(json.contains("sup_norm"));
    }
}
