//! Model lookup by name, with per-model parameter overrides and the
//! defaults used throughout the experiments.

use matstep::models;
use matstep::system::OdeSystem;

pub const MODEL_NAMES: &[&str] = &[
    "van_der_pol",
    "duffing",
    "lorenz",
    "neutral_damping",
    "epidemic",
    "lotka_volterra",
];

/// Numeric parameter overrides collected from flags or config files.
#[derive(Clone, Debug, Default)]
pub struct ModelParams {
    pub mu: Option<f64>,
    pub eps: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
}

pub struct ModelEntry {
    pub system: OdeSystem,
    pub default_initial: Vec<f64>,
    pub default_horizon: f64,
    /// Damping parameter for the residual metric (neutral damping only).
    pub residual_eps: Option<f64>,
}

pub fn build_model(name: &str, params: &ModelParams) -> Result<ModelEntry, String> {
    match name {
        "van_der_pol" => Ok(ModelEntry {
            system: models::van_der_pol(params.mu.unwrap_or(0.5)),
            default_initial: vec![0.0, 2.0],
            default_horizon: 20.0,
            residual_eps: None,
        }),
        "duffing" => Ok(ModelEntry {
            system: models::duffing(),
            default_initial: vec![1.0, 0.0],
            default_horizon: 20.0,
            residual_eps: None,
        }),
        "lorenz" => {
            let (da, db, dc) = models::LORENZ_DEFAULT;
            Ok(ModelEntry {
                system: models::lorenz(
                    params.a.unwrap_or(da),
                    params.b.unwrap_or(db),
                    params.c.unwrap_or(dc),
                ),
                default_initial: vec![1.0, 0.0, 1.0],
                default_horizon: 10.0,
                residual_eps: None,
            })
        }
        "neutral_damping" => {
            let eps = params.eps.unwrap_or(0.1);
            Ok(ModelEntry {
                system: models::neutral_damping(eps),
                default_initial: vec![1.0, 0.0],
                default_horizon: 2.0 * std::f64::consts::PI,
                residual_eps: Some(eps),
            })
        }
        "epidemic" => {
            let (da, db) = models::EPIDEMIC_DEFAULT;
            Ok(ModelEntry {
                system: models::epidemic(params.a.unwrap_or(da), params.b.unwrap_or(db)),
                default_initial: vec![300.0, 20.0, 0.0],
                default_horizon: 100.0,
                residual_eps: None,
            })
        }
        "lotka_volterra" => {
            let (da, db, dc, dd) = models::LOTKA_VOLTERRA_DEFAULT;
            Ok(ModelEntry {
                system: models::lotka_volterra(
                    params.a.unwrap_or(da),
                    params.b.unwrap_or(db),
                    params.c.unwrap_or(dc),
                    params.d.unwrap_or(dd),
                ),
                default_initial: vec![3.0, 3.0],
                default_horizon: 20.0,
                residual_eps: None,
            })
        }
        other => Err(format!(
            "unknown model '{other}'; valid models: {}",
            MODEL_NAMES.join(", ")
        )),
    }
}
