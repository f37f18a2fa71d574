//! Canned experiment configurations: table1..table7 reproduce the
//! benchmark tables, each with its model parameters, horizon, step list,
//! and metric.

use std::f64::consts::PI;

use crate::registry::{build_model, ModelEntry, ModelParams};
use crate::run::{Method, MetricKind, TableConfig};

pub const PRESET_NAMES: &[&str] = &[
    "table1", "table2", "table3", "table4", "table5", "table6", "table7",
];

pub fn preset(name: &str) -> Result<(TableConfig, ModelEntry), String> {
    let p = ModelParams::default();
    let fine_to_coarse = vec![1e-4, 1e-3, 1e-2, 0.1, 0.2, 0.5];
    match name {
        // van der Pol, mu = 1/2, y(0) = (0, 2), T = 20, node error
        "table1" => {
            let entry = build_model("van_der_pol", &p)?;
            Ok((
                TableConfig {
                    model_label: "van_der_pol".into(),
                    initial: vec![0.0, 2.0],
                    horizon: 20.0,
                    methods: vec![Method::Matrix, Method::Taylor3, Method::Taylor4],
                    h_list: fine_to_coarse,
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        // Duffing, y(0) = (1, 0); T = 20 matches the horizon used by the
        // other oscillator presets
        "table2" => {
            let entry = build_model("duffing", &p)?;
            Ok((
                TableConfig {
                    model_label: "duffing".into(),
                    initial: vec![1.0, 0.0],
                    horizon: 20.0,
                    methods: vec![Method::Matrix, Method::Taylor3, Method::Taylor4],
                    h_list: fine_to_coarse,
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        // Lorenz, y(0) = (1, 0, 1), T = 10; coarse steps break the Taylor
        // runs, which is part of the expected output
        "table3" => {
            let entry = build_model("lorenz", &p)?;
            Ok((
                TableConfig {
                    model_label: "lorenz".into(),
                    initial: vec![1.0, 0.0, 1.0],
                    horizon: 10.0,
                    methods: vec![
                        Method::Matrix,
                        Method::Taylor2,
                        Method::Taylor3,
                        Method::Taylor4,
                    ],
                    h_list: vec![1e-2, 0.1, 0.2],
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        // neutral damping, eps = 0.1, x(0) = (1, 0), T = 2 pi, node error
        "table4" => {
            let entry = build_model("neutral_damping", &p)?;
            Ok((
                TableConfig {
                    model_label: "neutral_damping".into(),
                    initial: vec![1.0, 0.0],
                    horizon: 2.0 * PI,
                    methods: vec![Method::Matrix, Method::Taylor3, Method::Taylor4],
                    h_list: fine_to_coarse,
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        // same runs scored by the spline residual of the equation
        "table5" => {
            let entry = build_model("neutral_damping", &p)?;
            Ok((
                TableConfig {
                    model_label: "neutral_damping".into(),
                    initial: vec![1.0, 0.0],
                    horizon: 2.0 * PI,
                    methods: vec![
                        Method::Matrix,
                        Method::Taylor2,
                        Method::Taylor3,
                        Method::Taylor4,
                    ],
                    h_list: fine_to_coarse,
                    metric: MetricKind::Residual,
                    residual_eps: 0.1,
                },
                entry,
            ))
        }
        // epidemic, (300, 20, 0); horizon T = 100 is this artifact's choice
        "table6" => {
            let entry = build_model("epidemic", &p)?;
            Ok((
                TableConfig {
                    model_label: "epidemic".into(),
                    initial: vec![300.0, 20.0, 0.0],
                    horizon: 100.0,
                    methods: vec![Method::Matrix, Method::Taylor2, Method::Taylor3],
                    h_list: vec![0.01, 0.1, 1.0, 2.0],
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        // Lotka-Volterra, (3, 3), T = 20 (about three periods)
        "table7" => {
            let entry = build_model("lotka_volterra", &p)?;
            Ok((
                TableConfig {
                    model_label: "lotka_volterra".into(),
                    initial: vec![3.0, 3.0],
                    horizon: 20.0,
                    methods: vec![Method::Matrix, Method::Taylor2, Method::Taylor3],
                    h_list: vec![0.01, 0.1, 0.2],
                    metric: MetricKind::NodeMse,
                    residual_eps: 0.0,
                },
                entry,
            ))
        }
        other => Err(format!(
            "unknown preset '{other}'; valid presets: {}",
            PRESET_NAMES.join(", ")
        )),
    }
}
