//! One-step integration of systems y' = A(y) y through the matrix
//! exponential: the state is advanced with exp(A(y*) h), where y* is a
//! midpoint prediction, making the scheme exact on constant-coefficient
//! systems and second-order accurate in general. The crate also carries
//! the reference integrators, benchmark models, error metrics, and the
//! Lienard boundedness experiment used to evaluate the method.

pub mod error;
pub mod expm;
pub mod integrator;
pub mod jet;
pub mod lienard;
pub mod matrix;
pub mod metrics;
pub mod models;
pub mod reference;
pub mod spline;
pub mod system;

pub use error::{Error, Result};
pub use expm::{expm_2x2_closed, expm_putzer, expm_series, Spectrum};
pub use integrator::{evaluate_dense, expm_dispatch, integrate, refine_sequence, step_matrix};
pub use matrix::SquareMatrix;
pub use metrics::{
    first_integral_drift, node_mse, observed_order, pde_mse, residual_error, ErrorReport,
};
pub use reference::{integrate_reference, rk_reference, ReferenceConfig, ReferenceMethod};
pub use spline::{build_spline, CubicSpline, SplineBoundary};
pub use system::{Grid, OdeSystem, Trajectory};
