//! The model abstraction (y' = A(y) y), uniform grids and trajectories.

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::matrix::SquareMatrix;

pub type MatrixMap = dyn Fn(&[f64]) -> SquareMatrix + Send + Sync;
pub type SeriesRhs = dyn Fn(&[Jet]) -> Vec<Jet> + Send + Sync;
pub type ScalarField = dyn Fn(&[f64]) -> f64 + Send + Sync;
pub type TimeFunction = dyn Fn(f64) -> Vec<f64> + Send + Sync;

/// A first-order system y' = A(y) y. The factorization is supplied by the
/// model, not inferred; it is non-unique and changes the numerical method.
/// The plain right-hand side is *defined* as A(y) y, never stored separately.
pub struct OdeSystem {
    name: String,
    dim: usize,
    matrix_map: Box<MatrixMap>,
    /// Right-hand side over truncated-series arithmetic, for the Taylor
    /// reference methods. Optional: systems built from opaque closures
    /// (the Lienard lab) cannot supply it.
    series_rhs: Option<Box<SeriesRhs>>,
    first_integral: Option<Box<ScalarField>>,
    exact_solution: Option<Box<TimeFunction>>,
}

impl OdeSystem {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        matrix_map: impl Fn(&[f64]) -> SquareMatrix + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            dim,
            matrix_map: Box::new(matrix_map),
            series_rhs: None,
            first_integral: None,
            exact_solution: None,
        }
    }

    pub fn with_series_rhs(
        mut self,
        rhs: impl Fn(&[Jet]) -> Vec<Jet> + Send + Sync + 'static,
    ) -> Self {
        self.series_rhs = Some(Box::new(rhs));
        self
    }

    pub fn with_first_integral(
        mut self,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.first_integral = Some(Box::new(f));
        self
    }

    pub fn with_exact_solution(
        mut self,
        f: impl Fn(f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        self.exact_solution = Some(Box::new(f));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, y: &[f64]) -> SquareMatrix {
        debug_assert_eq!(y.len(), self.dim);
        (self.matrix_map)(y)
    }

    /// f(y) = A(y) y, by definition.
    pub fn rhs(&self, y: &[f64]) -> Vec<f64> {
        self.matrix(y).mul_vec(y)
    }

    pub fn series_rhs(&self, y: &[Jet]) -> Result<Vec<Jet>> {
        match &self.series_rhs {
            Some(f) => Ok(f(y)),
            None => Err(Error::MissingSeriesRhs(self.name.clone())),
        }
    }

    pub fn has_series_rhs(&self) -> bool {
        self.series_rhs.is_some()
    }

    pub fn first_integral(&self, y: &[f64]) -> Result<f64> {
        match &self.first_integral {
            Some(f) => Ok(f(y)),
            None => Err(Error::MissingFirstIntegral(self.name.clone())),
        }
    }

    pub fn has_first_integral(&self) -> bool {
        self.first_integral.is_some()
    }

    pub fn exact_solution(&self, t: f64) -> Option<Vec<f64>> {
        self.exact_solution.as_ref().map(|f| f(t))
    }

    pub fn has_exact_solution(&self) -> bool {
        self.exact_solution.is_some()
    }
}

impl std::fmt::Debug for OdeSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OdeSystem")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("first_integral", &self.first_integral.is_some())
            .field("exact_solution", &self.exact_solution.is_some())
            .finish()
    }
}

/// Uniform partition of [t0, tN] into N subintervals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    t0: f64,
    tn: f64,
    n: usize,
}

impl Grid {
    pub fn new(t0: f64, tn: f64, n: usize) -> Result<Self> {
        if !(tn > t0) || n == 0 {
            return Err(Error::InvalidInput(format!(
                "grid requires tN > t0 and N >= 1 (got t0={t0}, tN={tn}, N={n})"
            )));
        }
        Ok(Self { t0, tn, n })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn tn(&self) -> f64 {
        self.tn
    }

    pub fn num_steps(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> f64 {
        (self.tn - self.t0) / self.n as f64
    }

    pub fn node(&self, k: usize) -> f64 {
        if k == self.n {
            self.tn
        } else {
            self.t0 + k as f64 * self.step()
        }
    }

    pub fn span(&self) -> f64 {
        self.tn - self.t0
    }
}

/// Node states of one integrator run, plus the predicted midpoint states of
/// the matrix method (kept as diagnostics; empty for reference integrators).
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub grid: Grid,
    pub states: Vec<Vec<f64>>,
    pub midpoints: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn final_state(&self) -> &[f64] {
        self.states.last().expect("non-empty")
    }

    /// Largest node-state difference against another trajectory on the same
    /// grid (sup over nodes of the max-norm).
    pub fn sup_node_distance(&self, other: &Trajectory) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let mut sup = 0.0f64;
        for (a, b) in self.states.iter().zip(&other.states) {
            for (x, y) in a.iter().zip(b) {
                sup = sup.max((x - y).abs());
            }
        }
        Ok(sup)
    }
}
