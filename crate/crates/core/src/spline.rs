//! Cubic spline interpolation with natural or not-a-knot boundaries.
//!
//! The natural boundary is the default interpolant; the not-a-knot boundary
//! exists because residual functionals of the interpolated solution are
//! boundary-dominated under the natural condition (the true second
//! derivative at the endpoints is generally nonzero).

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplineBoundary {
    /// Zero second derivative at both endpoints.
    Natural,
    /// Third-derivative continuity across the first and last interior nodes.
    NotAKnot,
}

#[derive(Clone, Debug)]
pub struct CubicSpline {
    nodes: Vec<f64>,
    values: Vec<f64>,
    /// Second derivatives at the nodes.
    m: Vec<f64>,
    boundary: SplineBoundary,
}

/// Solve a tridiagonal system in place (Thomas algorithm).
/// `a` is the subdiagonal (len n-1), `b` the diagonal (len n), `c` the
/// superdiagonal (len n-1), `d` the right-hand side.
fn thomas_solve(a: &[f64], b: &[f64], c: &[f64], d: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut cp = vec![0.0; n];
    let mut dp = vec![0.0; n];
    cp[0] = if n > 1 { c[0] / b[0] } else { 0.0 };
    dp[0] = d[0] / b[0];
    for i in 1..n {
        let denom = b[i] - a[i - 1] * cp[i - 1];
        if i < n - 1 {
            cp[i] = c[i] / denom;
        }
        dp[i] = (d[i] - a[i - 1] * dp[i - 1]) / denom;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = dp[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = dp[i] - cp[i] * x[i + 1];
    }
    x
}

impl CubicSpline {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>, boundary: SplineBoundary) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::InvalidInput(
                "spline nodes and values differ in length".into(),
            ));
        }
        let min_nodes = match boundary {
            SplineBoundary::Natural => 3,
            SplineBoundary::NotAKnot => 4,
        };
        if nodes.len() < min_nodes {
            return Err(Error::InvalidInput(format!(
                "spline needs at least {min_nodes} nodes, got {}",
                nodes.len()
            )));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput(
                "spline nodes must be strictly increasing".into(),
            ));
        }
        if nodes.iter().chain(values.iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("non-finite spline data".into()));
        }
        let m = match boundary {
            SplineBoundary::Natural => natural_second_derivatives(&nodes, &values),
            SplineBoundary::NotAKnot => not_a_knot_second_derivatives(&nodes, &values),
        };
        Ok(Self {
            nodes,
            values,
            m,
            boundary,
        })
    }

    pub fn boundary(&self) -> SplineBoundary {
        self.boundary
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn second_derivatives(&self) -> &[f64] {
        &self.m
    }

    pub fn span(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().unwrap())
    }

    fn interval(&self, t: f64) -> Result<usize> {
        let (t0, t1) = self.span();
        if t < t0 || t > t1 {
            return Err(Error::OutOfSpan { t, t0, t1 });
        }
        let i = self.nodes.partition_point(|&x| x <= t);
        Ok(i.saturating_sub(1).min(self.nodes.len() - 2))
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let i = self.interval(t)?;
        let h = self.nodes[i + 1] - self.nodes[i];
        let a = (self.nodes[i + 1] - t) / h;
        let b = (t - self.nodes[i]) / h;
        Ok(a * self.values[i]
            + b * self.values[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0)
    }

    pub fn deriv1(&self, t: f64) -> Result<f64> {
        let i = self.interval(t)?;
        let h = self.nodes[i + 1] - self.nodes[i];
        let a = (self.nodes[i + 1] - t) / h;
        let b = (t - self.nodes[i]) / h;
        Ok((self.values[i + 1] - self.values[i]) / h
            - (3.0 * a * a - 1.0) / 6.0 * h * self.m[i]
            + (3.0 * b * b - 1.0) / 6.0 * h * self.m[i + 1])
    }

    pub fn deriv2(&self, t: f64) -> Result<f64> {
        let i = self.interval(t)?;
        let h = self.nodes[i + 1] - self.nodes[i];
        let a = (self.nodes[i + 1] - t) / h;
        let b = (t - self.nodes[i]) / h;
        Ok(a * self.m[i] + b * self.m[i + 1])
    }
}

fn interior_row(nodes: &[f64], values: &[f64], i: usize) -> (f64, f64, f64, f64) {
    let h0 = nodes[i] - nodes[i - 1];
    let h1 = nodes[i + 1] - nodes[i];
    let d = (values[i + 1] - values[i]) / h1 - (values[i] - values[i - 1]) / h0;
    (h0 / 6.0, (h0 + h1) / 3.0, h1 / 6.0, d)
}

fn natural_second_derivatives(nodes: &[f64], values: &[f64]) -> Vec<f64> {
    let n = nodes.len();
    let unknowns = n - 2;
    let mut sub = vec![0.0; unknowns.saturating_sub(1)];
    let mut diag = vec![0.0; unknowns];
    let mut sup = vec![0.0; unknowns.saturating_sub(1)];
    let mut rhs = vec![0.0; unknowns];
    for i in 1..n - 1 {
        let (lo, mid, hi, d) = interior_row(nodes, values, i);
        let r = i - 1;
        diag[r] = mid;
        rhs[r] = d;
        if r > 0 {
            sub[r - 1] = lo;
        }
        if r + 1 < unknowns {
            sup[r] = hi;
        }
    }
    let inner = thomas_solve(&sub, &diag, &sup, &rhs);
    let mut m = vec![0.0; n];
    m[1..n - 1].copy_from_slice(&inner);
    m
}

fn not_a_knot_second_derivatives(nodes: &[f64], values: &[f64]) -> Vec<f64> {
    // Endpoint second derivatives are eliminated with the third-derivative
    // continuity relations M_0 = (1+r0) M_1 - r0 M_2 (r0 = h_0/h_1) and the
    // mirrored one at the far end, leaving a tridiagonal system in the
    // interior second derivatives.
    let n = nodes.len();
    let unknowns = n - 2;
    let r0 = (nodes[1] - nodes[0]) / (nodes[2] - nodes[1]);
    let rn = (nodes[n - 1] - nodes[n - 2]) / (nodes[n - 2] - nodes[n - 3]);
    let mut sub = vec![0.0; unknowns - 1];
    let mut diag = vec![0.0; unknowns];
    let mut sup = vec![0.0; unknowns - 1];
    let mut rhs = vec![0.0; unknowns];
    for i in 1..n - 1 {
        let (lo, mid, hi, d) = interior_row(nodes, values, i);
        let r = i - 1;
        rhs[r] = d;
        if r == 0 {
            diag[r] = mid + lo * (1.0 + r0);
            sup[r] = hi - lo * r0;
        } else if r == unknowns - 1 {
            diag[r] = mid + hi * (1.0 + rn);
            sub[r - 1] = lo - hi * rn;
        } else {
            sub[r - 1] = lo;
            diag[r] = mid;
            sup[r] = hi;
        }
    }
    let inner = thomas_solve(&sub, &diag, &sup, &rhs);
    let mut m = vec![0.0; n];
    m[1..n - 1].copy_from_slice(&inner);
    m[0] = (1.0 + r0) * m[1] - r0 * m[2];
    m[n - 1] = (1.0 + rn) * m[n - 2] - rn * m[n - 3];
    m
}

/// Natural cubic spline through (nodes, values).
pub fn build_spline(nodes: &[f64], values: &[f64]) -> Result<CubicSpline> {
    CubicSpline::new(nodes.to_vec(), values.to_vec(), SplineBoundary::Natural)
}
