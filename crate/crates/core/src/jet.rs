//! Truncated Taylor coefficients of a time-dependent scalar.
//!
//! Jets mechanize the derivative chains of the Taylor reference methods:
//! models write their right-hand side once over this arithmetic and the
//! stepper recovers d-th order time derivatives without hand-coded formulas.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients `c[i]` of t^i, truncated at a fixed length. All arithmetic
/// follows Cauchy-product truncation at the shorter operand's length.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    c: Vec<f64>,
}

impl Jet {
    pub fn constant(value: f64, len: usize) -> Self {
        assert!(len >= 1);
        let mut c = vec![0.0; len];
        c[0] = value;
        Self { c }
    }

    pub fn from_coefficients(c: Vec<f64>) -> Self {
        assert!(!c.is_empty());
        Self { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coefficient(&self, i: usize) -> f64 {
        self.c[i]
    }

    pub fn set_coefficient(&mut self, i: usize, v: f64) {
        self.c[i] = v;
    }

    /// Horner evaluation of the truncated polynomial at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, &ck| acc * t + ck)
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        Jet {
            c: (0..n).map(|i| self.c[i] + rhs.c[i]).collect(),
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        Jet {
            c: (0..n).map(|i| self.c[i] - rhs.c[i]).collect(),
        }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        let mut c = vec![0.0; n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] += self.c[i] * rhs.c[j];
            }
        }
        Jet { c }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        Jet {
            c: self.c.iter().map(|x| x * s).collect(),
        }
    }
}

impl Add<f64> for &Jet {
    type Output = Jet;
    fn add(self, s: f64) -> Jet {
        let mut c = self.c.clone();
        c[0] += s;
        Jet { c }
    }
}

impl Sub<f64> for &Jet {
    type Output = Jet;
    fn sub(self, s: f64) -> Jet {
        let mut c = self.c.clone();
        c[0] -= s;
        Jet { c }
    }
}
