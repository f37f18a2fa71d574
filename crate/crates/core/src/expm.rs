//! Eigenvalues for n <= 3 and matrix exponentials.
//!
//! Three exponential routes coexist on purpose: the Putzer spectral assembly
//! (n <= 3), the closed 2x2 form with its confluent limit, and a
//! scaling-and-squaring truncated series that works for any n and doubles as
//! the independent oracle for the spectral paths.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

pub type ComplexScalar = Complex64;

/// Relative eigenvalue separation below which the repeated-eigenvalue
/// (confluent) exponential formula is used; the divided-difference form
/// divides by the separation and loses all precision near confluence.
pub const TAU_CONFLUENT: f64 = 1e-8;

/// Tolerance factor for the residual imaginary part of a spectrally assembled
/// exponential of a real matrix.
const IMAG_RESIDUAL_TOL: f64 = 1e-9;

/// Ordered eigenvalues, repeats listed with multiplicity. Real input matrices
/// have spectra closed under conjugation.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<ComplexScalar>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[ComplexScalar] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

fn check_dim(m: &SquareMatrix, n: usize) -> Result<()> {
    if m.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.dim(),
        });
    }
    Ok(())
}

/// Characteristic polynomial value det(m - z I), n <= 3, in complex arithmetic.
fn charpoly(m: &SquareMatrix, z: ComplexScalar) -> ComplexScalar {
    match m.dim() {
        1 => Complex64::new(m[(0, 0)], 0.0) - z,
        2 => {
            let tr = m.trace();
            let det = m.det();
            z * z - tr * z + det
        }
        3 => {
            // det(m - zI) = -z^3 + c2 z^2 - c1 z + c0
            let c2 = m.trace();
            let c1 = principal_minor_sum(m);
            let c0 = m.det();
            -z * z * z + c2 * z * z - c1 * z + c0
        }
        _ => unreachable!(),
    }
}

fn charpoly_deriv(m: &SquareMatrix, z: ComplexScalar) -> ComplexScalar {
    match m.dim() {
        1 => Complex64::new(-1.0, 0.0),
        2 => 2.0 * z - m.trace(),
        3 => {
            let c2 = m.trace();
            let c1 = principal_minor_sum(m);
            -3.0 * z * z + 2.0 * c2 * z - c1
        }
        _ => unreachable!(),
    }
}

/// Sum of the three principal 2x2 minors (second invariant of a 3x3 matrix).
fn principal_minor_sum(m: &SquareMatrix) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
        + m[(0, 0)] * m[(2, 2)] - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)]
}

/// One or two complex Newton steps on the characteristic polynomial to push
/// each root to its attainable accuracy.
fn polish_roots(m: &SquareMatrix, roots: &mut [ComplexScalar]) {
    for z in roots.iter_mut() {
        for _ in 0..2 {
            let p = charpoly(m, *z);
            let dp = charpoly_deriv(m, *z);
            if dp.norm() > 1e-300 {
                let step = p / dp;
                if step.norm().is_finite() {
                    *z -= step;
                }
            }
        }
    }
}

/// Pair up conjugates / cluster near-equal eigenvalues so confluent groups are
/// adjacent in the returned ordering.
fn sort_spectrum(eigs: &mut [ComplexScalar]) {
    eigs.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
}

/// Eigenvalues of a real 2x2 matrix via the numerically stable quadratic
/// formula: the larger-magnitude root is formed without cancellation and the
/// other recovered from the determinant.
pub fn eigenvalues_2x2(m: &SquareMatrix) -> Result<Spectrum> {
    check_dim(m, 2)?;
    let tr = m.trace();
    let det = m.det();
    let disc = tr * tr - 4.0 * det;
    let mut eigs = if disc >= 0.0 {
        let sq = disc.sqrt();
        // q has the sign of tr so tr + sign(tr) * sq never cancels
        let q = 0.5 * (tr + tr.signum() * sq);
        let (l1, l2) = if q != 0.0 {
            (q, det / q)
        } else {
            // tr == 0 and det == 0
            (0.0, 0.0)
        };
        vec![Complex64::new(l1, 0.0), Complex64::new(l2, 0.0)]
    } else {
        let im = 0.5 * (-disc).sqrt();
        vec![
            Complex64::new(0.5 * tr, -im),
            Complex64::new(0.5 * tr, im),
        ]
    };
    sort_spectrum(&mut eigs);
    Ok(Spectrum { eigenvalues: eigs })
}

/// Eigenvalues of a real 3x3 matrix: Cardano/trigonometric solution of the
/// depressed characteristic cubic, Newton-polished against the characteristic
/// polynomial.
pub fn eigenvalues_3x3(m: &SquareMatrix) -> Result<Spectrum> {
    check_dim(m, 3)?;
    // work on m / s to keep the cubic well scaled
    let s = m.max_row_sum_norm().max(1.0);
    let ms = m.scale(1.0 / s);
    let c2 = ms.trace();
    let c1 = principal_minor_sum(&ms);
    let c0 = ms.det();
    // lambda^3 - c2 lambda^2 + c1 lambda - c0 = 0; depress with lambda = x + c2/3
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = -c0 + c1 * shift - 2.0 * shift * shift * shift;
    // x^3 + p x + q = 0
    let mut eigs: Vec<ComplexScalar> = cubic_roots_depressed(p, q)
        .into_iter()
        .map(|x| x + shift)
        .collect();
    polish_roots(&ms, &mut eigs);
    enforce_conjugacy(&mut eigs);
    let mut eigs: Vec<ComplexScalar> = eigs.into_iter().map(|z| z * s).collect();
    sort_spectrum(&mut eigs);
    Ok(Spectrum { eigenvalues: eigs })
}

/// Roots of x^3 + p x + q = 0.
fn cubic_roots_depressed(p: f64, q: f64) -> [ComplexScalar; 3] {
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    if p == 0.0 && q == 0.0 {
        return [Complex64::new(0.0, 0.0); 3];
    }
    if disc >= 0.0 {
        // three real roots, trigonometric method (requires p < 0)
        let r = (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let theta = arg.acos();
        let mut out = [Complex64::new(0.0, 0.0); 3];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = Complex64::new(
                2.0 * r * ((theta - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos(),
                0.0,
            );
        }
        out
    } else {
        // one real root via Cardano with stable cube-root pairing
        let half_q = q / 2.0;
        let s = (half_q * half_q + p * p * p / 27.0).sqrt();
        // pick the sign that avoids cancellation in -q/2 -+ s
        let u = if half_q >= 0.0 { -half_q - s } else { -half_q + s };
        let u = u.cbrt();
        let v = if u != 0.0 { -p / (3.0 * u) } else { 0.0 };
        let x1 = u + v;
        // deflate: x^3 + p x + q = (x - x1)(x^2 + x1 x + (p + x1^2))
        let b = x1;
        let c = p + x1 * x1;
        let d = b * b - 4.0 * c;
        let im = 0.5 * (-d).max(0.0).sqrt();
        [
            Complex64::new(x1, 0.0),
            Complex64::new(-b / 2.0, im),
            Complex64::new(-b / 2.0, -im),
        ]
    }
}

/// Real matrices must have conjugation-closed spectra; snap nearly conjugate
/// pairs and nearly real roots so downstream assembly sees exact symmetry.
fn enforce_conjugacy(eigs: &mut [ComplexScalar]) {
    let scale: f64 = eigs.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for z in eigs.iter_mut() {
        if z.im.abs() < 1e-14 * scale {
            z.im = 0.0;
        }
    }
    if eigs.len() == 3 {
        let complex: Vec<usize> = (0..3).filter(|&i| eigs[i].im != 0.0).collect();
        if complex.len() == 2 {
            let (i, j) = (complex[0], complex[1]);
            let re = 0.5 * (eigs[i].re + eigs[j].re);
            let im = 0.5 * (eigs[i].im.abs() + eigs[j].im.abs());
            eigs[i] = Complex64::new(re, eigs[i].im.signum() * im);
            eigs[j] = Complex64::new(re, eigs[j].im.signum() * im);
        }
    }
}

/// exp(z) - 1 with full relative accuracy for small |z|.
fn cexpm1(z: ComplexScalar) -> ComplexScalar {
    if z.norm() < 1e-2 {
        // Taylor tail; converges to machine precision well before k = 20
        let mut term = z;
        let mut sum = z;
        for k in 2..25 {
            term *= z / k as f64;
            sum += term;
            if term.norm() <= 1e-18 * sum.norm() {
                break;
            }
        }
        sum
    } else {
        z.exp() - 1.0
    }
}

/// First divided difference of z -> exp(z t) over {a, b}, with the confluent
/// limit t exp(a t) when the nodes coincide to within `TAU_CONFLUENT`.
fn dd_exp(a: ComplexScalar, b: ComplexScalar, t: f64) -> ComplexScalar {
    let scale = a.norm().max(b.norm()).max(1.0);
    let diff = a - b;
    if diff.norm() <= TAU_CONFLUENT * scale {
        let mean = 0.5 * (a + b);
        t * (mean * t).exp()
    } else {
        // (exp(at) - exp(bt)) / (a - b) = exp(bt) expm1((a-b)t) / (a-b)
        (b * t).exp() * cexpm1(diff * t) / diff
    }
}

/// Putzer coefficients r_k(t): r_1 = exp(lambda_1 t), each later r_k solves
/// r_k' = lambda_k r_k + r_{k-1}, r_k(0) = 0, whose closed form is the
/// (k-1)-th divided difference of exp(. t) over the first k eigenvalues.
fn putzer_coefficients(eigs: &[ComplexScalar], t: f64) -> Vec<ComplexScalar> {
    match eigs.len() {
        1 => vec![(eigs[0] * t).exp()],
        2 => vec![(eigs[0] * t).exp(), dd_exp(eigs[0], eigs[1], t)],
        3 => {
            let r1 = (eigs[0] * t).exp();
            let r2 = dd_exp(eigs[0], eigs[1], t);
            let scale = eigs.iter().map(|z| z.norm()).fold(1.0, f64::max);
            let spread = eigs
                .iter()
                .flat_map(|a| eigs.iter().map(move |b| (a - b).norm()))
                .fold(0.0, f64::max);
            let r3 = if spread <= TAU_CONFLUENT * scale {
                // triple confluence: t^2/2 exp(lambda t)
                let mean = (eigs[0] + eigs[1] + eigs[2]) / 3.0;
                0.5 * t * t * (mean * t).exp()
            } else {
                // divided differences are symmetric in their nodes; divide by
                // whichever node pair is well separated
                let outer = eigs[0] - eigs[2];
                if outer.norm() > TAU_CONFLUENT * scale {
                    let dd23 = dd_exp(eigs[1], eigs[2], t);
                    (r2 - dd23) / outer
                } else {
                    let dd13 = dd_exp(eigs[0], eigs[2], t);
                    (r2 - dd13) / (eigs[1] - eigs[2])
                }
            };
            vec![r1, r2, r3]
        }
        n => unimplemented!("Putzer path limited to n <= 3, got {n}"),
    }
}

/// Complex workspace matrix for the Putzer assembly.
#[derive(Clone)]
struct CMatrix {
    n: usize,
    data: Vec<ComplexScalar>,
}

impl CMatrix {
    fn from_real(m: &SquareMatrix) -> Self {
        Self {
            n: m.dim(),
            data: m.entries().iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Self { n, data }
    }

    fn shift(&self, lambda: ComplexScalar) -> Self {
        // self - lambda I
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] -= lambda;
        }
        out
    }

    fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Self { n, data }
    }

    fn axpy(&mut self, c: ComplexScalar, other: &Self) {
        for (d, o) in self.data.iter_mut().zip(&other.data) {
            *d += c * o;
        }
    }

    /// Split into the real part, failing if the imaginary residual is above
    /// tolerance relative to the real magnitude.
    fn into_real_checked(self) -> Result<SquareMatrix> {
        let re_norm = self
            .data
            .iter()
            .map(|z| z.re.abs())
            .fold(0.0f64, f64::max)
            .max(1.0);
        let im_max = self.data.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
        if im_max > IMAG_RESIDUAL_TOL * re_norm {
            return Err(Error::ImaginaryResidual { residual: im_max });
        }
        // overflow (non-finite entries) is tolerated here; callers detect
        // it as divergence of the state
        let n = self.n;
        Ok(SquareMatrix::from_fn(n, |i, j| self.data[i * n + j].re))
    }
}

/// exp(m t) through the Putzer spectral formula, n <= 3.
pub fn expm_putzer(m: &SquareMatrix, t: f64) -> Result<SquareMatrix> {
    let n = m.dim();
    if n > 3 {
        return Err(Error::InvalidInput(format!(
            "Putzer path supports n <= 3, got {n}"
        )));
    }
    let spectrum = match n {
        1 => Spectrum {
            eigenvalues: vec![Complex64::new(m[(0, 0)], 0.0)],
        },
        2 => eigenvalues_2x2(m)?,
        3 => eigenvalues_3x3(m)?,
        _ => unreachable!(),
    };
    let eigs = spectrum.eigenvalues();
    let r = putzer_coefficients(eigs, t);
    let a = CMatrix::from_real(m);
    let mut acc = CMatrix::identity(n);
    let mut p = CMatrix::identity(n);
    acc.data.iter_mut().for_each(|z| *z *= r[0]);
    for k in 1..n {
        p = p.matmul(&a.shift(eigs[k - 1]));
        acc.axpy(r[k], &p);
    }
    acc.into_real_checked()
}

/// Closed-form exponential of a 2x2 matrix times a step h: divided-difference
/// form for separated eigenvalues, exp(lambda h)(I + h(m - lambda I)) at
/// confluence.
pub fn expm_2x2_closed(m: &SquareMatrix, h: f64) -> Result<SquareMatrix> {
    check_dim(m, 2)?;
    let spectrum = eigenvalues_2x2(m)?;
    let (l1, l2) = (spectrum.eigenvalues()[0], spectrum.eigenvalues()[1]);
    let scale = l1.norm().max(l2.norm()).max(1.0);
    let a = CMatrix::from_real(m);
    let mut acc = CMatrix::identity(2);
    if (l1 - l2).norm() > TAU_CONFLUENT * scale {
        // equivalent assembly of the two-projector formula:
        // exp(l1 h) I + f[l1,l2] (m - l1 I), stable near the switch
        let r1 = (l1 * h).exp();
        let dd = dd_exp(l1, l2, h);
        acc.data.iter_mut().for_each(|z| *z *= r1);
        acc.axpy(dd, &a.shift(l1));
    } else {
        let lambda = 0.5 * (l1 + l2);
        let e = (lambda * h).exp();
        let shifted = a.shift(lambda);
        acc.axpy(Complex64::new(h, 0.0), &shifted);
        acc.data.iter_mut().for_each(|z| *z *= e);
    }
    acc.into_real_checked()
}

/// exp(m t) by scaling and squaring with a machine-precision truncated Taylor
/// series; total on finite input and valid for any n. This is the oracle the
/// spectral paths are tested against and the route for n > 3.
pub fn expm_series(m: &SquareMatrix, t: f64) -> SquareMatrix {
    let n = m.dim();
    let norm = m.max_row_sum_norm() * t.abs();
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let b = m.scale(t / 2f64.powi(s as i32));
    let mut sum = SquareMatrix::identity(n);
    let mut term = SquareMatrix::identity(n);
    for k in 1..=40 {
        term = term.matmul(&b).scale(1.0 / k as f64);
        sum = sum.add(&term);
        if term.max_row_sum_norm() <= 1e-18 * sum.max_row_sum_norm() {
            break;
        }
    }
    for _ in 0..s {
        sum = sum.matmul(&sum);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn eig2_rotation_generator() {
        let m = SquareMatrix::from_rows2([[0.0, 1.0], [-1.0, 0.0]]);
        let s = eigenvalues_2x2(&m).unwrap();
        let e = s.eigenvalues();
        close(e[0].re, 0.0, 1e-15);
        close(e[0].im, -1.0, 1e-15);
        close(e[1].im, 1.0, 1e-15);
    }

    #[test]
    fn eig2_diagonal() {
        let m = SquareMatrix::from_rows2([[2.0, 0.0], [0.0, 3.0]]);
        let s = eigenvalues_2x2(&m).unwrap();
        close(s.eigenvalues()[0].re, 2.0, 1e-15);
        close(s.eigenvalues()[1].re, 3.0, 1e-15);
    }

    #[test]
    fn eig2_van_der_pol_at_origin() {
        // A = [[0,1],[-1, mu]] at mu = 1/2: roots of l^2 - l/2 + 1
        let m = SquareMatrix::from_rows2([[0.0, 1.0], [-1.0, 0.5]]);
        let s = eigenvalues_2x2(&m).unwrap();
        let e = s.eigenvalues();
        close(e[0].re, 0.25, 1e-15);
        close(e[0].im.abs(), 0.968_245_836_551_854_2, 1e-15);
        assert_eq!(e[0].re, e[1].re);
        assert_eq!(e[0].im, -e[1].im);
    }

    #[test]
    fn eig2_dimension_check() {
        let m = SquareMatrix::identity(3);
        assert!(matches!(
            eigenvalues_2x2(&m),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn eig3_lorenz_diagonal_case() {
        let m = SquareMatrix::from_rows3([
            [-10.0, 10.0, 0.0],
            [9.996, -1.0, 0.0],
            [0.0, 0.0, -8.0 / 3.0],
        ]);
        // at y2 = y3 = 0 the Lorenz matrix decouples the third axis
        let s = eigenvalues_3x3(&m).unwrap();
        for lam in s.eigenvalues() {
            let res = charpoly(&m, *lam).norm();
            assert!(res <= 1e-10 * (1.0 + m.max_row_sum_norm()).powi(3));
        }
        let m = SquareMatrix::from_rows3([
            [-10.0, 0.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, -8.0 / 3.0],
        ]);
        let s = eigenvalues_3x3(&m).unwrap();
        let mut re: Vec<f64> = s.eigenvalues().iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        close(re[0], -10.0, 1e-12);
        close(re[1], -8.0 / 3.0, 1e-12);
        close(re[2], -1.0, 1e-12);
    }

    #[test]
    fn eig3_epidemic_at_threshold() {
        // a x = b makes trace, second invariant and determinant all vanish
        let (a, b) = (5e-4, 0.1);
        let x = b / a;
        let m = SquareMatrix::from_rows3([
            [0.0, -a * x, 0.0],
            [0.0, a * x - b, 0.0],
            [0.0, b, 0.0],
        ]);
        let s = eigenvalues_3x3(&m).unwrap();
        for lam in s.eigenvalues() {
            assert!(lam.norm() < 1e-10);
        }
    }

    #[test]
    fn eig3_identity() {
        let s = eigenvalues_3x3(&SquareMatrix::identity(3)).unwrap();
        for lam in s.eigenvalues() {
            close(lam.re, 1.0, 1e-12);
            close(lam.im, 0.0, 1e-12);
        }
    }

    #[test]
    fn putzer_zero_matrix() {
        for n in 1..=3 {
            let e = expm_putzer(&SquareMatrix::zeros(n), 1.7).unwrap();
            assert_eq!(e, SquareMatrix::identity(n));
        }
    }

    #[test]
    fn putzer_rotation() {
        let m = SquareMatrix::from_rows2([[0.0, 1.0], [-1.0, 0.0]]);
        let t = 0.73;
        let e = expm_putzer(&m, t).unwrap();
        close(e[(0, 0)], t.cos(), 1e-14);
        close(e[(0, 1)], t.sin(), 1e-14);
        close(e[(1, 0)], -t.sin(), 1e-14);
        close(e[(1, 1)], t.cos(), 1e-14);
    }

    #[test]
    fn putzer_agrees_with_series_on_random_3x3() {
        // deterministic LCG; enough spread to cross complex spectra
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        for _ in 0..200 {
            let m = SquareMatrix::from_fn(3, |_, _| next());
            let t = 0.1;
            let a = expm_putzer(&m, t).unwrap();
            let b = expm_series(&m, t);
            let scale = b.max_row_sum_norm().max(1.0);
            assert!(a.max_abs_diff(&b) <= 1e-12 * scale);
        }
    }

    #[test]
    fn closed_2x2_diagonal() {
        let m = SquareMatrix::from_rows2([[0.3, 0.0], [0.0, -1.2]]);
        let h = 0.4;
        let e = expm_2x2_closed(&m, h).unwrap();
        close(e[(0, 0)], (0.3f64 * h).exp(), 1e-14);
        close(e[(1, 1)], (-1.2f64 * h).exp(), 1e-14);
        close(e[(0, 1)], 0.0, 1e-14);
    }

    #[test]
    fn closed_2x2_jordan_block() {
        let l = 0.7;
        let m = SquareMatrix::from_rows2([[l, 1.0], [0.0, l]]);
        let h = 0.25;
        let e = expm_2x2_closed(&m, h).unwrap();
        let el = (l * h).exp();
        close(e[(0, 0)], el, 1e-14);
        close(e[(0, 1)], el * h, 1e-14);
        close(e[(1, 0)], 0.0, 1e-14);
        close(e[(1, 1)], el, 1e-14);
    }

    #[test]
    fn closed_2x2_duffing_vs_series() {
        // Duffing matrix at y1 = 1
        let m = SquareMatrix::from_rows2([[0.0, 1.0], [-2.0, 0.0]]);
        let e = expm_2x2_closed(&m, 0.1).unwrap();
        let s = expm_series(&m, 0.1);
        assert!(e.max_abs_diff(&s) <= 1e-13);
    }

    #[test]
    fn closed_2x2_continuous_across_confluent_switch() {
        let l = 0.3;
        let base = SquareMatrix::from_rows2([[l, 1.0], [0.0, l]]);
        let mut pert = base.clone();
        pert[(1, 1)] += 1e-12;
        let a = expm_2x2_closed(&base, 0.5).unwrap();
        let b = expm_2x2_closed(&pert, 0.5).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-8);
    }

    #[test]
    fn series_trivia() {
        assert_eq!(expm_series(&SquareMatrix::zeros(4), 2.0), SquareMatrix::identity(4));
        let one = SquareMatrix::new(1, vec![0.8]).unwrap();
        close(expm_series(&one, 2.0)[(0, 0)], (1.6f64).exp(), 1e-14);
        let nil = SquareMatrix::from_rows2([[0.0, 1.0], [0.0, 0.0]]);
        let e = expm_series(&nil, 3.7);
        close(e[(0, 1)], 3.7, 1e-15);
        close(e[(0, 0)], 1.0, 1e-15);
    }
}
