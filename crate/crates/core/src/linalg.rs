//! Fixed-size complex linear algebra for 2x2 and 4x4 matrices.
//!
//! Everything downstream works over `Mat2` and `Mat4`; there is deliberately
//! no general n x n machinery here. All complex square roots in the crate
//! route through [`principal_sqrt`] so that branch choices are made exactly
//! once.

use num_complex::Complex64;
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Library-wide default tolerance for relative comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Dense square matrix with statically known size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat<const N: usize> {
    pub entries: [[Complex; N]; N],
}

pub type Mat2 = Mat<2>;
pub type Mat4 = Mat<4>;

/// Row-major 2x2 constructor.
pub fn mat2(a: Complex, b: Complex, c: Complex, d: Complex) -> Mat2 {
    Mat {
        entries: [[a, b], [c, d]],
    }
}

impl<const N: usize> Mat<N> {
    pub fn new(entries: [[Complex; N]; N]) -> Self {
        Mat { entries }
    }

    pub fn zero() -> Self {
        Mat {
            entries: [[ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.entries[i][i] = ONE;
        }
        m
    }

    pub fn from_diag(d: [Complex; N]) -> Self {
        let mut m = Self::zero();
        for (i, z) in d.into_iter().enumerate() {
            m.entries[i][i] = z;
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[j][i] = self.entries[i][j];
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[j][i] = self.entries[i][j].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    pub fn scale(&self, z: Complex) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e *= z;
            }
        }
        m
    }

    pub fn norm_fro(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius distance to another matrix.
    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).norm_fro()
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl<const N: usize> Index<(usize, usize)> for Mat<N> {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.entries[r][c]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Mat<N> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.entries[r][c]
    }
}

impl<const N: usize> Add for Mat<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl<const N: usize> AddAssign for Mat<N> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const N: usize> Sub for Mat<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl<const N: usize> Neg for Mat<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl<const N: usize> Mul for Mat<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.entries[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<Complex> for Mat<N> {
    type Output = Self;
    fn mul(self, z: Complex) -> Self {
        self.scale(z)
    }
}

impl Mat2 {
    /// ad - bc.
    pub fn det(&self) -> Complex {
        self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)]
    }

    /// Inverse via the adjugate. Fails when |det| is below the scale-aware
    /// singularity threshold 1e-12 * max(1, ||M||_F).
    pub fn inv(&self) -> Result<Mat2> {
        let det = self.det();
        let floor = 1e-12 * self.norm_fro().max(1.0);
        if det.norm() <= floor {
            return Err(Error::SingularMatrix {
                abs_det: det.norm(),
            });
        }
        let inv_det = ONE / det;
        Ok(mat2(
            self[(1, 1)] * inv_det,
            -self[(0, 1)] * inv_det,
            -self[(1, 0)] * inv_det,
            self[(0, 0)] * inv_det,
        ))
    }

    /// True when ||M - M*|| <= tol * max(1, ||M||).
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.dist(&self.adjoint()) <= tol * self.norm_fro().max(1.0)
    }
}

impl Mat4 {
    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Complex {
        let mut det = ZERO;
        for j in 0..4 {
            let cols: [usize; 3] = match j {
                0 => [1, 2, 3],
                1 => [0, 2, 3],
                2 => [0, 1, 3],
                _ => [0, 1, 2],
            };
            let mut m3 = [[ZERO; 3]; 3];
            for (ri, r) in (1..4).enumerate() {
                for (ci, &c) in cols.iter().enumerate() {
                    m3[ri][ci] = self.entries[r][c];
                }
            }
            let d3 = m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1])
                - m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0])
                + m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0]);
            let sign = if j % 2 == 0 { ONE } else { -ONE };
            det += sign * self.entries[0][j] * d3;
        }
        det
    }

    /// Assemble from 2x2 blocks [[a, b], [c, d]].
    pub fn from_blocks(a: &Mat2, b: &Mat2, c: &Mat2, d: &Mat2) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = a.entries[i][j];
                m.entries[i][j + 2] = b.entries[i][j];
                m.entries[i + 2][j] = c.entries[i][j];
                m.entries[i + 2][j + 2] = d.entries[i][j];
            }
        }
        m
    }

    /// Extract the 2x2 block at block-row `r`, block-column `c` (each 0 or 1).
    pub fn block(&self, r: usize, c: usize) -> Mat2 {
        let mut m = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.entries[i][j] = self.entries[2 * r + i][2 * c + j];
            }
        }
        m
    }

    /// Frobenius norm of the off-diagonal blocks.
    pub fn off_block_norm(&self) -> f64 {
        (self.block(0, 1).norm_fro().powi(2) + self.block(1, 0).norm_fro().powi(2)).sqrt()
    }
}

/// Principal complex square root: non-negative real part, branch cut along
/// the negative real axis with the value taken from above, so that
/// `principal_sqrt(-r) = i*sqrt(r)` for r > 0 (including `im == -0.0`).
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            return Complex::new(z.re.sqrt(), 0.0);
        }
        return Complex::new(0.0, (-z.re).sqrt());
    }
    z.sqrt()
}

/// Square root of a Hermitian positive definite 2x2 matrix via the closed
/// form S = (P + sqrt(det P) I) / sqrt(tr P + 2 sqrt(det P)).
pub fn sqrt_posdef2(p: &Mat2) -> Result<Mat2> {
    if !p.is_hermitian(DEFAULT_TOL) {
        return Err(Error::NotPositiveDefinite);
    }
    let det = p.det().re;
    let tr = p.trace().re;
    if det <= 0.0 || tr <= 0.0 {
        return Err(Error::NotPositiveDefinite);
    }
    let root_det = det.sqrt();
    let denom = (tr + 2.0 * root_det).sqrt();
    let shift = Mat2::identity().scale(Complex::new(root_det, 0.0));
    Ok((*p + shift).scale(Complex::new(1.0 / denom, 0.0)))
}

/// Left polar decomposition M = P U with P = sqrt(M M*) Hermitian positive
/// definite and U unitary. For input in SL(2, C) both factors have unit
/// determinant.
pub fn polar2(m: &Mat2) -> Result<(Mat2, Mat2)> {
    let h = *m * m.adjoint();
    let p = sqrt_posdef2(&h)?;
    let u = p.inv()? * *m;
    Ok((p, u))
}

/// Matrix exponential by scaling and squaring with a Taylor core. The input
/// is halved until its Frobenius norm is at most 1/2, the series is summed
/// to machine precision, and the result is squared back up.
pub fn expm<const N: usize>(m: &Mat<N>) -> Mat<N> {
    let norm = m.norm_fro();
    let squarings = if norm <= 0.5 {
        0
    } else {
        (norm / 0.5).log2().ceil() as i32
    };
    let scaled = m.scale(Complex::new(0.5f64.powi(squarings), 0.0));

    let mut sum = Mat::<N>::identity();
    let mut term = Mat::<N>::identity();
    for k in 1..=32u32 {
        term = (term * scaled).scale(Complex::new(1.0 / k as f64, 0.0));
        sum += term;
        if term.norm_fro() <= 1e-20 * sum.norm_fro().max(1.0) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

// JSON shape: a matrix is a row-major array of rows, each entry a [re, im]
// pair. Finite doubles round-trip bit exactly through serde_json.

impl<const N: usize> Serialize for Mat<N> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(N))?;
        for row in &self.entries {
            let encoded: Vec<[f64; 2]> = row.iter().map(|z| [z.re, z.im]).collect();
            rows.serialize_element(&encoded)?;
        }
        rows.end()
    }
}

impl<'de, const N: usize> Deserialize<'de> for Mat<N> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<[f64; 2]>> = Vec::deserialize(deserializer)?;
        if rows.len() != N || rows.iter().any(|r| r.len() != N) {
            return Err(de::Error::custom(format!("expected a {N}x{N} matrix")));
        }
        let mut m = Mat::<N>::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, &[re, im]) in row.iter().enumerate() {
                m.entries[i][j] = Complex::new(re, im);
            }
        }
        Ok(m)
    }
}
