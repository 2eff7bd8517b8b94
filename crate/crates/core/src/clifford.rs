//! Weyl representation of the complex Clifford algebra over C^4, the
//! Minkowski embedding, the volume form, and the trace functional.

use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{mat2, Complex, Mat2, Mat4, I, ONE, ZERO};

/// Element of C^4 in the standard basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector(pub [Complex; 4]);

impl FourVector {
    pub fn zero() -> Self {
        FourVector([ZERO; 4])
    }

    /// Basis vector e_mu.
    pub fn basis(mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(Error::IndexOutOfRange { index: mu });
        }
        let mut v = Self::zero();
        v.0[mu] = ONE;
        Ok(v)
    }

    pub fn from_real(p: [f64; 4]) -> Self {
        FourVector([
            Complex::new(p[0], 0.0),
            Complex::new(p[1], 0.0),
            Complex::new(p[2], 0.0),
            Complex::new(p[3], 0.0),
        ])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn is_real(&self, tol: f64) -> bool {
        let scale = self.norm().max(1.0);
        self.0.iter().all(|z| z.im.abs() <= tol * scale)
    }

    pub fn scale(&self, z: Complex) -> Self {
        FourVector([self.0[0] * z, self.0[1] * z, self.0[2] * z, self.0[3] * z])
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FourVector([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Serialize for FourVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for z in &self.0 {
            seq.serialize_element(&[z.re, z.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for FourVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<[f64; 2]> = Vec::deserialize(deserializer)?;
        if raw.len() != 4 {
            return Err(de::Error::custom("expected 4 components"));
        }
        let mut v = FourVector::zero();
        for (i, &[re, im]) in raw.iter().enumerate() {
            v.0[i] = Complex::new(re, im);
        }
        Ok(v)
    }
}

/// Which symmetric bilinear form C^4 carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    /// diag(1, -1, -1, -1)
    Minkowski,
    /// diag(1, 1, 1, 1)
    Euclidean,
}

impl MetricKind {
    pub fn signature(&self) -> [f64; 4] {
        match self {
            MetricKind::Minkowski => [1.0, -1.0, -1.0, -1.0],
            MetricKind::Euclidean => [1.0, 1.0, 1.0, 1.0],
        }
    }
}

/// Complex-bilinear pairing sum_mu g_mu v_mu w_mu. No conjugation.
pub fn bilinear(kind: MetricKind, v: &FourVector, w: &FourVector) -> Complex {
    let g = kind.signature();
    (0..4).map(|mu| v.0[mu] * w.0[mu] * g[mu]).sum()
}

/// eta(v, w), the pairing used everywhere downstream.
pub fn minkowski(v: &FourVector, w: &FourVector) -> Complex {
    bilinear(MetricKind::Minkowski, v, w)
}

/// Image of the algebra under the Weyl representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliffordElement(pub Mat4);

impl CliffordElement {
    pub fn identity() -> Self {
        CliffordElement(Mat4::identity())
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn dist(&self, other: &Self) -> f64 {
        self.0.dist(&other.0)
    }
}

impl Mul for CliffordElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        CliffordElement(self.0 * rhs.0)
    }
}

impl Add for CliffordElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        CliffordElement(self.0 + rhs.0)
    }
}

impl Sub for CliffordElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        CliffordElement(self.0 - rhs.0)
    }
}

impl Neg for CliffordElement {
    type Output = Self;
    fn neg(self) -> Self {
        CliffordElement(-self.0)
    }
}

/// Pauli matrices sigma_1, sigma_2, sigma_3 in the convention used by the
/// sigma identification of C^4 with M(2, C):
/// sigma_1 = [[0, -i], [i, 0]], sigma_2 = [[0, 1], [1, 0]],
/// sigma_3 = [[1, 0], [0, -1]].
pub fn pauli(j: usize) -> Result<Mat2> {
    match j {
        1 => Ok(mat2(ZERO, -I, I, ZERO)),
        2 => Ok(mat2(ZERO, ONE, ONE, ZERO)),
        3 => Ok(mat2(ONE, ZERO, ZERO, -ONE)),
        _ => Err(Error::IndexOutOfRange { index: j }),
    }
}

/// Weyl gamma matrix: gamma_0 is the block anti-diagonal of identities,
/// gamma_j has blocks [[0, sigma_j], [-sigma_j, 0]].
pub fn gamma_weyl(mu: usize) -> Result<CliffordElement> {
    let zero = Mat2::zero();
    let m = match mu {
        0 => Mat4::from_blocks(&zero, &Mat2::identity(), &Mat2::identity(), &zero),
        1..=3 => {
            let s = pauli(mu)?;
            Mat4::from_blocks(&zero, &s, &(-s), &zero)
        }
        _ => return Err(Error::IndexOutOfRange { index: mu }),
    };
    Ok(CliffordElement(m))
}

/// Minkowski embedding gamma(v) = sum_mu v_mu gamma_mu, complex-linear in v.
/// Satisfies {gamma(v), gamma(w)} = 2 eta(v, w) I.
pub fn minkowski_embed(v: &FourVector) -> CliffordElement {
    let mut m = Mat4::zero();
    for mu in 0..4 {
        m += gamma_weyl(mu).expect("mu in range").0.scale(v.0[mu]);
    }
    CliffordElement(m)
}

/// The natural (Euclidean) embedding, expressed through the Minkowski one:
/// v maps to gamma((v_0, -i v_1, -i v_2, -i v_3)), so that the square of an
/// embedded vector is delta(v, v) I.
pub fn embed_natural(v: &FourVector) -> CliffordElement {
    let twisted = FourVector([v.0[0], -I * v.0[1], -I * v.0[2], -I * v.0[3]]);
    minkowski_embed(&twisted)
}

/// X Y + Y X.
pub fn anticommutator(x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
    CliffordElement(x.0 * y.0 + y.0 * x.0)
}

/// The volume form Omega = -i gamma_0 gamma_1 gamma_2 gamma_3, computed as a
/// matrix product rather than hardwired, so its block sign is derived.
pub fn volume_form() -> CliffordElement {
    let g: Vec<Mat4> = (0..4).map(|mu| gamma_weyl(mu).unwrap().0).collect();
    CliffordElement((g[0] * g[1] * g[2] * g[3]).scale(-I))
}

/// Trace functional on the algebra; in the Weyl representation it is the
/// matrix trace, normalized so that trace(identity) = 4.
pub fn clifford_trace(x: &CliffordElement) -> Complex {
    x.0.trace()
}
