//! Orbit classification in C^4 identified with M(2, C), constructive
//! transporters onto standard representatives, little-group elements for the
//! massive and null families, and characters of the translation group.

use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::clifford::{clifford_trace, minkowski, minkowski_embed, FourVector};
use crate::error::{Error, Result};
use crate::linalg::{mat2, principal_sqrt, Complex, Mat2, I, ONE, ZERO};
use crate::spin::SpinElement;

/// Default threshold for [`classify`].
pub const CLASSIFY_EPS: f64 = 1e-9;

/// Which orbit a point of M(2, C) lies on. The determinant is a complete
/// invariant away from zero; the zero matrix is its own orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitClass {
    ZeroPoint,
    NullCone,
    Mass(Complex),
}

impl OrbitClass {
    /// The standard representative of the orbit: 0, e1 (x) e1, or z_m I.
    pub fn representative(&self) -> Result<Mat2> {
        match self {
            OrbitClass::ZeroPoint => Ok(Mat2::zero()),
            OrbitClass::NullCone => Ok(null_representative()),
            OrbitClass::Mass(z2) => mass_representative(*z2),
        }
    }
}

impl Serialize for OrbitClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OrbitClass::ZeroPoint => {
                let mut s = serializer.serialize_struct("OrbitClass", 1)?;
                s.serialize_field("tag", "zero")?;
                s.end()
            }
            OrbitClass::NullCone => {
                let mut s = serializer.serialize_struct("OrbitClass", 1)?;
                s.serialize_field("tag", "null")?;
                s.end()
            }
            OrbitClass::Mass(z2) => {
                let mut s = serializer.serialize_struct("OrbitClass", 2)?;
                s.serialize_field("tag", "mass")?;
                s.serialize_field("z2", &[z2.re, z2.im])?;
                s.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for OrbitClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            tag: String,
            #[serde(default)]
            z2: Option<[f64; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        match raw.tag.as_str() {
            "zero" => Ok(OrbitClass::ZeroPoint),
            "null" => Ok(OrbitClass::NullCone),
            "mass" => {
                let z2 = raw
                    .z2
                    .ok_or_else(|| de::Error::custom("mass class needs z2"))?;
                Ok(OrbitClass::Mass(Complex::new(z2[0], z2[1])))
            }
            other => Err(de::Error::custom(format!("unknown orbit tag {other:?}"))),
        }
    }
}

/// Unitary character of the translation group, parameterized by w in C^4:
/// it evaluates to exp(i Re eta(w, z)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Character {
    pub w: FourVector,
}

impl Character {
    pub fn new(w: FourVector) -> Self {
        Character { w }
    }

    /// exp(i Re eta(w, z)), always unit modulus.
    pub fn eval(&self, z: &FourVector) -> Complex {
        let phase = minkowski(&self.w, z).re;
        Complex::new(phase.cos(), phase.sin())
    }

    /// Same value computed through the Clifford trace pairing
    /// exp(i Re (1/4) tr(gamma(w) gamma(z))). Used as a cross-check.
    pub fn eval_via_trace(&self, z: &FourVector) -> Complex {
        let prod = minkowski_embed(&self.w) * minkowski_embed(z);
        let phase = (clifford_trace(&prod) * Complex::new(0.25, 0.0)).re;
        Complex::new(phase.cos(), phase.sin())
    }
}

/// The transformed character s . chi, i.e. the character with parameter
/// s . w; it satisfies (s . chi)(z) = chi(s^{-1} . z).
pub fn char_pullback(s: &SpinElement, chi: &Character) -> Character {
    Character {
        w: s.act_vector(&chi.w),
    }
}

/// Orbit classification by Frobenius norm and determinant:
/// zero point if ||M|| <= eps, null cone if |det M| <= eps max(1, ||M||^2),
/// otherwise the massive orbit carrying det M.
pub fn classify(m: &Mat2, eps: f64) -> OrbitClass {
    let norm = m.norm_fro();
    if norm <= eps {
        return OrbitClass::ZeroPoint;
    }
    let det = m.det();
    if det.norm() <= eps * (norm * norm).max(1.0) {
        return OrbitClass::NullCone;
    }
    OrbitClass::Mass(det)
}

/// z_m I with z_m the principal square root of the squared mass.
pub fn mass_representative(z_squared: Complex) -> Result<Mat2> {
    if z_squared == ZERO {
        return Err(Error::ZeroMass);
    }
    Ok(Mat2::identity().scale(principal_sqrt(z_squared)))
}

/// The rank-one representative e1 (x) e1 of the null cone.
pub fn null_representative() -> Mat2 {
    mat2(ONE, ZERO, ZERO, ZERO)
}

/// A group element g with g . representative = M, where the representative
/// is the standard point of M's orbit. Fails only on the zero-point orbit,
/// which is fixed by every group element.
pub fn transporter(m: &Mat2) -> Result<SpinElement> {
    match classify(m, CLASSIFY_EPS) {
        OrbitClass::ZeroPoint => Err(Error::ZeroPointOrbit),
        OrbitClass::Mass(z2) => {
            let z_m = principal_sqrt(z2);
            SpinElement::new(m.scale(ONE / z_m), Mat2::identity())
        }
        OrbitClass::NullCone => transport_null(m),
    }
}

/// For rank-one M = n1 (x) n2, builds S(n_j) = det(T(n_j))^{-1/2} T(n_j)
/// with T(n) = e1 (x) n + e2 (x) n_perp, then corrects the residual scale
/// with a diagonal little-group factor so the transport is exact. When a
/// factor is isotropic (n_1^2 + n_2^2 = 0, where det T vanishes and this
/// construction breaks down) the element is completed with conjugate
/// entries instead, which works for every nonzero factor.
fn transport_null(m: &Mat2) -> Result<SpinElement> {
    let col0 = [m[(0, 0)], m[(1, 0)]];
    let col1 = [m[(0, 1)], m[(1, 1)]];
    let n0 = col0[0].norm_sqr() + col0[1].norm_sqr();
    let n1 = col1[0].norm_sqr() + col1[1].norm_sqr();
    let (lead, lead_sq) = if n0 >= n1 { (col0, n0) } else { (col1, n1) };
    if lead_sq == 0.0 {
        return Err(Error::DegenerateFactorization);
    }

    // Least-squares row factor: n2[k] = <lead, M[:,k]> / <lead, lead>.
    let proj = |col: [Complex; 2]| (lead[0].conj() * col[0] + lead[1].conj() * col[1]) / lead_sq;
    let row = [proj(col0), proj(col1)];
    let row_sq = row[0].norm_sqr() + row[1].norm_sqr();
    if row_sq == 0.0 {
        return Err(Error::DegenerateFactorization);
    }

    let isotropic = |n: [Complex; 2], sq: f64| (n[0] * n[0] + n[1] * n[1]).norm() <= 1e-6 * sq;
    if isotropic(lead, lead_sq) || isotropic(row, row_sq) {
        // A(n) e1 = n with det A(n) = 1, valid for any nonzero n.
        let complete =
            |n: [Complex; 2], sq: f64| mat2(n[0], -n[1].conj() / sq, n[1], n[0].conj() / sq);
        let a = complete(lead, lead_sq);
        let b = complete(row, row_sq).transpose().inv()?;
        return SpinElement::new(a, b);
    }

    let build = |n: [Complex; 2]| -> (Mat2, Complex) {
        let r = principal_sqrt(n[0] * n[0] + n[1] * n[1]);
        let t = mat2(n[0], n[1], -n[1], n[0]);
        (t.scale(ONE / r), r)
    };

    let (s1, r1) = build(lead);
    let (s2, r2) = build(row);
    let kappa = r1 * r2;
    let a = s1.inv()? * Mat2::from_diag([kappa, ONE / kappa]);
    let b = s2.transpose();
    SpinElement::new(a, b)
}

/// True when s moves v by no more than tol * max(1, ||v||).
pub fn is_little_group_member(s: &SpinElement, v: &FourVector, tol: f64) -> bool {
    s.act_vector(v).dist(v) <= tol * v.norm().max(1.0)
}

/// Coordinates (z1, z2, z) on the little group of the null representative:
/// (z1, z2) span the two-complex-dimensional translation part, z the
/// rotation part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullLittleParams {
    pub z1: Complex,
    pub z2: Complex,
    pub z: Complex,
}

impl NullLittleParams {
    pub fn new(z1: Complex, z2: Complex, z: Complex) -> Self {
        NullLittleParams { z1, z2, z }
    }
}

/// The little-group element s0(z1, z2, z) = R0(z) T0(z1, z2) fixing
/// e1 (x) e1, where R0(z) = exp(z generator(1, 2)) has blocks
/// diag(e^{iz/2}, e^{-iz/2}) and T0 is the two-parameter shear pair.
/// With this parameterization the product law reads
///
///   s0(z1, z2, z) s0(z1', z2', z')
///     = s0(z1' + e^{-iz'} z1, z2' + e^{iz'} z2, z + z').
pub fn null_little_element(p: &NullLittleParams) -> SpinElement {
    let x = (I * p.z * Complex::new(0.5, 0.0)).exp();
    let a = mat2(x, x * p.z1, ZERO, ONE / x);
    let b = mat2(x, ZERO, p.z2 / x, ONE / x);
    SpinElement::new(a, b).expect("triangular factors with reciprocal diagonal")
}

/// The combined parameters of the product law above.
pub fn null_little_compose(p: &NullLittleParams, q: &NullLittleParams) -> NullLittleParams {
    NullLittleParams {
        z1: q.z1 + (-I * q.z).exp() * p.z1,
        z2: q.z2 + (I * q.z).exp() * p.z2,
        z: p.z + q.z,
    }
}
