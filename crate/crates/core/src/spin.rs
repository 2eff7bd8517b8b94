//! The double cover of SO(4, C) as a pair of SL(2, C) factors, its action on
//! C^4 through the sigma identification with M(2, C), and the semidirect
//! product with the translation group.

use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::clifford::{pauli, FourVector};
use crate::error::{Error, Result};
use crate::linalg::{expm, Complex, Mat2, Mat4};
use crate::rng::Rng;

/// Determinant tolerance enforced when a group element is constructed.
/// Operations never renormalize; drift beyond this is a bug upstream.
pub const DET_TOL: f64 = 1e-9;

/// Element of the spin group, stored as its pair (A, B) of unit-determinant
/// 2x2 factors. The 4x4 Weyl form is derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinElement {
    a: Mat2,
    b: Mat2,
}

impl SpinElement {
    /// Checks |det A - 1| and |det B - 1| against [`DET_TOL`].
    pub fn new(a: Mat2, b: Mat2) -> Result<Self> {
        for m in [&a, &b] {
            let residual = (m.det() - Complex::new(1.0, 0.0)).norm();
            if residual > DET_TOL {
                return Err(Error::NotUnimodular { residual });
            }
        }
        Ok(SpinElement { a, b })
    }

    pub fn identity() -> Self {
        SpinElement {
            a: Mat2::identity(),
            b: Mat2::identity(),
        }
    }

    pub fn a(&self) -> &Mat2 {
        &self.a
    }

    pub fn b(&self) -> &Mat2 {
        &self.b
    }

    /// Componentwise product (A1 A2, B1 B2).
    pub fn mul(&self, rhs: &SpinElement) -> SpinElement {
        SpinElement {
            a: self.a * rhs.a,
            b: self.b * rhs.b,
        }
    }

    pub fn inverse(&self) -> SpinElement {
        SpinElement {
            a: self.a.inv().expect("unit determinant"),
            b: self.b.inv().expect("unit determinant"),
        }
    }

    /// Action on C^4: sigma(result) = A sigma(v) B^{-1}. Preserves eta(v, v).
    pub fn act_vector(&self, v: &FourVector) -> FourVector {
        let b_inv = self.b.inv().expect("unit determinant");
        sigma_unmap(&(self.a * sigma_map(v) * b_inv))
    }

    /// Block-diagonal 4x4 Weyl matrix diag(A, B).
    pub fn to_weyl(&self) -> Mat4 {
        let zero = Mat2::zero();
        Mat4::from_blocks(&self.a, &zero, &zero, &self.b)
    }

    /// The rotation Lambda in SO(4, C) covered by this element: the 4x4
    /// complex matrix whose columns are the action on the basis vectors.
    pub fn covering_so4(&self) -> Mat4 {
        let mut m = Mat4::zero();
        for nu in 0..4 {
            let col = self.act_vector(&FourVector::basis(nu).expect("nu in range"));
            for i in 0..4 {
                m.entries[i][nu] = col.0[i];
            }
        }
        m
    }

    pub fn dist(&self, other: &SpinElement) -> f64 {
        (self.a.dist(&other.a).powi(2) + self.b.dist(&other.b).powi(2)).sqrt()
    }
}

/// The identification of C^4 with M(2, C):
/// sigma(v) = v_0 I + sum_j v_j sigma_j, with det sigma(v) = eta(v, v).
pub fn sigma_map(v: &FourVector) -> Mat2 {
    let mut m = Mat2::identity().scale(v.0[0]);
    for j in 1..4 {
        m += pauli(j).expect("j in range").scale(v.0[j]);
    }
    m
}

/// Inverse of [`sigma_map`]: v_0 = tr(M)/2, v_j = tr(sigma_j M)/2.
pub fn sigma_unmap(m: &Mat2) -> FourVector {
    let half = Complex::new(0.5, 0.0);
    let mut v = FourVector::zero();
    v.0[0] = m.trace() * half;
    for j in 1..4 {
        v.0[j] = (pauli(j).expect("j in range") * *m).trace() * half;
    }
    v
}

/// Lie algebra generator (1/2) gamma_mu gamma_nu in the Weyl representation.
/// Block-diagonal with traceless blocks for mu != nu.
pub fn generator(mu: usize, nu: usize) -> Result<Mat4> {
    if mu > 3 || nu > 3 {
        return Err(Error::IndexOutOfRange { index: mu.max(nu) });
    }
    if mu == nu {
        return Err(Error::IndexOutOfRange { index: nu });
    }
    let gm = crate::clifford::gamma_weyl(mu)?.0;
    let gn = crate::clifford::gamma_weyl(nu)?.0;
    Ok((gm * gn).scale(Complex::new(0.5, 0.0)))
}

/// Exponential-coordinate sample: exp(sum_{mu<nu} w_munu generator(mu, nu))
/// with each coefficient uniform in the complex disk of the given radius.
/// The six coefficients are drawn in lexicographic pair order, so a fixed
/// seed reproduces the element bit for bit.
pub fn random_spin(seed: u64, scale: f64) -> SpinElement {
    random_spin_with(&mut Rng::new(seed), scale)
}

/// Same as [`random_spin`] but drawing from a caller-owned stream.
pub fn random_spin_with(rng: &mut Rng, scale: f64) -> SpinElement {
    let mut alg = Mat4::zero();
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let w = rng.complex_in_disk(scale);
            alg += generator(mu, nu).expect("indices in range").scale(w);
        }
    }
    let weyl = expm(&alg);
    SpinElement::new(weyl.block(0, 0), weyl.block(1, 1))
        .expect("exponential of traceless blocks has unit determinant")
}

/// Element (z, s) of the inhomogeneous group: translation plus spin part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IspinElement {
    pub translation: FourVector,
    pub spin: SpinElement,
}

impl IspinElement {
    pub fn new(translation: FourVector, spin: SpinElement) -> Self {
        IspinElement { translation, spin }
    }

    pub fn identity() -> Self {
        IspinElement {
            translation: FourVector::zero(),
            spin: SpinElement::identity(),
        }
    }

    pub fn from_translation(z: FourVector) -> Self {
        IspinElement::new(z, SpinElement::identity())
    }

    pub fn from_spin(s: SpinElement) -> Self {
        IspinElement::new(FourVector::zero(), s)
    }

    /// Semidirect product rule (z, s)(z', s') = (z + s.z', s s').
    pub fn mul(&self, rhs: &IspinElement) -> IspinElement {
        IspinElement {
            translation: self.translation + self.spin.act_vector(&rhs.translation),
            spin: self.spin.mul(&rhs.spin),
        }
    }

    /// (-s^{-1}.z, s^{-1}).
    pub fn inverse(&self) -> IspinElement {
        let s_inv = self.spin.inverse();
        IspinElement {
            translation: -s_inv.act_vector(&self.translation),
            spin: s_inv,
        }
    }

    pub fn dist(&self, other: &IspinElement) -> f64 {
        (self.translation.dist(&other.translation).powi(2) + self.spin.dist(&other.spin).powi(2))
            .sqrt()
    }
}

impl Serialize for SpinElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpinElement", 2)?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("b", &self.b)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SpinElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            a: Mat2,
            b: Mat2,
        }
        let raw = Raw::deserialize(deserializer)?;
        SpinElement::new(raw.a, raw.b).map_err(de::Error::custom)
    }
}

impl Serialize for IspinElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IspinElement", 2)?;
        s.serialize_field("z", &self.translation)?;
        s.serialize_field("s", &self.spin)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for IspinElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            z: FourVector,
            s: SpinElement,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(IspinElement::new(raw.z, raw.s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{gamma_weyl, minkowski, minkowski_embed};
    use crate::linalg::{mat2, I, ONE, ZERO};

    fn random_vec(rng: &mut Rng, radius: f64) -> FourVector {
        FourVector([
            rng.complex_in_disk(radius),
            rng.complex_in_disk(radius),
            rng.complex_in_disk(radius),
            rng.complex_in_disk(radius),
        ])
    }

    #[test]
    fn sigma_basics() {
        let e0 = FourVector::basis(0).unwrap();
        assert_eq!(sigma_map(&e0), Mat2::identity());
        let zm = Complex::new(0.3, 1.7);
        let v = e0.scale(zm);
        assert_eq!(sigma_map(&v), Mat2::identity().scale(zm));

        // det sigma((3,0,0,1)) = 8 = eta(v, v).
        let v = FourVector([Complex::new(3.0, 0.0), ZERO, ZERO, ONE]);
        assert_eq!(sigma_map(&v).det(), Complex::new(8.0, 0.0));
        assert_eq!(minkowski(&v, &v), Complex::new(8.0, 0.0));
    }

    #[test]
    fn sigma_round_trip() {
        assert_eq!(
            sigma_unmap(&Mat2::identity()),
            FourVector::basis(0).unwrap()
        );
        assert_eq!(
            sigma_unmap(&pauli(3).unwrap()),
            FourVector::basis(3).unwrap()
        );
        let mut rng = Rng::new(17);
        for _ in 0..1000 {
            let v = random_vec(&mut rng, 2.0);
            assert!(sigma_unmap(&sigma_map(&v)).dist(&v) <= 1e-15 * v.norm().max(1.0));
        }
    }

    #[test]
    fn det_sigma_equals_eta_randomized() {
        let mut rng = Rng::new(8);
        for _ in 0..10_000 {
            let v = random_vec(&mut rng, 2.0);
            let lhs = sigma_map(&v).det();
            let rhs = minkowski(&v, &v);
            assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
        }
    }

    #[test]
    fn construction_enforces_unit_determinant() {
        let bad = mat2(Complex::new(2.0, 0.0), ZERO, ZERO, ONE);
        assert!(matches!(
            SpinElement::new(bad, Mat2::identity()),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(SpinElement::new(Mat2::identity(), Mat2::identity()).is_ok());
    }

    #[test]
    fn identity_and_sign_flip_action() {
        let v = FourVector([Complex::new(0.4, 0.1), I, ZERO, ONE]);
        // The sigma round trip regroups sums, so identity is exact only to
        // machine precision.
        assert!(SpinElement::identity().act_vector(&v).dist(&v) <= 1e-15 * v.norm());

        // (-I, I) negates the standard vector.
        let minus = SpinElement::new(-Mat2::identity(), Mat2::identity()).unwrap();
        let zm = Complex::new(1.2, -0.4);
        let vring = FourVector::basis(0).unwrap().scale(zm);
        assert!(minus.act_vector(&vring).dist(&-vring) <= 1e-15);
    }

    #[test]
    fn massive_transport_form() {
        // (A, I) with A = z_m M^{-1} sends sigma_unmap(M) to the standard
        // vector when det M = z_m^2.
        let m = mat2(Complex::new(2.0, 0.0), ONE, ONE, ONE);
        let zm = m.det().sqrt();
        let a = m.inv().unwrap().scale(zm);
        let s = SpinElement::new(a, Mat2::identity()).unwrap();
        let moved = s.act_vector(&sigma_unmap(&m));
        let vring = FourVector::basis(0).unwrap().scale(zm);
        assert!(moved.dist(&vring) <= 1e-14);
    }

    #[test]
    fn action_preserves_eta_and_composes() {
        let mut rng = Rng::new(55);
        for _ in 0..10_000 {
            let s = random_spin_with(&mut rng, 0.8);
            let v = random_vec(&mut rng, 1.5);
            let w = s.act_vector(&v);
            let lhs = minkowski(&w, &w);
            let rhs = minkowski(&v, &v);
            assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1.0));
        }
        for _ in 0..1000 {
            let s = random_spin_with(&mut rng, 0.8);
            let t = random_spin_with(&mut rng, 0.8);
            let v = random_vec(&mut rng, 1.5);
            let one_step = s.mul(&t).act_vector(&v);
            let two_step = s.act_vector(&t.act_vector(&v));
            assert!(one_step.dist(&two_step) <= 1e-12 * one_step.norm().max(1.0));
        }
    }

    #[test]
    fn group_laws() {
        let mut rng = Rng::new(4);
        let s = random_spin_with(&mut rng, 1.0);
        let i = s.mul(&s.inverse());
        assert!(i.dist(&SpinElement::identity()) <= 1e-12);
        let t = random_spin_with(&mut rng, 1.0);
        assert!(s.mul(&SpinElement::identity()).dist(&s) == 0.0);
        assert!(SpinElement::identity().mul(&t).dist(&t) == 0.0);
    }

    #[test]
    fn weyl_form_and_conjugation_convention() {
        assert_eq!(SpinElement::identity().to_weyl(), Mat4::identity());
        let mut rng = Rng::new(77);
        for _ in 0..500 {
            let s = random_spin_with(&mut rng, 0.8);
            let weyl = s.to_weyl();
            assert!((weyl.block(0, 0).det() * weyl.block(1, 1).det() - ONE).norm() < 1e-9);
            assert!((weyl.det() - ONE).norm() < 1e-9);

            // Conjugating the embedded vector matches embedding the acted
            // vector; this pins the link between the abstract action and
            // the (A, B) form.
            let v = random_vec(&mut rng, 1.0);
            let weyl_inv = Mat4::from_blocks(
                &s.a.inv().unwrap(),
                &Mat2::zero(),
                &Mat2::zero(),
                &s.b.inv().unwrap(),
            );
            let lhs = weyl * minkowski_embed(&v).0 * weyl_inv;
            let rhs = minkowski_embed(&s.act_vector(&v)).0;
            assert!(lhs.dist(&rhs) <= 1e-10 * rhs.norm_fro().max(1.0));
        }
    }

    #[test]
    fn covering_map_properties() {
        assert_eq!(SpinElement::identity().covering_so4(), Mat4::identity());

        // The kernel element (-I, -I) covers the identity rotation exactly.
        let minus_one = SpinElement::new(-Mat2::identity(), -Mat2::identity()).unwrap();
        assert_eq!(minus_one.covering_so4(), Mat4::identity());

        let eta = Mat4::from_diag([ONE, -ONE, -ONE, -ONE]);
        let mut rng = Rng::new(21);
        for _ in 0..1000 {
            let s = random_spin_with(&mut rng, 0.8);
            let lam = s.covering_so4();
            assert!((lam.transpose() * eta * lam).dist(&eta) <= 1e-9);
            assert!((lam.det() - ONE).norm() <= 1e-9);
        }
        for _ in 0..300 {
            let s = random_spin_with(&mut rng, 0.8);
            let t = random_spin_with(&mut rng, 0.8);
            let lhs = s.mul(&t).covering_so4();
            let rhs = s.covering_so4() * t.covering_so4();
            assert!(lhs.dist(&rhs) <= 1e-9 * rhs.norm_fro().max(1.0));
        }
    }

    #[test]
    fn generators_are_block_diagonal_halves() {
        let g12 = generator(1, 2).unwrap();
        let direct =
            (gamma_weyl(1).unwrap().0 * gamma_weyl(2).unwrap().0).scale(Complex::new(0.5, 0.0));
        assert_eq!(g12, direct);
        assert!(g12.off_block_norm() == 0.0);

        // Antisymmetry under index swap for mu != nu.
        for mu in 0..4 {
            for nu in 0..4 {
                if mu == nu {
                    assert!(generator(mu, nu).is_err());
                } else {
                    let f = generator(mu, nu).unwrap();
                    let r = generator(nu, mu).unwrap();
                    assert_eq!(f, r.scale(-ONE));
                }
            }
        }
        assert!(matches!(
            generator(0, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn random_spin_determinism_and_limits() {
        let s1 = random_spin(9, 0.7);
        let s2 = random_spin(9, 0.7);
        assert_eq!(s1, s2);

        let near_identity = random_spin(3, 1e-12);
        assert!(near_identity.dist(&SpinElement::identity()) <= 1e-10);

        let mut rng = Rng::new(31);
        for _ in 0..500 {
            let s = random_spin_with(&mut rng, 1.0);
            assert!((s.a().det() - ONE).norm() <= 1e-10);
            assert!((s.b().det() - ONE).norm() <= 1e-10);
        }
    }

    #[test]
    fn ispin_group_laws() {
        let mut rng = Rng::new(13);
        // Translation subgroup adds.
        let z1 = random_vec(&mut rng, 1.0);
        let z2 = random_vec(&mut rng, 1.0);
        let t1 = IspinElement::from_translation(z1);
        let t2 = IspinElement::from_translation(z2);
        let sum = t1.mul(&t2);
        assert!(sum.translation.dist(&(z1 + z2)) <= 1e-15);
        assert!(sum.spin.dist(&SpinElement::identity()) == 0.0);

        // Conjugating a translation by a rotation rotates the translation.
        let s = random_spin_with(&mut rng, 0.9);
        let g = IspinElement::from_spin(s);
        let conj = g.mul(&IspinElement::from_translation(z2)).mul(&g.inverse());
        assert!(conj.translation.dist(&s.act_vector(&z2)) <= 1e-12);
        assert!(conj.spin.dist(&SpinElement::identity()) <= 1e-12);

        // Inverse and associativity.
        for _ in 0..1000 {
            let g = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
            let h = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
            let k = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
            assert!(g.mul(&g.inverse()).dist(&IspinElement::identity()) <= 1e-12);
            let lhs = g.mul(&h).mul(&k);
            let rhs = g.mul(&h.mul(&k));
            assert!(lhs.dist(&rhs) <= 1e-12 * (1.0 + lhs.translation.norm()));
        }
    }

    #[test]
    fn spin_json_round_trip_and_validation() {
        let s = random_spin(2, 0.5);
        let text = serde_json::to_string(&s).unwrap();
        let back: SpinElement = serde_json::from_str(&text).unwrap();
        assert!(s.dist(&back) == 0.0);

        let bad = r#"{"a": [[[2.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]],
                      "b": [[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}"#;
        assert!(serde_json::from_str::<SpinElement>(bad).is_err());

        let g = IspinElement::new(FourVector([ONE, I, ZERO, ZERO]), random_spin(6, 0.4));
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.starts_with("{\"z\":"));
        let back: IspinElement = serde_json::from_str(&text).unwrap();
        assert!(g.dist(&back) == 0.0);
    }
}
