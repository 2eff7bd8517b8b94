//! Embeddings of the non-zero-mass orbit back into the group: the three
//! complexified standard-boost constructions, the hemisphere variant, the
//! classical Wigner boost on the real mass shell, and the directional-limit
//! analysis of the square-root discontinuity at the antipode.

use crate::clifford::{minkowski, volume_form, FourVector};
use crate::error::{Error, Result};
use crate::linalg::{polar2, principal_sqrt, sqrt_posdef2, Complex, Mat2, DEFAULT_TOL, I, ONE};
use crate::spin::{sigma_map, SpinElement};

/// A point of the orbit of the standard vector (z_m, 0, 0, 0), together with
/// the complex mass. The stored z_m is always the principal square root of
/// eta(v, v), so every square-root formula downstream is unambiguous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassOrbitPoint {
    v: FourVector,
    z_m: Complex,
}

impl MassOrbitPoint {
    pub fn new(v: FourVector, z_m: Complex) -> Result<Self> {
        Self::new_with_tol(v, z_m, DEFAULT_TOL)
    }

    pub fn new_with_tol(v: FourVector, z_m: Complex, tol: f64) -> Result<Self> {
        if z_m.norm() == 0.0 {
            return Err(Error::ZeroMass);
        }
        let principal = principal_sqrt(z_m * z_m);
        if (principal - z_m).norm() > tol * z_m.norm() {
            return Err(Error::OffOrbit {
                residual: (principal - z_m).norm(),
            });
        }
        let residual = (minkowski(&v, &v) - z_m * z_m).norm();
        if residual > tol * (v.norm() * v.norm()).max(1.0) {
            return Err(Error::OffOrbit { residual });
        }
        Ok(MassOrbitPoint { v, z_m })
    }

    /// The standard vector v_ring = (z_m, 0, 0, 0).
    pub fn standard(z_m: Complex) -> Result<Self> {
        Self::new(FourVector::basis(0)?.scale(z_m), z_m)
    }

    /// The point s . v, still on the same orbit.
    pub fn acted_on_by(&self, s: &SpinElement) -> Result<Self> {
        Self::new_with_tol(s.act_vector(&self.v), self.z_m, 1e-6)
    }

    pub fn v(&self) -> &FourVector {
        &self.v
    }

    pub fn z_m(&self) -> Complex {
        self.z_m
    }

    /// sigma(v) / z_m, the unit-determinant matrix identified with the point.
    pub fn normalized_sigma(&self) -> Mat2 {
        sigma_map(&self.v).scale(ONE / self.z_m)
    }
}

/// Which embedding to use. The string forms accepted on the command line are
/// beta1, beta2, beta3, beta3p, and wigner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostMethod {
    Beta1,
    Beta2,
    Beta3,
    Beta3Prime,
    Wigner,
}

impl std::str::FromStr for BoostMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "beta1" => Ok(BoostMethod::Beta1),
            "beta2" => Ok(BoostMethod::Beta2),
            "beta3" => Ok(BoostMethod::Beta3),
            "beta3p" => Ok(BoostMethod::Beta3Prime),
            "wigner" => Ok(BoostMethod::Wigner),
            other => Err(format!(
                "unknown boost method {other:?} (expected beta1|beta2|beta3|beta3p|wigner)"
            )),
        }
    }
}

impl std::fmt::Display for BoostMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            BoostMethod::Beta1 => "beta1",
            BoostMethod::Beta2 => "beta2",
            BoostMethod::Beta3 => "beta3",
            BoostMethod::Beta3Prime => "beta3p",
            BoostMethod::Wigner => "wigner",
        };
        f.write_str(name)
    }
}

/// First embedding: (I, (sigma(v)/z_m)^{-1}). Smooth, but does not restrict
/// to the real form on the real mass shell.
pub fn beta1(p: &MassOrbitPoint) -> Result<SpinElement> {
    let m = p.normalized_sigma();
    SpinElement::new(Mat2::identity(), m.inv()?)
}

/// Second embedding, through the polar decomposition sigma(v)/z_m = P U:
/// (sqrt(P), U^{-1} sqrt(P)^{-1}). Continuous, restricts to the Wigner boost.
pub fn beta2(p: &MassOrbitPoint) -> Result<SpinElement> {
    let m = p.normalized_sigma();
    let (pos, uni) = polar2(&m)?;
    let root = sqrt_posdef2(&pos)?;
    let b = uni.inv()? * root.inv()?;
    SpinElement::new(root, b)
}

/// The square root (z_m I + sigma(v)) / sqrt(2 z_m (z_m + v_0)) of
/// sigma(v)/z_m. Undefined on the cut z_m + v_0 = 0, which contains the
/// antipode of the standard vector; there the error is `AntipodalPoint`.
pub fn j_plus(p: &MassOrbitPoint) -> Result<Mat2> {
    let z_m = p.z_m();
    let v0 = p.v().0[0];
    if (z_m + v0).norm() <= DEFAULT_TOL * z_m.norm() {
        return Err(Error::AntipodalPoint);
    }
    let denom = principal_sqrt(Complex::new(2.0, 0.0) * z_m * (z_m + v0));
    let num = Mat2::identity().scale(z_m) + sigma_map(p.v());
    Ok(num.scale(ONE / denom))
}

/// The spin pair carried by the volume form: its Weyl matrix is
/// block-diagonal, so the pair is read off the computed blocks.
pub fn omega_spin() -> SpinElement {
    let omega = volume_form().0;
    SpinElement::new(omega.block(0, 0), omega.block(1, 1))
        .expect("volume form blocks are signed identities")
}

/// Third embedding: (j_plus(v), j_plus(v)^{-1}) away from the antipode and
/// the volume-form pair exactly at it. Discontinuous at the antipode, where
/// the square root has direction-dependent limits; points elsewhere on the
/// cut z_m + v_0 = 0 still propagate `AntipodalPoint`.
pub fn beta3(p: &MassOrbitPoint) -> Result<SpinElement> {
    let vring = FourVector::basis(0)?.scale(p.z_m());
    if p.v().dist(&-vring) <= DEFAULT_TOL * vring.norm() {
        return Ok(omega_spin());
    }
    let j = j_plus(p)?;
    SpinElement::new(j, j.inv()?)
}

/// Hemisphere variant: the plus square root where Re(v_0 / z_m) >= 0 and
/// Omega times the plus square root of -v on the other hemisphere. Total on
/// the orbit: neither branch meets the singular cut of its square root.
pub fn beta3_prime(p: &MassOrbitPoint) -> Result<SpinElement> {
    let ratio = p.v().0[0] / p.z_m();
    if ratio.re >= 0.0 {
        let j = j_plus(p)?;
        SpinElement::new(j, j.inv()?)
    } else {
        let mirrored = MassOrbitPoint::new_with_tol(-*p.v(), p.z_m(), 1e-6)?;
        let j = j_plus(&mirrored)?;
        Ok(omega_spin().mul(&SpinElement::new(j, j.inv()?)?))
    }
}

/// The classical standard boost on the real forward mass shell:
/// (sqrt(sigma(p)/m), sqrt(sigma(p)/m)^{-1}) with the positive-definite
/// square root. The first component is Hermitian and the second is its
/// conjugate-inverse-transpose, so the pair lies in the real form.
pub fn beta_wigner(p: [f64; 4], m: f64) -> Result<SpinElement> {
    if m <= 0.0 || p[0] <= 0.0 {
        return Err(Error::NonPositiveEnergy);
    }
    let v = FourVector::from_real(p);
    let eta = minkowski(&v, &v).re;
    let residual = (eta - m * m).abs();
    if residual > DEFAULT_TOL * (v.norm() * v.norm()).max(1.0) {
        return Err(Error::OffShell { residual });
    }
    let root = sqrt_posdef2(&sigma_map(&v).scale(Complex::new(1.0 / m, 0.0)))?;
    SpinElement::new(root, root.inv()?)
}

/// Dispatch a method name to its embedding. The Wigner method additionally
/// requires a real forward mass-shell point.
pub fn boost(method: BoostMethod, p: &MassOrbitPoint) -> Result<SpinElement> {
    match method {
        BoostMethod::Beta1 => beta1(p),
        BoostMethod::Beta2 => beta2(p),
        BoostMethod::Beta3 => beta3(p),
        BoostMethod::Beta3Prime => beta3_prime(p),
        BoostMethod::Wigner => {
            let zm = p.z_m();
            if !p.v().is_real(DEFAULT_TOL) || zm.im.abs() > DEFAULT_TOL * zm.norm() {
                return Err(Error::OffShell {
                    residual: p
                        .v()
                        .0
                        .iter()
                        .map(|c| c.im.abs())
                        .fold(zm.im.abs(), f64::max),
                });
            }
            let v = p.v().0.map(|c| c.re);
            beta_wigner(v, zm.re)
        }
    }
}

/// The curve u(theta) with sigma(u(theta)) = (cos(theta) I +
/// i sin(theta) u_hat . sigma) sigma(v_ring); it runs from the standard
/// vector at theta = 0 toward its antipode as theta -> pi, staying on the
/// orbit for every direction u_hat on the two-sphere.
pub fn antipodal_curve(u_hat: [f64; 3], theta: f64, z_m: Complex) -> Result<MassOrbitPoint> {
    let norm = (u_hat[0] * u_hat[0] + u_hat[1] * u_hat[1] + u_hat[2] * u_hat[2]).sqrt();
    if norm == 0.0 {
        return Err(Error::InvalidDomain {
            reason: "direction vector must be nonzero".into(),
        });
    }
    let (sin, cos) = theta.sin_cos();
    let mut v = FourVector::zero();
    v.0[0] = z_m * cos;
    for (j, &u) in u_hat.iter().enumerate() {
        v.0[j + 1] = I * z_m * sin * (u / norm);
    }
    MassOrbitPoint::new(v, z_m)
}

/// j_plus evaluated on the antipodal curve near theta = pi. The limit as
/// theta -> pi is cos(theta/2) I + i sin(theta/2) u_hat . sigma evaluated
/// along the way, hence depends on the direction u_hat.
pub fn directional_limit(u_hat: [f64; 3], z_m: Complex, theta_eval: f64) -> Result<Mat2> {
    j_plus(&antipodal_curve(u_hat, theta_eval, z_m)?)
}

/// The closed form the directional limit converges to (for principal z_m):
/// cos(theta/2) I + i sin(theta/2) u_hat . sigma.
pub fn directional_limit_closed_form(u_hat: [f64; 3], theta: f64) -> Mat2 {
    let (sin, cos) = (theta / 2.0).sin_cos();
    let mut m = Mat2::identity().scale(Complex::new(cos, 0.0));
    for (j, &u) in u_hat.iter().enumerate() {
        m += crate::clifford::pauli(j + 1)
            .expect("index in range")
            .scale(I * Complex::new(sin * u, 0.0));
    }
    m
}

/// Flip the overall sign of `candidate` if that brings it closer to
/// `reference`. The pair (-A, -B) induces the same rotation as (A, B), so
/// elementwise comparisons of embeddings are only meaningful after this.
pub fn align_sign(reference: &SpinElement, candidate: &SpinElement) -> SpinElement {
    let direct = reference.a().dist(candidate.a());
    let flipped = reference.a().dist(&-*candidate.a());
    if flipped < direct {
        SpinElement::new(-*candidate.a(), -*candidate.b()).expect("sign flip keeps determinant")
    } else {
        *candidate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ZERO;
    use crate::rng::Rng;
    use crate::spin::random_spin_with;

    const MASSES: [Complex; 3] = [
        Complex::new(1.0, 0.0),
        Complex::new(0.0, 1.0),
        // 2 e^{i pi / 3}
        Complex::new(1.0, 1.732_050_807_568_877_2),
    ];

    // Exponential coordinates at moderate scale stay in the upper
    // hemisphere Re(v_0 / z_m) > 0; composing with the flip (-I, I) on half
    // the draws covers the whole orbit.
    fn random_orbit_point(rng: &mut Rng, z_m: Complex) -> MassOrbitPoint {
        let mut s = random_spin_with(rng, 0.8);
        if rng.next_u64() & 1 == 1 {
            let flip = SpinElement::new(-Mat2::identity(), Mat2::identity()).unwrap();
            s = flip.mul(&s);
        }
        MassOrbitPoint::standard(z_m)
            .unwrap()
            .acted_on_by(&s)
            .unwrap()
    }

    fn random_shell_momentum(rng: &mut Rng, m: f64, min_rapidity: f64) -> [f64; 4] {
        let u = rng.unit_vec3();
        let r = rng.uniform_in(min_rapidity, 2.0);
        [
            m * r.cosh(),
            m * r.sinh() * u[0],
            m * r.sinh() * u[1],
            m * r.sinh() * u[2],
        ]
    }

    #[test]
    fn orbit_point_validation() {
        let zm = Complex::new(1.0, 0.5);
        assert!(MassOrbitPoint::standard(zm).is_ok());
        // Non-principal mass is rejected.
        assert!(matches!(
            MassOrbitPoint::standard(-zm),
            Err(Error::OffOrbit { .. })
        ));
        assert!(matches!(
            MassOrbitPoint::standard(ZERO),
            Err(Error::ZeroMass)
        ));
        // Off-orbit vector is rejected.
        let v = FourVector([zm, ONE, ZERO, ZERO]);
        assert!(matches!(
            MassOrbitPoint::new(v, zm),
            Err(Error::OffOrbit { .. })
        ));
    }

    #[test]
    fn embeddings_fix_standard_vector() {
        for zm in MASSES {
            let p = MassOrbitPoint::standard(zm).unwrap();
            for method in [
                BoostMethod::Beta1,
                BoostMethod::Beta2,
                BoostMethod::Beta3,
                BoostMethod::Beta3Prime,
            ] {
                let g = boost(method, &p).unwrap();
                assert!(
                    g.dist(&SpinElement::identity()) <= 1e-12,
                    "method {method} at z_m = {zm}"
                );
            }
        }
    }

    #[test]
    fn embedding_condition_randomized() {
        let mut rng = Rng::new(14);
        for _ in 0..2500 {
            let zm = MASSES[(rng.next_u64() % 3) as usize];
            let p = random_orbit_point(&mut rng, zm);
            let vring = FourVector::basis(0).unwrap().scale(zm);
            for method in [
                BoostMethod::Beta1,
                BoostMethod::Beta2,
                BoostMethod::Beta3,
                BoostMethod::Beta3Prime,
            ] {
                let g = boost(method, &p).unwrap();
                let moved = g.act_vector(&vring);
                assert!(
                    moved.dist(p.v()) <= 1e-9 * p.v().norm().max(1.0),
                    "method {method} embedding residual too large"
                );
            }
        }
    }

    #[test]
    fn j_plus_squares_to_normalized_sigma() {
        let mut rng = Rng::new(15);
        for _ in 0..10_000 {
            let zm = MASSES[(rng.next_u64() % 3) as usize];
            let p = random_orbit_point(&mut rng, zm);
            let j = match j_plus(&p) {
                Ok(j) => j,
                Err(Error::AntipodalPoint) => continue,
                Err(e) => panic!("unexpected {e:?}"),
            };
            let target = p.normalized_sigma();
            assert!((j * j).dist(&target) <= 1e-9 * target.norm_fro().max(1.0));
            assert!((j.det() - ONE).norm() <= 1e-9);
        }

        let p = MassOrbitPoint::standard(Complex::new(2.0, 1.0)).unwrap();
        assert!(j_plus(&p).unwrap().dist(&Mat2::identity()) <= 1e-12);
    }

    #[test]
    fn j_plus_errors_at_antipode() {
        let zm = Complex::new(1.0, 0.0);
        let vring = FourVector::basis(0).unwrap().scale(zm);
        let antipode = MassOrbitPoint::new(-vring, zm).unwrap();
        assert!(matches!(j_plus(&antipode), Err(Error::AntipodalPoint)));
    }

    #[test]
    fn beta3_is_exact_at_antipode() {
        for zm in MASSES {
            let vring = FourVector::basis(0).unwrap().scale(zm);
            let antipode = MassOrbitPoint::new(-vring, zm).unwrap();
            let g = beta3(&antipode).unwrap();
            // The volume-form pair sends v_ring exactly to -v_ring.
            assert!(g.act_vector(&vring).dist(&-vring) == 0.0);
        }
    }

    #[test]
    fn beta3_blocks_match_full_matrix_construction() {
        // Oracle: (z_m I_4 + gamma(v) gamma_0) / sqrt(2 z_m (z_m + v_0)) is
        // block-diagonal and its blocks are the spin pair of beta3.
        use crate::clifford::{gamma_weyl, minkowski_embed};
        use crate::linalg::{principal_sqrt, Mat4};
        let mut rng = Rng::new(23);
        for _ in 0..500 {
            let zm = MASSES[(rng.next_u64() % 3) as usize];
            let p = random_orbit_point(&mut rng, zm);
            let denom = principal_sqrt(Complex::new(2.0, 0.0) * zm * (zm + p.v().0[0]));
            if denom.norm() <= 1e-6 {
                continue;
            }
            let full = (Mat4::identity().scale(zm)
                + minkowski_embed(p.v()).0 * gamma_weyl(0).unwrap().0)
                .scale(ONE / denom);
            assert!(full.off_block_norm() <= 1e-12 * full.norm_fro().max(1.0));
            let g = beta3(&p).unwrap();
            assert!(full.block(0, 0).dist(g.a()) <= 1e-10 * g.a().norm_fro().max(1.0));
            assert!(full.block(1, 1).dist(g.b()) <= 1e-10 * g.b().norm_fro().max(1.0));
        }
    }

    #[test]
    fn beta3_prime_covers_both_hemispheres() {
        let mut rng = Rng::new(16);
        let mut lower = 0usize;
        for _ in 0..2000 {
            let zm = MASSES[(rng.next_u64() % 3) as usize];
            let p = random_orbit_point(&mut rng, zm);
            if (p.v().0[0] / zm).re < 0.0 {
                lower += 1;
            }
            let g = beta3_prime(&p).unwrap();
            let vring = FourVector::basis(0).unwrap().scale(zm);
            assert!(g.act_vector(&vring).dist(p.v()) <= 1e-9 * p.v().norm().max(1.0));
        }
        assert!(lower > 100, "sampler never reached the lower hemisphere");

        // At the antipode the lower branch reproduces the volume-form pair.
        let zm = Complex::new(1.0, 0.0);
        let vring = FourVector::basis(0).unwrap().scale(zm);
        let antipode = MassOrbitPoint::new(-vring, zm).unwrap();
        let g = beta3_prime(&antipode).unwrap();
        assert!(g.dist(&omega_spin()) <= 1e-14);
    }

    #[test]
    fn beta3_prime_boundary_points_satisfy_embedding() {
        // Orbit points with Re(v_0 / z_m) = 0, approached from both sides.
        let zm = Complex::new(1.0, 0.0);
        let vring = FourVector::basis(0).unwrap().scale(zm);
        for &t in &[1.5f64, 0.25, -0.75] {
            for &side in &[1e-12f64, -1e-12] {
                // v_0 = i t + side; spatial part along e_3 chosen to stay
                // on the orbit: v_3^2 = v_0^2 - z_m^2.
                let v0 = Complex::new(side, t);
                let v3 = principal_sqrt(v0 * v0 - zm * zm);
                let v = FourVector([v0, ZERO, ZERO, v3]);
                let p = MassOrbitPoint::new(v, zm).unwrap();
                let g = beta3_prime(&p).unwrap();
                assert!(g.act_vector(&vring).dist(&v) <= 1e-9 * v.norm().max(1.0));
            }
        }
    }

    #[test]
    fn wigner_boost_basics() {
        let m = 1.3;
        let g = beta_wigner([m, 0.0, 0.0, 0.0], m).unwrap();
        assert!(g.dist(&SpinElement::identity()) <= 1e-14);

        assert!(matches!(
            beta_wigner([1.0, 0.0, 0.0, 0.0], -1.0),
            Err(Error::NonPositiveEnergy)
        ));
        assert!(matches!(
            beta_wigner([-1.0, 0.0, 0.0, 0.0], 1.0),
            Err(Error::NonPositiveEnergy)
        ));
        assert!(matches!(
            beta_wigner([2.0, 0.0, 0.0, 0.0], 1.0),
            Err(Error::OffShell { .. })
        ));
    }

    #[test]
    fn wigner_closed_form_and_real_form_membership() {
        let mut rng = Rng::new(17);
        for _ in 0..1000 {
            let m = rng.uniform_in(0.5, 2.0);
            let p = random_shell_momentum(&mut rng, m, 0.0);
            let g = beta_wigner(p, m).unwrap();

            // Closed form (m I + sigma(p)) / sqrt(2 m (m + p_0)).
            let v = FourVector::from_real(p);
            let closed = (Mat2::identity().scale(Complex::new(m, 0.0)) + sigma_map(&v))
                .scale(Complex::new(1.0 / (2.0 * m * (m + p[0])).sqrt(), 0.0));
            assert!(g.a().dist(&closed) <= 1e-12 * closed.norm_fro());

            // Real form: Hermitian first component, second its
            // conjugate-inverse-transpose.
            assert!(g.a().is_hermitian(1e-12));
            let required = g.a().adjoint().inv().unwrap();
            assert!(g.b().dist(&required) <= 1e-10 * required.norm_fro().max(1.0));
        }
    }

    #[test]
    fn beta2_and_beta3_restrict_to_wigner() {
        let mut rng = Rng::new(18);
        for _ in 0..1000 {
            let m = rng.uniform_in(0.5, 2.0);
            let momentum = random_shell_momentum(&mut rng, m, 0.0);
            let p =
                MassOrbitPoint::new(FourVector::from_real(momentum), Complex::new(m, 0.0)).unwrap();
            let wigner = beta_wigner(momentum, m).unwrap();
            for method in [BoostMethod::Beta2, BoostMethod::Beta3] {
                let g = align_sign(&wigner, &boost(method, &p).unwrap());
                assert!(
                    g.dist(&wigner) <= 1e-9 * (1.0 + wigner.dist(&SpinElement::identity())),
                    "method {method} does not restrict to the Wigner boost"
                );
            }
            let via_dispatch = boost(BoostMethod::Wigner, &p).unwrap();
            assert!(via_dispatch.dist(&wigner) == 0.0);
        }
    }

    #[test]
    fn beta1_leaves_the_real_form() {
        let mut rng = Rng::new(19);
        for _ in 0..1000 {
            let m = rng.uniform_in(0.5, 2.0);
            let momentum = random_shell_momentum(&mut rng, m, 0.5);
            let p =
                MassOrbitPoint::new(FourVector::from_real(momentum), Complex::new(m, 0.0)).unwrap();
            let g = beta1(&p).unwrap();
            // Real-form membership would force b = a*^{-1} = I here.
            let required = g.a().adjoint().inv().unwrap();
            assert!(g.b().dist(&required) >= 1e-3);
        }
    }

    #[test]
    fn dispatch_rejects_complex_input_for_wigner() {
        let zm = Complex::new(1.0, 0.5);
        let p = MassOrbitPoint::standard(zm).unwrap();
        assert!(matches!(
            boost(BoostMethod::Wigner, &p),
            Err(Error::OffShell { .. })
        ));
    }

    #[test]
    fn antipodal_curve_stays_on_orbit() {
        let mut rng = Rng::new(20);
        for zm in MASSES {
            let start = antipodal_curve([0.0, 0.0, 1.0], 0.0, zm).unwrap();
            assert!(start.v().dist(&FourVector::basis(0).unwrap().scale(zm)) <= 1e-15);

            // theta = pi/2 along e_z gives (0, 0, 0, i z_m).
            let mid = antipodal_curve([0.0, 0.0, 1.0], std::f64::consts::FRAC_PI_2, zm).unwrap();
            let want = FourVector([ZERO, ZERO, ZERO, I * zm]);
            assert!(mid.v().dist(&want) <= 1e-15 * zm.norm());

            for _ in 0..200 {
                let u = rng.unit_vec3();
                let theta = rng.uniform_in(0.0, std::f64::consts::PI - 1e-6);
                let p = antipodal_curve(u, theta, zm).unwrap();
                let eta = minkowski(p.v(), p.v());
                assert!((eta - zm * zm).norm() <= 1e-12 * (zm * zm).norm().max(1.0));
            }
        }
    }

    #[test]
    fn directional_limits_depend_on_direction() {
        let theta = std::f64::consts::PI - 1e-4;
        for zm in MASSES {
            let along_z = directional_limit([0.0, 0.0, 1.0], zm, theta).unwrap();
            let i_sigma3 = crate::clifford::pauli(3).unwrap().scale(I);
            assert!(along_z.dist(&i_sigma3) <= 1e-3);
            // The denominator z_m + v_0 cancels near the antipode, so the
            // closed form is only matched to ~1e-8 here.
            assert!(along_z.dist(&directional_limit_closed_form([0.0, 0.0, 1.0], theta)) <= 1e-6);

            let along_x = directional_limit([1.0, 0.0, 0.0], zm, theta).unwrap();
            let gap = along_z.dist(&along_x);
            assert!(
                (gap - 2.0).abs() <= 1e-3,
                "orthogonal limits should sit at distance 2"
            );
            assert!(gap > 1.0);
        }

        // theta = 0 start of the curve.
        let start = j_plus(&antipodal_curve([0.0, 1.0, 0.0], 0.0, ONE).unwrap()).unwrap();
        assert!(start.dist(&Mat2::identity()) <= 1e-14);
    }

    #[test]
    fn directional_limit_matches_closed_form_near_pi() {
        let mut rng = Rng::new(22);
        for _ in 0..200 {
            let u = rng.unit_vec3();
            let zm = MASSES[(rng.next_u64() % 3) as usize];
            let theta = std::f64::consts::PI - rng.uniform_in(1e-4, 1e-3);
            let j = directional_limit(u, zm, theta).unwrap();
            assert!(j.dist(&directional_limit_closed_form(u, theta)) <= 1e-3);
        }

        // Inside the guard band around the antipode the square root refuses.
        assert!(matches!(
            directional_limit([1.0, 0.0, 0.0], ONE, std::f64::consts::PI - 1e-6),
            Err(Error::AntipodalPoint)
        ));
    }
}
