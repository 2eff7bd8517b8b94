//! Property tests over generated inputs: group axioms, branch conventions,
//! action invariants, and bit-exact serialization of finite doubles.

use proptest::prelude::*;

use cspin_core::clifford::{minkowski, FourVector};
use cspin_core::linalg::{mat2, principal_sqrt, Complex, Mat2};
use cspin_core::orbits::{classify, null_little_compose, null_little_element, NullLittleParams};
use cspin_core::spin::{random_spin, sigma_map, sigma_unmap, IspinElement, SpinElement};

fn finite_f64() -> impl Strategy<Value = f64> {
    any::<f64>().prop_filter("finite", |x| x.is_finite())
}

fn small_f64() -> impl Strategy<Value = f64> {
    -3.0f64..3.0
}

fn small_complex() -> impl Strategy<Value = Complex> {
    (small_f64(), small_f64()).prop_map(|(re, im)| Complex::new(re, im))
}

fn four_vector() -> impl Strategy<Value = FourVector> {
    prop::array::uniform4(small_complex()).prop_map(FourVector)
}

fn spin_element() -> impl Strategy<Value = SpinElement> {
    (any::<u64>(), 0.05f64..1.2).prop_map(|(seed, scale)| random_spin(seed, scale))
}

proptest! {
    #[test]
    fn principal_sqrt_squares_back(z in small_complex()) {
        let s = principal_sqrt(z);
        prop_assert!((s * s - z).norm() <= 1e-14 * z.norm().max(1.0));
        prop_assert!(s.re >= 0.0);
    }

    #[test]
    fn principal_sqrt_negative_axis_from_above(r in 1e-12f64..1e6) {
        let s = principal_sqrt(Complex::new(-r, 0.0));
        prop_assert!(s.re == 0.0 && s.im > 0.0);
        let s = principal_sqrt(Complex::new(-r, -0.0));
        prop_assert!(s.re == 0.0 && s.im > 0.0);
    }

    #[test]
    fn sigma_is_a_linear_bijection(v in four_vector()) {
        let back = sigma_unmap(&sigma_map(&v));
        prop_assert!(back.dist(&v) <= 1e-15 * v.norm().max(1.0));
    }

    #[test]
    fn action_preserves_quadratic_form(s in spin_element(), v in four_vector()) {
        let w = s.act_vector(&v);
        let before = minkowski(&v, &v);
        let after = minkowski(&w, &w);
        prop_assert!((before - after).norm() <= 1e-9 * before.norm().max(1.0));
    }

    #[test]
    fn classification_invariant_under_action(s in spin_element(), v in four_vector()) {
        let m = sigma_map(&v);
        let moved = sigma_map(&s.act_vector(&v));
        let a = classify(&m, 1e-6);
        let b = classify(&moved, 1e-6);
        // Compare tags; the mass value is covered by the form invariance.
        prop_assert_eq!(std::mem::discriminant(&a), std::mem::discriminant(&b));
    }

    #[test]
    fn spin_group_axioms(s in spin_element(), t in spin_element(), u in spin_element()) {
        let assoc = s.mul(&t).mul(&u).dist(&s.mul(&t.mul(&u)));
        prop_assert!(assoc <= 1e-10 * (1.0 + s.mul(&t).mul(&u).dist(&SpinElement::identity())));
        prop_assert!(s.mul(&s.inverse()).dist(&SpinElement::identity()) <= 1e-10);
        prop_assert!(s.mul(&SpinElement::identity()).dist(&s) == 0.0);
    }

    #[test]
    fn ispin_group_axioms(
        z1 in four_vector(),
        z2 in four_vector(),
        s1 in spin_element(),
        s2 in spin_element(),
    ) {
        let g = IspinElement::new(z1, s1);
        let h = IspinElement::new(z2, s2);
        prop_assert!(g.mul(&g.inverse()).dist(&IspinElement::identity()) <= 1e-9);
        // (g h)^{-1} = h^{-1} g^{-1}
        let lhs = g.mul(&h).inverse();
        let rhs = h.inverse().mul(&g.inverse());
        prop_assert!(lhs.dist(&rhs) <= 1e-9 * (1.0 + lhs.translation.norm()));
    }

    #[test]
    fn null_little_group_closure(
        a in prop::array::uniform3(small_complex()),
        b in prop::array::uniform3(small_complex()),
    ) {
        let p = NullLittleParams::new(a[0], a[1], a[2]);
        let q = NullLittleParams::new(b[0], b[1], b[2]);
        let lhs = null_little_element(&p).mul(&null_little_element(&q));
        let rhs = null_little_element(&null_little_compose(&p, &q));
        prop_assert!(lhs.dist(&rhs) <= 1e-10 * (1.0 + rhs.dist(&SpinElement::identity())));
    }

    #[test]
    fn four_vector_json_bit_exact(raw in prop::array::uniform8(finite_f64())) {
        let v = FourVector([
            Complex::new(raw[0], raw[1]),
            Complex::new(raw[2], raw[3]),
            Complex::new(raw[4], raw[5]),
            Complex::new(raw[6], raw[7]),
        ]);
        let text = serde_json::to_string(&v).unwrap();
        let back: FourVector = serde_json::from_str(&text).unwrap();
        for (x, y) in v.0.iter().zip(&back.0) {
            prop_assert!(x.re.to_bits() == y.re.to_bits());
            prop_assert!(x.im.to_bits() == y.im.to_bits());
        }
    }

    #[test]
    fn matrix_json_bit_exact(raw in prop::array::uniform8(finite_f64())) {
        let m = mat2(
            Complex::new(raw[0], raw[1]),
            Complex::new(raw[2], raw[3]),
            Complex::new(raw[4], raw[5]),
            Complex::new(raw[6], raw[7]),
        );
        let text = serde_json::to_string(&m).unwrap();
        let back: Mat2 = serde_json::from_str(&text).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert!(m[(i, j)].re.to_bits() == back[(i, j)].re.to_bits());
                prop_assert!(m[(i, j)].im.to_bits() == back[(i, j)].im.to_bits());
            }
        }
    }

    #[test]
    fn character_values_are_unitary(w in four_vector(), z in four_vector()) {
        let chi = cspin_core::orbits::Character::new(w);
        let value = chi.eval(&z);
        prop_assert!((value.norm() - 1.0).abs() <= 1e-14);
    }
}
