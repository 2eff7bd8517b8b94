//! Wigner rotations (cocycles) and the induced-representation action on
//! functions supported on the non-zero-mass orbit, with pluggable matrix
//! representations of the little group.

use std::sync::Arc;

use serde::Serialize;

use crate::boosts::{boost, BoostMethod, MassOrbitPoint};
use crate::clifford::FourVector;
use crate::error::{Error, Result};
use crate::linalg::{Complex, Mat2, DEFAULT_TOL, ONE, ZERO};
use crate::measure::{rn_record, BoxDomain, OrbitChartPoint, RnRecord};
use crate::orbits::Character;
use crate::spin::{IspinElement, SpinElement};

type RepValueFn = Arc<dyn Fn(&Mat2) -> Vec<Complex> + Send + Sync>;
type OrbitValueFn = Arc<dyn Fn(&FourVector) -> Vec<Complex> + Send + Sync>;

/// A matrix representation of the little group SL(2, C). Values are
/// returned row-major as dim x dim complex entries. The shipped instances
/// are the trivial representation (unitary) and the defining one (a
/// homomorphism but not unitary; the genuinely unitary irreducibles of
/// SL(2, C) are infinite-dimensional and out of scope).
#[derive(Clone)]
pub struct LittleGroupRep {
    dim: usize,
    apply: RepValueFn,
}

impl LittleGroupRep {
    pub fn new(dim: usize, apply: impl Fn(&Mat2) -> Vec<Complex> + Send + Sync + 'static) -> Self {
        LittleGroupRep {
            dim,
            apply: Arc::new(apply),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, h: &Mat2) -> Vec<Complex> {
        let value = (self.apply)(h);
        assert_eq!(
            value.len(),
            self.dim * self.dim,
            "representation value size"
        );
        value
    }

    /// Whether the value at h satisfies value* value = I within tol.
    pub fn is_unitary_at(&self, h: &Mat2, tol: f64) -> bool {
        let v = self.apply(h);
        let n = self.dim;
        let mut max_dev = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += v[k * n + i].conj() * v[k * n + j];
                }
                let want = if i == j { ONE } else { ZERO };
                max_dev = max_dev.max((acc - want).norm());
            }
        }
        max_dev <= tol
    }
}

/// dim 1, constant value 1. Unitary.
pub fn trivial_rep() -> LittleGroupRep {
    LittleGroupRep::new(1, |_| vec![ONE])
}

/// dim 2, A maps to itself. A homomorphism, not unitary.
pub fn defining_rep() -> LittleGroupRep {
    LittleGroupRep::new(2, |h| vec![h[(0, 0)], h[(0, 1)], h[(1, 0)], h[(1, 1)]])
}

/// A pointwise-evaluable function on the orbit with values in C^dim.
/// Evaluation must be pure: the induced action re-evaluates freely.
#[derive(Clone)]
pub struct OrbitFunction {
    dim: usize,
    eval: OrbitValueFn,
    pub support_hint: Option<BoxDomain>,
}

impl OrbitFunction {
    pub fn new(
        dim: usize,
        eval: impl Fn(&FourVector) -> Vec<Complex> + Send + Sync + 'static,
    ) -> Self {
        OrbitFunction {
            dim,
            eval: Arc::new(eval),
            support_hint: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, v: &FourVector) -> Vec<Complex> {
        let value = (self.eval)(v);
        assert_eq!(value.len(), self.dim, "orbit function value size");
        value
    }
}

/// The Wigner rotation beta(v)^{-1} s beta(s^{-1} . v). Its two spin
/// components must agree (the little group of the standard vector is the
/// diagonal); disagreement beyond tol signals a broken embedding and is
/// reported as an error, never repaired.
pub fn wigner_cocycle(
    method: BoostMethod,
    s: &SpinElement,
    p: &MassOrbitPoint,
    tol: f64,
) -> Result<Mat2> {
    let pulled = p.acted_on_by(&s.inverse())?;
    let here = boost(method, p)?;
    let there = boost(method, &pulled)?;
    let pair = here.inverse().mul(&s.mul(&there));
    let residual = pair.a().dist(pair.b());
    if residual > tol * pair.a().norm_fro().max(1.0) {
        return Err(Error::CocycleNotDiagonal { residual });
    }
    Ok(*pair.a())
}

/// Residual of the diagonality check, for reporting.
pub fn cocycle_residual(method: BoostMethod, s: &SpinElement, p: &MassOrbitPoint) -> Result<f64> {
    let pulled = p.acted_on_by(&s.inverse())?;
    let pair = boost(method, p)?
        .inverse()
        .mul(&s.mul(&boost(method, &pulled)?));
    Ok(pair.a().dist(pair.b()))
}

/// Density-ratio hook for quasi-invariant measures: given (s, v) it returns
/// d mu(s^{-1} . v) / d mu(v). The invariant orbit measure used throughout
/// has this identically 1, so [`induced_apply`] passes `None`.
pub type DensityRatio<'a> = &'a (dyn Fn(&SpinElement, &MassOrbitPoint) -> f64 + Sync);

/// One application of the induced representation:
///
///   (U(z, s) F)(v) = chi_v(z) rho(beta(v)^{-1} s beta(s^{-1} . v))
///                    F(s^{-1} . v),
///
/// where chi_v(z) = exp(i Re eta(v, z)) is the inducing character
/// transported to the orbit point v (the value of the character of the
/// isotropy group on the conjugated translation beta(v)^{-1} . z). The
/// Radon-Nikodym factor is absent because the orbit measure is invariant;
/// see [`crate::measure::radon_nikodym_numeric`] for the certificate.
pub fn induced_apply(
    rep: &LittleGroupRep,
    method: BoostMethod,
    g: &IspinElement,
    f: &OrbitFunction,
    p: &MassOrbitPoint,
) -> Result<Vec<Complex>> {
    induced_apply_with_measure(rep, method, g, f, p, None)
}

/// [`induced_apply`] with an explicit square-root density factor, for
/// measures that are merely quasi-invariant.
pub fn induced_apply_with_measure(
    rep: &LittleGroupRep,
    method: BoostMethod,
    g: &IspinElement,
    f: &OrbitFunction,
    p: &MassOrbitPoint,
    density_ratio: Option<DensityRatio<'_>>,
) -> Result<Vec<Complex>> {
    if rep.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            rep: rep.dim(),
            func: f.dim(),
        });
    }
    let s = &g.spin;
    let pulled = p.acted_on_by(&s.inverse())?;
    let rotation = wigner_cocycle(method, s, p, DEFAULT_TOL)?;
    let phase = Character::new(*p.v()).eval(&g.translation);
    let weight = density_ratio.map_or(1.0, |ratio| ratio(s, p).sqrt());
    let rho = rep.apply(&rotation);
    let values = f.eval(pulled.v());

    let n = rep.dim();
    let mut out = vec![ZERO; n];
    for i in 0..n {
        let mut acc = ZERO;
        for j in 0..n {
            acc += rho[i * n + j] * values[j];
        }
        out[i] = phase * acc * Complex::new(weight, 0.0);
    }
    Ok(out)
}

/// (U(g) F) as a function on the orbit, for composing applications.
pub fn transformed_function(
    rep: &LittleGroupRep,
    method: BoostMethod,
    g: &IspinElement,
    f: &OrbitFunction,
    z_m: Complex,
) -> OrbitFunction {
    let rep = rep.clone();
    let f = f.clone();
    let g = *g;
    OrbitFunction::new(f.dim(), move |v| {
        let p = MassOrbitPoint::new_with_tol(*v, z_m, 1e-6)
            .expect("transformed function evaluated off the orbit");
        induced_apply(&rep, method, &g, &f, &p).expect("induced action failed")
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub v: FourVector,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
}

/// Pointwise unitarity certificate: the modulus identity
/// |(U(g) F)(v)| = |F(s^{-1} . v)| at the sampled points (exact for unitary
/// representation values and the unit-modulus character), together with
/// Radon-Nikodym records certifying the measure invariance that the L^2
/// statement additionally needs.
#[derive(Debug, Clone, Serialize)]
pub struct UnitarityReport {
    pub entries: Vec<WitnessEntry>,
    pub rn_certificates: Vec<RnRecord>,
    pub rep_unitary_at_cocycles: bool,
    pub max_abs_err: f64,
    pub max_rn_deviation: f64,
    pub skipped_points: usize,
}

pub fn unitarity_witness(
    rep: &LittleGroupRep,
    method: BoostMethod,
    g: &IspinElement,
    f: &OrbitFunction,
    points: &[OrbitChartPoint],
    fd_step: f64,
) -> Result<UnitarityReport> {
    let mut entries = Vec::new();
    let mut rn_certificates = Vec::new();
    let mut rep_unitary = true;
    let mut max_abs_err = 0.0f64;
    let mut max_rn_deviation = 0.0f64;
    let mut skipped = 0usize;

    for chart_point in points {
        let Ok(p) = chart_point.to_orbit_point() else {
            skipped += 1;
            continue;
        };
        let Ok(pulled) = p.acted_on_by(&g.spin.inverse()) else {
            skipped += 1;
            continue;
        };
        let applied = match induced_apply(rep, method, g, f, &p) {
            Ok(v) => v,
            Err(Error::AntipodalPoint) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let lhs = applied.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let rhs = f
            .eval(pulled.v())
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        let abs_err = (lhs - rhs).abs();
        max_abs_err = max_abs_err.max(abs_err);
        entries.push(WitnessEntry {
            v: *p.v(),
            lhs,
            rhs,
            abs_err,
        });

        if let Ok(rotation) = wigner_cocycle(method, &g.spin, &p, DEFAULT_TOL) {
            rep_unitary &= rep.is_unitary_at(&rotation, 1e-9);
        }

        // The derivative stencil loses accuracy when the image sits close
        // to the chart boundary; such points carry no extra evidence.
        let image_ok = crate::measure::pushforward_chart(&g.spin, chart_point)
            .map(|q| q.v22.norm() >= 0.05)
            .unwrap_or(false);
        if !image_ok {
            skipped += 1;
            continue;
        }
        match rn_record(&g.spin, chart_point, fd_step) {
            Ok(record) => {
                max_rn_deviation = max_rn_deviation.max((record.value - 1.0).abs());
                rn_certificates.push(record);
            }
            Err(_) => skipped += 1,
        }
    }

    Ok(UnitarityReport {
        entries,
        rn_certificates,
        rep_unitary_at_cocycles: rep_unitary,
        max_abs_err,
        max_rn_deviation,
        skipped_points: skipped,
    })
}
