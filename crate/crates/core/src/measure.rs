//! The invariant measure on the massive orbit in the (v12, v21, v22) chart,
//! box samplers for test points, and a finite-difference Radon-Nikodym
//! verifier. The orbit {det V = z_m^2} is covered, up to the lower
//! dimensional set v22 = 0, by the three free entries of
//!
//!   V = [[(z_m^2 + v12 v21) / v22, v12], [v21, v22]],
//!
//! and the measure density in this chart is 1 / |v22|^2 against Lebesgue
//! measure on C^3 identified with R^6.

use serde::{Deserialize, Serialize};

use crate::boosts::MassOrbitPoint;
use crate::clifford::FourVector;
use crate::error::{Error, Result};
use crate::linalg::{mat2, Complex, Mat2};
use crate::rng::Rng;
use crate::spin::{sigma_unmap, SpinElement};

/// Points with |v22| at or below this are outside the chart.
pub const CHART_FLOOR: f64 = 1e-6;

/// Chart coordinates of an orbit point, plus the complex mass of the orbit.
/// Real coordinate order used throughout is
/// [v12.re, v12.im, v21.re, v21.im, v22.re, v22.im].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitChartPoint {
    pub v12: Complex,
    pub v21: Complex,
    pub v22: Complex,
    pub z_m: Complex,
}

impl OrbitChartPoint {
    pub fn new(v12: Complex, v21: Complex, v22: Complex, z_m: Complex) -> Result<Self> {
        if z_m.norm() == 0.0 {
            return Err(Error::ZeroMass);
        }
        if v22.norm() <= CHART_FLOOR {
            return Err(Error::ChartSingular {
                abs_v22: v22.norm(),
            });
        }
        Ok(OrbitChartPoint { v12, v21, v22, z_m })
    }

    pub fn coords_real(&self) -> [f64; 6] {
        [
            self.v12.re,
            self.v12.im,
            self.v21.re,
            self.v21.im,
            self.v22.re,
            self.v22.im,
        ]
    }

    pub fn from_coords_real(x: [f64; 6], z_m: Complex) -> Result<Self> {
        OrbitChartPoint::new(
            Complex::new(x[0], x[1]),
            Complex::new(x[2], x[3]),
            Complex::new(x[4], x[5]),
            z_m,
        )
    }

    /// The orbit point as a four-vector, through the sigma identification.
    pub fn to_four_vector(&self) -> FourVector {
        sigma_unmap(&chart_to_matrix(self))
    }

    /// The orbit point with its mass, for the boost machinery.
    pub fn to_orbit_point(&self) -> Result<MassOrbitPoint> {
        MassOrbitPoint::new_with_tol(self.to_four_vector(), self.z_m, 1e-6)
    }
}

impl Serialize for OrbitChartPoint {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("OrbitChartPoint", 4)?;
        s.serialize_field("v12", &[self.v12.re, self.v12.im])?;
        s.serialize_field("v21", &[self.v21.re, self.v21.im])?;
        s.serialize_field("v22", &[self.v22.re, self.v22.im])?;
        s.serialize_field("zm", &[self.z_m.re, self.z_m.im])?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for OrbitChartPoint {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            v12: [f64; 2],
            v21: [f64; 2],
            v22: [f64; 2],
            zm: [f64; 2],
        }
        let raw = Raw::deserialize(deserializer)?;
        OrbitChartPoint::new(
            Complex::new(raw.v12[0], raw.v12[1]),
            Complex::new(raw.v21[0], raw.v21[1]),
            Complex::new(raw.v22[0], raw.v22[1]),
            Complex::new(raw.zm[0], raw.zm[1]),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Axis-aligned box in the six real chart coordinates. Construction rejects
/// empty extents and boxes that touch the excluded set |v22| <= chart floor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxDomain {
    pub lo: [f64; 6],
    pub hi: [f64; 6],
}

impl BoxDomain {
    pub fn new(lo: [f64; 6], hi: [f64; 6]) -> Result<Self> {
        for i in 0..6 {
            if !lo[i].is_finite() || !hi[i].is_finite() || lo[i] >= hi[i] {
                return Err(Error::InvalidDomain {
                    reason: format!(
                        "coordinate {i}: bounds [{}, {}] are not a finite nonempty interval",
                        lo[i], hi[i]
                    ),
                });
            }
        }
        // Distance from the origin of the (v22.re, v22.im) plane to the
        // box rectangle must exceed the chart floor.
        let dx = lo[4].max(0.0) + (-hi[4]).max(0.0);
        let dy = lo[5].max(0.0) + (-hi[5]).max(0.0);
        if (dx * dx + dy * dy).sqrt() <= CHART_FLOOR {
            return Err(Error::InvalidDomain {
                reason: "box intersects the excluded set |v22| <= chart floor".into(),
            });
        }
        Ok(BoxDomain { lo, hi })
    }

    pub fn contains(&self, x: &[f64; 6]) -> bool {
        (0..6).all(|i| self.lo[i] <= x[i] && x[i] <= self.hi[i])
    }
}

/// The matrix of a chart point; det V = z_m^2 by construction.
pub fn chart_to_matrix(p: &OrbitChartPoint) -> Mat2 {
    let v11 = (p.z_m * p.z_m + p.v12 * p.v21) / p.v22;
    mat2(v11, p.v12, p.v21, p.v22)
}

/// Reads chart coordinates off a matrix with det V = z_m^2 within tol.
pub fn matrix_to_chart(v: &Mat2, z_m: Complex, tol: f64) -> Result<OrbitChartPoint> {
    let residual = (v.det() - z_m * z_m).norm();
    let scale = (v.norm_fro() * v.norm_fro()).max(1.0);
    if residual > tol * scale {
        return Err(Error::OffOrbit { residual });
    }
    OrbitChartPoint::new(v[(0, 1)], v[(1, 0)], v[(1, 1)], z_m)
}

/// Measure density 1 / |v22|^2 of the invariant measure in this chart.
pub fn density(p: &OrbitChartPoint) -> f64 {
    1.0 / p.v22.norm_sqr()
}

/// The chart image of the group action V -> A V B^{-1}. Fails when the
/// image leaves the chart.
pub fn pushforward_chart(s: &SpinElement, p: &OrbitChartPoint) -> Result<OrbitChartPoint> {
    let b_inv = s.b().inv()?;
    let moved = *s.a() * chart_to_matrix(p) * b_inv;
    matrix_to_chart(&moved, p.z_m, 1e-6)
}

/// Numerical Radon-Nikodym derivative of the pushforward measure against
/// the chart measure: density(s . p) |det J| / density(p), with J the 6x6
/// real Jacobian of the chart pushforward computed by central differences
/// with step h. The invariant-measure claim is that this is identically 1.
pub fn radon_nikodym_numeric(s: &SpinElement, p: &OrbitChartPoint, h: f64) -> Result<f64> {
    let image = pushforward_chart(s, p)?;
    let x0 = p.coords_real();

    let push_coords = |x: [f64; 6]| -> Result<[f64; 6]> {
        let q = OrbitChartPoint::from_coords_real(x, p.z_m)?;
        Ok(pushforward_chart(s, &q)?.coords_real())
    };

    let mut jac = [[0.0f64; 6]; 6];
    for j in 0..6 {
        let mut xp = x0;
        let mut xm = x0;
        xp[j] += h;
        xm[j] -= h;
        // Divide by the representable step, so e.g. the identity element
        // yields the identity Jacobian exactly.
        let step = xp[j] - xm[j];
        let fp = push_coords(xp)?;
        let fm = push_coords(xm)?;
        for i in 0..6 {
            jac[i][j] = (fp[i] - fm[i]) / step;
        }
    }

    Ok(density(&image) * det6(&jac).abs() / density(p))
}

/// Determinant of a 6x6 real matrix by Gaussian elimination with partial
/// pivoting.
#[allow(clippy::needless_range_loop)]
fn det6(m: &[[f64; 6]; 6]) -> f64 {
    let mut a = *m;
    let mut det = 1.0f64;
    for col in 0..6 {
        let pivot = (col..6)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("nonempty range");
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in (col + 1)..6 {
            let factor = a[row][col] / a[col][col];
            for k in col..6 {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    det
}

/// One Radon-Nikodym evaluation, in the report shape used by the witness
/// machinery: the group element, the chart point, and the density ratio.
#[derive(Debug, Clone, Serialize)]
pub struct RnRecord {
    pub s: SpinElement,
    pub p: OrbitChartPoint,
    pub value: f64,
}

/// Evaluate [`radon_nikodym_numeric`] and package the result as a record.
pub fn rn_record(s: &SpinElement, p: &OrbitChartPoint, h: f64) -> Result<RnRecord> {
    Ok(RnRecord {
        s: *s,
        p: *p,
        value: radon_nikodym_numeric(s, p, h)?,
    })
}

/// n independent uniform samples from the box, deterministic per seed.
pub fn sample_chart(domain: &BoxDomain, z_m: Complex, n: usize, seed: u64) -> Vec<OrbitChartPoint> {
    let mut rng = Rng::new(seed);
    sample_chart_with(domain, z_m, n, &mut rng)
}

/// Same as [`sample_chart`] but drawing from a caller-owned stream.
pub fn sample_chart_with(
    domain: &BoxDomain,
    z_m: Complex,
    n: usize,
    rng: &mut Rng,
) -> Vec<OrbitChartPoint> {
    (0..n)
        .map(|_| {
            let mut x = [0.0f64; 6];
            for (i, slot) in x.iter_mut().enumerate() {
                *slot = rng.uniform_in(domain.lo[i], domain.hi[i]);
            }
            OrbitChartPoint::from_coords_real(x, z_m)
                .expect("box construction excludes the chart floor")
        })
        .collect()
}

/// The default sampling box used by the verification suites: every
/// coordinate in [-1, 1] except v22, whose real part lives in [0.3, 1.3],
/// keeping |v22| >= 0.1 with margin for finite-difference stencils.
pub fn default_sample_box() -> BoxDomain {
    BoxDomain::new(
        [-1.0, -1.0, -1.0, -1.0, 0.3, -0.5],
        [1.0, 1.0, 1.0, 1.0, 1.3, 0.5],
    )
    .expect("static bounds are valid")
}
