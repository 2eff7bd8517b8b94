//! Randomized property suites over every module, reported with per-property
//! maximum residuals. The command-line `verify` subcommand drives these; the
//! acceptance tests assert on the same reports.
//!
//! Tolerances are pinned per property. The config tolerance is used only by
//! properties whose statement carries the library default; properties with
//! their own stated bound keep it regardless of the config.

use serde::Serialize;

use crate::boosts::{
    align_sign, beta1, beta3, beta_wigner, boost, directional_limit, directional_limit_closed_form,
    j_plus, omega_spin, BoostMethod, MassOrbitPoint,
};
use crate::clifford::{
    anticommutator, clifford_trace, gamma_weyl, minkowski, minkowski_embed, volume_form,
    FourVector, MetricKind,
};
use crate::error::Error;
use crate::induced::{
    defining_rep, induced_apply, transformed_function, trivial_rep, unitarity_witness,
    wigner_cocycle, LittleGroupRep, OrbitFunction,
};
use crate::linalg::{Complex, Mat2, Mat4, DEFAULT_TOL, ONE};
use crate::measure::{
    chart_to_matrix, default_sample_box, matrix_to_chart, pushforward_chart, radon_nikodym_numeric,
    sample_chart_with,
};
use crate::orbits::{
    char_pullback, classify, null_little_compose, null_little_element, null_representative,
    transporter, Character, NullLittleParams, OrbitClass, CLASSIFY_EPS,
};
use crate::rng::Rng;
use crate::spin::{random_spin_with, sigma_map, sigma_unmap, IspinElement, SpinElement};

/// Knobs shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            samples: 10_000,
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyReport>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, properties: Vec<PropertyReport>) -> Self {
        let pass = properties.iter().all(|p| p.pass);
        SuiteReport {
            suite: suite.to_string(),
            properties,
            pass,
        }
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

fn report(name: &str, samples: usize, tol: f64, max_residual: f64) -> PropertyReport {
    PropertyReport {
        name: name.to_string(),
        samples,
        max_residual,
        tol,
        pass: max_residual <= tol,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Clifford,
    Spin,
    Orbit,
    Boost,
    Cocycle,
    Measure,
    Induced,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Clifford,
        Suite::Spin,
        Suite::Orbit,
        Suite::Boost,
        Suite::Cocycle,
        Suite::Measure,
        Suite::Induced,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::Spin => "spin",
            Suite::Orbit => "orbit",
            Suite::Boost => "boost",
            Suite::Cocycle => "cocycle",
            Suite::Measure => "measure",
            Suite::Induced => "induced",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "clifford" => Ok(Suite::Clifford),
            "spin" => Ok(Suite::Spin),
            "orbit" => Ok(Suite::Orbit),
            "boost" => Ok(Suite::Boost),
            "cocycle" => Ok(Suite::Cocycle),
            "measure" => Ok(Suite::Measure),
            "induced" => Ok(Suite::Induced),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

/// The complex masses exercised by the boost and cocycle suites:
/// 1, i, and 2 e^{i pi / 3}. All principal square roots of their squares.
pub const TEST_MASSES: [Complex; 3] = [
    Complex::new(1.0, 0.0),
    Complex::new(0.0, 1.0),
    Complex::new(1.0, 1.732_050_807_568_877_2),
];

fn rng_for(cfg: &VerifyConfig, salt: u64) -> Rng {
    Rng::new(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_vec(rng: &mut Rng, radius: f64) -> FourVector {
    FourVector([
        rng.complex_in_disk(radius),
        rng.complex_in_disk(radius),
        rng.complex_in_disk(radius),
        rng.complex_in_disk(radius),
    ])
}

// Exponential-coordinate samples at moderate scale stay in the hemisphere
// Re(v_0 / z_m) > 0; composing with the flip (-I, I) on half the draws
// covers the whole orbit.
fn random_orbit_point(rng: &mut Rng, z_m: Complex) -> MassOrbitPoint {
    let mut s = random_spin_with(rng, 0.8);
    if rng.next_u64() & 1 == 1 {
        let flip = SpinElement::new(-Mat2::identity(), Mat2::identity())
            .expect("sign flip has unit determinants");
        s = flip.mul(&s);
    }
    MassOrbitPoint::standard(z_m)
        .expect("test masses are principal and nonzero")
        .acted_on_by(&s)
        .expect("group action stays on the orbit")
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

/// Unit-modulus components keep the pointwise unitarity identity at machine
/// precision regardless of where the orbit point sits.
fn bounded_test_function(dim: usize, seed: u64) -> OrbitFunction {
    let mut rng = Rng::new(seed);
    let freqs: Vec<FourVector> = (0..dim).map(|_| random_vec(&mut rng, 1.0)).collect();
    OrbitFunction::new(dim, move |v| {
        freqs.iter().map(|w| Character::new(*w).eval(v)).collect()
    })
}

/// Polynomial components exercise non-trivial magnitudes for the
/// homomorphism checks.
fn polynomial_test_function(dim: usize) -> OrbitFunction {
    OrbitFunction::new(dim, move |v| {
        let m = sigma_map(v);
        let base = [
            m[(0, 0)] + Complex::new(0.3, 0.0) * m[(1, 1)],
            m[(0, 1)] * m[(1, 0)] + ONE,
        ];
        (0..dim)
            .map(|i| base[i % 2] + Complex::new(0.1 * i as f64, 0.0))
            .collect()
    })
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::Clifford => clifford_suite(cfg),
        Suite::Spin => spin_suite(cfg),
        Suite::Orbit => orbit_suite(cfg),
        Suite::Boost => boost_suite(cfg),
        Suite::Cocycle => cocycle_suite(cfg),
        Suite::Measure => measure_suite(cfg),
        Suite::Induced => induced_suite(cfg),
    }
}

pub fn run_many(suites: &[Suite], cfg: &VerifyConfig) -> Vec<SuiteReport> {
    suites.iter().map(|s| run(*s, cfg)).collect()
}

pub fn clifford_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();

    // Basis-level anticommutators are integer matrices: exact equality.
    let eta = MetricKind::Minkowski.signature();
    let mut worst = 0.0f64;
    for (mu, &g_mu) in eta.iter().enumerate() {
        for nu in 0..4 {
            let got = anticommutator(&gamma_weyl(mu).unwrap(), &gamma_weyl(nu).unwrap());
            let want = if mu == nu {
                Mat4::identity().scale(Complex::new(2.0 * g_mu, 0.0))
            } else {
                Mat4::zero()
            };
            worst = worst.max(got.0.dist(&want));
        }
    }
    props.push(report("anticommutator-basis-exact", 16, 0.0, worst));

    let mut rng = rng_for(cfg, 1);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let v = random_vec(&mut rng, 1.0);
        let w = random_vec(&mut rng, 1.0);
        let lhs = anticommutator(&minkowski_embed(&v), &minkowski_embed(&w));
        let rhs = Mat4::identity().scale(2.0 * minkowski(&v, &w));
        worst = worst.max(lhs.0.dist(&rhs));
    }
    props.push(report(
        "anticommutator-randomized",
        cfg.samples,
        1e-12,
        worst,
    ));

    let mut rng = rng_for(cfg, 2);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let v = random_vec(&mut rng, 1.0);
        let w = random_vec(&mut rng, 1.0);
        let quarter =
            clifford_trace(&(minkowski_embed(&w) * minkowski_embed(&v))) * Complex::new(0.25, 0.0);
        worst = worst.max((quarter - minkowski(&w, &v)).norm());
    }
    props.push(report("trace-pairing", cfg.samples, 1e-12, worst));

    let omega = volume_form();
    let mut worst = (omega * omega).0.dist(&Mat4::identity());
    worst = worst.max(omega.0.dist(&omega.0.adjoint()));
    for mu in 0..4 {
        worst = worst.max(
            anticommutator(&omega, &gamma_weyl(mu).unwrap())
                .0
                .norm_fro(),
        );
    }
    props.push(report("volume-form-identities", 6, 1e-14, worst));

    SuiteReport::new("clifford", props)
}

pub fn spin_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    let sub = (cfg.samples / 10).max(1);

    let mut rng = rng_for(cfg, 3);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let s = random_spin_with(&mut rng, 0.8);
        let v = random_vec(&mut rng, 1.5);
        let w = s.act_vector(&v);
        let drift = (minkowski(&w, &w) - minkowski(&v, &v)).norm();
        worst = worst.max(drift / minkowski(&v, &v).norm().max(1.0));
    }
    props.push(report(
        "action-metric-invariance",
        cfg.samples,
        1e-10,
        worst,
    ));

    let eta = Mat4::from_diag([ONE, -ONE, -ONE, -ONE]);
    let mut rng = rng_for(cfg, 4);
    let mut worst = 0.0f64;
    for _ in 0..sub {
        let s = random_spin_with(&mut rng, 0.8);
        let lam = s.covering_so4();
        worst = worst.max((lam.transpose() * eta * lam).dist(&eta));
        worst = worst.max((lam.det() - ONE).norm());
    }
    props.push(report("covering-orthogonality-det", sub, 1e-9, worst));

    let minus_one = SpinElement::new(-Mat2::identity(), -Mat2::identity()).unwrap();
    let kernel_residual = minus_one.covering_so4().dist(&Mat4::identity());
    props.push(report("covering-kernel-exact", 1, 0.0, kernel_residual));

    let mut rng = rng_for(cfg, 5);
    let mut worst = 0.0f64;
    for _ in 0..sub {
        let s = random_spin_with(&mut rng, 0.8);
        let t = random_spin_with(&mut rng, 0.8);
        let lhs = s.mul(&t).covering_so4();
        let rhs = s.covering_so4() * t.covering_so4();
        worst = worst.max(lhs.dist(&rhs) / rhs.norm_fro().max(1.0));
    }
    props.push(report("covering-homomorphism", sub, 1e-9, worst));

    let mut rng = rng_for(cfg, 6);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let v = random_vec(&mut rng, 2.0);
        let drift = (sigma_map(&v).det() - minkowski(&v, &v)).norm();
        worst = worst.max(drift / minkowski(&v, &v).norm().max(1.0));
    }
    props.push(report("det-sigma-equals-eta", cfg.samples, 1e-12, worst));

    let mut rng = rng_for(cfg, 7);
    let mut worst = 0.0f64;
    for _ in 0..sub {
        let g = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
        let h = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
        let k = IspinElement::new(random_vec(&mut rng, 1.0), random_spin_with(&mut rng, 0.8));
        worst = worst.max(g.mul(&g.inverse()).dist(&IspinElement::identity()));
        let assoc = g.mul(&h).mul(&k).dist(&g.mul(&h.mul(&k)));
        worst = worst.max(assoc / (1.0 + g.translation.norm()));
    }
    props.push(report("ispin-group-laws", sub, 1e-12, worst));

    SuiteReport::new("spin", props)
}

pub fn orbit_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    let sub = (cfg.samples / 10).max(1);

    let mut rng = rng_for(cfg, 8);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let s = random_spin_with(&mut rng, 0.7);
        let v = random_vec(&mut rng, 1.0);
        let m = sigma_map(&v);
        let moved = sigma_map(&s.act_vector(&v));
        match (classify(&m, CLASSIFY_EPS), classify(&moved, CLASSIFY_EPS)) {
            (OrbitClass::Mass(d1), OrbitClass::Mass(d2)) => {
                worst = worst.max((d1 - d2).norm() / d1.norm().max(1.0));
            }
            (a, b) if a == b => {}
            _ => worst = worst.max(1.0),
        }
    }
    props.push(report(
        "classification-action-invariant",
        cfg.samples,
        1e-10,
        worst,
    ));

    let mut rng = rng_for(cfg, 9);
    let mut worst = 0.0f64;
    for _ in 0..sub {
        let zm = rng.complex_in_disk(1.5) + Complex::new(2.0, 0.0);
        let s = random_spin_with(&mut rng, 0.8);
        let m = sigma_map(&s.act_vector(&FourVector::basis(0).unwrap().scale(zm)));
        let class = classify(&m, CLASSIFY_EPS);
        let rep = class.representative().unwrap();
        let g = transporter(&m).unwrap();
        let moved = sigma_map(&g.act_vector(&sigma_unmap(&rep)));
        worst = worst.max(moved.dist(&m) / m.norm_fro().max(1.0));
    }
    props.push(report("transporter-massive", sub, 1e-9, worst));

    let mut rng = rng_for(cfg, 10);
    let mut worst = 0.0f64;
    let mut count = 0usize;
    while count < sub {
        let u = [rng.complex_in_disk(1.5), rng.complex_in_disk(1.5)];
        let w = [rng.complex_in_disk(1.5), rng.complex_in_disk(1.5)];
        let m = crate::linalg::mat2(u[0] * w[0], u[0] * w[1], u[1] * w[0], u[1] * w[1]);
        if m.norm_fro() < 1e-3 {
            continue;
        }
        let g = match transporter(&m) {
            Ok(g) => g,
            Err(Error::DegenerateFactorization) => continue,
            Err(e) => panic!("unexpected transporter error {e:?}"),
        };
        let moved = sigma_map(&g.act_vector(&sigma_unmap(&null_representative())));
        worst = worst.max(moved.dist(&m) / m.norm_fro().max(1.0));
        count += 1;
    }
    props.push(report("transporter-null", sub, 1e-9, worst));

    let mut rng = rng_for(cfg, 11);
    let mut worst = 0.0f64;
    let zm = Complex::new(1.1, -0.2);
    let vring = FourVector::basis(0).unwrap().scale(zm);
    for _ in 0..sub {
        let a = *random_spin_with(&mut rng, 0.9).a();
        let diag = SpinElement::new(a, a).unwrap();
        worst = worst.max(diag.act_vector(&vring).dist(&vring) / vring.norm().max(1.0));
    }
    props.push(report("massive-little-group-fixes", sub, 1e-10, worst));

    let mut rng = rng_for(cfg, 12);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let draw = |rng: &mut Rng| {
            NullLittleParams::new(
                rng.complex_in_disk(1.2),
                rng.complex_in_disk(1.2),
                rng.complex_in_disk(1.2),
            )
        };
        let p = draw(&mut rng);
        let q = draw(&mut rng);
        let lhs = null_little_element(&p).mul(&null_little_element(&q));
        let rhs = null_little_element(&null_little_compose(&p, &q));
        worst = worst.max(lhs.dist(&rhs) / (1.0 + rhs.dist(&SpinElement::identity())));
    }
    props.push(report("null-little-product-law", cfg.samples, 1e-12, worst));

    let mut rng = rng_for(cfg, 13);
    let mut worst = 0.0f64;
    use crate::linalg::{I, ZERO};
    for _ in 0..sub {
        let z = rng.complex_in_disk(1.0);
        let z1 = rng.complex_in_disk(1.0);
        let z2 = rng.complex_in_disk(1.0);
        let r = null_little_element(&NullLittleParams::new(ZERO, ZERO, z));
        let t = null_little_element(&NullLittleParams::new(z1, z2, ZERO));
        let conj = r.mul(&t).mul(&r.inverse());
        let rotated = null_little_element(&NullLittleParams::new(
            (I * z).exp() * z1,
            (-I * z).exp() * z2,
            ZERO,
        ));
        worst = worst.max(conj.dist(&rotated) / (1.0 + rotated.dist(&SpinElement::identity())));
    }
    props.push(report("null-little-conjugation", sub, 1e-12, worst));

    let mut rng = rng_for(cfg, 14);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let s = random_spin_with(&mut rng, 0.8);
        let chi = Character::new(random_vec(&mut rng, 1.5));
        let z = random_vec(&mut rng, 1.5);
        let lhs = char_pullback(&s, &chi).eval(&z);
        let rhs = chi.eval(&s.inverse().act_vector(&z));
        worst = worst.max((lhs - rhs).norm());
    }
    props.push(report("character-equivariance", cfg.samples, 1e-12, worst));

    let mut rng = rng_for(cfg, 15);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let chi = Character::new(random_vec(&mut rng, 2.0));
        let z = random_vec(&mut rng, 2.0);
        worst = worst.max((chi.eval(&z) - chi.eval_via_trace(&z)).norm());
    }
    props.push(report(
        "character-formulas-agree",
        cfg.samples,
        1e-12,
        worst,
    ));

    SuiteReport::new("orbit", props)
}

pub fn boost_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    let sub = (cfg.samples / 10).max(1);

    // Embedding condition for all four complexified methods over shared
    // sample points, masses cycling through the test set.
    let methods = [
        (BoostMethod::Beta1, "embedding-beta1"),
        (BoostMethod::Beta2, "embedding-beta2"),
        (BoostMethod::Beta3, "embedding-beta3"),
        (BoostMethod::Beta3Prime, "embedding-beta3p"),
    ];
    let mut rng = rng_for(cfg, 16);
    let mut worst = [0.0f64; 4];
    for i in 0..cfg.samples {
        let zm = TEST_MASSES[i % 3];
        let p = random_orbit_point(&mut rng, zm);
        let vring = FourVector::basis(0).unwrap().scale(zm);
        for (k, (method, _)) in methods.iter().enumerate() {
            match boost(*method, &p) {
                Ok(g) => {
                    let resid = g.act_vector(&vring).dist(p.v()) / p.v().norm().max(1.0);
                    worst[k] = worst[k].max(resid);
                }
                Err(Error::AntipodalPoint) => {}
                Err(e) => panic!("unexpected boost error {e:?}"),
            }
        }
    }
    for (k, (_, name)) in methods.iter().enumerate() {
        props.push(report(name, cfg.samples, 1e-9, worst[k]));
    }

    // At the antipode the third method uses the volume-form pair exactly.
    let mut worst = 0.0f64;
    for zm in TEST_MASSES {
        let vring = FourVector::basis(0).unwrap().scale(zm);
        let antipode = MassOrbitPoint::new(-vring, zm).unwrap();
        let g = beta3(&antipode).unwrap();
        worst = worst.max(g.dist(&omega_spin()));
        worst = worst.max(g.act_vector(&vring).dist(&-vring));
    }
    props.push(report("beta3-antipode-exact", 3, 0.0, worst));

    let mut rng = rng_for(cfg, 17);
    let mut worst = 0.0f64;
    for i in 0..cfg.samples {
        let zm = TEST_MASSES[i % 3];
        let p = random_orbit_point(&mut rng, zm);
        match j_plus(&p) {
            Ok(j) => {
                let target = p.normalized_sigma();
                worst = worst
                    .max((j * j).dist(&target) / target.norm_fro().max(1.0))
                    .max((j.det() - ONE).norm());
            }
            Err(Error::AntipodalPoint) => {}
            Err(e) => panic!("unexpected {e:?}"),
        }
    }
    props.push(report("jplus-square-det", cfg.samples, 1e-9, worst));

    let mut rng = rng_for(cfg, 18);
    let mut worst2 = 0.0f64;
    let mut worst3 = 0.0f64;
    for _ in 0..sub {
        let m = rng.uniform_in(0.5, 2.0);
        let momentum = random_shell_momentum(&mut rng, m, 0.0);
        let p = MassOrbitPoint::new(FourVector::from_real(momentum), Complex::new(m, 0.0)).unwrap();
        let wigner = beta_wigner(momentum, m).unwrap();
        let scale = 1.0 + wigner.dist(&SpinElement::identity());
        let b2 = align_sign(&wigner, &boost(BoostMethod::Beta2, &p).unwrap());
        worst2 = worst2.max(b2.dist(&wigner) / scale);
        let b3 = align_sign(&wigner, &boost(BoostMethod::Beta3, &p).unwrap());
        worst3 = worst3.max(b3.dist(&wigner) / scale);
    }
    props.push(report("real-restriction-beta2", sub, 1e-9, worst2));
    props.push(report("real-restriction-beta3", sub, 1e-9, worst3));

    // The first method must FAIL real-form membership by at least 1e-3 on
    // generic points; report the worst shortfall below that separation.
    let mut rng = rng_for(cfg, 19);
    let mut shortfall = 0.0f64;
    for _ in 0..sub {
        let m = rng.uniform_in(0.5, 2.0);
        let momentum = random_shell_momentum(&mut rng, m, 0.5);
        let p = MassOrbitPoint::new(FourVector::from_real(momentum), Complex::new(m, 0.0)).unwrap();
        let g = beta1(&p).unwrap();
        let required = g.a().adjoint().inv().unwrap();
        let separation = g.b().dist(&required);
        shortfall = shortfall.max((1e-3 - separation).max(0.0));
    }
    props.push(report("beta1-real-form-separation", sub, 0.0, shortfall));

    let theta = std::f64::consts::PI - 1e-4;
    let mut rng = rng_for(cfg, 20);
    let n_dirs = (cfg.samples / 50).clamp(8, 400);
    let mut worst = 0.0f64;
    for i in 0..n_dirs {
        let u = rng.unit_vec3();
        let zm = TEST_MASSES[i % 3];
        let j = directional_limit(u, zm, theta).unwrap();
        worst = worst.max(j.dist(&directional_limit_closed_form(u, theta)));
    }
    props.push(report("directional-limit-closed-form", n_dirs, 1e-3, worst));

    // Orthogonal directions must give limits separated by more than 1; the
    // residual is the worst shortfall below that bound.
    let mut rng = rng_for(cfg, 21);
    let mut shortfall = 0.0f64;
    for i in 0..n_dirs {
        let zm = TEST_MASSES[i % 3];
        let u = rng.unit_vec3();
        // An orthonormal partner to u.
        let pick = if u[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let dot = pick[0] * u[0] + pick[1] * u[1] + pick[2] * u[2];
        let mut w = [
            pick[0] - dot * u[0],
            pick[1] - dot * u[1],
            pick[2] - dot * u[2],
        ];
        let n = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
        w = [w[0] / n, w[1] / n, w[2] / n];
        let ju = directional_limit(u, zm, theta).unwrap();
        let jw = directional_limit(w, zm, theta).unwrap();
        shortfall = shortfall.max((1.0 - ju.dist(&jw)).max(0.0));
    }
    props.push(report(
        "directional-limit-separation",
        n_dirs,
        0.0,
        shortfall,
    ));

    // Boundary Re(v0 / z_m) = 0 of the hemisphere variant, approached from
    // both sides: the embedding condition holds for either branch value.
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for zm in TEST_MASSES {
        let vring = FourVector::basis(0).unwrap().scale(zm);
        for &t in &[1.5f64, 0.25, -0.75] {
            for &side in &[1e-12f64, -1e-12] {
                let v0 = zm * Complex::new(side, t);
                let v3 = crate::linalg::principal_sqrt(v0 * v0 - zm * zm);
                let v = FourVector([v0, Complex::new(0.0, 0.0), Complex::new(0.0, 0.0), v3]);
                let p = MassOrbitPoint::new(v, zm).unwrap();
                let g = boost(BoostMethod::Beta3Prime, &p).unwrap();
                worst = worst.max(g.act_vector(&vring).dist(&v) / v.norm().max(1.0));
                count += 1;
            }
        }
    }
    props.push(report("beta3p-hemisphere-boundary", count, 1e-9, worst));

    SuiteReport::new("boost", props)
}

pub fn cocycle_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    let methods = [
        (BoostMethod::Beta1, "diagonality-beta1", "composition-beta1"),
        (BoostMethod::Beta2, "diagonality-beta2", "composition-beta2"),
        (BoostMethod::Beta3, "diagonality-beta3", "composition-beta3"),
    ];

    for (idx, (method, diag_name, comp_name)) in methods.iter().enumerate() {
        let mut rng = rng_for(cfg, 22 + idx as u64);
        let mut worst_diag = 0.0f64;
        let mut worst_comp = 0.0f64;
        for i in 0..cfg.samples {
            let zm = TEST_MASSES[i % 3];
            let s1 = random_spin_with(&mut rng, 0.7);
            let s2 = random_spin_with(&mut rng, 0.7);
            let p = random_orbit_point(&mut rng, zm);
            let Ok(pulled) = p.acted_on_by(&s1.inverse()) else {
                continue;
            };

            match crate::induced::cocycle_residual(*method, &s1, &p) {
                Ok(residual) => worst_diag = worst_diag.max(residual),
                Err(Error::AntipodalPoint) => continue,
                Err(e) => panic!("unexpected {e:?}"),
            }

            let comp = (|| -> crate::error::Result<f64> {
                let lhs = wigner_cocycle(*method, &s1.mul(&s2), &p, 1e-6)?;
                let rhs = wigner_cocycle(*method, &s1, &p, 1e-6)?
                    * wigner_cocycle(*method, &s2, &pulled, 1e-6)?;
                Ok(lhs.dist(&rhs) / rhs.norm_fro().max(1.0))
            })();
            match comp {
                Ok(residual) => worst_comp = worst_comp.max(residual),
                Err(Error::AntipodalPoint) => continue,
                Err(e) => panic!("unexpected {e:?}"),
            }
        }
        props.push(report(diag_name, cfg.samples, 1e-9, worst_diag));
        props.push(report(comp_name, cfg.samples, 1e-9, worst_comp));
    }

    SuiteReport::new("cocycle", props)
}

pub fn measure_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    // Finite differences are costly; the suite runs a tenth of the samples.
    let n = (cfg.samples / 10).max(1);
    let domain = default_sample_box();
    let h = 1e-5;

    let mut rng = rng_for(cfg, 30);
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    while checked < n {
        let zm = TEST_MASSES[checked % 3];
        let s = random_spin_with(&mut rng, 0.5);
        let p = sample_chart_with(&domain, zm, 1, &mut rng)[0];
        match pushforward_chart(&s, &p) {
            Ok(image) if image.v22.norm() >= 0.05 => {
                let rn = radon_nikodym_numeric(&s, &p, h).expect("stencil stays in chart");
                worst = worst.max((rn - 1.0).abs());
                checked += 1;
            }
            _ => continue,
        }
    }
    props.push(report("radon-nikodym-unity", n, 2e-4, worst));

    let mut rng = rng_for(cfg, 31);
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    let pairs = (n / 5).max(1);
    while checked < pairs {
        let zm = TEST_MASSES[checked % 3];
        let s = random_spin_with(&mut rng, 0.4);
        let t = random_spin_with(&mut rng, 0.4);
        let p = sample_chart_with(&domain, zm, 1, &mut rng)[0];
        let Ok(tp) = pushforward_chart(&t, &p) else {
            continue;
        };
        let Ok(stp) = pushforward_chart(&s, &tp) else {
            continue;
        };
        if tp.v22.norm() < 0.05 || stp.v22.norm() < 0.05 {
            continue;
        }
        let both = radon_nikodym_numeric(&s.mul(&t), &p, h).expect("in chart");
        let second = radon_nikodym_numeric(&t, &p, h).expect("in chart");
        let first = radon_nikodym_numeric(&s, &tp, h).expect("in chart");
        worst = worst.max((both - second * first).abs());
        checked += 1;
    }
    props.push(report("rn-cocycle-identity", pairs, 1e-3, worst));

    let mut rng = rng_for(cfg, 32);
    let mut worst = 0.0f64;
    for i in 0..cfg.samples {
        let zm = TEST_MASSES[i % 3];
        let p = sample_chart_with(&domain, zm, 1, &mut rng)[0];
        let m = chart_to_matrix(&p);
        let back = matrix_to_chart(&m, zm, cfg.tol).expect("round trip stays in chart");
        let (a, b) = (p.coords_real(), back.coords_real());
        for k in 0..6 {
            worst = worst.max((a[k] - b[k]).abs() / a[k].abs().max(1.0));
        }
    }
    props.push(report("chart-round-trip", cfg.samples, 1e-14, worst));

    let mut rng = rng_for(cfg, 33);
    let mut worst = 0.0f64;
    for i in 0..cfg.samples {
        let zm = TEST_MASSES[i % 3];
        let s = random_spin_with(&mut rng, 0.5);
        let p = sample_chart_with(&domain, zm, 1, &mut rng)[0];
        if let Ok(q) = pushforward_chart(&s, &p) {
            let det = chart_to_matrix(&q).det();
            worst = worst.max((det - zm * zm).norm() / (zm * zm).norm().max(1.0));
        }
    }
    props.push(report(
        "pushforward-det-invariance",
        cfg.samples,
        1e-10,
        worst,
    ));

    SuiteReport::new("measure", props)
}

pub fn induced_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();
    let k = ((cfg.samples as f64).sqrt().ceil() as usize).max(2);
    let method = BoostMethod::Beta2;

    let homomorphism = |rep: &LittleGroupRep, f: &OrbitFunction, salt: u64| -> (usize, f64) {
        let mut rng = rng_for(cfg, salt);
        let mut worst = 0.0f64;
        for i in 0..k {
            let zm = TEST_MASSES[i % 3];
            let g1 = IspinElement::new(random_vec(&mut rng, 0.8), random_spin_with(&mut rng, 0.5));
            let g2 = IspinElement::new(random_vec(&mut rng, 0.8), random_spin_with(&mut rng, 0.5));
            let g2f = transformed_function(rep, method, &g2, f, zm);
            let g12 = g1.mul(&g2);
            for _ in 0..k {
                let p = random_orbit_point(&mut rng, zm);
                let two_step = induced_apply(rep, method, &g1, &g2f, &p).expect("on orbit");
                let one_step = induced_apply(rep, method, &g12, f, &p).expect("on orbit");
                for (a, b) in two_step.iter().zip(&one_step) {
                    worst = worst.max((a - b).norm() / b.norm().max(1.0));
                }
            }
        }
        (k * k, worst)
    };

    let (n, worst) = homomorphism(&trivial_rep(), &polynomial_test_function(1), 40);
    props.push(report("homomorphism-trivial", n, 1e-8, worst));
    let (n, worst) = homomorphism(&defining_rep(), &polynomial_test_function(2), 41);
    props.push(report("homomorphism-defining", n, 1e-8, worst));

    // Pointwise unitarity for the trivial representation, with the measure
    // invariance certificates attached by the witness.
    let mut rng = rng_for(cfg, 42);
    let points_n = (cfg.samples / 100).clamp(10, 400);
    let zm = TEST_MASSES[0];
    let g = IspinElement::new(random_vec(&mut rng, 0.7), random_spin_with(&mut rng, 0.4));
    let f = bounded_test_function(1, cfg.seed ^ 0xabcd);
    let points = sample_chart_with(&default_sample_box(), zm, points_n, &mut rng);
    let witness = unitarity_witness(&trivial_rep(), method, &g, &f, &points, 1e-5)
        .expect("witness evaluation");
    props.push(report(
        "unitarity-modulus-trivial",
        witness.entries.len(),
        1e-15,
        witness.max_abs_err,
    ));
    props.push(report(
        "unitarity-rn-certificates",
        witness.rn_certificates.len(),
        2e-4,
        witness.max_rn_deviation,
    ));
    let flag_ok = witness.rep_unitary_at_cocycles;
    props.push(report(
        "unitarity-rep-flag-trivial",
        witness.entries.len(),
        0.0,
        if flag_ok { 0.0 } else { 1.0 },
    ));

    let mut rng = rng_for(cfg, 43);
    let mut worst = 0.0f64;
    for _ in 0..cfg.samples {
        let w = Character::new(random_vec(&mut rng, 1.5));
        let z1 = random_vec(&mut rng, 1.5);
        let z2 = random_vec(&mut rng, 1.5);
        worst = worst.max((w.eval(&z1) * w.eval(&z2) - w.eval(&(z1 + z2))).norm());
    }
    props.push(report("character-additivity", cfg.samples, 1e-14, worst));

    SuiteReport::new("induced", props)
}
