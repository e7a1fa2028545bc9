//! Property tests for the representation conversions and the superposition
//! rule: round trips, purity preservation, and closed-form/oracle agreement
//! over seeded random samples.

use meanspin::qcore::{DensityMatrix2, MeanSpinVector, ProbabilityTriple, SigmaTriple, Spinor};
use meanspin::{
    density_from_means, density_from_probabilities, density_from_spinor, means_from_density,
    means_from_probabilities, means_from_state, normalization_t, probabilities_from_means,
    project_to_pure, sigma_from_coefficients, state_from_means, superpose_closed, superpose_oracle,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Doubles on the 2^-53 grid in [0, 1), the same grid measurement
/// frequencies and standard uniform generators live on. The half-shift
/// pk - 1/2 is exact there, which is what makes the probability round trip
/// bit-exact.
fn grid_unit(raw: u64) -> f64 {
    (raw >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn probability_triple() -> impl Strategy<Value = ProbabilityTriple> {
    (any::<u64>(), any::<u64>(), any::<u64>())
        .prop_map(|(a, b, c)| (grid_unit(a), grid_unit(b), grid_unit(c)))
        .prop_filter("inside the shifted ball", |(p1, p2, p3)| {
            let d = |p: f64| (p - 0.5) * (p - 0.5);
            d(*p1) + d(*p2) + d(*p3) <= 0.25
        })
        .prop_map(|(p1, p2, p3)| ProbabilityTriple::new(p1, p2, p3).unwrap())
}

fn means_in_ball() -> impl Strategy<Value = MeanSpinVector> {
    (-0.5f64..=0.5, -0.5f64..=0.5, -0.5f64..=0.5)
        .prop_filter("inside the Bloch ball", |(x, y, z)| {
            x * x + y * y + z * z <= 0.25
        })
        .prop_map(|(x, y, z)| MeanSpinVector::new(x, y, z).unwrap())
}

/// Pure mean triples parametrized by height and azimuth; the pole margin
/// keeps 1/2 + sz large enough for the spinor parametrization.
fn pure_means(min_weight: f64) -> impl Strategy<Value = MeanSpinVector> {
    (-0.5f64 + min_weight..=0.5, 0.0f64..std::f64::consts::TAU).prop_map(|(z, phi)| {
        let r = (0.25 - z * z).max(0.0).sqrt();
        MeanSpinVector::new(r * phi.cos(), r * phi.sin(), z).unwrap()
    })
}

fn spinor() -> impl Strategy<Value = Spinor> {
    (-2.0f64..=2.0, -2.0f64..=2.0, -2.0f64..=2.0, -2.0f64..=2.0)
        .prop_filter("norm well above the zero floor", |(a, b, c, d)| {
            a * a + b * b + c * c + d * d > 1e-6
        })
        .prop_map(|(a, b, c, d)| Spinor::new(Complex64::new(a, b), Complex64::new(c, d)).unwrap())
}

proptest! {
    /// Probabilities -> means -> probabilities is bit-identical on the grid.
    #[test]
    fn probability_round_trip_is_bit_exact(p in probability_triple()) {
        let m = means_from_probabilities(&p).unwrap();
        let back = probabilities_from_means(&m).unwrap();
        prop_assert_eq!(p.p1, back.p1);
        prop_assert_eq!(p.p2, back.p2);
        prop_assert_eq!(p.p3, back.p3);
    }

    /// Both density routes produce bit-identical entries on the grid.
    #[test]
    fn density_routes_agree_bit_exactly(p in probability_triple()) {
        let direct = density_from_probabilities(&p).unwrap();
        let via_means = density_from_means(&means_from_probabilities(&p).unwrap()).unwrap();
        prop_assert_eq!(direct.rho11(), via_means.rho11());
        prop_assert_eq!(direct.rho22(), via_means.rho22());
        prop_assert_eq!(direct.rho12(), via_means.rho12());
    }

    /// Means -> density -> means loses at most 1e-14 per component.
    #[test]
    fn means_density_round_trip(m in means_in_ball()) {
        let back = means_from_density(&density_from_means(&m).unwrap());
        prop_assert!(m.max_component_difference(&back) <= 1e-14);
    }

    /// Means -> spinor -> means is gauge invariant: any phase alpha cancels.
    #[test]
    fn means_spinor_round_trip_under_gauge(
        m in pure_means(1e-8),
        alpha in -std::f64::consts::TAU..std::f64::consts::TAU,
    ) {
        let s = state_from_means(&m, alpha).unwrap();
        prop_assert!(s.is_normalized());
        let back = means_from_state(&s).unwrap();
        prop_assert!(m.max_component_difference(&back) <= 1e-10);
    }

    /// Every spinor projector has unit purity.
    #[test]
    fn spinor_projector_is_pure(s in spinor()) {
        let rho = density_from_spinor(&s).unwrap();
        prop_assert!((rho.purity() - 1.0).abs() <= 1e-12);
    }

    /// Means read off any spinor land on the Bloch sphere surface.
    #[test]
    fn means_from_state_lands_on_the_sphere(s in spinor()) {
        let m = means_from_state(&s).unwrap();
        prop_assert!((m.norm_sqr() - 0.25).abs() <= 1e-12);
    }

    /// Purity ties to the Bloch radius: Tr(rho^2) = 1/2 + 2 |m|^2, checked
    /// against brute-force matrix arithmetic on the raw entries.
    #[test]
    #[allow(clippy::needless_range_loop)]
    fn purity_matches_bloch_radius(m in means_in_ball()) {
        let rho = density_from_means(&m).unwrap();
        let raw = [
            [Complex64::new(rho.rho11(), 0.0), rho.rho12()],
            [rho.rho21(), Complex64::new(rho.rho22(), 0.0)],
        ];
        let mut trace = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                trace += raw[i][j] * raw[j][i];
            }
        }
        prop_assert!(trace.im.abs() <= 1e-15);
        prop_assert!((trace.re - (0.5 + 2.0 * m.norm_sqr())).abs() <= 1e-12);
        prop_assert!((rho.purity() - trace.re).abs() <= 1e-14);
    }

    /// Radial projection is idempotent and lands on the sphere.
    #[test]
    fn projection_is_idempotent(m in means_in_ball()) {
        prop_assume!(m.norm() > 1e-6);
        let once = project_to_pure(&m).unwrap();
        prop_assert!((once.norm_sqr() - 0.25).abs() <= 1e-14);
        let twice = project_to_pure(&once).unwrap();
        prop_assert!(once.max_component_difference(&twice) <= 1e-15);
    }

    /// Validated DensityMatrix2 values always satisfy the shared invariants.
    #[test]
    fn density_invariants_hold(m in means_in_ball()) {
        let rho = density_from_means(&m).unwrap();
        prop_assert!((rho.trace() - 1.0).abs() <= 1e-12);
        prop_assert!(rho.determinant() >= -1e-12);
        prop_assert_eq!(rho.rho21(), rho.rho12().conj());
        // Rebuilding through the validating constructor must succeed.
        prop_assert!(DensityMatrix2::new(rho.rho11(), rho.rho22(), rho.rho12()).is_ok());
    }
}

// --- seeded sphere sampling -------------------------------------------------

fn sample_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
        ];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 1e-6 {
            return [v[0] / norm, v[1] / norm, v[2] / norm];
        }
    }
}

fn sample_pure_means(rng: &mut ChaCha8Rng, min_weight: f64) -> MeanSpinVector {
    loop {
        let d = sample_direction(rng);
        let m = MeanSpinVector::new(0.5 * d[0], 0.5 * d[1], 0.5 * d[2]).unwrap();
        if 0.5 + m.sz >= min_weight {
            return m;
        }
    }
}

fn sample_sigma(rng: &mut ChaCha8Rng, min_weight: f64) -> SigmaTriple {
    loop {
        let d = sample_direction(rng);
        let sig = SigmaTriple::new(0.5 * d[0], 0.5 * d[1], 0.5 * d[2]).unwrap();
        if 0.5 + sig.sig3 >= min_weight {
            return sig;
        }
    }
}

/// Closed form vs oracle over seeded random triples away from the poles.
/// The acceptance suite runs the full 10,000-sample version; this guards the
/// library itself with a quarter of the volume.
#[test]
fn closed_form_agrees_with_oracle_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(9_020_509);
    let mut max_means_dev = 0.0f64;
    let mut max_t_dev = 0.0f64;
    let mut accepted = 0usize;
    while accepted < 2_500 {
        let a = sample_pure_means(&mut rng, 1e-3);
        let b = sample_pure_means(&mut rng, 1e-3);
        let sig = sample_sigma(&mut rng, 1e-3);
        let t = normalization_t(&a, &b, &sig).unwrap();
        if t < 1e-6 {
            continue;
        }
        accepted += 1;

        let closed = superpose_closed(&a, &b, &sig).unwrap();
        let oracle = superpose_oracle(&a, &b, &sig).unwrap();

        max_means_dev = max_means_dev.max(closed.means.max_component_difference(&oracle.means));
        max_t_dev = max_t_dev.max((closed.normalization - oracle.normalization).abs());

        // Purity preservation and the T bound, on both routes.
        assert!((closed.means.norm_sqr() - 0.25).abs() <= 1e-10);
        assert!((oracle.means.norm_sqr() - 0.25).abs() <= 1e-10);
        assert!(closed.normalization > 0.0 && closed.normalization <= 4.0 + 1e-12);
        assert!((t - closed.normalization).abs() <= 1e-15);
    }
    assert!(max_means_dev <= 1e-10, "means deviate by {max_means_dev:e}");
    assert!(max_t_dev <= 1e-12, "T deviates by {max_t_dev:e}");
}

/// sig = (0, 0, 1/2) keeps the first state; superposing a state with itself
/// keeps the state for every admissible sigma.
#[test]
fn identity_and_idempotence_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_509);
    let identity = SigmaTriple::new(0.0, 0.0, 0.5).unwrap();
    for _ in 0..500 {
        let a = sample_pure_means(&mut rng, 1e-3);
        let b = sample_pure_means(&mut rng, 1e-3);

        let kept = superpose_closed(&a, &b, &identity).unwrap();
        assert_eq!(kept.normalization, 1.0);
        assert!(kept.means.max_component_difference(&a) <= 1e-14);

        let sig = sample_sigma(&mut rng, 1e-3);
        if normalization_t(&a, &a, &sig).unwrap() < 1e-6 {
            continue;
        }
        let idem = superpose_closed(&a, &a, &sig).unwrap();
        assert!(idem.means.max_component_difference(&a) <= 1e-10);
    }
}

/// Decode-encode over random coefficient pairs with c1 > 0.
#[test]
fn sigma_round_trip_on_random_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..1_000 {
        let magnitude_sqr: f64 = rng.random_range(1e-6..1.0);
        let c1 = Complex64::new((1.0 - magnitude_sqr).sqrt(), 0.0);
        let phase: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let c2 = Complex64::from_polar(magnitude_sqr.sqrt(), phase);

        let sig = sigma_from_coefficients(c1, c2).unwrap();
        assert!((sig.norm_sqr() - 0.25).abs() <= 1e-12);
        let (r1, r2) = meanspin::coefficients_from_sigma(&sig);
        assert!((r1 - c1).norm() <= 1e-12);
        assert!((r2 - c2).norm() <= 1e-12);
    }
}
