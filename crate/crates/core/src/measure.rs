//! Simulated projective spin measurement along the x, y, z axes, frequency
//! estimation of the mean triple, and the end-to-end pipeline that feeds the
//! estimates through the superposition rule.
//!
//! Shot noise comes from a pinned generator so that identical inputs
//! reproduce identical counts on every platform: ChaCha8 keyed by the user
//! seed, one independent stream per (state, axis) pair (stream id =
//! 3 * state_index + axis_index), and uniform variates taken as the top 53
//! bits of each 64-bit draw. An outcome counts as +1/2 when the variate falls
//! below pk = 1/2 + sk, so pk = 1 and pk = 0 are deterministic.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qcore::{MeanSpinVector, SigmaTriple};
use crate::superpose::{superpose_checked, SuperpositionResult};

/// Minimum Euclidean norm a mean triple needs for radial projection; below
/// this the direction is undefined.
pub const PROJECTION_NORM_FLOOR: f64 = 1e-12;

/// Measurement axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

/// Outcome counts of repeated projective measurement along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShotRecord {
    axis: Axis,
    shots: u64,
    ups: u64,
}

impl ShotRecord {
    /// Builds a record, requiring at least one shot and ups <= shots.
    pub fn new(axis: Axis, shots: u64, ups: u64) -> Result<Self> {
        if shots == 0 {
            return Err(Error::ConstraintViolation(
                "shot record needs at least one shot".to_string(),
            ));
        }
        if ups > shots {
            return Err(Error::ConstraintViolation(format!(
                "ups = {ups} exceeds shots = {shots}"
            )));
        }
        Ok(Self { axis, shots, ups })
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn ups(&self) -> u64 {
        self.ups
    }

    /// Observed frequency of the +1/2 outcome.
    pub fn up_fraction(&self) -> f64 {
        self.ups as f64 / self.shots as f64
    }
}

/// Frequency estimate of a mean triple, with per-axis binomial standard
/// errors. The means always sit inside the component box |sk| <= 1/2 but may
/// leave the Bloch ball; project with [`project_to_pure`] before feeding them
/// to operations that need a pure state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatedMeans {
    pub means: MeanSpinVector,
    /// Standard errors sqrt(p(1-p)/N), ordered x, y, z.
    pub stderr: [f64; 3],
    pub shots_per_axis: u64,
}

const U64_MANTISSA_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

fn unit_variate(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * U64_MANTISSA_SCALE
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws `shots_per_axis` Bernoulli outcomes per axis with pk = 1/2 + sk.
/// Mixed states are legitimate inputs; the per-component box bound already
/// keeps every pk inside [0, 1].
pub fn simulate_shots(
    true_means: &MeanSpinVector,
    shots_per_axis: u64,
    seed: u64,
) -> Result<[ShotRecord; 3]> {
    simulate_shots_for_state(true_means, shots_per_axis, seed, 0)
}

/// Shot simulation with an explicit state index so that several states in
/// one experiment draw from disjoint streams.
pub(crate) fn simulate_shots_for_state(
    true_means: &MeanSpinVector,
    shots_per_axis: u64,
    seed: u64,
    state_index: u64,
) -> Result<[ShotRecord; 3]> {
    if shots_per_axis == 0 {
        return Err(Error::ConstraintViolation(
            "shots_per_axis must be at least 1".to_string(),
        ));
    }
    let probabilities = [
        0.5 + true_means.sx,
        0.5 + true_means.sy,
        0.5 + true_means.sz,
    ];
    Ok(Axis::ALL.map(|axis| {
        let mut rng = stream_rng(seed, 3 * state_index + axis.index() as u64);
        let p = probabilities[axis.index()];
        let mut ups = 0u64;
        for _ in 0..shots_per_axis {
            if unit_variate(&mut rng) < p {
                ups += 1;
            }
        }
        ShotRecord {
            axis,
            shots: shots_per_axis,
            ups,
        }
    }))
}

/// Maximum-likelihood frequency estimate from one record per axis:
/// sk = ups/shots - 1/2 with standard error sqrt(p(1-p)/N).
pub fn estimate_means(records: &[ShotRecord; 3]) -> Result<EstimatedMeans> {
    let mut by_axis: [Option<&ShotRecord>; 3] = [None, None, None];
    for record in records {
        let slot = &mut by_axis[record.axis.index()];
        if slot.is_some() {
            return Err(Error::MissingAxis);
        }
        *slot = Some(record);
    }
    let x = by_axis[0].ok_or(Error::MissingAxis)?;
    let y = by_axis[1].ok_or(Error::MissingAxis)?;
    let z = by_axis[2].ok_or(Error::MissingAxis)?;
    if x.shots != y.shots || y.shots != z.shots {
        return Err(Error::ShotCountMismatch);
    }

    let mut means = [0.0; 3];
    let mut stderr = [0.0; 3];
    for (i, record) in [x, y, z].into_iter().enumerate() {
        let p = record.up_fraction();
        means[i] = p - 0.5;
        stderr[i] = (p * (1.0 - p) / record.shots as f64).sqrt();
    }
    Ok(EstimatedMeans {
        // ups/shots lies in [0, 1], so each component is boxed by 1/2.
        means: MeanSpinVector::new_unchecked(means[0], means[1], means[2]),
        stderr,
        shots_per_axis: x.shots,
    })
}

/// Radial projection m * (1/2 / |m|) onto the Bloch sphere surface, the
/// direction-preserving purification of a noisy estimate.
pub fn project_to_pure(m: &MeanSpinVector) -> Result<MeanSpinVector> {
    let norm = m.norm();
    if norm <= PROJECTION_NORM_FLOOR {
        return Err(Error::ZeroVector);
    }
    let scale = 0.5 / norm;
    Ok(MeanSpinVector::new_unchecked(
        m.sx * scale,
        m.sy * scale,
        m.sz * scale,
    ))
}

/// Everything the end-to-end experiment produced: the per-state estimates,
/// their projections, the superposition of the projected estimates, the
/// noiseless reference, and the sup-norm deviation between the two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentReport {
    pub a_estimated: EstimatedMeans,
    pub b_estimated: EstimatedMeans,
    pub a_projected: MeanSpinVector,
    pub b_projected: MeanSpinVector,
    pub superposed: SuperpositionResult,
    pub reference: SuperpositionResult,
    /// Largest componentwise difference between `superposed.means` and
    /// `reference.means`.
    pub deviation: f64,
}

/// Simulates shots for both input states, estimates and projects their mean
/// triples, superposes the estimates, and compares against the noiseless
/// superposition of the true inputs.
pub fn end_to_end_experiment(
    a_true: &MeanSpinVector,
    b_true: &MeanSpinVector,
    sig: &SigmaTriple,
    shots_per_axis: u64,
    seed: u64,
) -> Result<ExperimentReport> {
    // Validates purity and pole margins of the true inputs up front.
    let reference = superpose_checked(a_true, b_true, sig)?;

    let a_records = simulate_shots_for_state(a_true, shots_per_axis, seed, 0)?;
    let b_records = simulate_shots_for_state(b_true, shots_per_axis, seed, 1)?;
    let a_estimated = estimate_means(&a_records)?;
    let b_estimated = estimate_means(&b_records)?;
    let a_projected = project_to_pure(&a_estimated.means)?;
    let b_projected = project_to_pure(&b_estimated.means)?;
    let superposed = superpose_checked(&a_projected, &b_projected, sig)?;
    let deviation = superposed
        .result
        .means
        .max_component_difference(&reference.result.means);

    Ok(ExperimentReport {
        a_estimated,
        b_estimated,
        a_projected,
        b_projected,
        superposed: superposed.result,
        reference: reference.result,
        deviation,
    })
}
