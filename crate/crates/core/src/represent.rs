//! Conversions among the four descriptions of a qubit state: mean spin
//! projections, measurement probabilities, density matrix, and spinor.
//!
//! The mean triple is the central description. Probabilities relate to it by
//! the shift pk = 1/2 + sk, the density matrix reads
//! [[1/2 + sz, sx - i sy], [sx + i sy, 1/2 - sz]], and a pure mean triple
//! lifts to the spinor e^(i alpha) (sqrt(1/2 + sz), (sx + i sy)/sqrt(1/2 + sz))
//! with an arbitrary gauge phase alpha.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{
    ensure_finite, DensityMatrix2, MeanSpinVector, ProbabilityTriple, Spinor,
    CONSTRUCTION_TOLERANCE, PURITY_TOLERANCE, SPINOR_NORM_FLOOR,
};

fn ball_violation(norm_sqr: f64) -> Error {
    Error::ConstraintViolation(format!(
        "triple lies outside the Bloch ball: squared radius {norm_sqr} exceeds 1/4"
    ))
}

/// Shifts probabilities to mean projections: sk = pk - 1/2.
pub fn means_from_probabilities(p: &ProbabilityTriple) -> Result<MeanSpinVector> {
    if !p.in_ball() {
        return Err(ball_violation(p.shifted_norm_sqr()));
    }
    Ok(MeanSpinVector::new_unchecked(
        p.p1 - 0.5,
        p.p2 - 0.5,
        p.p3 - 0.5,
    ))
}

/// Shifts mean projections to probabilities: pk = 1/2 + sk. Exact inverse of
/// [`means_from_probabilities`].
pub fn probabilities_from_means(m: &MeanSpinVector) -> Result<ProbabilityTriple> {
    if !m.in_ball() {
        return Err(ball_violation(m.norm_sqr()));
    }
    ProbabilityTriple::new(m.sx + 0.5, m.sy + 0.5, m.sz + 0.5)
}

/// Density matrix of a (pure or mixed) mean triple.
pub fn density_from_means(m: &MeanSpinVector) -> Result<DensityMatrix2> {
    if !m.in_ball() {
        return Err(ball_violation(m.norm_sqr()));
    }
    Ok(DensityMatrix2::from_parts_unchecked(
        0.5 + m.sz,
        0.5 - m.sz,
        Complex64::new(m.sx, -m.sy),
    ))
}

/// Density matrix straight from the probability triple.
pub fn density_from_probabilities(p: &ProbabilityTriple) -> Result<DensityMatrix2> {
    if !p.in_ball() {
        return Err(ball_violation(p.shifted_norm_sqr()));
    }
    Ok(DensityMatrix2::from_parts_unchecked(
        p.p3,
        1.0 - p.p3,
        Complex64::new(p.p1 - 0.5, -(p.p2 - 0.5)),
    ))
}

/// Reads the mean projections off a density matrix: sz from the diagonal,
/// sx + i sy from entry (2,1). Exact inverse of [`density_from_means`].
pub fn means_from_density(rho: &DensityMatrix2) -> MeanSpinVector {
    let plus = rho.rho21();
    MeanSpinVector::new_unchecked(plus.re, plus.im, 0.5 * (rho.rho11() - rho.rho22()))
}

/// Mean projections of a spinor state. The input is normalized internally,
/// so unnormalized spinors (e.g. raw superposition sums) are accepted; the
/// result always sits on the Bloch sphere surface.
pub fn means_from_state(s: &Spinor) -> Result<MeanSpinVector> {
    let norm_sqr = s.norm_sqr();
    ensure_finite(norm_sqr, "spinor norm")?;
    if norm_sqr <= SPINOR_NORM_FLOOR {
        return Err(Error::ZeroSpinor(norm_sqr));
    }
    let plus = s.up.conj() * s.down;
    Ok(MeanSpinVector::new_unchecked(
        plus.re / norm_sqr,
        plus.im / norm_sqr,
        0.5 * (s.up.norm_sqr() - s.down.norm_sqr()) / norm_sqr,
    ))
}

/// Spinor of a pure mean triple, in the gauge where the first component is
/// e^(i alpha) times a non-negative real.
///
/// The second component is computed as (sx + i sy)/sqrt(1/2 + sz), which is
/// regular at the north pole. At the south pole (1/2 + sz below
/// [`CONSTRUCTION_TOLERANCE`]) purity forces sx = sy = 0 and the state is
/// pinned to e^(i alpha) (0, 1).
///
/// Slightly impure inputs (e.g. measurement estimates) are rejected rather
/// than projected; callers can purify explicitly with
/// [`crate::measure::project_to_pure`].
pub fn state_from_means(m: &MeanSpinVector, alpha: f64) -> Result<Spinor> {
    ensure_finite(alpha, "gauge phase alpha")?;
    if !m.is_pure() {
        return Err(Error::NotPure {
            norm_sqr: m.norm_sqr(),
            tolerance: PURITY_TOLERANCE,
        });
    }
    let phase = Complex64::from_polar(1.0, alpha);
    let weight = 0.5 + m.sz;
    if weight < CONSTRUCTION_TOLERANCE {
        return Ok(Spinor {
            up: Complex64::new(0.0, 0.0),
            down: phase,
        });
    }
    let root = weight.sqrt();
    Ok(Spinor {
        up: phase * root,
        down: phase * Complex64::new(m.sx, m.sy) / root,
    })
}
