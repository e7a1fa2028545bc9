//! Superposition of two pure qubit states expressed entirely in mean spin
//! projections.
//!
//! Two routes compute the same result. The closed form works on the nine real
//! inputs (two pure mean triples plus a sigma triple encoding the complex
//! coefficients) with no complex arithmetic. The oracle builds the two
//! spinors in the alpha = 0 gauge, combines them as c1*chi1 + c2*chi2, and
//! reads the means off the sum. [`superpose_checked`] runs both and fails if
//! they disagree.
//!
//! Everything is stated in the gauge where first spinor components and c1 are
//! real and non-negative; relative phases are carried entirely by (sx, sy)
//! and (sig1, sig2).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{
    ensure_finite, MeanSpinVector, SigmaTriple, Spinor, COMPARISON_TOLERANCE,
    DEGENERATE_NORM_FLOOR, POLE_MARGIN, PURITY_TOLERANCE, SIGMA_POLE_FLOOR,
};
use crate::represent::{means_from_state, state_from_means};

/// Maximum allowed componentwise disagreement of the two routes' means.
pub const CROSS_CHECK_MEANS_TOLERANCE: f64 = 1e-8;

/// Maximum allowed disagreement of the two routes' normalization T.
pub const CROSS_CHECK_NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Which route produced a superposition result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
        }
    }
}

/// Superposed state as a mean triple, together with the normalization
/// denominator T = |c1*chi1 + c2*chi2|^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionResult {
    /// Mean spin projections of the superposed state; pure by construction.
    pub means: MeanSpinVector,
    /// Squared norm T of the unnormalized combination, in (0, 4].
    pub normalization: f64,
    /// Route that produced this result.
    pub method: Method,
}

/// Closed-form result plus the measured disagreement against the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckedSuperposition {
    /// The closed-form result, returned after the oracle confirmed it.
    pub result: SuperpositionResult,
    /// Largest componentwise difference between the two routes' means.
    pub means_deviation: f64,
    /// Absolute difference between the two routes' T.
    pub normalization_deviation: f64,
}

/// Encodes a coefficient pair (c1, c2) with c1 real >= 0 and
/// |c1|^2 + |c2|^2 = 1 as the formal mean triple of the coefficient spinor:
/// sig3 = |c1|^2 - 1/2 and sig1 + i sig2 = conj(c1) * c2.
pub fn sigma_from_coefficients(c1: Complex64, c2: Complex64) -> Result<SigmaTriple> {
    ensure_finite(c1.re, "coefficient c1 (real part)")?;
    ensure_finite(c1.im, "coefficient c1 (imaginary part)")?;
    ensure_finite(c2.re, "coefficient c2 (real part)")?;
    ensure_finite(c2.im, "coefficient c2 (imaginary part)")?;
    let norm_sqr = c1.norm_sqr() + c2.norm_sqr();
    if (norm_sqr - 1.0).abs() > COMPARISON_TOLERANCE {
        return Err(Error::NotNormalized(norm_sqr));
    }
    let phase = c1.arg();
    if phase.abs() > COMPARISON_TOLERANCE {
        return Err(Error::NonzeroC1Phase(phase));
    }
    let product = c1.conj() * c2;
    SigmaTriple::new(product.re, product.im, c1.norm_sqr() - 0.5)
}

/// Decodes a sigma triple back into the coefficient pair:
/// c1 = sqrt(1/2 + sig3) and c2 = (sig1 + i sig2)/c1. When 1/2 + sig3 falls
/// below [`SIGMA_POLE_FLOOR`] the pair is (0, 1) by convention. Left inverse
/// of [`sigma_from_coefficients`] wherever c1 > 0.
pub fn coefficients_from_sigma(sig: &SigmaTriple) -> (Complex64, Complex64) {
    let weight = 0.5 + sig.sig3;
    if weight < SIGMA_POLE_FLOOR {
        return (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    }
    let root = weight.sqrt();
    (
        Complex64::new(root, 0.0),
        Complex64::new(sig.sig1 / root, sig.sig2 / root),
    )
}

fn check_superposition_inputs(a: &MeanSpinVector, b: &MeanSpinVector) -> Result<()> {
    for (m, which) in [(a, "first state"), (b, "second state")] {
        if !m.is_pure() {
            return Err(Error::NotPure {
                norm_sqr: m.norm_sqr(),
                tolerance: PURITY_TOLERANCE,
            });
        }
        let margin = 0.5 + m.sz;
        if margin < POLE_MARGIN {
            return Err(Error::PoleError { which, margin });
        }
    }
    Ok(())
}

fn normalization_unchecked(a: &MeanSpinVector, b: &MeanSpinVector, sig: &SigmaTriple) -> f64 {
    let weight_a = 0.5 + a.sz;
    let weight_b = 0.5 + b.sz;
    let cross = (weight_a * weight_b).sqrt();
    1.0 + 2.0 / cross
        * (sig.sig1 * (b.sx * a.sx + b.sy * a.sy + weight_a * weight_b)
            + sig.sig2 * (a.sy * b.sx - a.sx * b.sy))
}

/// Normalization denominator T = |c1*chi1 + c2*chi2|^2, computed from the
/// nine real inputs alone.
pub fn normalization_t(a: &MeanSpinVector, b: &MeanSpinVector, sig: &SigmaTriple) -> Result<f64> {
    check_superposition_inputs(a, b)?;
    Ok(normalization_unchecked(a, b, sig))
}

/// Superposition by direct spinor arithmetic: builds both states in the
/// alpha = 0 gauge, forms c1*chi1 + c2*chi2, and reads the means off the sum.
/// Serves as the independent cross-check for [`superpose_closed`].
pub fn superpose_oracle(
    a: &MeanSpinVector,
    b: &MeanSpinVector,
    sig: &SigmaTriple,
) -> Result<SuperpositionResult> {
    check_superposition_inputs(a, b)?;
    let chi1 = state_from_means(a, 0.0)?;
    let chi2 = state_from_means(b, 0.0)?;
    let (c1, c2) = coefficients_from_sigma(sig);
    let combined = Spinor {
        up: c1 * chi1.up + c2 * chi2.up,
        down: c1 * chi1.down + c2 * chi2.down,
    };
    let normalization = combined.norm_sqr();
    if normalization < DEGENERATE_NORM_FLOOR {
        return Err(Error::DegenerateSuperposition(normalization));
    }
    Ok(SuperpositionResult {
        means: means_from_state(&combined)?,
        normalization,
        method: Method::Oracle,
    })
}

/// Superposition in closed form: the output mean triple is a function of the
/// nine real inputs only, with no complex arithmetic.
pub fn superpose_closed(
    a: &MeanSpinVector,
    b: &MeanSpinVector,
    sig: &SigmaTriple,
) -> Result<SuperpositionResult> {
    check_superposition_inputs(a, b)?;
    let normalization = normalization_unchecked(a, b, sig);
    if normalization < DEGENERATE_NORM_FLOOR {
        return Err(Error::DegenerateSuperposition(normalization));
    }

    let weight_a = 0.5 + a.sz; // squared first spinor component of state a
    let weight_b = 0.5 + b.sz;
    let weight_c = 0.5 + sig.sig3; // squared coefficient c1
    let counter_c = 0.5 - sig.sig3; // squared coefficient magnitude |c2|^2
    let cross = (weight_a * weight_b).sqrt();
    let ratio_ab = (weight_b / weight_a).sqrt();
    let ratio_ba = (weight_a / weight_b).sqrt();

    let sz = -0.5
        + (weight_c * weight_a + counter_c * weight_b + 2.0 * cross * sig.sig1) / normalization;
    let sx = (a.sx * weight_c
        + b.sx * counter_c
        + ratio_ab * (sig.sig1 * a.sx + sig.sig2 * a.sy)
        + ratio_ba * (sig.sig1 * b.sx - sig.sig2 * b.sy))
        / normalization;
    let sy = (a.sy * weight_c
        + b.sy * counter_c
        + ratio_ab * (sig.sig1 * a.sy - sig.sig2 * a.sx)
        + ratio_ba * (sig.sig2 * b.sx + sig.sig1 * b.sy))
        / normalization;

    Ok(SuperpositionResult {
        means: MeanSpinVector::new_unchecked(sx, sy, sz),
        normalization,
        method: Method::ClosedForm,
    })
}

/// Runs both routes, verifies they agree within
/// [`CROSS_CHECK_MEANS_TOLERANCE`] and
/// [`CROSS_CHECK_NORMALIZATION_TOLERANCE`], and returns the closed-form
/// result together with the measured deviations.
pub fn superpose_checked(
    a: &MeanSpinVector,
    b: &MeanSpinVector,
    sig: &SigmaTriple,
) -> Result<CheckedSuperposition> {
    let closed = superpose_closed(a, b, sig)?;
    let oracle = superpose_oracle(a, b, sig)?;
    let means_deviation = closed.means.max_component_difference(&oracle.means);
    let normalization_deviation = (closed.normalization - oracle.normalization).abs();
    if means_deviation > CROSS_CHECK_MEANS_TOLERANCE
        || normalization_deviation > CROSS_CHECK_NORMALIZATION_TOLERANCE
    {
        return Err(Error::CrossCheckMismatch {
            means_deviation,
            normalization_deviation,
        });
    }
    Ok(CheckedSuperposition {
        result: closed,
        means_deviation,
        normalization_deviation,
    })
}
