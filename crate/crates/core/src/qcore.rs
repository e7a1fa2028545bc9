//! Foundational value types: complex spinors, structurally Hermitian 2x2
//! density matrices, and the three-component triples (mean spin projections,
//! measurement probabilities, coefficient sigmas) shared by every module.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is freely shareable between threads.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute tolerance for construction-time invariant checks.
pub const CONSTRUCTION_TOLERANCE: f64 = 1e-12;

/// Absolute tolerance when comparing two independent computations of the
/// same quantity.
pub const COMPARISON_TOLERANCE: f64 = 1e-10;

/// Bound on | |m|^2 - 1/4 | below which a mean triple counts as pure.
pub const PURITY_TOLERANCE: f64 = 1e-10;

/// Minimum accepted value of 1/2 + sz for superposition inputs. The spinor
/// parametrization divides by sqrt(1/2 + sz), so states this close to the
/// south pole are refused by both superposition routes.
pub const POLE_MARGIN: f64 = 1e-8;

/// Squared spinor norm at or below this is treated as the zero spinor.
pub const SPINOR_NORM_FLOOR: f64 = 1e-24;

/// Squared norm of a superposed spinor below this counts as complete
/// destructive interference.
pub const DEGENERATE_NORM_FLOOR: f64 = 1e-12;

/// Below this value of 1/2 + sig3 the coefficient pair is pinned to (0, 1):
/// the unique state with a vanishing first component, up to gauge.
pub const SIGMA_POLE_FLOOR: f64 = 1e-12;

pub(crate) fn ensure_finite(value: f64, context: &'static str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(context))
    }
}

/// Two-component complex state vector of a spin-1/2 particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    /// Amplitude of the m = +1/2 basis state.
    pub up: Complex64,
    /// Amplitude of the m = -1/2 basis state.
    pub down: Complex64,
}

impl Spinor {
    /// Builds a spinor, rejecting non-finite amplitudes. The norm is not
    /// constrained here; operations that need a normalizable state check it
    /// against [`SPINOR_NORM_FLOOR`] themselves.
    pub fn new(up: Complex64, down: Complex64) -> Result<Self> {
        ensure_finite(up.re, "spinor up (real part)")?;
        ensure_finite(up.im, "spinor up (imaginary part)")?;
        ensure_finite(down.re, "spinor down (real part)")?;
        ensure_finite(down.im, "spinor down (imaginary part)")?;
        Ok(Self { up, down })
    }

    /// Squared Euclidean norm |up|^2 + |down|^2.
    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    /// True when the squared norm is 1 within [`CONSTRUCTION_TOLERANCE`].
    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= CONSTRUCTION_TOLERANCE
    }
}

/// 2x2 Hermitian complex matrix with unit trace and non-negative determinant.
///
/// Hermiticity is structural rather than checked: only the two real diagonal
/// entries and the upper off-diagonal entry are stored, and entry (2,1) is
/// always derived as the conjugate of entry (1,2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    rho11: f64,
    rho22: f64,
    rho12: Complex64,
}

impl DensityMatrix2 {
    /// Builds a density matrix from its diagonal and upper off-diagonal
    /// entries, validating unit trace and positive semidefiniteness.
    pub fn new(rho11: f64, rho22: f64, rho12: Complex64) -> Result<Self> {
        ensure_finite(rho11, "density matrix entry (1,1)")?;
        ensure_finite(rho22, "density matrix entry (2,2)")?;
        ensure_finite(rho12.re, "density matrix entry (1,2) (real part)")?;
        ensure_finite(rho12.im, "density matrix entry (1,2) (imaginary part)")?;
        let trace = rho11 + rho22;
        if (trace - 1.0).abs() > CONSTRUCTION_TOLERANCE {
            return Err(Error::InvalidDensity(format!("trace = {trace} is not 1")));
        }
        let determinant = rho11 * rho22 - rho12.norm_sqr();
        if determinant < -CONSTRUCTION_TOLERANCE {
            return Err(Error::InvalidDensity(format!(
                "determinant = {determinant} is negative; matrix is not positive semidefinite"
            )));
        }
        Ok(Self {
            rho11,
            rho22,
            rho12,
        })
    }

    /// Internal constructor for entries that are valid by derivation.
    pub(crate) fn from_parts_unchecked(rho11: f64, rho22: f64, rho12: Complex64) -> Self {
        debug_assert!((rho11 + rho22 - 1.0).abs() <= 1e-9);
        Self {
            rho11,
            rho22,
            rho12,
        }
    }

    /// Entry (1,1); real by Hermiticity.
    pub fn rho11(&self) -> f64 {
        self.rho11
    }

    /// Entry (2,2); real by Hermiticity.
    pub fn rho22(&self) -> f64 {
        self.rho22
    }

    /// Entry (1,2).
    pub fn rho12(&self) -> Complex64 {
        self.rho12
    }

    /// Entry (2,1), derived as the conjugate of entry (1,2).
    pub fn rho21(&self) -> Complex64 {
        self.rho12.conj()
    }

    /// Trace, real by construction.
    pub fn trace(&self) -> f64 {
        self.rho11 + self.rho22
    }

    /// Determinant, real by Hermiticity.
    pub fn determinant(&self) -> f64 {
        self.rho11 * self.rho22 - self.rho12.norm_sqr()
    }

    /// Purity Tr(rho^2), in [1/2, 1] for a valid qubit density matrix.
    pub fn purity(&self) -> f64 {
        self.rho11 * self.rho11 + self.rho22 * self.rho22 + 2.0 * self.rho12.norm_sqr()
    }
}

/// Projector |s><s| / |s|^2 of a (not necessarily normalized) spinor.
///
/// Fails with [`Error::ZeroSpinor`] when the squared norm does not exceed
/// [`SPINOR_NORM_FLOOR`].
pub fn density_from_spinor(s: &Spinor) -> Result<DensityMatrix2> {
    let norm_sqr = s.norm_sqr();
    ensure_finite(norm_sqr, "spinor norm")?;
    if norm_sqr <= SPINOR_NORM_FLOOR {
        return Err(Error::ZeroSpinor(norm_sqr));
    }
    Ok(DensityMatrix2::from_parts_unchecked(
        s.up.norm_sqr() / norm_sqr,
        s.down.norm_sqr() / norm_sqr,
        s.up * s.down.conj() / norm_sqr,
    ))
}

/// Three mean spin projections (sx, sy, sz) onto the orthogonal axes.
///
/// Construction enforces finiteness and the per-component bounds
/// |sk| <= 1/2; the Bloch-ball constraint |m|^2 <= 1/4 is checked by the
/// operations that require it, so that raw measurement estimates (which can
/// leave the ball while staying inside the component box) remain
/// representable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSpinVector {
    pub sx: f64,
    pub sy: f64,
    pub sz: f64,
}

impl MeanSpinVector {
    pub fn new(sx: f64, sy: f64, sz: f64) -> Result<Self> {
        ensure_finite(sx, "mean spin sx")?;
        ensure_finite(sy, "mean spin sy")?;
        ensure_finite(sz, "mean spin sz")?;
        for (value, name) in [(sx, "sx"), (sy, "sy"), (sz, "sz")] {
            if value.abs() > 0.5 + CONSTRUCTION_TOLERANCE {
                return Err(Error::ConstraintViolation(format!(
                    "mean spin projection {name} = {value} lies outside [-1/2, 1/2]"
                )));
            }
        }
        Ok(Self { sx, sy, sz })
    }

    /// Internal constructor for components that are bounded by derivation.
    pub(crate) fn new_unchecked(sx: f64, sy: f64, sz: f64) -> Self {
        Self { sx, sy, sz }
    }

    /// Squared Euclidean length sx^2 + sy^2 + sz^2.
    pub fn norm_sqr(&self) -> f64 {
        self.sx * self.sx + self.sy * self.sy + self.sz * self.sz
    }

    /// Euclidean length.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// True when the triple sits on the Bloch sphere surface within
    /// [`PURITY_TOLERANCE`], i.e. describes a pure state.
    pub fn is_pure(&self) -> bool {
        (self.norm_sqr() - 0.25).abs() <= PURITY_TOLERANCE
    }

    /// True when the triple lies inside the Bloch ball within
    /// [`CONSTRUCTION_TOLERANCE`].
    pub fn in_ball(&self) -> bool {
        self.norm_sqr() <= 0.25 + CONSTRUCTION_TOLERANCE
    }

    /// Largest absolute componentwise difference to another triple.
    pub fn max_component_difference(&self, other: &Self) -> f64 {
        (self.sx - other.sx)
            .abs()
            .max((self.sy - other.sy).abs())
            .max((self.sz - other.sz).abs())
    }
}

/// Probabilities (p1, p2, p3) of measuring +1/2 along the x, y, z axes.
///
/// Construction enforces finiteness and pk in [0, 1]; the shifted-ball
/// constraint sum (pk - 1/2)^2 <= 1/4 is checked by the conversions that
/// require it, mirroring [`MeanSpinVector`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityTriple {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl ProbabilityTriple {
    pub fn new(p1: f64, p2: f64, p3: f64) -> Result<Self> {
        ensure_finite(p1, "probability p1")?;
        ensure_finite(p2, "probability p2")?;
        ensure_finite(p3, "probability p3")?;
        for (value, name) in [(p1, "p1"), (p2, "p2"), (p3, "p3")] {
            if !(-CONSTRUCTION_TOLERANCE..=1.0 + CONSTRUCTION_TOLERANCE).contains(&value) {
                return Err(Error::ConstraintViolation(format!(
                    "probability {name} = {value} lies outside [0, 1]"
                )));
            }
        }
        Ok(Self { p1, p2, p3 })
    }

    /// Squared distance of the triple from the center (1/2, 1/2, 1/2).
    pub fn shifted_norm_sqr(&self) -> f64 {
        let d1 = self.p1 - 0.5;
        let d2 = self.p2 - 0.5;
        let d3 = self.p3 - 0.5;
        d1 * d1 + d2 * d2 + d3 * d3
    }

    /// True when the shifted triple lies inside the admissible ball within
    /// [`CONSTRUCTION_TOLERANCE`].
    pub fn in_ball(&self) -> bool {
        self.shifted_norm_sqr() <= 0.25 + CONSTRUCTION_TOLERANCE
    }
}

/// Formal mean triple (sig1, sig2, sig3) encoding a pair of superposition
/// coefficients (c1, c2) with c1 real and non-negative.
///
/// Unlike [`MeanSpinVector`], purity is part of the type: a sigma triple off
/// the sphere surface has no coefficient pair with |c1|^2 + |c2|^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaTriple {
    pub sig1: f64,
    pub sig2: f64,
    pub sig3: f64,
}

impl SigmaTriple {
    pub fn new(sig1: f64, sig2: f64, sig3: f64) -> Result<Self> {
        ensure_finite(sig1, "sigma sig1")?;
        ensure_finite(sig2, "sigma sig2")?;
        ensure_finite(sig3, "sigma sig3")?;
        for (value, name) in [(sig1, "sig1"), (sig2, "sig2"), (sig3, "sig3")] {
            if value.abs() > 0.5 + CONSTRUCTION_TOLERANCE {
                return Err(Error::ConstraintViolation(format!(
                    "sigma component {name} = {value} lies outside [-1/2, 1/2]"
                )));
            }
        }
        let norm_sqr = sig1 * sig1 + sig2 * sig2 + sig3 * sig3;
        if (norm_sqr - 0.25).abs() > PURITY_TOLERANCE {
            return Err(Error::ConstraintViolation(format!(
                "sigma triple must satisfy sig1^2 + sig2^2 + sig3^2 = 1/4, got {norm_sqr}"
            )));
        }
        Ok(Self { sig1, sig2, sig3 })
    }

    /// Squared Euclidean length; 1/4 within [`PURITY_TOLERANCE`] by
    /// construction.
    pub fn norm_sqr(&self) -> f64 {
        self.sig1 * self.sig1 + self.sig2 * self.sig2 + self.sig3 * self.sig3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Brute-force Tr(M^2) over raw entries, independent of the
    /// `DensityMatrix2::purity` implementation.
    #[allow(clippy::needless_range_loop)]
    fn matrix_square_trace(m: [[Complex64; 2]; 2]) -> f64 {
        let mut trace = c(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                trace += m[i][j] * m[j][i];
            }
        }
        assert!(trace.im.abs() < 1e-15);
        trace.re
    }

    #[test]
    fn density_from_basis_spinor_is_projector() {
        let s = Spinor::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let rho = density_from_spinor(&s).unwrap();
        assert_eq!(rho.rho11(), 1.0);
        assert_eq!(rho.rho22(), 0.0);
        assert_eq!(rho.rho12(), c(0.0, 0.0));
    }

    #[test]
    fn density_from_plus_x_spinor() {
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let s = Spinor::new(c(inv_sqrt2, 0.0), c(inv_sqrt2, 0.0)).unwrap();
        let rho = density_from_spinor(&s).unwrap();
        assert_abs_diff_eq!(rho.rho11(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.rho22(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.rho12().re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.rho12().im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn density_from_spinor_absorbs_scale() {
        let s = Spinor::new(c(2.0, 0.0), c(0.0, 0.0)).unwrap();
        let rho = density_from_spinor(&s).unwrap();
        assert_eq!(rho.rho11(), 1.0);
        assert_eq!(rho.rho22(), 0.0);
    }

    #[test]
    fn zero_spinor_is_rejected() {
        let s = Spinor::new(c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(matches!(density_from_spinor(&s), Err(Error::ZeroSpinor(_))));
    }

    #[test]
    fn purity_of_pure_and_mixed_states() {
        let pure = DensityMatrix2::new(1.0, 0.0, c(0.0, 0.0)).unwrap();
        assert_eq!(pure.purity(), 1.0);

        let mixed = DensityMatrix2::new(0.5, 0.5, c(0.0, 0.0)).unwrap();
        assert_eq!(mixed.purity(), 0.5);
    }

    #[test]
    fn purity_matches_matrix_square_trace() {
        // Expected value computed first with the raw-entry oracle, then frozen.
        let rho = DensityMatrix2::new(0.75, 0.25, c(0.25, 0.0)).unwrap();
        let oracle =
            matrix_square_trace([[c(0.75, 0.0), c(0.25, 0.0)], [c(0.25, 0.0), c(0.25, 0.0)]]);
        assert_abs_diff_eq!(oracle, 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.purity(), 0.75, epsilon = 1e-15);
    }

    #[test]
    fn purity_from_spinor_is_one() {
        let cases = [
            (c(1.0, 0.0), c(0.0, 0.0)),
            (c(0.6, 0.0), c(0.0, 0.8)),
            (c(0.3, -0.4), c(0.5, 0.2)),
            (c(2.0, 1.0), c(-0.5, 0.25)),
        ];
        for (up, down) in cases {
            let rho = density_from_spinor(&Spinor::new(up, down).unwrap()).unwrap();
            assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-12);
            assert!(rho.determinant() >= -1e-12);
        }
    }

    #[test]
    fn density_validation_rejects_bad_trace_and_negative_determinant() {
        assert!(matches!(
            DensityMatrix2::new(0.8, 0.3, c(0.0, 0.0)),
            Err(Error::InvalidDensity(_))
        ));
        // Off-diagonal too large for the diagonal: negative determinant.
        assert!(matches!(
            DensityMatrix2::new(0.5, 0.5, c(0.6, 0.0)),
            Err(Error::InvalidDensity(_))
        ));
    }

    #[test]
    fn non_finite_inputs_are_rejected_everywhere() {
        assert!(Spinor::new(c(f64::NAN, 0.0), c(0.0, 0.0)).is_err());
        assert!(DensityMatrix2::new(f64::INFINITY, 0.0, c(0.0, 0.0)).is_err());
        assert!(MeanSpinVector::new(0.0, f64::NAN, 0.0).is_err());
        assert!(ProbabilityTriple::new(0.5, 0.5, f64::INFINITY).is_err());
        assert!(SigmaTriple::new(f64::NAN, 0.0, 0.5).is_err());
    }

    #[test]
    fn mean_spin_component_bounds() {
        assert!(MeanSpinVector::new(0.5, 0.0, 0.0).is_ok());
        assert!(MeanSpinVector::new(0.6, 0.0, 0.0).is_err());
        // Out of the ball but inside the box: representable by design.
        let estimate = MeanSpinVector::new(0.5, 0.1, 0.05).unwrap();
        assert!(!estimate.in_ball());
    }

    #[test]
    fn probability_bounds() {
        assert!(ProbabilityTriple::new(0.0, 1.0, 0.5).is_ok());
        assert!(ProbabilityTriple::new(-0.1, 0.5, 0.5).is_err());
        assert!(ProbabilityTriple::new(0.5, 1.1, 0.5).is_err());
    }

    #[test]
    fn sigma_requires_coefficient_purity() {
        assert!(SigmaTriple::new(0.5, 0.0, 0.0).is_ok());
        assert!(SigmaTriple::new(0.1, 0.0, 0.0).is_err());
        assert!(SigmaTriple::new(0.5, 0.5, 0.5).is_err());
    }

    #[test]
    fn spinor_normalization_status() {
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        assert!(Spinor::new(c(inv_sqrt2, 0.0), c(0.0, inv_sqrt2))
            .unwrap()
            .is_normalized());
        assert!(!Spinor::new(c(1.0, 0.0), c(1.0, 0.0))
            .unwrap()
            .is_normalized());
    }
}
