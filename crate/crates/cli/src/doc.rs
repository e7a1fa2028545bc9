//! JSON state documents and their conversions to and from library values.
//!
//! Every document is a single object tagged by `kind`; the payload fields
//! are validated against the corresponding library type's invariants on
//! load. Numbers are serialized with 17 significant digits so that every
//! double survives a write/read round trip bit-exactly and golden files stay
//! byte-stable.

use std::io::{self, Write};

use meanspin::qcore::{
    DensityMatrix2, MeanSpinVector, ProbabilityTriple, Spinor, SPINOR_NORM_FLOOR,
};
use meanspin::{
    density_from_means, density_from_probabilities, density_from_spinor, means_from_density,
    means_from_probabilities, means_from_state, probabilities_from_means, state_from_means, Error,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One qubit state in any of the four interchangeable descriptions.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StateDocument {
    Means {
        sx: f64,
        sy: f64,
        sz: f64,
    },
    Probabilities {
        p1: f64,
        p2: f64,
        p3: f64,
    },
    Spinor {
        re_up: f64,
        im_up: f64,
        re_down: f64,
        im_down: f64,
    },
    Density {
        r11: f64,
        r22: f64,
        re12: f64,
        im12: f64,
    },
}

/// Target description for `convert`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Means,
    Probabilities,
    Spinor,
    Density,
}

impl StateDocument {
    /// Validates the payload against the library type's invariants,
    /// returning the parsed value for further use.
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            StateDocument::Means { sx, sy, sz } => {
                let m = MeanSpinVector::new(sx, sy, sz)?;
                if !m.in_ball() {
                    return Err(Error::ConstraintViolation(format!(
                        "means lie outside the Bloch ball: squared radius {}",
                        m.norm_sqr()
                    )));
                }
                Ok(())
            }
            StateDocument::Probabilities { p1, p2, p3 } => {
                let p = ProbabilityTriple::new(p1, p2, p3)?;
                if !p.in_ball() {
                    return Err(Error::ConstraintViolation(format!(
                        "probabilities violate the shifted-ball constraint: {}",
                        p.shifted_norm_sqr()
                    )));
                }
                Ok(())
            }
            StateDocument::Spinor { .. } => self.to_spinor_value().map(|_| ()),
            StateDocument::Density { .. } => self.to_density_value().map(|_| ()),
        }
    }

    fn to_spinor_value(&self) -> Result<Spinor, Error> {
        match *self {
            StateDocument::Spinor {
                re_up,
                im_up,
                re_down,
                im_down,
            } => {
                let s = Spinor::new(
                    Complex64::new(re_up, im_up),
                    Complex64::new(re_down, im_down),
                )?;
                let norm_sqr = s.norm_sqr();
                if !norm_sqr.is_finite() {
                    return Err(Error::NonFinite("spinor norm"));
                }
                if norm_sqr <= SPINOR_NORM_FLOOR {
                    return Err(Error::ZeroSpinor(norm_sqr));
                }
                Ok(s)
            }
            _ => unreachable!("only called on spinor documents"),
        }
    }

    fn to_density_value(&self) -> Result<DensityMatrix2, Error> {
        match *self {
            StateDocument::Density {
                r11,
                r22,
                re12,
                im12,
            } => DensityMatrix2::new(r11, r22, Complex64::new(re12, im12)),
            _ => unreachable!("only called on density documents"),
        }
    }

    /// The document's state as a mean triple. This is the common currency of
    /// `superpose`, `simulate`, and `experiment`.
    pub fn to_means(&self) -> Result<MeanSpinVector, Error> {
        self.validate()?;
        match *self {
            StateDocument::Means { sx, sy, sz } => MeanSpinVector::new(sx, sy, sz),
            StateDocument::Probabilities { p1, p2, p3 } => {
                means_from_probabilities(&ProbabilityTriple::new(p1, p2, p3)?)
            }
            StateDocument::Spinor { .. } => means_from_state(&self.to_spinor_value()?),
            StateDocument::Density { .. } => Ok(means_from_density(&self.to_density_value()?)),
        }
    }

    /// Converts to the target description. Conversions to `spinor` require a
    /// pure state and use the gauge phase alpha = 0.
    pub fn convert(&self, target: Kind) -> Result<StateDocument, Error> {
        self.validate()?;
        match target {
            Kind::Means => {
                let m = self.to_means()?;
                Ok(StateDocument::Means {
                    sx: m.sx,
                    sy: m.sy,
                    sz: m.sz,
                })
            }
            Kind::Probabilities => {
                let p = match *self {
                    StateDocument::Probabilities { .. } => return Ok(self.clone()),
                    _ => probabilities_from_means(&self.to_means()?)?,
                };
                Ok(StateDocument::Probabilities {
                    p1: p.p1,
                    p2: p.p2,
                    p3: p.p3,
                })
            }
            Kind::Density => {
                let rho = match *self {
                    StateDocument::Density { .. } => return Ok(self.clone()),
                    StateDocument::Probabilities { p1, p2, p3 } => {
                        density_from_probabilities(&ProbabilityTriple::new(p1, p2, p3)?)?
                    }
                    StateDocument::Spinor { .. } => density_from_spinor(&self.to_spinor_value()?)?,
                    StateDocument::Means { .. } => density_from_means(&self.to_means()?)?,
                };
                Ok(StateDocument::Density {
                    r11: rho.rho11(),
                    r22: rho.rho22(),
                    re12: rho.rho12().re,
                    im12: rho.rho12().im,
                })
            }
            Kind::Spinor => {
                let s = match *self {
                    StateDocument::Spinor { .. } => return Ok(self.clone()),
                    _ => state_from_means(&self.to_means()?, 0.0)?,
                };
                Ok(StateDocument::Spinor {
                    re_up: s.up.re,
                    im_up: s.up.im,
                    re_down: s.down.re,
                    im_down: s.down.im,
                })
            }
        }
    }
}

/// serde_json formatter that writes every float as `{:.16e}`: one leading
/// digit plus 16 fractional digits, enough to reproduce any f64 exactly.
struct SignificantDigits17;

impl serde_json::ser::Formatter for SignificantDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any report to a compact single-line JSON string with the
/// 17-significant-digit float format.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut out, SignificantDigits17);
    value
        .serialize(&mut serializer)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}
