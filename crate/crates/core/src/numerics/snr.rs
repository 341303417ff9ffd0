use core::fmt;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SnrDomain {
    Decibel,
    Linear,
}

impl fmt::Display for SnrDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SnrDomain::Decibel => "dB",
            SnrDomain::Linear => "linear",
        })
    }
}

/// A signal-to-noise ratio tagged with its unit. Linear values are never negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrValue {
    magnitude: f64,
    domain: SnrDomain,
}

impl SnrValue {
    pub fn decibel(db: f64) -> Result<Self> {
        if db.is_nan() {
            return Err(invalid("snr", "dB value is NaN"));
        }
        Ok(Self {
            magnitude: db,
            domain: SnrDomain::Decibel,
        })
    }

    pub fn linear(ratio: f64) -> Result<Self> {
        if !(ratio >= 0.0) {
            return Err(invalid("snr", "linear SNR must be >= 0"));
        }
        Ok(Self {
            magnitude: ratio,
            domain: SnrDomain::Linear,
        })
    }

    pub fn new(magnitude: f64, domain: SnrDomain) -> Result<Self> {
        match domain {
            SnrDomain::Decibel => Self::decibel(magnitude),
            SnrDomain::Linear => Self::linear(magnitude),
        }
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn domain(&self) -> SnrDomain {
        self.domain
    }

    /// `10^(dB/10)`; linear values pass through.
    pub fn to_linear(self) -> Self {
        match self.domain {
            SnrDomain::Linear => self,
            SnrDomain::Decibel => Self {
                magnitude: libm::pow(10.0, self.magnitude / 10.0),
                domain: SnrDomain::Linear,
            },
        }
    }

    /// `10·log₁₀(linear)`; fails for a linear magnitude of zero.
    pub fn to_decibel(self) -> Result<Self> {
        match self.domain {
            SnrDomain::Decibel => Ok(self),
            SnrDomain::Linear if self.magnitude > 0.0 => Ok(Self {
                magnitude: 10.0 * libm::log10(self.magnitude),
                domain: SnrDomain::Decibel,
            }),
            SnrDomain::Linear => Err(invalid("snr", "0 linear has no dB value")),
        }
    }

    /// Magnitude expressed in `domain`.
    pub fn in_domain(self, domain: SnrDomain) -> Result<f64> {
        Ok(match domain {
            SnrDomain::Linear => self.to_linear().magnitude,
            SnrDomain::Decibel => self.to_decibel()?.magnitude,
        })
    }
}

pub fn db_to_linear(v: SnrValue) -> SnrValue {
    v.to_linear()
}

pub fn linear_to_db(v: SnrValue) -> Result<SnrValue> {
    v.to_decibel()
}
