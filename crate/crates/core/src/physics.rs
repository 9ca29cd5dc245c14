//! Physical observables for a transition, derived from its exact energy.
//!
//! Floating point appears only here, after every equality question has been
//! settled exactly upstream.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::transitions::Transition;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Rydberg wavenumber for hydrogen, m⁻¹.
pub const HYDROGEN_RYDBERG: f64 = 1.096_775_8e7;

/// Significant digits carried by rendered decimals.
pub const SIGNIFICANT_DIGITS: usize = 10;

#[derive(Debug, Error)]
pub enum PhysicsError {
    #[error("rydberg wavenumber must be finite and positive, got {0}")]
    NonPositiveRydberg(f64),
    #[error("cannot parse {value:?} as a number")]
    BadNumber { value: String },
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("reading config: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    rydberg_wavenumber: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants {
            rydberg_wavenumber: HYDROGEN_RYDBERG,
        }
    }
}

impl PhysicalConstants {
    pub fn new(rydberg_wavenumber: f64) -> Result<Self, PhysicsError> {
        if !(rydberg_wavenumber.is_finite() && rydberg_wavenumber > 0.0) {
            return Err(PhysicsError::NonPositiveRydberg(rydberg_wavenumber));
        }
        Ok(PhysicalConstants { rydberg_wavenumber })
    }

    pub fn rydberg_wavenumber(&self) -> f64 {
        self.rydberg_wavenumber
    }

    /// Reads `key = value` lines. `#` starts a comment; the only key is
    /// `rydberg`. Missing key leaves the default.
    pub fn from_config_str(text: &str) -> Result<Self, PhysicsError> {
        let mut k = PhysicalConstants::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(PhysicsError::Config {
                    line: i + 1,
                    msg: format!("expected key=value, got {line:?}"),
                });
            };
            match key.trim() {
                "rydberg" => k = value.trim().parse()?,
                other => {
                    return Err(PhysicsError::Config {
                        line: i + 1,
                        msg: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        Ok(k)
    }

    pub fn from_config_file(path: impl AsRef<Path>) -> Result<Self, PhysicsError> {
        PhysicalConstants::from_config_str(&fs::read_to_string(path)?)
    }
}

impl FromStr for PhysicalConstants {
    type Err = PhysicsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: f64 = s.trim().parse().map_err(|_| PhysicsError::BadNumber {
            value: s.to_string(),
        })?;
        PhysicalConstants::new(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Observables {
    pub delta: BigRational,
    pub wavelength_m: f64,
    pub frequency_hz: f64,
}

impl Observables {
    pub fn wavelength_string(&self) -> String {
        format_significant(self.wavelength_m)
    }

    pub fn frequency_string(&self) -> String {
        format_significant(self.frequency_hz)
    }
}

/// Scientific notation with [`SIGNIFICANT_DIGITS`] digits, e.g. `6.564700000e-7`.
pub fn format_significant(x: f64) -> String {
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
}

/// Wavelength `1/(R·δ)` and frequency `c·R·δ` for the transition's exact
/// energy `δ`.
pub fn photon_observables(t: &Transition, k: &PhysicalConstants) -> Observables {
    observables_for_delta(t.delta(), k)
}

pub fn observables_for_delta(delta: BigRational, k: &PhysicalConstants) -> Observables {
    let d = delta.to_f64().expect("delta is a finite positive rational");
    let wavenumber = k.rydberg_wavenumber * d;
    Observables {
        wavelength_m: 1.0 / wavenumber,
        frequency_hz: SPEED_OF_LIGHT * wavenumber,
        delta,
    }
}
