use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::ExactRational;
use crate::error::Error;

use super::inputs::FormulaInputs;

/// A set of surfaces whose mass is tabulated: all principally polarized
/// ones, or the polarized (`pm`) / unpolarized (`un`) classes of one genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MassStratum {
    Ppsp,
    PmR1,
    UnR1,
    PmR8,
    UnR8,
    PmR16,
    UnR16,
}

impl MassStratum {
    pub const ALL: [MassStratum; 7] = [
        MassStratum::Ppsp,
        MassStratum::PmR1,
        MassStratum::UnR1,
        MassStratum::PmR8,
        MassStratum::UnR8,
        MassStratum::PmR16,
        MassStratum::UnR16,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MassStratum::Ppsp => "ppsp",
            MassStratum::PmR1 => "pm_r1",
            MassStratum::UnR1 => "un_r1",
            MassStratum::PmR8 => "pm_r8",
            MassStratum::UnR8 => "un_r8",
            MassStratum::PmR16 => "pm_r16",
            MassStratum::UnR16 => "un_r16",
        }
    }

    pub fn pm(r: u32) -> Option<MassStratum> {
        match r {
            1 => Some(MassStratum::PmR1),
            8 => Some(MassStratum::PmR8),
            16 => Some(MassStratum::PmR16),
            _ => None,
        }
    }

    pub fn un(r: u32) -> Option<MassStratum> {
        match r {
            1 => Some(MassStratum::UnR1),
            8 => Some(MassStratum::UnR8),
            16 => Some(MassStratum::UnR16),
            _ => None,
        }
    }
}

impl fmt::Display for MassStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MassStratum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MassStratum::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mass stratum {s:?}")))
    }
}

impl Serialize for MassStratum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for MassStratum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `[Λ₁ : Λ_r]`-style factor relating the polarized mass at `r` to the one
/// at `r = 1`, for `p ≡ 1 (mod 4)`: 9 or 15 for `r = 8`, 6 or 10 for
/// `r = 16`, according to `(2/p) = 1` or `-1`.
pub fn pm_mass_index(i: &FormulaInputs, r: u32) -> Option<i64> {
    let split = i.chi2 == 1;
    match r {
        8 => Some(if split { 9 } else { 15 }),
        16 => Some(if split { 6 } else { 10 }),
        _ => None,
    }
}

/// Mass of the quaternion order attached to the genus `r = 8`, over all
/// `h(F)` ideal classes: `(3/(2ϖ))·(4 - (2/p))·ζ_F(-1)·h(F)`.
pub fn order_mass_r8(i: &FormulaInputs, h: u64) -> ExactRational {
    let w = i.varpi();
    &i.zeta * (3 * (4 - i.chi2)) / (2 * w) * h as i64
}

/// Mass of the quaternion order attached to the genus `r = 16`:
/// `(3/ϖ)·(3 - 2(2/p))·ζ_F(-1)·h(F)`, spread over `h(A)` classes.
pub fn order_mass_r16(i: &FormulaInputs, h: u64) -> ExactRational {
    let w = i.varpi();
    &i.zeta * (3 * (3 - 2 * i.chi2)) / w * h as i64
}
