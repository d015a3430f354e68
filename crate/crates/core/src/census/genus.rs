use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::PrimeInput;
use crate::error::{Error, Result};

/// Ring acting on the polarization module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseRing {
    /// `O_F`
    Maximal,
    /// `A = Z[√p]`
    Suborder,
}

/// Genus of the polarization module, indexed by `r ∈ {1, 8, 16}`.
///
/// `r = 1` and `r = 8` are `O_F`-modules; `r = 16` is an `A`-module and
/// only exists, like `r = 8`, for `p ≡ 1 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenusLabel {
    pub r: u32,
    pub base_ring: BaseRing,
}

impl GenusLabel {
    pub const R1: GenusLabel = GenusLabel { r: 1, base_ring: BaseRing::Maximal };
    pub const R8: GenusLabel = GenusLabel { r: 8, base_ring: BaseRing::Maximal };
    pub const R16: GenusLabel = GenusLabel { r: 16, base_ring: BaseRing::Suborder };

    pub fn new(r: u32) -> Result<GenusLabel> {
        match r {
            1 => Ok(GenusLabel::R1),
            8 => Ok(GenusLabel::R8),
            16 => Ok(GenusLabel::R16),
            _ => Err(Error::Precondition(format!("r = {r} is not one of 1, 8, 16"))),
        }
    }
}

/// Gauss genus of the polarization module class in `Pic₊(O_F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaussGenusClass {
    /// `p ≢ 3 (mod 4)`: a single Gauss genus.
    Unique,
    Principal,
    NonPrincipal,
}

impl GaussGenusClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GaussGenusClass::Unique => "unique",
            GaussGenusClass::Principal => "principal",
            GaussGenusClass::NonPrincipal => "nonprincipal",
        }
    }

    pub fn parse(s: &str) -> Result<GaussGenusClass> {
        match s {
            "unique" => Ok(GaussGenusClass::Unique),
            "principal" => Ok(GaussGenusClass::Principal),
            "nonprincipal" => Ok(GaussGenusClass::NonPrincipal),
            _ => Err(Error::Parse(format!("unknown Gauss genus {s:?}"))),
        }
    }
}

impl fmt::Display for GaussGenusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Checks that `(r, g)` names an existing stratum for `p`.
pub fn check_stratum(p: PrimeInput, genus: GenusLabel, gauss: GaussGenusClass) -> Result<()> {
    let genus_ok = genus.r == 1 || p.is_one_mod4();
    let gauss_ok =
        if p.is_three_mod4() { gauss != GaussGenusClass::Unique } else { gauss == GaussGenusClass::Unique };
    if genus_ok && gauss_ok {
        Ok(())
    } else {
        Err(Error::IllegalStratum { p: p.get(), r: genus.r, genus: gauss.to_string() })
    }
}

/// Every stratum that exists for `p`, in output order.
pub fn strata(p: PrimeInput) -> Vec<(GenusLabel, GaussGenusClass)> {
    if p.is_three_mod4() {
        vec![(GenusLabel::R1, GaussGenusClass::Principal), (GenusLabel::R1, GaussGenusClass::NonPrincipal)]
    } else if p.is_one_mod4() {
        vec![
            (GenusLabel::R1, GaussGenusClass::Unique),
            (GenusLabel::R8, GaussGenusClass::Unique),
            (GenusLabel::R16, GaussGenusClass::Unique),
        ]
    } else {
        vec![(GenusLabel::R1, GaussGenusClass::Unique)]
    }
}
