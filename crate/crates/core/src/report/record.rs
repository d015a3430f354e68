use std::collections::BTreeMap;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, ExactRational, PrimeInput};
use crate::census::{
    BaseRing, CensusReport, EllipticBaseline, GaussGenusClass, GenusLabel, MassStratum, PolModEntry,
    RefinedTable,
};
use crate::error::{Error, Result};
use crate::quadratic::{QuadraticUnit, RealQuadraticProfile};

/// Splits `q = p^n`.
pub fn prime_power(q: u64) -> Result<(PrimeInput, u32)> {
    if is_prime(q) {
        return Ok((PrimeInput::new(q)?, 1));
    }
    for n in 2..64u32 {
        let r = q.nth_root(n);
        if r < 2 {
            break;
        }
        if is_prime(r) && r.checked_pow(n) == Some(q) {
            return Ok((PrimeInput::new(r)?, n));
        }
    }
    Err(Error::NotPrimePower(q))
}

/// One stratum of `pol_mod` in flattened form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolModRecord {
    pub r: u32,
    pub base_ring: BaseRing,
    pub gauss_genus: GaussGenusClass,
    pub h_pm: u64,
    pub h_un: u64,
    pub t: u64,
    pub refined_pm: Option<RefinedTable>,
    pub refined_un: Option<RefinedTable>,
}

impl From<&PolModEntry> for PolModRecord {
    fn from(e: &PolModEntry) -> Self {
        PolModRecord {
            r: e.genus.r,
            base_ring: e.genus.base_ring,
            gauss_genus: e.gauss,
            h_pm: e.h_pm,
            h_un: e.h_un,
            t: e.t,
            refined_pm: e.refined_pm.clone(),
            refined_un: e.refined_un.clone(),
        }
    }
}

impl PolModRecord {
    fn to_entry(&self) -> Result<PolModEntry> {
        let genus = GenusLabel::new(self.r)?;
        if genus.base_ring != self.base_ring {
            return Err(Error::Parse(format!("r = {} does not live over {:?}", self.r, self.base_ring)));
        }
        Ok(PolModEntry {
            genus,
            gauss: self.gauss_genus,
            h_pm: self.h_pm,
            h_un: self.h_un,
            t: self.t,
            refined_pm: self.refined_pm.clone(),
            refined_un: self.refined_un.clone(),
        })
    }
}

/// Values shown only on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    /// `8ζ_F(-1) + h(-p)/2 + 2h(-3p)/3` for `p ≡ 1 (mod 4)`, `p ≥ 13`.
    pub type_number_printed_formula: Option<ExactRational>,
}

/// A census flattened to stable keys. Field order here is the output order.
///
/// For even exponents only the elliptic baseline is filled in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub q: u64,
    pub p: u64,
    pub exponent: u32,
    pub note: Option<String>,
    #[serde(rename = "d_F")]
    pub d_f: Option<i64>,
    pub unit: Option<QuadraticUnit>,
    pub h: Option<u64>,
    pub h_plus: Option<u64>,
    pub varpi: Option<u32>,
    #[serde(rename = "h_A")]
    pub h_a: Option<u64>,
    pub zeta_minus1: Option<ExactRational>,
    pub h_pp: Option<u64>,
    pub t_pp: Option<u64>,
    pub refined_pp: Option<RefinedTable>,
    pub lambda1_pp: Option<u64>,
    pub lambda16_pp: Option<u64>,
    pub pol_mod: Option<Vec<PolModRecord>>,
    pub masses: Option<BTreeMap<MassStratum, ExactRational>>,
    pub elliptic: EllipticBaseline,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<Diagnostic>,
}

impl OutputRecord {
    /// Record for an odd power `q = p^n`, which has the same census as `p`.
    pub fn from_census(q: u64, exponent: u32, report: &CensusReport) -> OutputRecord {
        let p = report.p.get();
        let prof = &report.profile;
        OutputRecord {
            q,
            p,
            exponent,
            note: (exponent > 1).then(|| format!("PPSP(√{q}) ≅ PPAV(√{p})")),
            d_f: Some(prof.d_f),
            unit: Some(prof.unit.clone()),
            h: Some(prof.h),
            h_plus: Some(prof.h_plus),
            varpi: prof.varpi,
            h_a: prof.h_a,
            zeta_minus1: Some(prof.zeta_minus1.clone()),
            h_pp: Some(report.h_pp),
            t_pp: Some(report.t_pp),
            refined_pp: Some(report.refined_pp.clone()),
            lambda1_pp: Some(report.lambda1_pp),
            lambda16_pp: report.lambda16_pp,
            pol_mod: Some(report.pol_mod.iter().map(PolModRecord::from).collect()),
            masses: Some(report.masses.clone()),
            elliptic: report.elliptic.clone(),
            diagnostic: None,
        }
    }

    /// Record for an even power `q = p^n`: supersingular elliptic curves.
    pub fn elliptic_only(q: u64, p: u64, exponent: u32, elliptic: EllipticBaseline) -> OutputRecord {
        OutputRecord {
            q,
            p,
            exponent,
            note: Some(format!("q = {p}^{exponent} is an even power: elliptic baseline")),
            d_f: None,
            unit: None,
            h: None,
            h_plus: None,
            varpi: None,
            h_a: None,
            zeta_minus1: None,
            h_pp: None,
            t_pp: None,
            refined_pp: None,
            lambda1_pp: None,
            lambda16_pp: None,
            pol_mod: None,
            masses: None,
            elliptic,
            diagnostic: None,
        }
    }

    /// Rebuilds the census report; `None` for elliptic-only records.
    pub fn to_census(&self) -> Result<Option<CensusReport>> {
        if self.exponent % 2 == 0 {
            return Ok(None);
        }
        let missing = |k: &str| Error::Parse(format!("record for q = {} lacks {k}", self.q));
        let p = PrimeInput::new(self.p)?;
        let profile = RealQuadraticProfile {
            p,
            d_f: self.d_f.ok_or_else(|| missing("d_F"))?,
            unit: self.unit.clone().ok_or_else(|| missing("unit"))?,
            h: self.h.ok_or_else(|| missing("h"))?,
            h_plus: self.h_plus.ok_or_else(|| missing("h_plus"))?,
            varpi: self.varpi,
            h_a: self.h_a,
            zeta_minus1: self.zeta_minus1.clone().ok_or_else(|| missing("zeta_minus1"))?,
        };
        let pol_mod = self
            .pol_mod
            .as_ref()
            .ok_or_else(|| missing("pol_mod"))?
            .iter()
            .map(PolModRecord::to_entry)
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(CensusReport {
            p,
            profile,
            h_pp: self.h_pp.ok_or_else(|| missing("h_pp"))?,
            t_pp: self.t_pp.ok_or_else(|| missing("t_pp"))?,
            refined_pp: self.refined_pp.clone().ok_or_else(|| missing("refined_pp"))?,
            lambda1_pp: self.lambda1_pp.ok_or_else(|| missing("lambda1_pp"))?,
            lambda16_pp: self.lambda16_pp,
            pol_mod,
            masses: self.masses.clone().ok_or_else(|| missing("masses"))?,
            elliptic: self.elliptic.clone(),
        }))
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<OutputRecord> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Stratum lookup used by the flat formats.
    pub fn stratum(&self, r: u32, gauss: GaussGenusClass) -> Option<&PolModRecord> {
        self.pol_mod.as_ref()?.iter().find(|s| s.r == r && s.gauss_genus == gauss)
    }
}
