use std::collections::BTreeMap;

use crate::arith::{ExactRational, PrimeInput};
use crate::error::Result;
use crate::quadratic::{real_quadratic_profile, RealQuadraticProfile};

use super::formulas::{self, RawElliptic, RawTriple};
use super::genus::{strata, GaussGenusClass, GenusLabel};
use super::group::RawTable;
use super::inputs::FormulaInputs;
use super::mass::MassStratum;

/// Deliberate corruption of one input, used to exercise the identity suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to `h(-p)` in the refined class number formulas only.
    RefinedHMinusP,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawStratum {
    pub genus: GenusLabel,
    pub gauss: GaussGenusClass,
    pub triple: RawTriple,
    /// `(polarized, unpolarized)` refined tables; absent for `r = 8`.
    pub refined: Option<(RawTable, RawTable)>,
}

/// Every census quantity for one prime as an unchecked rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCensus {
    pub profile: RealQuadraticProfile,
    pub inputs: FormulaInputs,
    pub h_pp: ExactRational,
    pub t_pp: ExactRational,
    pub lambda1: ExactRational,
    pub lambda16: Option<ExactRational>,
    pub printed_type: Option<ExactRational>,
    pub refined_pp: RawTable,
    pub strata: Vec<RawStratum>,
    pub masses: BTreeMap<MassStratum, ExactRational>,
    pub elliptic: RawElliptic,
}

impl RawCensus {
    pub fn stratum(&self, genus: GenusLabel, gauss: GaussGenusClass) -> Option<&RawStratum> {
        self.strata.iter().find(|s| s.genus == genus && s.gauss == gauss)
    }
}

pub fn evaluate(p: PrimeInput, fault: Option<Fault>) -> Result<RawCensus> {
    let profile = real_quadratic_profile(p)?;
    let inputs = FormulaInputs::new(&profile)?;
    let refined_inputs = match fault {
        None => inputs.clone(),
        Some(Fault::RefinedHMinusP) => FormulaInputs { h_p: inputs.h_p + 1, ..inputs.clone() },
    };
    let mut raw_strata = Vec::new();
    for (genus, gauss) in strata(p) {
        let triple = formulas::pol_mod(&inputs, genus, gauss)?;
        let refined =
            if genus.r == 8 { None } else { Some(formulas::refined_pol_mod(&inputs, genus, gauss)?) };
        raw_strata.push(RawStratum { genus, gauss, triple, refined });
    }
    Ok(RawCensus {
        h_pp: formulas::h_pp(&inputs),
        t_pp: formulas::t_pp(&inputs),
        lambda1: formulas::lambda1(&inputs),
        lambda16: formulas::lambda16(&inputs),
        printed_type: formulas::printed_type_formula(&inputs),
        refined_pp: formulas::refined_pp(&refined_inputs),
        strata: raw_strata,
        masses: formulas::masses(&inputs),
        elliptic: formulas::elliptic(&inputs),
        profile,
        inputs,
    })
}
