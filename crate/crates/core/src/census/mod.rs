//! Closed-form census of principally polarized superspecial surfaces and of
//! the genus strata of polarized ones, with the identities that bind them.
//!
//! Quantities are first evaluated as unchecked rationals
//! ([`evaluate::RawCensus`]); [`census`] then runs the identity suite and
//! converts every count to an integer.

mod evaluate;
pub mod formulas;
mod genus;
mod group;
pub mod identities;
mod inputs;
mod mass;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{ExactRational, PrimeInput};
use crate::error::{Error, Result};
use crate::quadratic::{real_quadratic_profile, RealQuadraticProfile};

pub use evaluate::{evaluate, Fault, RawCensus, RawStratum};
pub use genus::{check_stratum, strata, BaseRing, GaussGenusClass, GenusLabel};
pub use group::{Decoration, GroupName, GroupTag, RawTable, RefinedTable};
pub use inputs::FormulaInputs;
pub use mass::{order_mass_r16, order_mass_r8, pm_mass_index, MassStratum};

pub(crate) fn to_count(quantity: &str, v: &ExactRational) -> Result<u64> {
    if !v.is_integer() {
        return Err(Error::NonIntegral { quantity: quantity.into(), value: v.to_string() });
    }
    if v.is_negative() {
        return Err(Error::Negative { quantity: quantity.into(), value: v.to_string() });
    }
    v.to_i64()
        .map(|n| n as u64)
        .ok_or_else(|| Error::Precondition(format!("{quantity} = {v} does not fit in 64 bits")))
}

/// Counts for one genus stratum `(r, Gauss genus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolModEntry {
    pub genus: GenusLabel,
    pub gauss: GaussGenusClass,
    pub h_pm: u64,
    pub h_un: u64,
    pub t: u64,
    /// Polarized classes per automorphism group; absent for `r = 8`.
    pub refined_pm: Option<RefinedTable>,
    /// Unpolarized classes per reduced automorphism group; absent for `r = 8`.
    pub refined_un: Option<RefinedTable>,
}

/// Supersingular elliptic curves: the baseline for even powers of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticBaseline {
    pub h: u64,
    pub t: u64,
    pub refined: RefinedTable,
}

/// Every census quantity for one prime, all identities verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub p: PrimeInput,
    pub profile: RealQuadraticProfile,
    pub h_pp: u64,
    pub t_pp: u64,
    pub refined_pp: RefinedTable,
    /// `r = 1` stratum for `p ≡ 1 (mod 4)`; otherwise the principal (or
    /// only) Gauss genus at `r = 1`.
    pub lambda1_pp: u64,
    pub lambda16_pp: Option<u64>,
    pub pol_mod: Vec<PolModEntry>,
    pub masses: BTreeMap<MassStratum, ExactRational>,
    pub elliptic: EllipticBaseline,
}

impl CensusReport {
    pub fn stratum(&self, genus: GenusLabel, gauss: GaussGenusClass) -> Option<&PolModEntry> {
        self.pol_mod.iter().find(|s| s.genus == genus && s.gauss == gauss)
    }

    pub fn mass(&self, stratum: MassStratum) -> Option<&ExactRational> {
        self.masses.get(&stratum)
    }
}

fn elliptic_from_raw(raw: &formulas::RawElliptic) -> Result<EllipticBaseline> {
    Ok(EllipticBaseline {
        h: to_count("elliptic h", &raw.h)?,
        t: to_count("elliptic t", &raw.t)?,
        refined: RefinedTable::from_raw("elliptic refined", &raw.refined)?,
    })
}

/// Turns a raw census into a report, failing on the first broken identity.
pub fn report_from_raw(raw: RawCensus) -> Result<CensusReport> {
    for (identity, outcome) in identities::check_all(&raw) {
        if let Err(detail) = outcome {
            return Err(Error::InvariantViolation { identity: identity.into(), detail });
        }
    }
    let mut pol_mod = Vec::new();
    for s in &raw.strata {
        let tag = format!("r = {}, {}", s.genus.r, s.gauss);
        let (refined_pm, refined_un) = match &s.refined {
            Some((pm, un)) => (
                Some(RefinedTable::from_raw(&format!("h^pm {tag}"), pm)?),
                Some(RefinedTable::from_raw(&format!("h^un {tag}"), un)?),
            ),
            None => (None, None),
        };
        pol_mod.push(PolModEntry {
            genus: s.genus,
            gauss: s.gauss,
            h_pm: to_count(&format!("h^pm {tag}"), &s.triple.h_pm)?,
            h_un: to_count(&format!("h^un {tag}"), &s.triple.h_un)?,
            t: to_count(&format!("t {tag}"), &s.triple.t)?,
            refined_pm,
            refined_un,
        });
    }
    Ok(CensusReport {
        p: raw.profile.p,
        h_pp: to_count("h_pp", &raw.h_pp)?,
        t_pp: to_count("t_pp", &raw.t_pp)?,
        refined_pp: RefinedTable::from_raw("refined_pp", &raw.refined_pp)?,
        lambda1_pp: to_count("lambda1", &raw.lambda1)?,
        lambda16_pp: raw.lambda16.as_ref().map(|v| to_count("lambda16", v)).transpose()?,
        pol_mod,
        masses: raw.masses,
        elliptic: elliptic_from_raw(&raw.elliptic)?,
        profile: raw.profile,
    })
}

/// Full census for `p`, with every identity checked before returning.
pub fn census(p: PrimeInput) -> Result<CensusReport> {
    report_from_raw(evaluate(p, None)?)
}

fn inputs_for(p: PrimeInput) -> Result<FormulaInputs> {
    FormulaInputs::new(&real_quadratic_profile(p)?)
}

/// `h^pp(√p)`: isomorphism classes of principally polarized superspecial
/// surfaces in the isogeny class of `√p`.
pub fn ppav_class_number(p: PrimeInput) -> Result<u64> {
    to_count("h_pp", &formulas::h_pp(&inputs_for(p)?))
}

/// `t^pp(√p)`.
pub fn ppav_type_number(p: PrimeInput) -> Result<u64> {
    to_count("t_pp", &formulas::t_pp(&inputs_for(p)?))
}

/// `(λ₁, λ₁₆)` for `p ≡ 1 (mod 4)`; the two sum to `h^pp`.
pub fn lambda_pp_strata(p: PrimeInput) -> Result<(u64, u64)> {
    if !p.is_one_mod4() {
        return Err(Error::ResidueClass { p: p.get(), required: "p ≡ 1 (mod 4)" });
    }
    let i = inputs_for(p)?;
    let l1 = to_count("lambda1", &formulas::lambda1(&i))?;
    let l16 = to_count("lambda16", &formulas::lambda16(&i).expect("p ≡ 1 (mod 4)"))?;
    let h = to_count("h_pp", &formulas::h_pp(&i))?;
    if l1 + l16 != h {
        return Err(Error::InvariantViolation {
            identity: "lambda-sum".into(),
            detail: format!("{l1} + {l16} ≠ {h}"),
        });
    }
    Ok((l1, l16))
}

/// `h^pp(√p, G)` for every automorphism group `G`.
pub fn ppav_refined(p: PrimeInput) -> Result<RefinedTable> {
    RefinedTable::from_raw("refined_pp", &formulas::refined_pp(&inputs_for(p)?))
}

/// `(h^pm, h^un, t)` for the stratum `(r, g)`.
pub fn pol_mod_numbers(p: PrimeInput, genus: GenusLabel, gauss: GaussGenusClass) -> Result<(u64, u64, u64)> {
    let t = formulas::pol_mod(&inputs_for(p)?, genus, gauss)?;
    Ok((to_count("h^pm", &t.h_pm)?, to_count("h^un", &t.h_un)?, to_count("t", &t.t)?))
}

/// Refined tables for the stratum `(r, g)`; `r = 8` has none.
pub fn refined_pol_mod(
    p: PrimeInput,
    genus: GenusLabel,
    gauss: GaussGenusClass,
) -> Result<(RefinedTable, RefinedTable)> {
    let (pm, un) = formulas::refined_pol_mod(&inputs_for(p)?, genus, gauss)?;
    Ok((RefinedTable::from_raw("h^pm", &pm)?, RefinedTable::from_raw("h^un", &un)?))
}

/// The alternative expression `8ζ_F(-1) + h(-p)/2 + 2h(-3p)/3` for the type
/// number at `p ≡ 1 (mod 4)`, `p ≥ 13`, which disagrees with `t^pp`.
/// Diagnostic only; `None` for other primes.
pub fn type_number_printed_formula(p: PrimeInput) -> Result<Option<ExactRational>> {
    Ok(formulas::printed_type_formula(&inputs_for(p)?))
}

pub fn mass_values(p: PrimeInput) -> Result<BTreeMap<MassStratum, ExactRational>> {
    Ok(formulas::masses(&inputs_for(p)?))
}

pub fn elliptic_baseline(p: PrimeInput) -> Result<EllipticBaseline> {
    elliptic_from_raw(&formulas::elliptic(&inputs_for(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn prime(p: u64) -> PrimeInput {
        PrimeInput::new(p).unwrap()
    }

    fn nonzero(t: &RefinedTable) -> Vec<(String, u64)> {
        t.nonzero().into_iter().map(|(g, n)| (g.label(), n)).collect()
    }

    fn pairs(items: &[(&str, u64)]) -> Vec<(String, u64)> {
        items.iter().map(|(g, n)| (g.to_string(), *n)).collect()
    }

    #[test]
    fn small_primes() {
        for (p, h, refined) in [
            (2, 1, pairs(&[("E48", 1)])),
            (3, 1, pairs(&[("Q24", 1)])),
            (5, 2, pairs(&[("Q12", 1), ("E120", 1)])),
        ] {
            let r = census(prime(p)).unwrap();
            assert_eq!((r.h_pp, r.t_pp), (h, h), "p = {p}");
            assert_eq!(nonzero(&r.refined_pp), refined, "p = {p}");
            for s in r.pol_mod.iter().filter(|s| s.genus.r == 1) {
                assert_eq!((s.h_pm, s.h_un, s.t), (1, 1, 1), "p = {p}");
            }
        }
    }

    #[test]
    fn seven_and_eleven() {
        let r = census(prime(7)).unwrap();
        assert_eq!((r.h_pp, r.t_pp), (2, 2));
        assert_eq!(nonzero(&r.refined_pp), pairs(&[("Q8", 1), ("E24", 1)]));
        assert_eq!(r.mass(MassStratum::Ppsp), Some(&q(1, 6)));
        let principal = r.stratum(GenusLabel::R1, GaussGenusClass::Principal).unwrap();
        assert_eq!((principal.h_pm, principal.h_un, principal.t), (2, 2, 2));
        let un = principal.refined_un.as_ref().unwrap();
        assert_eq!((un.get(GroupTag::D4), un.get(GroupTag::S4)), (1, 1));

        let r = census(prime(11)).unwrap();
        assert_eq!((r.h_pp, r.t_pp), (3, 2));
        assert_eq!(nonzero(&r.refined_pp), pairs(&[("Q8", 1), ("Q12", 2)]));
        let np = r.stratum(GenusLabel::R1, GaussGenusClass::NonPrincipal).unwrap();
        assert_eq!(nonzero(np.refined_pm.as_ref().unwrap()), pairs(&[("C4", 1), ("E24", 1)]));
        assert_eq!(nonzero(&r.elliptic.refined), pairs(&[("C4", 1), ("C6", 1)]));
    }

    #[test]
    fn thirteen() {
        let r = census(prime(13)).unwrap();
        assert_eq!((r.h_pp, r.t_pp, r.lambda1_pp, r.lambda16_pp), (3, 3, 1, Some(2)));
        assert_eq!(type_number_printed_formula(prime(13)).unwrap(), Some(ExactRational::integer(5)));
        assert_eq!(type_number_printed_formula(prime(7)).unwrap(), None);
        let r16 = r.stratum(GenusLabel::R16, GaussGenusClass::Unique).unwrap();
        assert_eq!(nonzero(r16.refined_pm.as_ref().unwrap()), pairs(&[("C4", 1), ("C6", 1)]));
        assert_eq!((r.elliptic.h, r.elliptic.t), (1, 1));
    }

    #[test]
    fn operations() {
        assert_eq!(lambda_pp_strata(prime(5)).unwrap(), (1, 1));
        assert_eq!(lambda_pp_strata(prime(17)).unwrap(), (1, 3));
        assert!(lambda_pp_strata(prime(7)).is_err());
        assert_eq!(pol_mod_numbers(prime(5), GenusLabel::R8, GaussGenusClass::Unique).unwrap(), (1, 1, 1));
        assert_eq!(
            pol_mod_numbers(prime(3), GenusLabel::R1, GaussGenusClass::NonPrincipal).unwrap(),
            (1, 1, 1)
        );
        assert!(matches!(
            pol_mod_numbers(prime(7), GenusLabel::R16, GaussGenusClass::Principal),
            Err(Error::IllegalStratum { p: 7, r: 16, .. })
        ));
        assert!(refined_pol_mod(prime(13), GenusLabel::R8, GaussGenusClass::Unique).is_err());
        let m = mass_values(prime(5)).unwrap();
        assert_eq!(m[&MassStratum::PmR8], q(1, 8));
        assert_eq!(m[&MassStratum::UnR8], q(1, 12));
        assert_eq!(mass_values(prime(2)).unwrap()[&MassStratum::Ppsp], q(1, 48));
    }

    #[test]
    fn injected_fault_breaks_refined_sum_first() {
        let raw = evaluate(prime(7), Some(Fault::RefinedHMinusP)).unwrap();
        let first = identities::check_all(&raw).into_iter().find(|(_, c)| c.is_err()).unwrap();
        assert_eq!(first.0, "refined-sum");
        // Constant tables at p = 2, 3, 5 are unaffected.
        for p in [2, 3, 5] {
            let raw = evaluate(prime(p), Some(Fault::RefinedHMinusP)).unwrap();
            assert!(report_from_raw(raw).is_ok());
        }
    }
}
