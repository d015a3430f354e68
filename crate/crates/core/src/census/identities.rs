//! The consistency identities every census must satisfy, checked in a fixed
//! order on unchecked rationals so a failure names the first broken link.

use num_integer::Integer;

use crate::arith::{q, ExactRational};
use crate::quadratic::{zeta_bernoulli, zeta_siegel};

use super::evaluate::RawCensus;
use super::formulas::PrimeCase;
use super::genus::{GaussGenusClass, GenusLabel};
use super::group::{raw_mass, raw_total, GroupTag, RawTable};
use super::mass::{order_mass_r16, order_mass_r8, pm_mass_index, MassStratum};

/// Outcome of one identity: `Err` carries a human-readable detail.
pub type Check = Result<(), String>;

/// Every identity name in check order.
pub const IDENTITY_NAMES: [&str; 26] = [
    "zeta-siegel-bernoulli",
    "zeta-integrality",
    "imaginary-class-number-oracles",
    "unit-pell",
    "unit-norm-residue",
    "narrow-class-ratio",
    "odd-h-A",
    "varpi-mod8",
    "unit-index-cross-check",
    "refined-sum",
    "refined-mass",
    "type-le-class",
    "nonnegative-integers",
    "lambda-sum",
    "pp-strata-sum",
    "refined-pp-decomposition",
    "stratum-refined-sums",
    "stratum-refined-masses",
    "polmod-ordering",
    "polmod-equalities",
    "ppsp-mass-sum",
    "mass-index",
    "order-mass",
    "unit-index-relations",
    "type-plus-total",
    "elliptic-baseline",
];

fn expect_eq(what: &str, left: &ExactRational, right: &ExactRational) -> Check {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} ≠ {right}"))
    }
}

fn all(checks: impl IntoIterator<Item = Check>) -> Check {
    checks.into_iter().collect()
}

fn count_value(v: &ExactRational) -> bool {
    v.is_integer() && !v.is_negative()
}

fn entry(t: &RawTable, g: GroupTag) -> ExactRational {
    t.get(&g).cloned().unwrap_or_default()
}

fn tables_equal(what: &str, a: &RawTable, b: &RawTable) -> Check {
    let tags: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
    all(tags.into_iter().map(|&g| expect_eq(&format!("{what}[{g}]"), &entry(a, g), &entry(b, g))))
}

/// Strata whose polarized classes are principally polarized.
fn pp_strata(raw: &RawCensus) -> Vec<&super::evaluate::RawStratum> {
    raw.strata
        .iter()
        .filter(|s| s.genus.r == 16 || (s.genus.r == 1 && s.gauss != GaussGenusClass::NonPrincipal))
        .collect()
}

/// Runs the identities applicable to `raw.profile.p`, in the order of
/// [`IDENTITY_NAMES`].
pub fn check_all(raw: &RawCensus) -> Vec<(&'static str, Check)> {
    let prof = &raw.profile;
    let inp = &raw.inputs;
    let p = prof.p;
    let case = PrimeCase::of(p.get());
    let mut out: Vec<(&'static str, Check)> = Vec::new();

    out.push((
        "zeta-siegel-bernoulli",
        expect_eq("ζ_F(-1)", &zeta_siegel(prof.d_f), &zeta_bernoulli(prof.d_f)),
    ));
    out.push(("zeta-integrality", {
        let z = &prof.zeta_minus1;
        if z.is_positive() && (z * (60 * prof.d_f)).is_integer() {
            Ok(())
        } else {
            Err(format!("ζ_F(-1) = {z}"))
        }
    }));
    // Both routes ran, and agreed, while the inputs were computed.
    out.push(("imaginary-class-number-oracles", Ok(())));
    out.push((
        "unit-pell",
        if prof.unit.satisfies_norm_equation(p.get()) { Ok(()) } else { Err(format!("{:?}", prof.unit)) },
    ));
    out.push((
        "unit-norm-residue",
        if (prof.unit.norm == -1) == !p.is_three_mod4() {
            Ok(())
        } else {
            Err(format!("N(ε) = {}", prof.unit.norm))
        },
    ));
    out.push((
        "narrow-class-ratio",
        if prof.h_plus == prof.h * if prof.unit.norm == -1 { 1 } else { 2 } {
            Ok(())
        } else {
            Err(format!("h = {}, h+ = {}, N(ε) = {}", prof.h, prof.h_plus, prof.unit.norm))
        },
    ));
    if p.is_one_mod4() {
        let h_a = prof.h_a.unwrap_or(0);
        out.push(("odd-h-A", if h_a.is_odd() { Ok(()) } else { Err(format!("h(A) = {h_a}")) }));
        out.push((
            "varpi-mod8",
            if p.residue_mod8() != 1 || prof.varpi == Some(1) {
                Ok(())
            } else {
                Err(format!("ϖ = {:?}", prof.varpi))
            },
        ));
        // ε^ϖ was matched against the unit of Z[√p] while building the profile.
        out.push(("unit-index-cross-check", Ok(())));
    }

    out.push(("refined-sum", expect_eq("Σ refined", &raw_total(&raw.refined_pp), &raw.h_pp)));
    out.push((
        "refined-mass",
        expect_eq("Σ refined/|G|", &raw_mass(&raw.refined_pp), &raw.masses[&MassStratum::Ppsp]),
    ));
    out.push((
        "type-le-class",
        if raw.t_pp <= raw.h_pp { Ok(()) } else { Err(format!("t = {} > h = {}", raw.t_pp, raw.h_pp)) },
    ));
    out.push(("nonnegative-integers", nonnegative_integers(raw)));
    if let Some(l16) = &raw.lambda16 {
        out.push(("lambda-sum", expect_eq("λ₁ + λ₁₆", &(&raw.lambda1 + l16), &raw.h_pp)));
    }
    out.push((
        "pp-strata-sum",
        expect_eq("Σ pp strata h^pm", &pp_strata(raw).iter().map(|s| &s.triple.h_pm).sum(), &raw.h_pp),
    ));
    out.push(("refined-pp-decomposition", {
        let mut sum = RawTable::new();
        for s in pp_strata(raw) {
            for (g, v) in &s.refined.as_ref().expect("pp strata have refined tables").0 {
                *sum.entry(*g).or_default() = entry(&sum, *g) + v;
            }
        }
        tables_equal("refined pp vs strata", &raw.refined_pp, &sum)
    }));
    out.push((
        "stratum-refined-sums",
        all(raw.strata.iter().filter_map(|s| {
            let (pm, un) = s.refined.as_ref()?;
            let tag = format!("r = {}, {}", s.genus.r, s.gauss);
            Some(all([
                expect_eq(&format!("Σ h^pm(G), {tag}"), &raw_total(pm), &s.triple.h_pm),
                expect_eq(&format!("Σ h^un(G), {tag}"), &raw_total(un), &s.triple.t),
            ]))
        })),
    ));
    out.push((
        "stratum-refined-masses",
        all(raw.strata.iter().filter_map(|s| {
            let (pm, un) = s.refined.as_ref()?;
            let r = s.genus.r;
            let tag = format!("r = {r}, {}", s.gauss);
            let pm_mass = &raw.masses[&MassStratum::pm(r).expect("r ∈ {1, 8, 16}")];
            let un_mass = &raw.masses[&MassStratum::un(r).expect("r ∈ {1, 8, 16}")];
            Some(all([
                expect_eq(&format!("pm mass, {tag}"), &raw_mass(pm), pm_mass),
                expect_eq(&format!("un mass, {tag}"), &raw_mass(un), un_mass),
            ]))
        })),
    ));
    out.push((
        "polmod-ordering",
        all(raw.strata.iter().map(|s| {
            let t = &s.triple;
            if t.h_pm >= t.h_un && t.h_un >= t.t {
                Ok(())
            } else {
                Err(format!("r = {}, {}: {} {} {}", s.genus.r, s.gauss, t.h_pm, t.h_un, t.t))
            }
        })),
    ));
    out.push((
        "polmod-equalities",
        all(raw.strata.iter().map(|s| {
            let t = &s.triple;
            let tag = format!("r = {}, {}", s.genus.r, s.gauss);
            let un_eq_t = expect_eq(&format!("h^un = t, {tag}"), &t.h_un, &t.t);
            if p.is_one_mod4() && s.genus.r != 8 {
                all([expect_eq(&format!("h^pm = h^un, {tag}"), &t.h_pm, &t.h_un), un_eq_t])
            } else if p.is_three_mod4() {
                un_eq_t
            } else {
                Ok(())
            }
        })),
    ));
    out.push(("ppsp-mass-sum", {
        let m = &raw.masses;
        let pp = if p.is_one_mod4() {
            &m[&MassStratum::PmR1] + &m[&MassStratum::PmR16]
        } else {
            m[&MassStratum::PmR1].clone()
        };
        expect_eq("Mass(PPSP)", &m[&MassStratum::Ppsp], &pp)
    }));
    if p.is_one_mod4() {
        let m = &raw.masses;
        let pm1 = &m[&MassStratum::PmR1];
        out.push((
            "mass-index",
            all([
                expect_eq(
                    "pm mass r = 8",
                    &m[&MassStratum::PmR8],
                    &(pm1 * pm_mass_index(inp, 8).expect("r = 8")),
                ),
                expect_eq(
                    "pm mass r = 16",
                    &m[&MassStratum::PmR16],
                    &(pm1 * pm_mass_index(inp, 16).expect("r = 16")),
                ),
            ]),
        ));
        let h_a = prof.h_a.expect("p ≡ 1 (mod 4)");
        out.push((
            "order-mass",
            all([
                expect_eq(
                    "order mass r = 8 per class",
                    &(order_mass_r8(inp, prof.h) / prof.h as i64),
                    &m[&MassStratum::UnR8],
                ),
                expect_eq(
                    "order mass r = 16 per class",
                    &(order_mass_r16(inp, prof.h) / h_a as i64),
                    &m[&MassStratum::UnR16],
                ),
            ]),
        ));
    }
    if case == PrimeCase::ThreeMod4 {
        out.push((
            "unit-index-relations",
            all(raw.strata.iter().map(|s| {
                let (pm, un) = s.refined.as_ref().expect("r = 1 has refined tables");
                unit_index_relations(&format!("{}", s.gauss), pm, un)
            })),
        ));
        let principal = raw
            .stratum(GenusLabel::R1, GaussGenusClass::Principal)
            .and_then(|s| s.refined.as_ref())
            .expect("principal genus present");
        out.push(("type-plus-total", expect_eq("Σ t⁺(G)", &raw_total(&principal.1), &raw.t_pp)));
    }
    out.push(("elliptic-baseline", elliptic(raw)));
    out
}

/// Each polarized automorphism group is determined by the reduced one and
/// the unit index, which gives these linear relations.
fn unit_index_relations(tag: &str, pm: &RawTable, un: &RawTable) -> Check {
    let rel = |pm_tag: GroupTag, rhs: ExactRational| {
        expect_eq(&format!("{tag}: h^pm({pm_tag})"), &entry(pm, pm_tag), &rhs)
    };
    all([
        rel(GroupTag::C2, entry(un, GroupTag::C1) * 2 + entry(un, GroupTag::C2_DDAGGER)),
        rel(GroupTag::C4, entry(un, GroupTag::C2_DAGGER) * 2 + entry(un, GroupTag::C4)),
        rel(GroupTag::C6, entry(un, GroupTag::C3) * 2 + entry(un, GroupTag::D3_DDAGGER)),
        rel(GroupTag::Q8, entry(un, GroupTag::D4)),
        rel(GroupTag::Q12, entry(un, GroupTag::D3_DAGGER) * 2),
        rel(GroupTag::E24, entry(un, GroupTag::S4)),
    ])
}

fn elliptic(raw: &RawCensus) -> Check {
    let e = &raw.elliptic;
    let p = raw.profile.p.get() as i64;
    let small = if p <= 3 {
        all([
            expect_eq("elliptic h", &e.h, &ExactRational::one()),
            expect_eq("elliptic t", &e.t, &ExactRational::one()),
        ])
    } else {
        Ok(())
    };
    all([
        expect_eq("elliptic Σ refined", &raw_total(&e.refined), &e.h),
        expect_eq("elliptic mass", &raw_mass(&e.refined), &q(p - 1, 24)),
        if e.t <= e.h { Ok(()) } else { Err(format!("elliptic t = {} > h = {}", e.t, e.h)) },
        small,
    ])
}

fn nonnegative_integers(raw: &RawCensus) -> Check {
    let mut values: Vec<(String, &ExactRational)> = vec![
        ("h_pp".into(), &raw.h_pp),
        ("t_pp".into(), &raw.t_pp),
        ("lambda1".into(), &raw.lambda1),
        ("elliptic h".into(), &raw.elliptic.h),
        ("elliptic t".into(), &raw.elliptic.t),
    ];
    if let Some(l) = &raw.lambda16 {
        values.push(("lambda16".into(), l));
    }
    values.extend(raw.refined_pp.iter().map(|(g, v)| (format!("refined_pp[{g}]"), v)));
    values.extend(raw.elliptic.refined.iter().map(|(g, v)| (format!("elliptic[{g}]"), v)));
    for s in &raw.strata {
        let tag = format!("r = {}, {}", s.genus.r, s.gauss);
        values.push((format!("h^pm {tag}"), &s.triple.h_pm));
        values.push((format!("h^un {tag}"), &s.triple.h_un));
        values.push((format!("t {tag}"), &s.triple.t));
        if let Some((pm, un)) = &s.refined {
            values.extend(pm.iter().map(|(g, v)| (format!("h^pm({g}) {tag}"), v)));
            values.extend(un.iter().map(|(g, v)| (format!("h^un({g}) {tag}"), v)));
        }
    }
    match values.into_iter().find(|(_, v)| !count_value(v)) {
        None => Ok(()),
        Some((name, v)) => Err(format!("{name} = {v}")),
    }
}
