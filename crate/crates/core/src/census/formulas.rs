//! Closed-form counts as exact rationals, before integrality is checked.
//!
//! Notation: `z = ζ_F(-1)`, `h = h(-p)`, `h2 = h(-2p)`, `h3 = h(-3p)`,
//! `c2 = (2/p)`, `c3 = (p/3)`.

use std::collections::BTreeMap;

use crate::arith::{q, ExactRational};
use crate::error::{Error, Result};

use super::genus::{check_stratum, GaussGenusClass, GenusLabel};
use super::group::{GroupTag, RawTable};
use super::inputs::FormulaInputs;
use super::mass::MassStratum;

/// Which closed form applies to `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeCase {
    Two,
    Three,
    Five,
    /// `p ≡ 1 (mod 4)`, `p ≥ 13`
    OneMod4,
    /// `p ≡ 3 (mod 4)`, `p ≥ 7`
    ThreeMod4,
}

impl PrimeCase {
    pub fn of(p: u64) -> PrimeCase {
        match p {
            2 => PrimeCase::Two,
            3 => PrimeCase::Three,
            5 => PrimeCase::Five,
            _ if p % 4 == 1 => PrimeCase::OneMod4,
            _ => PrimeCase::ThreeMod4,
        }
    }
}

fn one() -> ExactRational {
    ExactRational::one()
}

fn table<const N: usize>(entries: [(GroupTag, ExactRational); N]) -> RawTable {
    entries.into_iter().collect()
}

fn single(tag: GroupTag) -> RawTable {
    table([(tag, one())])
}

/// Pads a table with zeros so every tag in `tags` is present.
fn padded(mut t: RawTable, tags: &[GroupTag]) -> RawTable {
    for &g in tags {
        t.entry(g).or_insert_with(ExactRational::zero);
    }
    t
}

const PP_TAGS: [GroupTag; 9] = [
    GroupTag::C2,
    GroupTag::C4,
    GroupTag::C6,
    GroupTag::Q8,
    GroupTag::Q12,
    GroupTag::Q24,
    GroupTag::E24,
    GroupTag::E48,
    GroupTag::E120,
];

/// Number of principally polarized surfaces, `h^pp(√p)`.
pub fn h_pp(i: &FormulaInputs) -> ExactRational {
    let (z, h, c2) = (&i.zeta, i.hp(), i.chi2);
    match PrimeCase::of(i.pv()) {
        PrimeCase::Two | PrimeCase::Three => one(),
        PrimeCase::Five => ExactRational::integer(2),
        PrimeCase::OneMod4 => z * (9 - 2 * c2) / 2 + h * 3 / 8 + i.h3p() * (3 + c2) / 6,
        PrimeCase::ThreeMod4 => z / 2 + h * (11 - 3 * c2) / 8 + i.h3p() / 6,
    }
}

/// Stratum `r = 1` count for `p ≡ 1 (mod 4)`; for other `p` the class number
/// of the principal (or only) Gauss genus at `r = 1`.
pub fn lambda1(i: &FormulaInputs) -> ExactRational {
    match PrimeCase::of(i.pv()) {
        PrimeCase::Two | PrimeCase::Three | PrimeCase::Five => one(),
        PrimeCase::OneMod4 => &i.zeta / 2 + i.hp() / 8 + i.h3p() / 6,
        PrimeCase::ThreeMod4 => h_pp(i),
    }
}

/// Stratum `r = 16` count, valid for every `p ≡ 1 (mod 4)`.
pub fn lambda16(i: &FormulaInputs) -> Option<ExactRational> {
    if !i.p.is_one_mod4() {
        return None;
    }
    let c2 = i.chi2;
    Some(&i.zeta * (4 - c2) + i.hp() / 4 + i.h3p() * (2 + c2) / 6)
}

/// Type number `t^pp(√p)`.
///
/// For `p ≡ 1 (mod 4)`, `p ≥ 13` every class is its own type in both strata,
/// so this is `λ₁ + λ₁₆`.
pub fn t_pp(i: &FormulaInputs) -> ExactRational {
    match PrimeCase::of(i.pv()) {
        PrimeCase::Two | PrimeCase::Three => one(),
        PrimeCase::Five => ExactRational::integer(2),
        PrimeCase::OneMod4 => lambda1(i) + lambda16(i).expect("p ≡ 1 (mod 4)"),
        PrimeCase::ThreeMod4 => &i.zeta / 4 + i.hp() * (17 - i.chi2) / 16 + i.h2p() / 8 + i.h3p() / 12,
    }
}

/// The alternative printed expression `8z + h/2 + 2·h3/3` for the type number
/// at `p ≡ 1 (mod 4)`, `p ≥ 13`. It exceeds `h^pp` (5 against 3 at
/// `p = 13`), so it is only reported as a diagnostic.
pub fn printed_type_formula(i: &FormulaInputs) -> Option<ExactRational> {
    (PrimeCase::of(i.pv()) == PrimeCase::OneMod4).then(|| &i.zeta * 8 + i.hp() / 2 + i.h3p() * 2 / 3)
}

/// Refined class numbers `h^pp(√p, G)` over the automorphism groups.
pub fn refined_pp(i: &FormulaInputs) -> RawTable {
    let (z, h, c2, c3) = (&i.zeta, i.hp(), i.chi2, i.chi3);
    let t = match PrimeCase::of(i.pv()) {
        PrimeCase::Two => single(GroupTag::E48),
        PrimeCase::Three => single(GroupTag::Q24),
        PrimeCase::Five => table([(GroupTag::E120, one()), (GroupTag::Q12, one())]),
        PrimeCase::OneMod4 => {
            let h3 = i.h3p();
            table([
                (
                    GroupTag::C2,
                    z * (9 - 2 * c2) / 2 - &h * 3 / 8 - &h3 * (3 + c2) / 12 - q(c2, 4) - q(c3, 2) + q(3, 4),
                ),
                (GroupTag::C4, &h * 3 / 4 + q(c2, 4) + c3 - q(5, 4)),
                (GroupTag::C6, &h3 * (3 + c2) / 4 + q(c2, 2) + q(c3, 2) - 1),
                (GroupTag::Q12, ExactRational::integer(1 - c3)),
                (GroupTag::E24, q(1 - c2, 2)),
            ])
        }
        PrimeCase::ThreeMod4 => principal_pm_r1(i),
    };
    padded(t, &PP_TAGS)
}

/// Refined counts for the principal Gauss genus at `r = 1`, `p ≡ 3 (mod 4)`.
fn principal_pm_r1(i: &FormulaInputs) -> RawTable {
    let (z, h, h3, c2, c3) = (&i.zeta, i.hp(), i.h3p(), i.chi2, i.chi3);
    table([
        (GroupTag::C2, z / 2 - &h * (11 - 3 * c2) / 8 - &h3 / 12 + q(c2, 4) - q(c3, 2) + q(5, 4)),
        (GroupTag::C4, (q(11, 4) - q(3 * c2, 4)) * (&h - 1) - c2 + c3),
        (GroupTag::C6, &h3 / 4 - q(c2, 2) + q(c3, 2) - 1),
        (GroupTag::Q8, one()),
        (GroupTag::Q12, ExactRational::integer(1 - c3)),
        (GroupTag::E24, q(1 + c2, 2)),
    ])
}

fn nonprincipal_pm_r1(i: &FormulaInputs) -> RawTable {
    let (z, h, h3, c2) = (&i.zeta, i.hp(), i.h3p(), i.chi2);
    table([
        (GroupTag::C2, z / 2 - &h * (3 * (1 - c2)) / 8 - &h3 / 12 + q(1 - c2, 4)),
        (GroupTag::C4, &h * (3 * (1 - c2)) / 4 - q(1 - c2, 4)),
        (GroupTag::C6, &h3 / 4 + q(c2, 2) - q(1, 2)),
        (GroupTag::Q8, ExactRational::zero()),
        (GroupTag::Q12, ExactRational::zero()),
        (GroupTag::E24, q(1 - c2, 2)),
    ])
}

/// Type counts per reduced automorphism group, `t⁺(G)` (principal genus) or
/// `t⁻(G)` (nonprincipal genus), `p ≡ 3 (mod 4)`, `p ≥ 7`.
fn reduced_r1_three_mod4(i: &FormulaInputs, principal: bool) -> RawTable {
    let (z, h, h2, h3, c2, c3) = (&i.zeta, i.hp(), i.h2p(), i.h3p(), i.chi2, i.chi3);
    // (1 + c2)(1 - c3)/8
    let mixed = q((1 + c2) * (1 - c3), 8);
    if principal {
        table([
            (GroupTag::C1, z / 4 - &h * (11 - 3 * c2) / 16 - &h2 / 8 - &h3 / 24 + &mixed + 1),
            (GroupTag::C2_DAGGER, &h * (2 - c2) / 2 + q(c3, 2) - 1),
            (GroupTag::C2_DDAGGER, &h2 / 4 - q(c3 * (1 - c2), 4) - 1),
            (GroupTag::C3, &h3 / 8 - &mixed - q(1, 2)),
            (GroupTag::C4, (&h - 1) * (3 + c2) / 4),
            (GroupTag::D3_DAGGER, q(1 - c3, 2)),
            (GroupTag::D3_DDAGGER, q((1 + c3) * (1 - c2), 4)),
            (GroupTag::D4, one()),
            (GroupTag::S4, q(1 + c2, 2)),
        ])
    } else {
        table([
            (GroupTag::C1, z / 4 - &h * (3 * (1 - c2)) / 16 - &h2 / 8 - &h3 / 24 - &mixed + q(1, 2)),
            (GroupTag::C2_DAGGER, ExactRational::zero()),
            (GroupTag::C2_DDAGGER, &h2 / 4 - q(c3 * (1 + c2), 4) - q(1, 2)),
            (GroupTag::C3, &h3 / 8 + &mixed - q(1, 2)),
            (GroupTag::C4, (&h * 3 - 1) * (1 - c2) / 4),
            (GroupTag::D3_DAGGER, ExactRational::zero()),
            (GroupTag::D3_DDAGGER, q((1 + c3) * (1 + c2), 4)),
            (GroupTag::D4, ExactRational::zero()),
            (GroupTag::S4, q(1 - c2, 2)),
        ])
    }
}

/// `(h^pm, h^un, t)` for one stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTriple {
    pub h_pm: ExactRational,
    pub h_un: ExactRational,
    pub t: ExactRational,
}

impl RawTriple {
    fn same(v: ExactRational) -> RawTriple {
        RawTriple { h_pm: v.clone(), h_un: v.clone(), t: v }
    }
}

/// Class numbers of polarized and unpolarized surfaces and the type number in
/// the stratum `(r, g)`.
pub fn pol_mod(i: &FormulaInputs, genus: GenusLabel, gauss: GaussGenusClass) -> Result<RawTriple> {
    check_stratum(i.p, genus, gauss)?;
    let case = PrimeCase::of(i.pv());
    let (z, h, c2) = (&i.zeta, i.hp(), i.chi2);
    Ok(match (genus.r, case) {
        (1, PrimeCase::Two | PrimeCase::Three | PrimeCase::Five) => RawTriple::same(one()),
        (1, PrimeCase::OneMod4) => RawTriple::same(lambda1(i)),
        (1, PrimeCase::ThreeMod4) => match gauss {
            GaussGenusClass::Principal => {
                let t = t_pp(i);
                RawTriple { h_pm: h_pp(i), h_un: t.clone(), t }
            }
            _ => {
                let t = z / 4 + &h * (9 * (1 - c2)) / 16 + i.h2p() / 8 + i.h3p() / 12;
                RawTriple { h_pm: z / 2 + &h * (3 * (1 - c2)) / 8 + i.h3p() / 6, h_un: t.clone(), t }
            }
        },
        (8, _) => {
            let w = i.varpi();
            let delta = if w == 3 { i.h3p() / w } else { ExactRational::zero() };
            RawTriple {
                h_pm: z * (3 * (4 - c2)) / 2 + &h * (2 - c2) / 8,
                h_un: z * (3 * (4 - c2)) / (2 * w) + &h * (2 - c2) / (8 * w) + delta,
                t: z * (7 + 2 * c2) / 2 + &h / 8 + i.h3p() * (1 - c2) / 6,
            }
        }
        (16, _) => RawTriple::same(lambda16(i).expect("r = 16 requires p ≡ 1 (mod 4)")),
        _ => unreachable!("stratum legality checked above"),
    })
}

/// Refined tables `(h^pm(G), h^un(G))` for one stratum: polarized counts per
/// automorphism group and unpolarized counts per reduced automorphism group.
pub fn refined_pol_mod(
    i: &FormulaInputs,
    genus: GenusLabel,
    gauss: GaussGenusClass,
) -> Result<(RawTable, RawTable)> {
    check_stratum(i.p, genus, gauss)?;
    if genus.r == 8 {
        return Err(Error::Precondition("no refined table exists for the stratum r = 8".into()));
    }
    let (z, h, c2, c3) = (&i.zeta, i.hp(), i.chi2, i.chi3);
    Ok(match (genus.r, PrimeCase::of(i.pv())) {
        (1, PrimeCase::Two) => (single(GroupTag::E48), single(GroupTag::S4)),
        (1, PrimeCase::Three) => match gauss {
            GaussGenusClass::Principal => (single(GroupTag::Q24), single(GroupTag::D12)),
            _ => (single(GroupTag::E24), single(GroupTag::S4)),
        },
        (1, PrimeCase::Five) => (single(GroupTag::E120), single(GroupTag::A5)),
        (1, PrimeCase::OneMod4) => {
            let h3 = i.h3p();
            let c2v = z / 2 - &h / 8 - &h3 / 12 - q(c3, 4) - q(c2, 4) + q(1, 2);
            let c4v = &h / 4 + q(c3, 2) + q(c2, 4) - q(3, 4);
            let c6v = &h3 / 4 + q(c3, 4) + q(c2, 2) - q(3, 4);
            let q12 = q(1 - c3, 2);
            let e24 = q(1 - c2, 2);
            (
                table([
                    (GroupTag::C2, c2v.clone()),
                    (GroupTag::C4, c4v.clone()),
                    (GroupTag::C6, c6v.clone()),
                    (GroupTag::Q12, q12.clone()),
                    (GroupTag::E24, e24.clone()),
                ]),
                table([
                    (GroupTag::C1, c2v),
                    (GroupTag::C2, c4v),
                    (GroupTag::C3, c6v),
                    (GroupTag::D3, q12),
                    (GroupTag::A4, e24),
                ]),
            )
        }
        (1, PrimeCase::ThreeMod4) => {
            let principal = gauss == GaussGenusClass::Principal;
            let pm = if principal { principal_pm_r1(i) } else { nonprincipal_pm_r1(i) };
            (pm, reduced_r1_three_mod4(i, principal))
        }
        (16, _) => {
            let h3 = i.h3p();
            let c2v = z * (4 - c2) - &h / 4 - &h3 * (2 + c2) / 12 + q(1 - c3, 4);
            let c4v = &h / 2 + q(c3 - 1, 2);
            let c6v = &h3 * (2 + c2) / 4 + q(c3 - 1, 4);
            let q12 = q(1 - c3, 2);
            (
                table([
                    (GroupTag::C2, c2v.clone()),
                    (GroupTag::C4, c4v.clone()),
                    (GroupTag::C6, c6v.clone()),
                    (GroupTag::Q12, q12.clone()),
                ]),
                table([
                    (GroupTag::C1, c2v),
                    (GroupTag::C2, c4v),
                    (GroupTag::C3, c6v),
                    (GroupTag::D3, q12),
                    (GroupTag::D2, ExactRational::zero()),
                    (GroupTag::A4, ExactRational::zero()),
                ]),
            )
        }
        _ => unreachable!("stratum legality checked above"),
    })
}

/// Masses `Σ 1/|Aut|` of each stratum and of the whole principally
/// polarized set.
pub fn masses(i: &FormulaInputs) -> BTreeMap<MassStratum, ExactRational> {
    let (z, c2) = (&i.zeta, i.chi2);
    let mut m = BTreeMap::new();
    let ppsp = if i.p.is_one_mod4() { z * (9 - 2 * c2) / 4 } else { z / 4 };
    m.insert(MassStratum::Ppsp, ppsp);
    m.insert(MassStratum::PmR1, z / 4);
    m.insert(MassStratum::UnR1, if i.p.is_three_mod4() { z / 4 } else { z / 2 });
    if i.p.is_one_mod4() {
        let w = i.varpi();
        m.insert(MassStratum::PmR8, z * (3 * (4 - c2)) / 4);
        m.insert(MassStratum::UnR8, z * (3 * (4 - c2)) / (2 * w));
        m.insert(MassStratum::PmR16, z * (4 - c2) / 2);
        m.insert(MassStratum::UnR16, z * (4 - c2));
    }
    m
}

/// Baseline for even powers `q = p^{2k}`: supersingular elliptic curves,
/// i.e. the maximal-order class number of the quaternion algebra ramified at
/// `p` and `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawElliptic {
    pub h: ExactRational,
    pub t: ExactRational,
    pub refined: RawTable,
}

pub const ELLIPTIC_TAGS: [GroupTag; 5] =
    [GroupTag::C2, GroupTag::C4, GroupTag::C6, GroupTag::Q12, GroupTag::E24];

pub fn elliptic(i: &FormulaInputs) -> RawElliptic {
    let p = i.pv() as i64;
    let (a, b) = (1 - i.chi_m4, 1 - i.chi_m3);
    let h = q(p - 1, 12) + q(a, 4) + q(b, 3);
    let (t, refined) = match p {
        2 => (one(), single(GroupTag::E24)),
        3 => (one(), single(GroupTag::Q12)),
        _ => {
            let coeff = q(1, 2) + q(a * (2 - i.chi2), 4);
            let t = (&h + coeff * i.hp()) / 2;
            let refined = table([
                (GroupTag::C2, q(p - 1, 12) - q(a, 4) - q(b, 6)),
                (GroupTag::C4, q(a, 2)),
                (GroupTag::C6, q(b, 2)),
            ]);
            (t, refined)
        }
    };
    RawElliptic { h, t, refined: padded(refined, &ELLIPTIC_TAGS) }
}
