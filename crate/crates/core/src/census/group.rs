use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::ExactRational;
use crate::error::{Error, Result};

/// Finite groups occurring as automorphism groups or reduced automorphism
/// groups of the surfaces counted here.
///
/// `Q4m` is the dicyclic group of order `4m`; `E24`, `E48`, `E120` are the
/// binary tetrahedral, octahedral and icosahedral groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    C1,
    C2,
    C3,
    C4,
    C6,
    Q8,
    Q12,
    Q24,
    E24,
    E48,
    E120,
    D2,
    D3,
    D4,
    D12,
    A4,
    S4,
    A5,
}

impl GroupName {
    pub const ALL: [GroupName; 18] = [
        GroupName::C1,
        GroupName::C2,
        GroupName::C3,
        GroupName::C4,
        GroupName::C6,
        GroupName::Q8,
        GroupName::Q12,
        GroupName::Q24,
        GroupName::E24,
        GroupName::E48,
        GroupName::E120,
        GroupName::D2,
        GroupName::D3,
        GroupName::D4,
        GroupName::D12,
        GroupName::A4,
        GroupName::S4,
        GroupName::A5,
    ];

    pub fn order(self) -> u64 {
        use GroupName::*;
        match self {
            C1 => 1,
            C2 => 2,
            C3 => 3,
            C4 => 4,
            C6 => 6,
            Q8 => 8,
            Q12 => 12,
            Q24 => 24,
            E24 => 24,
            E48 => 48,
            E120 => 120,
            D2 => 4,
            D3 => 6,
            D4 => 8,
            D12 => 24,
            A4 => 12,
            S4 => 24,
            A5 => 60,
        }
    }

    pub fn as_str(self) -> &'static str {
        use GroupName::*;
        match self {
            C1 => "C1",
            C2 => "C2",
            C3 => "C3",
            C4 => "C4",
            C6 => "C6",
            Q8 => "Q8",
            Q12 => "Q12",
            Q24 => "Q24",
            E24 => "E24",
            E48 => "E48",
            E120 => "E120",
            D2 => "D2",
            D3 => "D3",
            D4 => "D4",
            D12 => "D12",
            A4 => "A4",
            S4 => "S4",
            A5 => "A5",
        }
    }
}

/// The `†`/`‡` split of `C2` and `D3` by how the group sits in the unit
/// group of the quaternion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    None,
    Dagger,
    DoubleDagger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupTag {
    name: GroupName,
    decoration: Decoration,
}

impl GroupTag {
    pub const C1: GroupTag = GroupTag::plain(GroupName::C1);
    pub const C2: GroupTag = GroupTag::plain(GroupName::C2);
    pub const C2_DAGGER: GroupTag = GroupTag { name: GroupName::C2, decoration: Decoration::Dagger };
    pub const C2_DDAGGER: GroupTag = GroupTag { name: GroupName::C2, decoration: Decoration::DoubleDagger };
    pub const C3: GroupTag = GroupTag::plain(GroupName::C3);
    pub const C4: GroupTag = GroupTag::plain(GroupName::C4);
    pub const C6: GroupTag = GroupTag::plain(GroupName::C6);
    pub const Q8: GroupTag = GroupTag::plain(GroupName::Q8);
    pub const Q12: GroupTag = GroupTag::plain(GroupName::Q12);
    pub const Q24: GroupTag = GroupTag::plain(GroupName::Q24);
    pub const E24: GroupTag = GroupTag::plain(GroupName::E24);
    pub const E48: GroupTag = GroupTag::plain(GroupName::E48);
    pub const E120: GroupTag = GroupTag::plain(GroupName::E120);
    pub const D2: GroupTag = GroupTag::plain(GroupName::D2);
    pub const D3: GroupTag = GroupTag::plain(GroupName::D3);
    pub const D3_DAGGER: GroupTag = GroupTag { name: GroupName::D3, decoration: Decoration::Dagger };
    pub const D3_DDAGGER: GroupTag = GroupTag { name: GroupName::D3, decoration: Decoration::DoubleDagger };
    pub const D4: GroupTag = GroupTag::plain(GroupName::D4);
    pub const D12: GroupTag = GroupTag::plain(GroupName::D12);
    pub const A4: GroupTag = GroupTag::plain(GroupName::A4);
    pub const S4: GroupTag = GroupTag::plain(GroupName::S4);
    pub const A5: GroupTag = GroupTag::plain(GroupName::A5);

    const fn plain(name: GroupName) -> GroupTag {
        GroupTag { name, decoration: Decoration::None }
    }

    pub fn new(name: GroupName, decoration: Decoration) -> Result<GroupTag> {
        if decoration != Decoration::None && !matches!(name, GroupName::C2 | GroupName::D3) {
            return Err(Error::Precondition(format!("{} carries no decoration", name.as_str())));
        }
        Ok(GroupTag { name, decoration })
    }

    pub fn name(self) -> GroupName {
        self.name
    }

    pub fn decoration(self) -> Decoration {
        self.decoration
    }

    pub fn order(self) -> u64 {
        self.name.order()
    }

    /// ASCII label used in serialized output: `C2`, `C2dag`, `D3ddag`.
    pub fn label(self) -> String {
        let suffix = match self.decoration {
            Decoration::None => "",
            Decoration::Dagger => "dag",
            Decoration::DoubleDagger => "ddag",
        };
        format!("{}{}", self.name.as_str(), suffix)
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = match self.decoration {
            Decoration::None => "",
            Decoration::Dagger => "†",
            Decoration::DoubleDagger => "‡",
        };
        write!(f, "{}{}", self.name.as_str(), mark)
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupTag> {
        let s = s.trim();
        let (base, decoration) = if let Some(b) = s.strip_suffix("ddag").or(s.strip_suffix('‡')) {
            (b, Decoration::DoubleDagger)
        } else if let Some(b) = s.strip_suffix("dag").or(s.strip_suffix('†')) {
            (b, Decoration::Dagger)
        } else {
            (s, Decoration::None)
        };
        let name = GroupName::ALL
            .into_iter()
            .find(|g| g.as_str() == base)
            .ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))?;
        GroupTag::new(name, decoration)
    }
}

impl Serialize for GroupTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for GroupTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Formula values per group before integrality is checked.
pub type RawTable = BTreeMap<GroupTag, ExactRational>;

pub(crate) fn raw_total(table: &RawTable) -> ExactRational {
    table.values().sum()
}

pub(crate) fn raw_mass(table: &RawTable) -> ExactRational {
    table.iter().map(|(g, n)| n / g.order() as i64).sum()
}

/// Number of classes per group. Tags the relevant statement does not list
/// are absent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RefinedTable {
    pub entries: BTreeMap<GroupTag, u64>,
}

impl RefinedTable {
    pub fn get(&self, tag: GroupTag) -> u64 {
        self.entries.get(&tag).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `Σ n_G / |G|`.
    pub fn mass(&self) -> ExactRational {
        self.entries.iter().map(|(g, &n)| ExactRational::new(n as i64, g.order() as i64)).sum()
    }

    /// Nonzero entries only, e.g. `{Q8: 1, E24: 1}`.
    pub fn nonzero(&self) -> BTreeMap<GroupTag, u64> {
        self.entries.iter().filter(|(_, &n)| n != 0).map(|(&g, &n)| (g, n)).collect()
    }

    pub(crate) fn from_raw(quantity: &str, raw: &RawTable) -> Result<RefinedTable> {
        let mut entries = BTreeMap::new();
        for (&g, v) in raw {
            entries.insert(g, super::to_count(&format!("{quantity}[{g}]"), v)?);
        }
        Ok(RefinedTable { entries })
    }

    /// Compact text form `C2:1 C4:0`, used in CSV cells.
    pub fn to_compact(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|(g, n)| format!("{}:{n}", g.label())).collect();
        parts.join(" ")
    }

    pub fn from_compact(s: &str) -> Result<RefinedTable> {
        let mut entries = BTreeMap::new();
        for part in s.split_whitespace() {
            let (g, n) =
                part.split_once(':').ok_or_else(|| Error::Parse(format!("bad table entry {part:?}")))?;
            let n = n.parse().map_err(|_| Error::Parse(format!("bad count in {part:?}")))?;
            entries.insert(g.parse()?, n);
        }
        Ok(RefinedTable { entries })
    }
}

impl FromIterator<(GroupTag, u64)> for RefinedTable {
    fn from_iter<I: IntoIterator<Item = (GroupTag, u64)>>(iter: I) -> Self {
        RefinedTable { entries: iter.into_iter().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(GroupTag::Q12.order(), 12);
        assert_eq!(GroupTag::D12.order(), 24);
        assert_eq!(GroupTag::D3_DAGGER.order(), 6);
        assert_eq!(GroupTag::E120.order(), 120);
        assert_eq!(GroupTag::A4.order(), 12);
    }

    #[test]
    fn decorations_only_on_c2_and_d3() {
        assert!(GroupTag::new(GroupName::C4, Decoration::Dagger).is_err());
        assert!(GroupTag::new(GroupName::D3, Decoration::DoubleDagger).is_ok());
    }

    #[test]
    fn labels_round_trip() {
        for name in GroupName::ALL {
            for dec in [Decoration::None, Decoration::Dagger, Decoration::DoubleDagger] {
                if let Ok(tag) = GroupTag::new(name, dec) {
                    assert_eq!(tag.label().parse::<GroupTag>().unwrap(), tag);
                    assert_eq!(tag.to_string().parse::<GroupTag>().unwrap(), tag);
                }
            }
        }
    }

    #[test]
    fn compact_form() {
        let t: RefinedTable = [(GroupTag::Q8, 1), (GroupTag::C2_DDAGGER, 0)].into_iter().collect();
        assert_eq!(t.to_compact(), "C2ddag:0 Q8:1");
        assert_eq!(RefinedTable::from_compact(&t.to_compact()).unwrap(), t);
        assert_eq!(t.mass(), ExactRational::new(1, 8));
    }
}
