use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::census::{EllipticBaseline, GaussGenusClass, GenusLabel, MassStratum, RefinedTable};
use crate::error::{Error, Result};
use crate::quadratic::QuadraticUnit;

use super::record::{Diagnostic, OutputRecord, PolModRecord};

const COMMENT: &str = "# h_pp, t_pp and refined_pp count principally polarized superspecial \
abelian surfaces over F_q (q = p^n, n odd) via zeta_F(-1) and h(-p), h(-2p), h(-3p) \
for F = Q(sqrt p); r1/r8/r16 columns are the polarized superspecial strata; \
even n gives only the supersingular elliptic curve counts.";

const SLOTS: [(u32, GaussGenusClass, &str); 5] = [
    (1, GaussGenusClass::Unique, "r1_unique"),
    (1, GaussGenusClass::Principal, "r1_principal"),
    (1, GaussGenusClass::NonPrincipal, "r1_nonprincipal"),
    (8, GaussGenusClass::Unique, "r8_unique"),
    (16, GaussGenusClass::Unique, "r16_unique"),
];

const SLOT_FIELDS: [&str; 5] = ["h_pm", "h_un", "t", "refined_pm", "refined_un"];

const HEAD: [&str; 19] = [
    "q",
    "p",
    "exponent",
    "note",
    "d_F",
    "unit_t",
    "unit_u",
    "unit_half",
    "unit_norm",
    "h",
    "h_plus",
    "varpi",
    "h_A",
    "zeta_minus1",
    "h_pp",
    "t_pp",
    "refined_pp",
    "lambda1_pp",
    "lambda16_pp",
];

const DIAGNOSTIC_COLUMN: &str = "type_number_printed_formula";

fn columns(diagnostic: bool) -> Vec<String> {
    let mut cols: Vec<String> = HEAD.iter().map(|s| s.to_string()).collect();
    for (_, _, slot) in SLOTS {
        cols.extend(SLOT_FIELDS.iter().map(|f| format!("{slot}_{f}")));
    }
    cols.extend(MassStratum::ALL.iter().map(|m| format!("mass_{}", m.as_str())));
    cols.extend(["elliptic_h", "elliptic_t", "elliptic_refined"].map(String::from));
    if diagnostic {
        cols.push(DIAGNOSTIC_COLUMN.into());
    }
    cols
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn row(rec: &OutputRecord, diagnostic: bool) -> Vec<String> {
    let unit = rec.unit.as_ref();
    let mut out = vec![
        rec.q.to_string(),
        rec.p.to_string(),
        rec.exponent.to_string(),
        cell(rec.note.as_ref()),
        cell(rec.d_f),
        cell(unit.map(|u| &u.t)),
        cell(unit.map(|u| &u.u)),
        cell(unit.map(|u| u.half)),
        cell(unit.map(|u| u.norm)),
        cell(rec.h),
        cell(rec.h_plus),
        cell(rec.varpi),
        cell(rec.h_a),
        cell(rec.zeta_minus1.as_ref()),
        cell(rec.h_pp),
        cell(rec.t_pp),
        cell(rec.refined_pp.as_ref().map(RefinedTable::to_compact)),
        cell(rec.lambda1_pp),
        cell(rec.lambda16_pp),
    ];
    for (r, gauss, _) in SLOTS {
        let s = rec.stratum(r, gauss);
        out.push(cell(s.map(|s| s.h_pm)));
        out.push(cell(s.map(|s| s.h_un)));
        out.push(cell(s.map(|s| s.t)));
        out.push(cell(s.and_then(|s| s.refined_pm.as_ref()).map(RefinedTable::to_compact)));
        out.push(cell(s.and_then(|s| s.refined_un.as_ref()).map(RefinedTable::to_compact)));
    }
    for m in MassStratum::ALL {
        out.push(cell(rec.masses.as_ref().and_then(|ms| ms.get(&m))));
    }
    out.push(rec.elliptic.h.to_string());
    out.push(rec.elliptic.t.to_string());
    out.push(rec.elliptic.refined.to_compact());
    if diagnostic {
        let v = rec.diagnostic.as_ref().and_then(|d| d.type_number_printed_formula.as_ref());
        out.push(cell(v));
    }
    out
}

/// CSV with a leading `#` comment line and a fixed header. Absent values are
/// empty cells; refined tables use the compact `C2:0 Q8:1` form.
pub fn write_csv(records: &[OutputRecord], diagnostic: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(columns(diagnostic)).map_err(err)?;
    for rec in records {
        w.write_record(row(rec, diagnostic)).map_err(err)?;
    }
    let body = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    let body = String::from_utf8(body).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(format!("{COMMENT}\n{body}"))
}

struct Row<'a> {
    index: &'a HashMap<String, usize>,
    rec: csv::StringRecord,
}

impl Row<'_> {
    fn raw(&self, col: &str) -> Result<Option<&str>> {
        let i = *self.index.get(col).ok_or_else(|| Error::Parse(format!("missing column {col}")))?;
        let v = self.rec.get(i).unwrap_or("");
        Ok((!v.is_empty()).then_some(v))
    }

    fn opt<T: FromStr>(&self, col: &str) -> Result<Option<T>> {
        self.raw(col)?
            .map(|v| v.parse().map_err(|_| Error::Parse(format!("bad value {v:?} in column {col}"))))
            .transpose()
    }

    fn req<T: FromStr>(&self, col: &str) -> Result<T> {
        self.opt(col)?.ok_or_else(|| Error::Parse(format!("empty column {col}")))
    }

    fn table(&self, col: &str) -> Result<Option<RefinedTable>> {
        self.raw(col)?.map(RefinedTable::from_compact).transpose()
    }
}

fn parse_row(row: &Row<'_>, diagnostic: bool) -> Result<OutputRecord> {
    let unit = match row.opt::<BigInt>("unit_t")? {
        Some(t) => Some(QuadraticUnit {
            t,
            u: row.req("unit_u")?,
            half: row.req("unit_half")?,
            norm: row.req("unit_norm")?,
        }),
        None => None,
    };
    let mut pol_mod = Vec::new();
    for (r, gauss, slot) in SLOTS {
        let Some(h_pm) = row.opt(&format!("{slot}_h_pm"))? else { continue };
        pol_mod.push(PolModRecord {
            r,
            base_ring: GenusLabel::new(r)?.base_ring,
            gauss_genus: gauss,
            h_pm,
            h_un: row.req(&format!("{slot}_h_un"))?,
            t: row.req(&format!("{slot}_t"))?,
            refined_pm: row.table(&format!("{slot}_refined_pm"))?,
            refined_un: row.table(&format!("{slot}_refined_un"))?,
        });
    }
    let mut masses = BTreeMap::new();
    for m in MassStratum::ALL {
        if let Some(v) = row.opt(&format!("mass_{}", m.as_str()))? {
            masses.insert(m, v);
        }
    }
    let exponent: u32 = row.req("exponent")?;
    let full = exponent % 2 == 1;
    Ok(OutputRecord {
        q: row.req("q")?,
        p: row.req("p")?,
        exponent,
        note: row.raw("note")?.map(String::from),
        d_f: row.opt("d_F")?,
        unit,
        h: row.opt("h")?,
        h_plus: row.opt("h_plus")?,
        varpi: row.opt("varpi")?,
        h_a: row.opt("h_A")?,
        zeta_minus1: row.opt("zeta_minus1")?,
        h_pp: row.opt("h_pp")?,
        t_pp: row.opt("t_pp")?,
        refined_pp: row.table("refined_pp")?,
        lambda1_pp: row.opt("lambda1_pp")?,
        lambda16_pp: row.opt("lambda16_pp")?,
        pol_mod: full.then_some(pol_mod),
        masses: full.then_some(masses),
        elliptic: EllipticBaseline {
            h: row.req("elliptic_h")?,
            t: row.req("elliptic_t")?,
            refined: row.table("elliptic_refined")?.unwrap_or_default(),
        },
        diagnostic: if diagnostic {
            Some(Diagnostic { type_number_printed_formula: row.opt(DIAGNOSTIC_COLUMN)? })
        } else {
            None
        },
    })
}

/// Parses the output of [`write_csv`].
pub fn read_csv(text: &str) -> Result<Vec<OutputRecord>> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?.clone();
    let index: HashMap<String, usize> = headers.iter().enumerate().map(|(i, h)| (h.to_string(), i)).collect();
    let diagnostic = index.contains_key(DIAGNOSTIC_COLUMN);
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        out.push(parse_row(&Row { index: &index, rec }, diagnostic)?);
    }
    Ok(out)
}
