use std::fmt::Write;

use crate::census::RefinedTable;

use super::record::OutputRecord;

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

fn nonzero(t: &RefinedTable) -> String {
    let parts: Vec<String> = t.nonzero().iter().map(|(g, n)| format!("{g}:{n}")).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

/// Summary table, one row per record. A single full record also gets a
/// table of its polarized strata.
pub fn markdown_table(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    out.push_str("| q | p | h_pp | t_pp | refined_pp | λ1 | λ16 | mass | h_ell | t_ell | refined_ell |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
    for r in records {
        let mass = r.masses.as_ref().and_then(|m| m.get(&crate::census::MassStratum::Ppsp));
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.q,
            r.p,
            opt(r.h_pp),
            opt(r.t_pp),
            r.refined_pp.as_ref().map(nonzero).unwrap_or_else(|| "-".into()),
            opt(r.lambda1_pp),
            opt(r.lambda16_pp),
            opt(mass),
            r.elliptic.h,
            r.elliptic.t,
            nonzero(&r.elliptic.refined),
        );
    }
    if let [single] = records {
        if let Some(strata) = single.pol_mod.as_ref() {
            out.push_str("\n| r | Gauss genus | h_pm | h_un | t | refined_pm | refined_un |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for s in strata {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    s.r,
                    s.gauss_genus,
                    s.h_pm,
                    s.h_un,
                    s.t,
                    s.refined_pm.as_ref().map(nonzero).unwrap_or_else(|| "-".into()),
                    s.refined_un.as_ref().map(nonzero).unwrap_or_else(|| "-".into()),
                );
            }
        }
        if let Some(d) = &single.diagnostic {
            let _ = writeln!(
                out,
                "\nPrinted type-number formula: {} (t_pp = {})",
                opt(d.type_number_printed_formula.as_ref()),
                opt(single.t_pp)
            );
        }
    }
    out
}
