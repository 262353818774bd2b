//! Markdown renderings of the tables and reports.

use std::fmt::Write;

use super::compare::ComparisonReport;
use super::table::{Check, HoweParams, HoweStatus, HoweTable, Provenance};
use super::verify::VerifyReport;

fn params_line(p: &HoweParams) -> String {
    match p.ell {
        Some(ell) => format!("n = {}, q = {}, p = {}, ell = {ell}", p.n, p.q, p.p),
        None => format!("n = {}, q = {}, p = {}, ordinary", p.n, p.q, p.p),
    }
}

fn status_name(s: HoweStatus) -> &'static str {
    match s {
        HoweStatus::Irreducible => "irreducible",
        HoweStatus::NontrivialExtension => "nontrivial extension of trivial by irreducible",
        HoweStatus::IrreducibleOrdinary => "irreducible (ordinary)",
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Computed => "computed",
        Provenance::Asserted => "asserted",
    }
}

fn checks_markdown(out: &mut String, checks: &[Check]) {
    out.push_str("| check | expected | actual | pass |\n|---|---|---|---|\n");
    for c in checks {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.name,
            c.expected,
            c.actual,
            if c.pass { "yes" } else { "NO" }
        );
    }
}

impl HoweTable {
    pub fn to_markdown(&self) -> String {
        let mut out = format!("## Theta table ({})\n\n", params_line(&self.params));
        out.push_str("| tau | dim | status | constituents | series | dim source | status source |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for e in &self.entries {
            let constituents = e
                .constituents
                .iter()
                .map(|c| format!("{} ({})", c.name, c.dim))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                e.tau,
                e.dim_theta,
                status_name(e.status),
                if constituents.is_empty() { "-".into() } else { constituents },
                e.lusztig_note,
                provenance_name(e.provenance.dim),
                provenance_name(e.provenance.status),
            );
        }
        out.push_str("\n### Checks\n\n");
        checks_markdown(&mut out, &self.checks);
        out
    }
}

impl VerifyReport {
    pub fn to_markdown(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let mut out = format!(
            "## Verification ({})\n\n{passed}/{} checks pass\n\n",
            params_line(&self.params),
            self.checks.len()
        );
        checks_markdown(&mut out, &self.checks);
        out
    }
}

impl ComparisonReport {
    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "## Reduction comparison (n = {}, q = {}, ell = {})\n\n",
            self.n, self.q, self.ell
        );
        out.push_str("| pi | reduction | dim Theta | dim Theta_ell | deficit | exceptional |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let reduction = r
                .reduction
                .iter()
                .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{k} {t}") })
                .collect::<Vec<_>>()
                .join(" + ");
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                r.pi, reduction, r.ordinary_dim, r.mod_ell_dim, r.deficit, r.exceptional
            );
        }
        out.push_str("\n### Checks\n\n");
        checks_markdown(&mut out, &self.checks);
        out
    }
}
