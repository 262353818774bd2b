use std::fmt::Write as _;

use howe_core::cyclotomic::{gauss_sum, value_field, AdditiveCharacter, CycNumber};
use howe_core::howe::{
    compare_semisimplifications, theta_mod_ell, theta_ordinary, verify_all, Check,
};
use howe_core::varieties::{
    count_points, fixed_point_grid, CountOptions, CountRow, GridRow, VarietyKind, VarietySpec,
};
use howe_core::{build_tower, Error, Level, PrimePower, Result};
use serde::Serialize;

use crate::args::{Command, Field, Format};

/// Rendered output of one command.
pub struct Outcome {
    pub body: String,
    /// File stem used when writing into the output directory.
    pub stem: String,
    /// False when a verification inside the command failed.
    pub ok: bool,
}

fn prime_power(field: &Field) -> Result<PrimePower> {
    PrimePower::new(field.p, field.e)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn csv_string<S: AsRef<str>>(header: &[&str], rows: impl IntoIterator<Item = Vec<S>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(|s| s.as_ref())).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn md_table<S: AsRef<str>>(header: &[&str], rows: impl IntoIterator<Item = Vec<S>>) -> String {
    let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for row in rows {
        let cells: Vec<&str> = row.iter().map(|s| s.as_ref()).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn checks_csv(checks: &[Check]) -> String {
    csv_string(
        &["name", "expected", "actual", "pass"],
        checks
            .iter()
            .map(|c| vec![c.name.clone(), c.expected.clone(), c.actual.clone(), c.pass.to_string()]),
    )
}

pub fn run(command: &Command, format: Format, budget: u128) -> Result<Outcome> {
    match command {
        Command::Count {
            field,
            variety,
            n,
            level,
            torsor,
        } => count(field, variety.as_deref(), *n, *level, *torsor, format, budget),
        Command::Verify { field, n, ell } => {
            let pp = prime_power(field)?;
            let report = verify_all(*n, pp.q, *ell)?;
            let body = match format {
                Format::Json => json(&report),
                Format::Md => report.to_markdown(),
                Format::Csv => checks_csv(&report.checks),
            };
            Ok(Outcome {
                body,
                stem: format!("verify-q{}-n{n}-ell{ell}", pp.q),
                ok: report.passed(),
            })
        }
        Command::Howe {
            field,
            n,
            ell,
            ordinary,
        } => {
            let pp = prime_power(field)?;
            let table = match (ell, ordinary) {
                (Some(ell), false) => theta_mod_ell(*n, pp.q, *ell)?,
                _ => theta_ordinary(*n, pp.q)?,
            };
            let body = match format {
                Format::Json => json(&table),
                Format::Md => table.to_markdown(),
                Format::Csv => csv_string(
                    &["tau", "dim", "status", "constituents", "series", "dim_source", "status_source"],
                    table.entries.iter().map(|e| {
                        let constituents = e
                            .constituents
                            .iter()
                            .map(|c| format!("{}:{}", c.name, c.dim))
                            .collect::<Vec<_>>()
                            .join(";");
                        vec![
                            e.tau.to_string(),
                            e.dim_theta.to_string(),
                            json_name(&e.status),
                            constituents,
                            e.lusztig_note.clone(),
                            json_name(&e.provenance.dim),
                            json_name(&e.provenance.status),
                        ]
                    }),
                ),
            };
            let suffix = ell.map_or("ordinary".to_string(), |l| format!("ell{l}"));
            Ok(Outcome {
                body,
                stem: format!("howe-q{}-n{n}-{suffix}", pp.q),
                ok: table.passed(),
            })
        }
        Command::Compare { field, n, ell } => {
            let pp = prime_power(field)?;
            let report = compare_semisimplifications(*n, pp.q, *ell)?;
            let body = match format {
                Format::Json => json(&report),
                Format::Md => report.to_markdown(),
                Format::Csv => csv_string(
                    &["pi", "reduction", "ordinary_dim", "mod_ell_dim", "deficit", "exceptional"],
                    report.rows.iter().map(|r| {
                        let reduction = r
                            .reduction
                            .iter()
                            .map(|(t, k)| format!("{k}*{t}"))
                            .collect::<Vec<_>>()
                            .join("+");
                        vec![
                            r.pi.to_string(),
                            reduction,
                            r.ordinary_dim.to_string(),
                            r.mod_ell_dim.to_string(),
                            r.deficit.to_string(),
                            r.exceptional.to_string(),
                        ]
                    }),
                ),
            };
            Ok(Outcome {
                body,
                stem: format!("compare-q{}-n{n}-ell{ell}", pp.q),
                ok: report.checks.iter().all(|c| c.pass),
            })
        }
        Command::Gauss { field } => gauss(field, format),
        Command::FixedPoints { field, without_u } => fixed_points(field, *without_u, format),
    }
}

/// The serde name of a unit enum variant.
fn json_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Serialize)]
struct CountOutput {
    rows: Vec<CountRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<String>,
}

fn count(
    field: &Field,
    variety: Option<&str>,
    n: u32,
    level: u32,
    torsor: bool,
    format: Format,
    budget: u128,
) -> Result<Outcome> {
    let level = Level::from_relative_degree(level)?;
    let ctx = build_tower(field.p, field.e)?;
    let opts = CountOptions { budget };
    let kinds = if torsor {
        vec![VarietyKind::NormOne, VarietyKind::FermatComplement]
    } else {
        vec![variety.expect("clap requires a variety").parse::<VarietyKind>()?]
    };
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for kind in kinds {
        let spec = VarietySpec::new(kind, n)?;
        let c = count_points(&spec, &ctx, level, &opts)?;
        counts.push(c);
        rows.push(CountRow::new(&spec, level, c));
    }
    let ratio = torsor.then(|| {
        let r = num::BigRational::new(counts[0].into(), counts[1].max(1).into());
        if counts[1] == 0 {
            "undefined".to_string()
        } else {
            r.to_string()
        }
    });
    let out = CountOutput { rows, ratio };
    let table_rows = || {
        out.rows
            .iter()
            .map(|r| vec![r.variety.clone(), r.n.to_string(), r.level.to_string(), r.count.clone()])
            .chain(out.ratio.iter().map(|r| {
                vec!["Ytilde/Y".into(), n.to_string(), level.relative_degree().to_string(), r.clone()]
            }))
    };
    let header = ["variety", "n", "level", "count"];
    let body = match format {
        Format::Json => json(&out),
        Format::Csv => csv_string(&header, table_rows()),
        Format::Md => md_table(&header, table_rows()),
    };
    let name = if torsor { "torsor" } else { out.rows[0].variety.as_str() };
    Ok(Outcome {
        body,
        stem: format!("count-q{}-{name}-n{n}-level{}", ctx.q(), level.relative_degree()),
        // the torsor pair is a check: the ratio must be q + 1
        ok: !torsor || counts[0] == (ctx.q() as u128 + 1) * counts[1],
    })
}

#[derive(Serialize)]
struct GaussRow {
    a: u32,
    legendre: i32,
    gauss_sum: CycNumber,
    square: CycNumber,
    expected_square: String,
    /// `G(psi_a) = (a / F_q) G(psi_1)`.
    twist_ok: bool,
    pass: bool,
}

fn gauss(field: &Field, format: Format) -> Result<Outcome> {
    let ctx = build_tower(field.p, field.e)?;
    if ctx.p() == 2 {
        return Err(Error::Characteristic2("quadratic Gauss sum"));
    }
    let values = value_field(&ctx);
    let q = ctx.q() as i64;
    let minus_one = ctx.integer(Level::Q, -1);
    let expected = ctx.legendre_symbol(&minus_one)? as i64 * q;
    let g1 = gauss_sum(&ctx, &values, &AdditiveCharacter::from_code(&ctx, 1)?)?;
    let mut rows = Vec::new();
    for a in ctx.elements(Level::Q).into_iter().filter(|a| !a.is_zero()) {
        let g = gauss_sum(&ctx, &values, &AdditiveCharacter::new(&ctx, a)?)?;
        let legendre = ctx.legendre_symbol(&a)?;
        let twisted = if legendre == 1 { g1.clone() } else { -&g1 };
        let square = g.pow(2);
        let pass = square == CycNumber::integer(&values, expected) && g == twisted;
        rows.push(GaussRow {
            a: a.code(),
            legendre,
            twist_ok: g == twisted,
            gauss_sum: g,
            square,
            expected_square: expected.to_string(),
            pass,
        });
    }
    let ok = rows.iter().all(|r| r.pass);
    let header = ["a", "legendre", "gauss_sum", "square", "expected_square", "twist_ok", "pass"];
    let cells = |r: &GaussRow| {
        vec![
            r.a.to_string(),
            r.legendre.to_string(),
            r.gauss_sum.to_string(),
            r.square.to_string(),
            r.expected_square.clone(),
            r.twist_ok.to_string(),
            r.pass.to_string(),
        ]
    };
    let body = match format {
        Format::Json => json(&rows),
        Format::Csv => csv_string(&header, rows.iter().map(cells)),
        Format::Md => md_table(&header, rows.iter().map(cells)),
    };
    Ok(Outcome {
        body,
        stem: format!("gauss-q{q}"),
        ok,
    })
}

fn fixed_points(field: &Field, without_u: bool, format: Format) -> Result<Outcome> {
    let ctx = build_tower(field.p, field.e)?;
    let mut rows: Vec<GridRow> = fixed_point_grid(&ctx, false)?;
    if !without_u {
        if ctx.p() == 2 {
            return Err(Error::Characteristic2(
                "the unipotent twist needs the quadratic character; pass --without-u",
            ));
        }
        rows.extend(fixed_point_grid(&ctx, true)?);
    }
    let ok = rows.iter().all(GridRow::matches);
    let header = [
        "with_u", "eta", "zeta", "zeta_log", "total", "sigma1", "sigma2", "sigma3", "verified",
        "transversal", "expected", "match",
    ];
    let cells = |r: &GridRow| {
        vec![
            r.with_u.to_string(),
            r.eta.to_string(),
            r.zeta.to_string(),
            r.zeta_log.to_string(),
            r.total.to_string(),
            r.sigma_partition[0].to_string(),
            r.sigma_partition[1].to_string(),
            r.sigma_partition[2].to_string(),
            r.verified.to_string(),
            r.transversal.to_string(),
            r.expected.to_string(),
            r.matches().to_string(),
        ]
    };
    let body = match format {
        Format::Json => json(&rows),
        Format::Csv => csv_string(&header, rows.iter().map(cells)),
        Format::Md => md_table(&header, rows.iter().map(cells)),
    };
    Ok(Outcome {
        body,
        stem: format!("fixed-points-q{}", ctx.q()),
        ok,
    })
}
