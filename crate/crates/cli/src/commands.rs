use std::io::Write;

use gramkern::approx::{
    kernel_estimate, plot_rows, taylor_polynomial, variance_table, ApproxPolynomial, TargetFunction,
};
use gramkern::conditioning::condition_table;
use gramkern::exactscalar::{eval_pilaurent, format_decimal, parse_rational};
use gramkern::kernel::build_kernel;
use gramkern::verify::{self, VerifyOptions};
use gramkern::{Family, PiLaurent, Rational};
use serde::Serialize;

use crate::args::{Cli, Command, Common, Format};
use crate::{CliError, Status};

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Kernel { family, size } => kernel(c, (*family).into(), *size, out)?,
        Command::Cond { family, max_size } => cond(c, (*family).into(), *max_size, out)?,
        Command::Variance { target, max_size } => variance(c, (*target).into(), *max_size, out)?,
        Command::Project { target, size } => project(c, (*target).into(), *size, out)?,
        Command::Plotdata {
            target,
            size,
            xmin,
            xmax,
            samples,
        } => {
            let t: TargetFunction = (*target).into();
            plotdata(c, t, *size, xmin.as_deref(), xmax.as_deref(), *samples, out)?
        }
        Command::Verify {
            max_size,
            inject_fault,
        } => {
            let opts = VerifyOptions {
                corrupt_kernel: *inject_fault,
            };
            return verify(c, *max_size, opts, out);
        }
    }
    Ok(Status::Success)
}

fn decimal(p: &PiLaurent, c: &Common) -> Result<String, CliError> {
    Ok(eval_pilaurent(p, c.precision_bits)?.to_decimal(c.digits.into()))
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<I, R>(header: &[String], rows: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Left-aligned columns separated by two spaces.
fn write_text(
    header: &[String],
    rows: &[Vec<String>],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[derive(Serialize)]
struct KernelJson<'a> {
    family: &'a str,
    size: usize,
    grade: i32,
    data: Vec<Vec<String>>,
}

fn kernel(c: &Common, family: Family, size: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let k = build_kernel(family, size)?;
    let grade = k.sqrtpi_power;
    let data: Vec<Vec<String>> = k
        .entries
        .rows()
        .map(|row| row.iter().map(Rational::to_string).collect())
        .collect();
    match c.format {
        Format::Json => write_json(
            &KernelJson {
                family: family.name(),
                size,
                grade,
                data,
            },
            out,
        ),
        Format::Csv => {
            let mut header: Vec<String> = (1..=size).map(|j| format!("b_i{j}")).collect();
            header.push("sqrtpi_power".into());
            let rows = data.into_iter().map(|mut r| {
                r.push(grade.to_string());
                r
            });
            write_csv(&header, rows, out)
        }
        Format::Text => {
            writeln!(
                out,
                "family {}  size {size}  scale pi^({grade}/2)",
                family.name()
            )?;
            let header: Vec<String> = (1..=size).map(|j| format!("col {j}")).collect();
            write_text(&header, &data, out)
        }
    }
}

#[derive(Serialize)]
struct CondRowJson {
    size: usize,
    kappa_exact: String,
    kappa: String,
}

#[derive(Serialize)]
struct CondJson<'a> {
    family: &'a str,
    max_size: usize,
    grade: i32,
    data: Vec<CondRowJson>,
}

fn cond(c: &Common, family: Family, max_size: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let report = condition_table(family, max_size, c.digits.into())?;
    let rows: Vec<CondRowJson> = report
        .rows
        .into_iter()
        .map(|r| CondRowJson {
            size: r.size,
            kappa_exact: r.kappa.to_string(),
            kappa: r.kappa_decimal,
        })
        .collect();
    match c.format {
        Format::Json => write_json(
            &CondJson {
                family: family.name(),
                max_size,
                grade: 0,
                data: rows,
            },
            out,
        ),
        Format::Csv => write_csv(
            &strings(&["size", "kappa_exact", "kappa"]),
            rows.into_iter()
                .map(|r| [r.size.to_string(), r.kappa_exact, r.kappa]),
            out,
        ),
        Format::Text => {
            let table: Vec<Vec<String>> = rows
                .into_iter()
                .map(|r| vec![r.size.to_string(), r.kappa, r.kappa_exact])
                .collect();
            write_text(&strings(&["size", "kappa", "exact"]), &table, out)
        }
    }
}

#[derive(Serialize)]
struct VarianceRowJson {
    size: usize,
    taylor_variance: String,
    estimate_variance: String,
    taylor_exact: String,
    estimate_exact: String,
}

#[derive(Serialize)]
struct VarianceJson<'a> {
    target: &'a str,
    max_size: usize,
    grade: i32,
    data: Vec<VarianceRowJson>,
}

fn variance(
    c: &Common,
    target: TargetFunction,
    max_size: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let rows = variance_table(target, max_size)?
        .into_iter()
        .map(|r| {
            Ok(VarianceRowJson {
                size: r.size,
                taylor_variance: decimal(&r.taylor, c)?,
                estimate_variance: decimal(&r.estimate, c)?,
                taylor_exact: r.taylor.to_string(),
                estimate_exact: r.estimate.to_string(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    match c.format {
        Format::Json => write_json(
            &VarianceJson {
                target: target.name(),
                max_size,
                grade: 0,
                data: rows,
            },
            out,
        ),
        Format::Csv => write_csv(
            &strings(&[
                "size",
                "taylor_variance",
                "estimate_variance",
                "taylor_exact",
                "estimate_exact",
            ]),
            rows.into_iter().map(|r| {
                [
                    r.size.to_string(),
                    r.taylor_variance,
                    r.estimate_variance,
                    r.taylor_exact,
                    r.estimate_exact,
                ]
            }),
            out,
        ),
        Format::Text => {
            let table: Vec<Vec<String>> = rows
                .into_iter()
                .map(|r| {
                    vec![
                        r.size.to_string(),
                        r.taylor_variance,
                        r.estimate_variance,
                        r.taylor_exact,
                        r.estimate_exact,
                    ]
                })
                .collect();
            write_text(
                &strings(&[
                    "size",
                    "taylor",
                    "estimate",
                    "taylor exact",
                    "estimate exact",
                ]),
                &table,
                out,
            )
        }
    }
}

#[derive(Serialize)]
struct TermJson {
    power: u32,
    estimate: String,
    taylor: String,
    estimate_decimal: String,
    taylor_decimal: String,
}

#[derive(Serialize)]
struct ProjectJson<'a> {
    target: &'a str,
    family: &'a str,
    size: usize,
    grade: i32,
    data: Vec<TermJson>,
}

fn project(
    c: &Common,
    target: TargetFunction,
    size: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let family = target.natural_family();
    let estimate = kernel_estimate(target, size)?;
    let taylor = taylor_polynomial(target, family, size)?;
    let terms = terms(&estimate, &taylor, c)?;
    match c.format {
        Format::Json => write_json(
            &ProjectJson {
                target: target.name(),
                family: family.name(),
                size,
                grade: 0,
                data: terms,
            },
            out,
        ),
        Format::Csv => write_csv(
            &strings(&[
                "power",
                "estimate",
                "taylor",
                "estimate_decimal",
                "taylor_decimal",
            ]),
            terms.into_iter().map(|t| {
                [
                    t.power.to_string(),
                    t.estimate,
                    t.taylor,
                    t.estimate_decimal,
                    t.taylor_decimal,
                ]
            }),
            out,
        ),
        Format::Text => {
            let table: Vec<Vec<String>> = terms
                .into_iter()
                .map(|t| vec![format!("x^{}", t.power), t.estimate, t.taylor])
                .collect();
            write_text(&strings(&["term", "estimate", "taylor"]), &table, out)
        }
    }
}

fn terms(
    est: &ApproxPolynomial,
    tay: &ApproxPolynomial,
    c: &Common,
) -> Result<Vec<TermJson>, CliError> {
    est.powers()
        .zip(est.coefficients.iter().zip(&tay.coefficients))
        .map(|(power, (e, t))| {
            Ok(TermJson {
                power,
                estimate: e.to_string(),
                taylor: t.to_string(),
                estimate_decimal: decimal(e, c)?,
                taylor_decimal: decimal(t, c)?,
            })
        })
        .collect()
}

fn plotdata(
    c: &Common,
    target: TargetFunction,
    size: usize,
    xmin: Option<&str>,
    xmax: Option<&str>,
    samples: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if c.format == Format::Json {
        return Err(CliError::Usage("plotdata writes CSV only".into()));
    }
    let (lo, hi) = match target {
        TargetFunction::ExpNeg => ("0", "10"),
        _ => ("-1", "1"),
    };
    let xmin = parse_rational(xmin.unwrap_or(lo))?;
    let xmax = parse_rational(xmax.unwrap_or(hi))?;
    let rows = plot_rows(target, size, &xmin, &xmax, samples, c.precision_bits)?;
    let digits: usize = c.digits.into();
    write_csv(
        &strings(&["x", "f", "estimate", "taylor"]),
        rows.iter().map(|r| {
            [
                format_decimal(&r.x, digits),
                r.f.to_decimal(digits),
                r.estimate.to_decimal(digits),
                r.taylor.to_decimal(digits),
            ]
        }),
        out,
    )
}

#[derive(Serialize)]
struct CheckJson<'a> {
    family: &'a str,
    size: usize,
    property: &'a str,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    max_size: usize,
    passed: bool,
    data: Vec<CheckJson<'a>>,
}

fn verify(
    c: &Common,
    max_size: usize,
    opts: VerifyOptions,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    let outcomes = verify::run(max_size, opts)?;
    let passed = outcomes.iter().all(|o| o.passed);
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" }.to_string();
    match c.format {
        Format::Json => {
            let data = outcomes
                .iter()
                .map(|o| CheckJson {
                    family: o.family.name(),
                    size: o.size,
                    property: o.property.name(),
                    passed: o.passed,
                })
                .collect();
            write_json(
                &VerifyJson {
                    max_size,
                    passed,
                    data,
                },
                out,
            )?
        }
        Format::Csv => write_csv(
            &strings(&["family", "size", "property", "result"]),
            outcomes.iter().map(|o| {
                [
                    o.family.name().to_string(),
                    o.size.to_string(),
                    o.property.name().to_string(),
                    verdict(o.passed),
                ]
            }),
            out,
        )?,
        Format::Text => {
            let table: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| {
                    vec![
                        o.family.name().to_string(),
                        o.size.to_string(),
                        o.property.name().to_string(),
                        verdict(o.passed),
                    ]
                })
                .collect();
            write_text(
                &strings(&["family", "size", "property", "result"]),
                &table,
                out,
            )?;
            let failures = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "{} checks, {failures} failed", outcomes.len())?;
        }
    }
    Ok(if passed {
        Status::Success
    } else {
        Status::VerificationFailed
    })
}
