use std::io::Write;

use clap::{ArgGroup, Args, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pfib_core::bijections::{
    binary_to_word, composition_to_word, word_to_binary, word_to_composition,
};
use pfib_core::geometry::{pick_report, render_ascii};
use pfib_core::series::{
    area_counts, closed_form_f, closed_form_g, expand_rational, gf_area_counts, gf_total_area,
    gf_total_inner, gf_total_sper, series_f_dp, series_g_dp,
};
use pfib_core::tables::{compute, Table};
use pfib_core::words::{count_words, Limits, WordIter};
use pfib_core::{
    BinaryWord, Composition, Error, FibWord, Monomial, Polynomial, TruncatedSeries, Var,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{json, svg, Format, RenderFormat, SeriesFormat, TableFormat};

type Res = Result<(), CliError>;

pub fn count(out: &mut dyn Write, p: u8, n: usize, format: Format) -> Res {
    let c = count_words(p, n)?;
    match format {
        Format::Plain => writeln!(out, "{c}")?,
        Format::Json => json::emit(out, &json!({ "p": p, "n": n, "count": json::int(&c) }))?,
    }
    Ok(())
}

pub fn words(out: &mut dyn Write, p: u8, n: usize, format: Format, limits: &Limits) -> Res {
    let c = count_words(p, n)?;
    if c.to_u64().is_none_or(|c| c > limits.word_cap) {
        return Err(Error::CapExceeded {
            requested: c.to_string(),
            cap: limits.word_cap,
        }
        .into());
    }
    match format {
        Format::Plain => {
            for w in WordIter::new(p, n) {
                writeln!(out, "{w}")?;
            }
        }
        Format::Json => {
            let list: Vec<Value> = WordIter::new(p, n).map(|w| w.to_string().into()).collect();
            json::emit(
                out,
                &json!({ "p": p, "n": n, "count": json::int(&c), "words": list }),
            )?;
        }
    }
    Ok(())
}

fn non_empty_word(p: u8, text: &str) -> Result<FibWord, CliError> {
    let w = FibWord::parse(p, text)?;
    if w.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    Ok(w)
}

pub fn stats(out: &mut dyn Write, p: u8, word: &str) -> Res {
    let w = non_empty_word(p, word)?;
    let mut report = pick_report(&w).to_json();
    let obj = report.as_object_mut().expect("report is an object");
    obj.insert("p".into(), json!(p));
    obj.insert("word".into(), json!(w.to_string()));
    obj.insert("n".into(), json!(w.len()));
    json::emit(out, &report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Area and semi-perimeter: sum of x^n y^area z^sper.
    #[value(name = "F")]
    F,
    /// Inner points: sum of x^n q^inn.
    #[value(name = "G")]
    G,
    /// Total area by length.
    #[value(name = "A")]
    A,
    /// Total semi-perimeter by length.
    #[value(name = "S")]
    S,
    /// Total inner points by length.
    #[value(name = "I")]
    I,
    /// Number of words by area, in y.
    #[value(name = "D")]
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Expand the rational generating function.
    Closed,
    /// Column-by-column transfer (recurrence for D).
    Dp,
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::F => "F",
        Kind::G => "G",
        Kind::A => "A",
        Kind::S => "S",
        Kind::I => "I",
        Kind::D => "D",
    }
}

pub fn expand(p: u8, kind: Kind, order: u32, method: Method) -> Result<TruncatedSeries, Error> {
    let closed = method == Method::Closed;
    Ok(match kind {
        Kind::F if closed => expand_rational(&closed_form_f(p)?, order)?,
        Kind::F => series_f_dp(p, order)?,
        Kind::G if closed => expand_rational(&closed_form_g(p)?, order)?,
        Kind::G => series_g_dp(p, order)?,
        Kind::A if closed => expand_rational(&gf_total_area(p)?, order)?,
        Kind::A => series_f_dp(p, order)?
            .derivative_at_one(Var::Y)
            .at_one(Var::Z),
        Kind::S if closed => expand_rational(&gf_total_sper(p)?, order)?,
        Kind::S => series_f_dp(p, order)?
            .derivative_at_one(Var::Z)
            .at_one(Var::Y),
        Kind::I if closed => expand_rational(&gf_total_inner(p)?, order)?,
        Kind::I => series_g_dp(p, order)?.derivative_at_one(Var::Q),
        Kind::D if closed => expand_rational(&gf_area_counts(p)?, order)?,
        Kind::D => {
            let poly = Polynomial::from_terms(
                area_counts(p, order as usize)?
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| (Monomial::var(Var::Y, k as u32), BigInt::from(c))),
            );
            TruncatedSeries::new(Var::Y, order, poly)
        }
    })
}

pub fn series(
    out: &mut dyn Write,
    p: u8,
    kind: Kind,
    order: u32,
    method: Method,
    format: SeriesFormat,
) -> Res {
    let s = expand(p, kind, order, method)?;
    match format {
        SeriesFormat::Plain => writeln!(out, "{s}")?,
        SeriesFormat::Coeffs => match s.scalar_coefficients() {
            Some(cs) => {
                for c in cs {
                    writeln!(out, "{c}")?;
                }
            }
            None => {
                for n in 0..=order {
                    writeln!(out, "{}", s.coefficient(n))?;
                }
            }
        },
        SeriesFormat::Json => json::emit(
            out,
            &json!({
                "kind": kind_name(kind),
                "p": p,
                "order": order,
                "variable": s.var().name(),
                "method": match method { Method::Closed => "closed", Method::Dp => "dp" },
                "text": s.to_string(),
                "terms": s.to_json(),
            }),
        )?,
    }
    Ok(())
}

pub fn tables(
    out: &mut dyn Write,
    which: u32,
    pmin: u8,
    pmax: u8,
    nmax: usize,
    format: TableFormat,
) -> Res {
    let table = Table::from_number(which)?;
    if pmin > pmax {
        return Err(Error::Parse(format!("--pmin {pmin} exceeds --pmax {pmax}")).into());
    }
    let rows = compute(table, pmin, pmax, nmax)?;
    let cells = rows.iter().flatten();
    match format {
        TableFormat::Csv => {
            writeln!(out, "p,n,value,published,discrepancy")?;
            for c in cells {
                let published = c.published.map(|v| v.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{published},{}",
                    c.p,
                    c.n,
                    c.value,
                    c.is_discrepancy()
                )?;
            }
        }
        TableFormat::Json => {
            let list: Vec<Value> = cells
                .map(|c| {
                    json!({
                        "p": c.p,
                        "n": c.n,
                        "value": json::int(&c.value),
                        "published": c.published,
                        "discrepancy": c.is_discrepancy(),
                    })
                })
                .collect();
            json::emit(
                out,
                &json!({
                    "table": which,
                    "sequence": table.sequence_name(),
                    "p_min": pmin,
                    "p_max": pmax,
                    "n_max": nmax,
                    "cells": list,
                }),
            )?;
        }
        TableFormat::Plain => {
            let text = |c: &pfib_core::tables::Cell| {
                let mark = if c.is_discrepancy() { "*" } else { "" };
                format!("{}{mark}", c.value)
            };
            let width = cells
                .clone()
                .map(|c| text(c).len())
                .chain((1..=nmax).map(|n| n.to_string().len()))
                .max()
                .unwrap_or(1)
                + 1;
            writeln!(
                out,
                "Table {which}: {}, p = {pmin}..{pmax}, n = 1..{nmax}",
                table.sequence_name()
            )?;
            write!(out, "{:<5}", "p\\n")?;
            for n in 1..=nmax {
                write!(out, "{n:>width$}")?;
            }
            writeln!(out)?;
            for row in &rows {
                write!(out, "{:<5}", row.first().map_or(0, |c| c.p))?;
                for c in row {
                    write!(out, "{:>width$}", text(c))?;
                }
                writeln!(out)?;
            }
            for c in rows.iter().flatten().filter(|c| c.is_discrepancy()) {
                writeln!(
                    out,
                    "* (p={}, n={}): computed {}, published {}",
                    c.p,
                    c.n,
                    c.value,
                    c.published.expect("discrepancies have a published value")
                )?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Word,
    Composition,
    Binary,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["word", "composition", "binary"])))]
pub struct BijectArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long)]
    pub word: Option<String>,
    /// Comma-separated parts, e.g. `6,5`.
    #[arg(long)]
    pub composition: Option<String>,
    #[arg(long)]
    pub binary: Option<String>,
    #[arg(long, value_enum)]
    pub to: Shape,
}

pub fn biject(out: &mut dyn Write, p: u8, args: &BijectArgs) -> Res {
    let word = match (&args.word, &args.composition, &args.binary) {
        (Some(w), _, _) => FibWord::parse(p, w)?,
        (_, Some(c), _) => composition_to_word(&Composition::parse(p, c)?)?,
        (_, _, Some(b)) => binary_to_word(&BinaryWord::parse(p, b)?)?,
        _ => unreachable!("clap requires one input"),
    };
    match args.to {
        Shape::Word => writeln!(out, "{word}")?,
        Shape::Composition => writeln!(out, "{}", word_to_composition(&word))?,
        Shape::Binary => writeln!(out, "{}", word_to_binary(&word)?)?,
    }
    Ok(())
}

pub fn render(out: &mut dyn Write, p: u8, word: &str, format: RenderFormat) -> Res {
    let w = FibWord::parse(p, word)?;
    match format {
        RenderFormat::Ascii => write!(out, "{}", render_ascii(&w))?,
        RenderFormat::Svg => write!(out, "{}", svg::render(&w))?,
    }
    Ok(())
}
