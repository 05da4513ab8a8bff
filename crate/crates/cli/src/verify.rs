use std::io::Write;

use num_bigint::{BigInt, BigUint};
use pfib_core::bijections::{
    binary_to_word, composition_to_word, word_to_binary, word_to_composition,
};
use pfib_core::geometry::pick_report;
use pfib_core::oracle::{brute_force_generating_series_with, lattice_stats, Statistic};
use pfib_core::series::{
    closed_form_f, closed_form_g, expand_rational, gf_total_area, gf_total_inner, gf_total_sper,
    series_f_dp, series_g_dp,
};
use pfib_core::words::{count_words, fibonacci_number, Limits, WordIter};
use pfib_core::{Error, FibWord, TruncatedSeries};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{json, Format};

const CHECKS: [&str; 6] = [
    "pick",
    "identity",
    "totals",
    "transfer",
    "bijections",
    "oracle",
];

struct Row {
    n: usize,
    words: BigUint,
    inner: u128,
    sper: u128,
    area: u128,
    passed: [bool; 6],
}

struct Expansions {
    f_closed: TruncatedSeries,
    f_dp: TruncatedSeries,
    f_brute: TruncatedSeries,
    g_closed: TruncatedSeries,
    g_dp: TruncatedSeries,
    g_brute: TruncatedSeries,
    totals: [Vec<BigInt>; 3],
}

impl Expansions {
    fn new(p: u8, nmax: u32, limits: &Limits) -> Result<Self, Error> {
        let scalars = |s: TruncatedSeries| s.scalar_coefficients().expect("univariate series");
        Ok(Expansions {
            f_closed: expand_rational(&closed_form_f(p)?, nmax)?,
            f_dp: series_f_dp(p, nmax)?,
            f_brute: brute_force_generating_series_with(p, nmax, Statistic::AreaPerimeter, limits)?,
            g_closed: expand_rational(&closed_form_g(p)?, nmax)?,
            g_dp: series_g_dp(p, nmax)?,
            g_brute: brute_force_generating_series_with(p, nmax, Statistic::InnerPoints, limits)?,
            totals: [
                scalars(expand_rational(&gf_total_inner(p)?, nmax)?),
                scalars(expand_rational(&gf_total_sper(p)?, nmax)?),
                scalars(expand_rational(&gf_total_area(p)?, nmax)?),
            ],
        })
    }
}

fn roundtrips(w: &FibWord) -> bool {
    let via_composition = composition_to_word(&word_to_composition(w));
    let via_binary = word_to_binary(w).and_then(|b| binary_to_word(&b));
    via_composition.as_ref() == Ok(w) && via_binary.as_ref() == Ok(w)
}

fn check_length(p: u8, n: usize, e: &Expansions) -> Result<Row, Error> {
    let (mut area, mut sper, mut inner) = (0u128, 0u128, 0u128);
    let (mut pick, mut bijections, mut lattice) = (true, true, true);
    let mut words = 0u64;
    for w in WordIter::new(p, n) {
        let r = pick_report(&w);
        pick &= r.pick_holds;
        lattice &= lattice_stats(&w) == r;
        bijections &= roundtrips(&w);
        area += u128::from(r.area);
        sper += u128::from(r.sper);
        inner += u128::from(r.inn);
        words += 1;
    }
    let expected = count_words(p, n)?;
    let k = n as u32;
    let fib = BigInt::from(fibonacci_number(p, n as i64 + 1)?);
    let identity = BigInt::from(words) == BigInt::from(expected.clone())
        && fib == BigInt::from(inner) + BigInt::from(sper) - BigInt::from(area);
    let totals = e.totals[0][n] == BigInt::from(inner)
        && e.totals[1][n] == BigInt::from(sper)
        && e.totals[2][n] == BigInt::from(area);
    let transfer = e.f_dp.coefficient(k) == e.f_closed.coefficient(k)
        && e.g_dp.coefficient(k) == e.g_closed.coefficient(k);
    let oracle = lattice
        && e.f_brute.coefficient(k) == e.f_dp.coefficient(k)
        && e.g_brute.coefficient(k) == e.g_dp.coefficient(k);
    Ok(Row {
        n,
        words: expected,
        inner,
        sper,
        area,
        passed: [pick, identity, totals, transfer, bijections, oracle],
    })
}

fn identity_text(r: &Row) -> String {
    format!("{} = {} + {} - {}", r.words, r.inner, r.sper, r.area)
}

/// Runs every check for lengths `1..=nmax`, prints the matrix and fails with
/// exit code 3 if any cell failed.
pub fn verify(
    out: &mut dyn Write,
    p: u8,
    nmax: usize,
    format: Format,
    limits: &Limits,
) -> Result<(), CliError> {
    let mut total = BigUint::from(0u32);
    for n in 0..=nmax {
        total += count_words(p, n)?;
    }
    if total > BigUint::from(limits.word_cap) {
        return Err(Error::CapExceeded {
            requested: total.to_string(),
            cap: limits.word_cap,
        }
        .into());
    }
    let bound =
        u32::try_from(nmax).map_err(|_| Error::Parse(format!("--nmax {nmax} is too large")))?;
    let e = Expansions::new(p, bound, limits)?;
    let rows = (1..=nmax)
        .map(|n| check_length(p, n, &e))
        .collect::<Result<Vec<_>, _>>()?;
    let failures = rows
        .iter()
        .map(|r| r.passed.iter().filter(|ok| !**ok).count())
        .sum::<usize>();

    match format {
        Format::Plain => {
            writeln!(out, "verify p={p}, n=1..{nmax}")?;
            write!(out, "{:>4}", "n")?;
            for c in CHECKS {
                write!(out, "  {c:>10}")?;
            }
            writeln!(out, "  F(p,n+1) = i + s - a")?;
            for r in &rows {
                write!(out, "{:>4}", r.n)?;
                for ok in r.passed {
                    write!(out, "  {:>10}", if ok { "ok" } else { "FAIL" })?;
                }
                writeln!(out, "  {}", identity_text(r))?;
            }
            let checks = rows.len() * CHECKS.len();
            if failures == 0 {
                writeln!(out, "all {checks} checks passed")?;
            } else {
                writeln!(out, "{failures} of {checks} checks failed")?;
            }
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let checks: serde_json::Map<String, Value> = CHECKS
                        .iter()
                        .zip(r.passed)
                        .map(|(name, ok)| (name.to_string(), Value::Bool(ok)))
                        .collect();
                    json!({
                        "n": r.n,
                        "words": json::int(&r.words),
                        "inner": json::int(&r.inner),
                        "sper": json::int(&r.sper),
                        "area": json::int(&r.area),
                        "checks": checks,
                    })
                })
                .collect();
            json::emit(
                out,
                &json!({ "p": p, "nmax": nmax, "passed": failures == 0, "rows": list }),
            )?;
        }
    }
    if failures > 0 {
        return Err(CliError::VerificationFailed(failures));
    }
    Ok(())
}
