//! `pfib`: enumeration, statistics, series, tables, bijections, verification
//! and rendering for p-Fibonacci words and their bargraph polyominoes.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification failure,
//! 4 resource cap exceeded.

mod commands;
mod error;
mod json;
mod svg;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfib_core::words::{Limits, DEFAULT_MAX_P, DEFAULT_WORD_CAP};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "pfib",
    version,
    about = "p-Fibonacci words and bargraph polyominoes"
)]
struct Cli {
    /// Maximum number of words a single command may enumerate.
    #[arg(long, global = true, env = "PFIB_WORD_CAP", default_value_t = DEFAULT_WORD_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of p-Fibonacci words of length N.
    Count {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List the words of length N in lexicographic order.
    Words {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Area, semi-perimeter and inner points of one word, as JSON.
    Stats {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        word: String,
    },
    /// Expand a generating function up to a given order.
    Series {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, ignore_case = true)]
        kind: commands::Kind,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value_t = commands::Method::Closed)]
        method: commands::Method,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Plain)]
        format: SeriesFormat,
    },
    /// Recompute one of the four statistics tables.
    Tables {
        /// 1: total area, 2: words by area, 3: total semi-perimeter,
        /// 4: total inner points.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        which: u32,
        #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
        pmin: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        pmax: i64,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Plain)]
        format: TableFormat,
    },
    /// Convert between words, compositions and binary words.
    Biject(commands::BijectArgs),
    /// Run every consistency check for lengths 1..=NMAX.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Draw the polyomino of a word.
    Render {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

#[derive(Debug, Args)]
struct Size {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Plain,
    Json,
    /// One coefficient per line, starting at degree 0.
    Coeffs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let limits = Limits {
        max_p: DEFAULT_MAX_P,
        word_cap: cli.cap,
    };
    let p = |p: i64| limits.check_alphabet(p).map_err(CliError::from);
    match cli.command {
        Command::Count { size, format } => commands::count(out, p(size.p)?, size.n, format),
        Command::Words { size, format } => {
            commands::words(out, p(size.p)?, size.n, format, &limits)
        }
        Command::Stats { p: pp, word } => commands::stats(out, p(pp)?, &word),
        Command::Series {
            p: pp,
            kind,
            order,
            method,
            format,
        } => commands::series(out, p(pp)?, kind, order, method, format),
        Command::Tables {
            which,
            pmin,
            pmax,
            nmax,
            format,
        } => commands::tables(out, which, p(pmin)?, p(pmax)?, nmax, format),
        Command::Biject(args) => commands::biject(out, p(args.p)?, &args),
        Command::Verify {
            p: pp,
            nmax,
            format,
        } => verify::verify(out, p(pp)?, nmax, format, &limits),
        Command::Render {
            p: pp,
            word,
            format,
        } => commands::render(out, p(pp)?, &word, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("pfib: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
