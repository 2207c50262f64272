//! Command-line front end: enumeration, verification suites, flip-graph
//! export, and geodesic counting.
//!
//! Every command writes deterministic, byte-stable output to standard output;
//! timing and diagnostics go to standard error. Exit code 0 means success,
//! 1 means a verification check failed, 2 means the request itself was
//! rejected (unsupported range or bad flags).

mod verify;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use ctft::arcperm::{enumerate_arc_perms, enumerate_classes};
use ctft::codec::enumerate_codes;
use ctft::polygon::ColoredTriangulation;
use ctft::tableaux::geodesic_count_formula;
use ctft::{Code, Diagonal, Direction, EdgeLabelKind, FlipGraph, TruncShiftedShape};

#[derive(Parser)]
#[command(
    name = "ctft",
    version,
    about = "Colored triangle-free triangulations: enumeration, verification, graph export"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a family of objects as JSON lines, ending with a count line
    Enumerate {
        /// Polygon size (letters of the permutation for arcperm)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: Family,
    },
    /// Run a verification suite; report one line per check
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Emit the report as a single JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Export the flip graph
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Direct each edge from lower to higher rank
        #[arg(long)]
        oriented: bool,
        #[arg(long, value_enum, default_value_t = LabelChoice::Diagonal)]
        labels: LabelChoice,
    },
    /// Count geodesics from the canonical star to its reversal
    Dn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Method,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Ctft,
    Arcperm,
    Classes,
    Tableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Actions,
    Diameter,
    Isomorphism,
    Geodesics,
    Tableaux,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LabelChoice {
    Diagonal,
    Generator,
    Hyperplane,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Tableaux,
    Enumerate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Enumerate { n, what } => {
            enumerate(n, what)?;
            Ok(true)
        }
        Command::Verify { n, suite, json } => run_verify(n, suite, json),
        Command::Graph { n, format, oriented, labels } => {
            graph(n, format, oriented, labels)?;
            Ok(true)
        }
        Command::Dn { n, method } => {
            dn(n, method)?;
            Ok(true)
        }
    }
}

fn require(n: usize, lo: usize, hi: usize, what: &str) -> Result<()> {
    if n < lo || n > hi {
        bail!("{what} supports n = {lo}..{hi}, got {n}");
    }
    Ok(())
}

#[derive(Serialize)]
struct TriangulationLine<'a> {
    code: String,
    n: usize,
    chords: &'a [Diagonal],
}

#[derive(Serialize)]
struct WordLine<'a> {
    word: &'a [usize],
}

#[derive(Serialize)]
struct CountLine {
    count: usize,
}

/// Write to standard output, treating a closed pipe as a normal end of
/// output rather than an error.
fn write_out(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    write_out(&format!("{}\n", serde_json::to_string(value)?));
    Ok(())
}

fn enumerate(n: usize, what: Family) -> Result<()> {
    let count = match what {
        Family::Ctft => {
            require(n, 5, 12, "enumerating triangulations")?;
            let codes = enumerate_codes(n)?;
            for code in &codes {
                let t = code.to_triangulation();
                emit(&TriangulationLine { code: code.to_string(), n, chords: t.chords() })?;
            }
            codes.len()
        }
        Family::Arcperm => {
            require(n, 2, 12, "enumerating arc permutations")?;
            let perms = enumerate_arc_perms(n)?;
            for p in &perms {
                emit(&WordLine { word: p.letters() })?;
            }
            perms.len()
        }
        Family::Classes => {
            require(n, 4, 12, "enumerating equivalence classes")?;
            let classes = enumerate_classes(n)?;
            for c in &classes {
                emit(&c)?;
            }
            classes.len()
        }
        Family::Tableaux => {
            require(n, 5, 8, "enumerating standard tableaux")?;
            let tableaux = TruncShiftedShape::for_polygon(n)?.enumerate_standard();
            for t in &tableaux {
                emit(&t)?;
            }
            tableaux.len()
        }
    };
    emit(&CountLine { count })
}

fn run_verify(n: usize, suite: Suite, json: bool) -> Result<bool> {
    let clock = Instant::now();
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::Actions) {
        require(n, 5, 8, "the actions suite")?;
        checks.extend(verify::actions(n)?);
    }
    if matches!(suite, Suite::All | Suite::Diameter) {
        require(n, 5, 9, "the diameter suite")?;
        checks.extend(verify::diameter(n)?);
    }
    if matches!(suite, Suite::All | Suite::Isomorphism) {
        require(n, 5, 8, "the isomorphism suite")?;
        checks.extend(verify::isomorphism(n));
    }
    if matches!(suite, Suite::All | Suite::Geodesics) {
        require(n, 5, 8, "the geodesics suite")?;
        checks.extend(verify::geodesics(n)?);
    }
    if matches!(suite, Suite::All | Suite::Tableaux) {
        require(n, 5, 9, "the tableaux suite")?;
        checks.extend(verify::tableaux(n)?);
    }
    let suite_name = match suite {
        Suite::All => "all",
        Suite::Actions => "actions",
        Suite::Diameter => "diameter",
        Suite::Isomorphism => "isomorphism",
        Suite::Geodesics => "geodesics",
        Suite::Tableaux => "tableaux",
    };
    let report = verify::Report::new(suite_name, n, checks);
    if json {
        write_out(&format!("{}\n", serde_json::to_string(&report)?));
    } else {
        write_out(&report.to_string());
    }
    eprintln!("elapsed: {:?}", clock.elapsed());
    Ok(report.pass)
}

fn graph(n: usize, format: Format, oriented: bool, labels: LabelChoice) -> Result<()> {
    require(n, 5, 12, "graph export")?;
    let kind = match labels {
        LabelChoice::Diagonal => EdgeLabelKind::Diagonal,
        LabelChoice::Generator => EdgeLabelKind::Generator,
        LabelChoice::Hyperplane => EdgeLabelKind::Hyperplane,
    };
    let graph = FlipGraph::build(n)?;
    match format {
        Format::Dot => write_out(&graph.to_dot(oriented, kind)),
        Format::Json => {
            write_out(&format!("{}\n", serde_json::to_string(&graph.to_json(oriented, kind))?))
        }
    }
    Ok(())
}

fn dn(n: usize, method: Method) -> Result<()> {
    let count = match method {
        Method::Formula => {
            require(n, 6, 60, "the closed formula")?;
            geodesic_count_formula(n)?
        }
        Method::Tableaux => {
            require(n, 5, 12, "counting via tableaux")?;
            TruncShiftedShape::for_polygon(n)?.count_standard() * BigUint::from(2u8)
        }
        Method::Enumerate => {
            require(n, 5, 8, "exhaustive geodesic walking")?;
            let graph = FlipGraph::build(n)?;
            let star = Code::from_triangulation(&ColoredTriangulation::canonical_star(n)?);
            let walked = graph.geodesics(&star, &star.reversed(), Direction::Both)?.count();
            BigUint::from(walked)
        }
    };
    write_out(&format!("{count}\n"));
    Ok(())
}
