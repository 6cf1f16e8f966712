use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use latdim::catalog;
use latdim::constructions;
use latdim::covers;
use latdim::dims::{self, DimensionReport};
use latdim::io::{parse_lattice, to_dot, to_json};
use latdim::search::{search_gaps, SearchConfig};
use latdim::{Lattice, LatticeError};

#[derive(Parser)]
#[command(name = "latdim", version, about = "Dimensions of finite lattices")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a file describes a bounded lattice.
    Validate { file: String },
    /// Ind, ind, dim, Kdim and height with witnesses.
    Dims {
        /// Lattice JSON file, or `-` for standard input.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Covers of the lattice as sorted label lists.
    Covers {
        file: String,
        #[arg(long)]
        minimal: bool,
    },
    /// Filters (principal up-sets) with their primality.
    Filters {
        file: String,
        #[arg(long)]
        prime: bool,
    },
    /// Build a sum or product of two lattices and print its JSON.
    Product {
        #[arg(long, value_enum)]
        op: Op,
        a: String,
        b: String,
    },
    /// Build one of the parametrised families.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Graphviz export.
    Dot {
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in fixtures, or compare them with their stated values.
    Fixtures {
        #[arg(long)]
        check: bool,
    },
    /// Seeded scan for dimension gaps and counterexamples.
    Search {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Scan the fixtures only.
        #[arg(long)]
        catalog_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Sum,
    Cartesian,
    Lex,
    Rect,
}

#[derive(Subcommand)]
enum Construct {
    AddTop { file: String },
    IndK { k: usize },
    GraftM { k: usize },
}

enum Failure {
    Lattice(LatticeError),
    Input(String),
    Counterexample,
    Regression,
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        Failure::Lattice(e)
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &str) -> Result<Lattice, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    Ok(parse_lattice(&text)?)
}

fn emit(s: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    if !s.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn emit_json<T: Serialize>(v: &T) {
    emit(&serde_json::to_string_pretty(v).expect("plain data serializes"));
}

fn table(r: &DimensionReport) -> String {
    let show = |v: Option<usize>| v.map_or("none".to_string(), |k| k.to_string());
    let rows = [
        ("lattice", r.name.clone()),
        ("elements", r.n.to_string()),
        ("Ind", r.ind_large.to_string()),
        ("ind", r.ind_small.to_string()),
        ("dim", r.dim_covering.to_string()),
        ("Kdim", show(r.kdim)),
        ("height", r.height.to_string()),
    ];
    rows.iter().map(|(k, v)| format!("{k:<9} {v}\n")).collect()
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Validate { file } => {
            let l = load(&file)?;
            emit(&format!("valid: {} ({} elements, {} covers)", l.name(), l.len(), l.hasse().len()));
        }
        Cmd::Dims { file, json } => {
            let r = dims::full_report(&load(&file)?)?;
            if json {
                emit_json(&r);
            } else {
                emit(&table(&r));
            }
        }
        Cmd::Covers { file, minimal } => {
            let l = load(&file)?;
            let names: Vec<Vec<String>> = if minimal {
                covers::minimal_covers(&l)?.to_names(&l)
            } else {
                let mut v: Vec<Vec<String>> =
                    covers::all_covers(&l)?.iter().map(|c| c.sorted_labels(&l)).collect();
                v.sort();
                v
            };
            emit_json(&names);
        }
        Cmd::Filters { file, prime } => {
            let l = load(&file)?;
            let fs = if prime { covers::prime_filters(&l) } else { covers::filters(&l) };
            let names: Vec<_> = fs.iter().map(|f| f.names(&l)).collect();
            emit_json(&names);
        }
        Cmd::Product { op, a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let l = match op {
                Op::Sum => constructions::linear_sum(&a, &b)?,
                Op::Cartesian => constructions::cartesian_product(&a, &b)?,
                Op::Lex => constructions::lex_product(&a, &b)?,
                Op::Rect => constructions::rect_product(&a, &b)?,
            };
            emit(&to_json(&l));
        }
        Cmd::Construct { what } => {
            let l = match what {
                Construct::AddTop { file } => constructions::add_top(&load(&file)?)?,
                Construct::IndK { k } => constructions::ind_k_family(k)?,
                Construct::GraftM { k } => constructions::graft_m(k)?,
            };
            emit(&to_json(&l));
        }
        Cmd::Dot { file, out } => {
            let dot = to_dot(&load(&file)?);
            match out {
                Some(p) => fs::write(&p, dot).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
                None => emit(&dot),
            }
        }
        Cmd::Fixtures { check: false } => {
            for f in catalog::fixtures() {
                emit(&format!("{:<12} {:>3}  {}", f.id, f.lattice.len(), f.source));
            }
        }
        Cmd::Fixtures { check: true } => {
            let mut failed = 0;
            for f in catalog::fixtures() {
                for c in catalog::check_fixture(&f)? {
                    let mark = if c.ok { "PASS" } else { "FAIL" };
                    emit(&format!("{mark} {} {}: expected {}, got {}", c.fixture, c.field, c.expected, c.actual));
                    failed += usize::from(!c.ok);
                }
            }
            if failed > 0 {
                eprintln!("{failed} fixture value(s) differ");
                return Err(Failure::Regression);
            }
        }
        Cmd::Search { seed, max_n, samples, catalog_only } => {
            let r = search_gaps(&SearchConfig { seed, max_n, samples, catalog_only })?;
            emit_json(&r);
            if !r.violations.is_empty() {
                eprintln!("{} counterexample(s) found", r.violations.len());
                return Err(Failure::Counterexample);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lattice(e)) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(if matches!(e, LatticeError::SizeLimit { .. }) { 2 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Regression) => ExitCode::from(1),
        Err(Failure::Counterexample) => ExitCode::from(3),
    }
}
