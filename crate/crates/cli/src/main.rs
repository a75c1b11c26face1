//! `polyjoin`: adjacency and complementary-pair analysis of polytope files.
//!
//! Exit codes: 0 success, 1 I/O or internal failure, 2 invalid input
//! (malformed file, failed validation, bad argument), 3 the polytope lacks
//! a required property (e.g. simplicity).

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use polyjoin::adjacency::{all_pairs_with, FastAnswer};
use polyjoin::{
    all_complementary_pairs, format, generators, AdjacencyOracle, AuxGraph, Polytope,
    PolytopeGraph, Verdict,
};

#[derive(Parser)]
#[command(name = "polyjoin", version, about)]
struct Cli {
    /// Polytope file to read; standard input if omitted.
    #[arg(long, short, global = true)]
    file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, V, dimension, facet count and simplicity.
    Info,
    /// Test two vertices for adjacency with the join-map test.
    Adjacent { u: usize, v: usize },
    /// Print the edges of the polytope, one "u v" per line.
    Graph,
    /// Print every pair of vertices that share no facet.
    Complementary,
    /// Find another complementary pair starting from the pair u, v.
    SecondPair { u: usize, v: usize },
    /// Find two complementary pairs over four distinct vertices.
    DisjointPairs { u: usize, v: usize },
    /// Count complementary pairs and check the parity statement for 2d facets.
    Parity,
    /// Print the join-map trie.
    Trie,
    /// Print the auxiliary graph in Graphviz format.
    Dot,
    /// Write a fixture polytope: cube D, simplex D, prism3, bipyramid3,
    /// truncated_cube.
    Gen { name: String, d: Option<usize> },
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pair_lines(pairs: &[(usize, usize)]) -> String {
    pairs.iter().fold(String::new(), |mut s, (u, v)| {
        let _ = writeln!(s, "{u} {v}");
        s
    })
}

fn load(file: Option<&PathBuf>) -> anyhow::Result<Polytope> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
    };
    Ok(format::parse(&text)?)
}

fn with_aux<T>(
    p: &Polytope,
    f: impl FnOnce(&AuxGraph<'_>) -> polyjoin::Result<T>,
) -> polyjoin::Result<T> {
    let facets = p.detect_facets();
    let oracle = AdjacencyOracle::precompute(p)?;
    let graph = PolytopeGraph::from_edges(p.vertex_count(), &all_pairs_with(p, &oracle)?);
    let aux = AuxGraph::new(p, &facets, &graph)?;
    f(&aux)
}

fn run(cli: Cli) -> anyhow::Result<String> {
    if let Command::Gen { name, d } = &cli.command {
        return Ok(format::write(&generators::by_name(name, *d)?));
    }
    let p = load(cli.file.as_ref())?;
    let out = match cli.command {
        Command::Info => {
            let oracle = AdjacencyOracle::precompute(&p)?;
            format!(
                "n {}\nm {}\nV {}\ndim {}\nfacets {}\nsimple {}\n",
                p.n(),
                p.m(),
                p.vertex_count(),
                oracle.dimension(),
                p.detect_facets().len(),
                yes_no(oracle.is_simple())
            )
        }
        Command::Adjacent { u, v } => {
            let oracle = AdjacencyOracle::precompute(&p)?;
            let FastAnswer { verdict, count, .. } = oracle.fast_answer(u, v)?;
            let word = match verdict {
                Verdict::Adjacent => "ADJACENT",
                Verdict::NonAdjacent => "NON-ADJACENT",
                Verdict::Indeterminate => {
                    eprintln!(
                        "note: polytope is not simple; run `graph` to resolve this pair exactly"
                    );
                    "INDETERMINATE"
                }
            };
            format!("{word}\ncount {count}\n")
        }
        Command::Graph => pair_lines(&polyjoin::all_pairs_adjacency(&p)?),
        Command::Complementary => pair_lines(&all_complementary_pairs(&p, &p.detect_facets())),
        Command::SecondPair { u, v } => {
            let (a, b) = with_aux(&p, |aux| aux.second_pair(u, v))?.end().pair();
            format!("{a} {b}\n")
        }
        Command::DisjointPairs { u, v } => {
            let (_, pairs) = with_aux(&p, |aux| aux.disjoint_pairs(u, v))?;
            pair_lines(&pairs)
        }
        Command::Parity => {
            let r = with_aux(&p, |aux| Ok(aux.verify_2d_parity()))?;
            let mut s = format!(
                "dim {}\nfacets {}\npairs {}\napplies {}\n",
                r.dimension,
                r.facet_count,
                r.pair_count,
                yes_no(r.applies)
            );
            if r.applies {
                let _ = write!(
                    s,
                    "even {}\ndisjoint {}\n",
                    yes_no(r.even),
                    yes_no(r.pairwise_disjoint)
                );
            }
            s
        }
        Command::Trie => AdjacencyOracle::precompute(&p)?.join_map().dump(),
        Command::Dot => with_aux(&p, |aux| Ok(aux.to_dot()))?,
        Command::Gen { .. } => unreachable!("handled above"),
    };
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<polyjoin::Error>() {
                Some(e) if e.is_validation() => 2,
                Some(_) => 3,
                None => 1,
            };
            ExitCode::from(code)
        }
    }
}
