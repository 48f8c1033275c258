use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use irregular_core::cubic::{is_proper, is_state0, is_state1, is_state2, solve_cubic};
use irregular_core::general::solve_general;
use irregular_core::generators::{
    blow_up, disjoint_copies, generate, random_regular, random_subgraph, GeneratorSpec,
};
use irregular_core::io::{parse_graph, parse_subgraph, report, serialize_graph, serialize_subgraph};
use irregular_core::irregularity::{a_scaled, AVector};
use irregular_core::oracle::{oracle_best, oracle_state_exists};
use irregular_core::strength::{verify_distinct, weighting_from_subgraph};
use irregular_core::{Error, Multigraph, SpanningSubgraph};

#[derive(Parser)]
#[command(name = "irregular", version, about = "Highly irregular spanning subgraphs of regular multigraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    General,
    Cubic,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a spanning subgraph and write it as a subgraph file.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        input: PathBuf,
        /// empty, full or random:SEED (general only)
        #[arg(long, default_value = "empty")]
        init: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print the degree report of a subgraph and check an optional target.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        subgraph: PathBuf,
        /// state0, proper or norm:<int> (scaled by d+1)
        #[arg(long)]
        expect_state: Option<String>,
    },
    /// Write a generated multigraph.
    Gen {
        /// k2k:K, kdd:D, cycle:N, petersen, k4 or random:N:D:SEED
        #[arg(long)]
        family: String,
        /// Replace every edge by S parallel copies.
        #[arg(long)]
        blow_up: Option<usize>,
        /// Take C disjoint copies.
        #[arg(long)]
        copies: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive search over all spanning subgraphs.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// state0, proper, state1, state2, spread or norm:<int>
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Time the cubic solver on random cubic multigraphs; CSV on stdout.
    Bench {
        #[arg(long, value_enum, default_value = "cubic")]
        algo: Algo,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        seeds: u64,
    },
    /// Edge weighting of the base graph induced by a subgraph of its blow-up.
    Strength {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        subgraph: PathBuf,
    },
}

enum Failure {
    Verify(String),
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run = std::result::Result<String, Failure>;
type Predicate = Box<dyn Fn(&AVector) -> bool>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<Multigraph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn number<T: std::str::FromStr>(tok: &str, what: &str) -> std::result::Result<T, Failure> {
    tok.parse().map_err(|_| Failure::Usage(format!("bad {what} `{tok}`")))
}

fn solve(algo: Algo, input: &Path, init: &str, output: &Path) -> Run {
    let g = load_graph(input)?;
    let h = match algo {
        Algo::Cubic => {
            if init != "empty" {
                return Err(Failure::Usage("the cubic solver builds its own start".into()));
            }
            solve_cubic(&g)?.0
        }
        Algo::General => {
            let start = match init.split_once(':') {
                None if init == "empty" => SpanningSubgraph::empty(&g),
                None if init == "full" => SpanningSubgraph::full(&g),
                Some(("random", seed)) => random_subgraph(&g, 0.5, number(seed, "seed")?),
                _ => return Err(Failure::Usage(format!("unknown init `{init}`"))),
            };
            if g.regularity().is_some_and(|d| d > 8) {
                eprintln!("warning: d > 8, exhaustive verification is out of reach");
            }
            solve_general(&g, Some(start))?.0
        }
    };
    write(output, &serialize_subgraph(&g, &h))?;
    Ok(report(&g, &h)?)
}

/// Parses a state or norm predicate.
fn predicate(spec: &str) -> std::result::Result<Predicate, Failure> {
    fn cubic(a: &AVector) -> Option<[i64; 4]> {
        a.entries.as_slice().try_into().ok()
    }
    Ok(match spec.split_once(':') {
        Some(("norm", k)) => {
            let k: i64 = number(k, "norm bound")?;
            Box::new(move |a| a.max_abs() <= k)
        }
        None => match spec {
            "state0" => Box::new(|a| cubic(a).is_some_and(|x| is_state0(&x))),
            "proper" => Box::new(|a| cubic(a).is_some_and(|x| is_proper(&x))),
            "state1" => Box::new(|a| cubic(a).is_some_and(|x| is_state1(&x))),
            "state2" => Box::new(|a| cubic(a).is_some_and(|x| is_state2(&x))),
            "spread" => Box::new(|a| a.counts().iter().all(|&m| m <= 1)),
            _ => return Err(Failure::Usage(format!("unknown predicate `{spec}`"))),
        },
        _ => return Err(Failure::Usage(format!("unknown predicate `{spec}`"))),
    })
}

fn verify(graph: &Path, subgraph: &Path, expect: Option<&str>) -> Run {
    let g = load_graph(graph)?;
    let h = parse_subgraph(&read(subgraph)?, &g)?;
    let text = report(&g, &h)?;
    if let Some(spec) = expect {
        if matches!(spec, "state0" | "proper") && g.regularity() != Some(3) {
            return Err(Failure::Core(Error::NotCubic));
        }
        let a = a_scaled::<i64>(&g, &h)?;
        if !predicate(spec)?(&a) {
            return Err(Failure::Verify(format!("expected {spec}, got {:?}", a.entries)));
        }
    }
    Ok(text)
}

fn family(spec: &str) -> std::result::Result<GeneratorSpec, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    Ok(match parts[..] {
        ["k2k", k] => GeneratorSpec::K2k(number(k, "k")?),
        ["kdd", d] => GeneratorSpec::CompleteBipartite(number(d, "d")?),
        ["cycle", n] => GeneratorSpec::Cycle(number(n, "n")?),
        ["petersen"] => GeneratorSpec::Petersen,
        ["k4"] => GeneratorSpec::K4,
        ["random", n, d, seed] => GeneratorSpec::RandomRegular {
            n: number(n, "n")?,
            d: number(d, "d")?,
            seed: number(seed, "seed")?,
        },
        _ => return Err(Failure::Usage(format!("unknown family `{spec}`"))),
    })
}

fn gen(spec: &str, s: Option<usize>, copies: Option<usize>, out: &Path) -> Run {
    let mut g = generate(&family(spec)?)?;
    if let Some(s) = s {
        g = blow_up(&g, s)?;
    }
    if let Some(c) = copies {
        g = disjoint_copies(&g, c)?;
    }
    write(out, &serialize_graph(&g)?)?;
    Ok(format!("n {} m {}\n", g.num_vertices(), g.num_edges()))
}

fn oracle(input: &Path, pred: Option<&str>) -> Run {
    let g = load_graph(input)?;
    match pred {
        None => {
            let r = oracle_best(&g)?;
            let ids: Vec<String> = r.witness.iter().map(|e| e.to_string()).collect();
            Ok(format!("best {}\nwitness {}\n", r.best_scaled_inf_norm, ids.join(" ")))
        }
        Some(spec) => {
            let p = predicate(spec)?;
            match oracle_state_exists(&g, |a| p(a))? {
                Some(h) => Ok(format!("found\n{}", serialize_subgraph(&g, &h))),
                None => Ok("none\n".into()),
            }
        }
    }
}

fn bench(algo: Algo, sizes: &[usize], seeds: u64) -> Run {
    if matches!(algo, Algo::General) {
        return Err(Failure::Usage("bench supports --algo cubic only".into()));
    }
    let mut out = String::from("n,seconds,toggles\n");
    for &n in sizes {
        for seed in 0..seeds {
            let g = random_regular(n, 3, seed)?;
            let t = Instant::now();
            let (_, stats) = solve_cubic(&g)?;
            let secs = t.elapsed().as_secs_f64();
            let _ = writeln!(out, "{n},{secs:.6},{}", stats.counters.toggles);
        }
    }
    Ok(out)
}

fn strength(base: &Path, s: usize, subgraph: &Path) -> Run {
    let base = load_graph(base)?;
    let g = blow_up(&base, s)?;
    let h = parse_subgraph(&read(subgraph)?, &g)?;
    let w = weighting_from_subgraph(&base, s, &g, &h)?;
    let r = verify_distinct(&base, &w);
    let mut out = String::new();
    for (e, x) in w.weights.iter().enumerate() {
        let _ = writeln!(out, "w {e} {x}");
    }
    for v in base.vertices() {
        let _ = writeln!(out, "wdeg {v} {}", w.weighted_degrees[v]);
    }
    let dup: Vec<String> = r.duplicates.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "distinct {}", if r.distinct { "yes" } else { "no" });
    if !r.distinct {
        let _ = writeln!(out, "duplicates {}", dup.join(" "));
    }
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InternalInvariant(_)
        | Error::StaleStar(_)
        | Error::PreconditionViolated(_)
        | Error::WrongState(_)
        | Error::NotProper
        | Error::MalformedRecord(_)
        | Error::IndexOutOfRange(_)
        | Error::DimensionMismatch(..) => 3,
        _ => 2,
    }
}

fn kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Solve { algo, input, init, output } => solve(*algo, input, init, output),
        Cmd::Verify { graph, subgraph, expect_state } => {
            verify(graph, subgraph, expect_state.as_deref())
        }
        Cmd::Gen { family, blow_up, copies, out } => gen(family, *blow_up, *copies, out),
        Cmd::Oracle { input, predicate } => oracle(input, predicate.as_deref()),
        Cmd::Bench { algo, sizes, seeds } => bench(*algo, sizes, *seeds),
        Cmd::Strength { base, s, subgraph } => strength(base, *s, subgraph),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("error verify {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error usage {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error {} {e}", kind(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}
