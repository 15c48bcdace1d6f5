//! `groupfact`: command-line front end.
//!
//! Every verb prints a `# groupfact <verb>` header, tab-separated records
//! and a closing summary line. Exit codes: 0 success, 1 a check failed,
//! 2 usage or parameter errors, 3 parse or I/O errors, 4 a certified
//! invariant failed.

mod battery;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use groupfact::arcgraph::{
    coset_graph, graph_automorphisms, higman_sims, hoffman_singleton, petersen, s_arc_transitivity,
    two_arc_candidates, CosetGraphSpec, Graph, DEFAULT_ARC_CAP,
};
use groupfact::constructions::{build_construction, default_battery, run_battery, verify_construction, ConstructionFamily};
use groupfact::factorlab::{
    check_table, compute_for_rows, expected_rows, search_solvable_factorizations, two_solvable_search, TABLE_IDS,
};
use groupfact::gf::action::nonzero_vectors;
use groupfact::gf::mat_to_perm;
use groupfact::io::{load_edg, load_grp, parse_mgp, write_edg};
use groupfact::numth::simple::{common_primes, exceptional_ids, lie_type_ids, table_ids};
use groupfact::numth::{common_divisor_check, common_divisor_sweep, primitive_prime_divisors, SimpleGroupId};
use groupfact::perm::{PermGroup, Permutation};
use groupfact::{Error, Result};

/// Largest vector space acted on by default when no seeds are given.
const MGP_DEFAULT_POINTS: u64 = 100_000;

#[derive(Parser)]
#[command(name = "groupfact", version, about = "Factorizations of finite groups with a solvable factor")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify `G = HK` for the classical constructions (default battery
    /// unless a single family is given).
    VerifyConstruction {
        #[arg(long, requires_all = ["m", "q"])]
        family: Option<ConstructionFamily>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// Enumerate factorizations of a group read from a `.grp` or `.mgp` file.
    SearchFactorizations {
        file: PathBuf,
        /// Require both factors solvable (default: `H` solvable, `K` core-free).
        #[arg(long)]
        both_solvable: bool,
        /// Seed vectors for a matrix group, e.g. `1,0,0;0,1,0`.
        #[arg(long)]
        seeds: Option<String>,
    },
    /// Compare computed factorizations with a bundled table.
    CheckTable {
        table: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Primitive prime divisors of `a^m − 1`.
    Zsigmondy { a: u64, m: u64 },
    /// Check `|T|_r ≥ r|Out(T)|_r` for one group or a sweep.
    CommonDivisor {
        /// A simple group name such as `PSL(3,4)` or `G2(3)`.
        id: Option<String>,
        #[arg(long, requires = "id")]
        r: Option<u64>,
        /// Sweep family: `lie`, `exceptional` or `tables`.
        #[arg(long, conflicts_with = "id", default_value = "lie")]
        family: String,
        #[arg(long, default_value_t = 12)]
        dim_max: u64,
        #[arg(long, default_value_t = 64)]
        q_max: u64,
    },
    /// Symmetry report for a named graph or an `.edg` file.
    CheckGraph {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_ARC_CAP)]
        cap: usize,
    },
    /// Build `Cos(G, K, KgK)`; without `--elt`, try every 2-arc candidate.
    CosetGraph {
        g: PathBuf,
        k: PathBuf,
        /// Image list of the element `g`.
        #[arg(long)]
        elt: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every acceptance check.
    ReportAll {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::VerifyConstruction { .. } => "verify-construction",
            Command::SearchFactorizations { .. } => "search-factorizations",
            Command::CheckTable { .. } => "check-table",
            Command::Zsigmondy { .. } => "zsigmondy",
            Command::CommonDivisor { .. } => "common-divisor",
            Command::CheckGraph { .. } => "check-graph",
            Command::CosetGraph { .. } => "coset-graph",
            Command::ReportAll { .. } => "report-all",
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 3,
        Error::Invariant(_) | Error::Certification(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("GROUPFACT_THREADS").ok().and_then(|v| v.parse().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    println!("# groupfact {} config", cli.command.verb());
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::VerifyConstruction { family, m, q } => verify(family.zip(m).zip(q).map(|((f, m), q)| (f, m, q))),
        Command::SearchFactorizations { file, both_solvable, seeds } => search(&file, both_solvable, seeds.as_deref()),
        Command::CheckTable { table, seed } => table_check(&table, seed),
        Command::Zsigmondy { a, m } => zsigmondy(a, m),
        Command::CommonDivisor { id, r, family, dim_max, q_max } => common_divisor(id.as_deref(), r, &family, dim_max, q_max),
        Command::CheckGraph { graph, cap } => check_graph(&graph, cap),
        Command::CosetGraph { g, k, elt, out } => coset(&g, &k, elt.as_deref(), out.as_deref()),
        Command::ReportAll { seed } => {
            let checks = battery::run(seed);
            for c in &checks {
                println!("{c}");
            }
            let passed = checks.iter().filter(|c| c.pass).count();
            println!("SUMMARY\t{passed}/{} passed", checks.len());
            Ok(passed == checks.len())
        }
    }
}

fn verify(single: Option<(ConstructionFamily, usize, u32)>) -> Result<bool> {
    let reports = match single {
        Some((f, m, q)) => vec![build_construction(f, m, q).and_then(|s| verify_construction(&s))],
        None => run_battery(&default_battery()),
    };
    let mut passed = 0;
    let total = reports.len();
    for rep in reports {
        let rep = rep?;
        passed += usize::from(rep.pass);
        println!("{rep}");
    }
    println!("SUMMARY\t{passed}/{total} passed");
    Ok(passed == total)
}

fn parse_seeds(text: &str) -> Result<Vec<Vec<u32>>> {
    text.split(';')
        .map(|v| {
            v.split(',')
                .map(|c| c.trim().parse().map_err(|_| Error::InvalidParameters(format!("bad seed entry {c:?}"))))
                .collect()
        })
        .collect()
}

fn load_group(path: &Path, seeds: Option<&str>) -> Result<PermGroup> {
    if path.extension().is_some_and(|e| e == "mgp") {
        let file = parse_mgp(&fs::read_to_string(path)?)?;
        let seeds = match seeds {
            Some(s) => parse_seeds(s)?,
            None => {
                let points = (file.field.order() as u64).checked_pow(file.dim as u32);
                if points.is_none_or(|p| p > MGP_DEFAULT_POINTS) {
                    return Err(Error::InvalidParameters(format!(
                        "the space has more than {MGP_DEFAULT_POINTS} vectors; pass --seeds"
                    )));
                }
                nonzero_vectors(&file.field, file.dim)
            }
        };
        Ok(mat_to_perm(&file.generators, &seeds)?.group)
    } else {
        load_grp(path)
    }
}

fn search(path: &Path, both_solvable: bool, seeds: Option<&str>) -> Result<bool> {
    let g = load_group(path, seeds)?;
    let id = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
    let records = if both_solvable {
        two_solvable_search(&id, &g)?
    } else {
        search_solvable_factorizations(&id, &g)?
    };
    println!("# group\t|G|={}\tdegree={}", g.order(), g.degree());
    println!("# |G|\t|H|\t|K|\t|H∩K|\tH_solvable\tK_solvable\tH_core_free\tK_core_free");
    for r in &records {
        println!("{r}");
    }
    println!("SUMMARY\t{} factorizations", records.len());
    Ok(true)
}

fn table_check(table: &str, seed: u64) -> Result<bool> {
    if !TABLE_IDS.contains(&table) {
        return Err(Error::InvalidParameters(format!("unknown table {table}; known: {}", TABLE_IDS.join(", "))));
    }
    let rows = expected_rows(table)?;
    let computed = compute_for_rows(&rows, seed)?;
    let diff = check_table(table, &computed)?;
    println!("{diff}");
    Ok(diff.is_complete())
}

fn zsigmondy(a: u64, m: u64) -> Result<bool> {
    let r = primitive_prime_divisors(a, m)?;
    if r.is_exception {
        println!("{a}\t{m}\tEXCEPTION; no primitive prime divisor");
    } else {
        let primes: Vec<String> = r.primes.iter().map(|p| p.to_string()).collect();
        println!("{a}\t{m}\t{}", primes.join(","));
    }
    println!("SUMMARY\t{} primitive prime divisors", r.primes.len());
    Ok(r.is_exception == r.primes.is_empty())
}

fn common_divisor(id: Option<&str>, r: Option<u64>, family: &str, dim_max: u64, q_max: u64) -> Result<bool> {
    let reports = match id {
        Some(name) => {
            let id: SimpleGroupId = name.parse()?;
            let primes = match r {
                Some(r) => vec![r],
                None => common_primes(&id),
            };
            primes.into_iter().map(|r| common_divisor_check(&id, r)).collect::<Result<Vec<_>>>()?
        }
        None => {
            let ids = match family {
                "lie" => lie_type_ids(dim_max, q_max),
                "exceptional" => exceptional_ids(q_max),
                "tables" => table_ids(),
                _ => return Err(Error::InvalidParameters(format!("unknown sweep family {family}"))),
            };
            common_divisor_sweep(&ids)
        }
    };
    println!("# group\tr\t|T|_r\tr|Out|_r\tequality\tpredicted");
    for rep in &reports {
        println!("{rep}");
    }
    let bad = reports.iter().filter(|r| !r.consistent()).count();
    println!("SUMMARY\t{} cases\t{bad} inconsistent", reports.len());
    Ok(bad == 0)
}

fn named_graph(name: &str) -> Result<Graph> {
    match name {
        "petersen" => Ok(petersen()),
        "hoffman-singleton" => Ok(hoffman_singleton()),
        "higman-sims" => higman_sims(),
        path => load_edg(Path::new(path)),
    }
}

fn check_graph(name: &str, cap: usize) -> Result<bool> {
    let graph = named_graph(name)?;
    let aut = graph_automorphisms(&graph)?;
    let rep = s_arc_transitivity(&graph, &aut, cap)?;
    println!(
        "{name}\tn={}\tedges={}\t{rep}\tbipartite={}\t|Aut|={}",
        graph.n(),
        graph.edge_count(),
        graph.is_bipartite(),
        aut.order()
    );
    println!("SUMMARY\t{}", rep.s_max.map_or("not vertex-transitive".into(), |s| format!("{s}-arc-transitive")));
    Ok(true)
}

fn parse_images(text: &str) -> Result<Permutation> {
    let images = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::InvalidParameters(format!("bad image {t:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    Permutation::from_images(images)
}

fn coset(g_path: &Path, k_path: &Path, elt: Option<&str>, out: Option<&Path>) -> Result<bool> {
    let g = load_grp(g_path)?;
    let k = load_grp(k_path)?;
    let specs = match elt {
        Some(e) => vec![CosetGraphSpec::new(g, k, parse_images(e)?)?],
        None => two_arc_candidates(&g, &k)?
            .iter()
            .map(|c| c.spec(&g, &k))
            .collect::<Result<Vec<_>>>()?,
    };
    let mut first = None;
    for (i, spec) in specs.iter().enumerate() {
        let graph = coset_graph(spec)?;
        let aut = graph_automorphisms(&graph)?;
        let rep = s_arc_transitivity(&graph, &aut, DEFAULT_ARC_CAP)?;
        println!("{i}\tn={}\tedges={}\t{rep}\t|Aut|={}", graph.n(), graph.edge_count(), aut.order());
        first.get_or_insert(graph);
    }
    if let (Some(path), Some(graph)) = (out, &first) {
        fs::write(path, write_edg(graph))?;
    }
    println!("SUMMARY\t{} coset graphs", specs.len());
    Ok(true)
}
