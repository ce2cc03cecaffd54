//! Command-line surface: generate, verify, solve, construct, bounds, reduce,
//! verify-equivalence, and compare, with JSON reports on stdout and human
//! summaries on stderr.
//!
//! Exit codes: 0 on success, 1 for invalid or infeasible answers (failed
//! verification, exhausted budgets, unidentifiable graphs), 2 for usage and
//! input errors.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct;
use crate::graph::Graph;
use crate::reduce;
use crate::solver::{self, SolveError, SolverBudget};
use crate::watch::{verify, WatchingSystem};

#[derive(Parser)]
#[command(name = "watchsys", version, about = "Watching systems in graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Star,
    RandomTree,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructFamily {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Hermit,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file from a standard family.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a watching-system certificate against a graph.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        watchers: PathBuf,
        #[arg(long, default_value_t = 1)]
        ell: usize,
    },
    /// Compute the minimum watching system exactly.
    Solve {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long)]
        nodes: Option<u64>,
        #[arg(long)]
        seconds: Option<u64>,
        /// Also write the certificate to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a watching system with a proven size guarantee.
    #[command(group(ArgGroup::new("target").required(true).args(["family", "tree", "graph"])))]
    Construct {
        #[arg(long, value_enum, requires = "n")]
        family: Option<ConstructFamily>,
        #[arg(long)]
        n: Option<usize>,
        /// Tree file for the 2n/3 construction.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Connected graph file: builds on a spanning tree.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "1")]
        ell: Level,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report the bound sandwich around the watching number.
    Bounds {
        #[arg(short, long)]
        graph: PathBuf,
    },
    /// Expand a vertex-cover instance into a watching-system instance.
    Reduce {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        k: Option<usize>,
        /// Directory for the expanded edge list and the gadget map.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Solve both sides of the reduction and confirm w(G') = vc(G) + m.
    VerifyEquivalence {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        nodes: Option<u64>,
        #[arg(long)]
        seconds: Option<u64>,
    },
    /// Compare the watching, domination, and identifying numbers.
    Compare {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        nodes: Option<u64>,
        #[arg(long)]
        seconds: Option<u64>,
    },
}

/// Outcome of a subcommand: the JSON payload plus the exit code.
struct Outcome {
    input: Value,
    result: Value,
    exit: i32,
    summary: String,
}

/// Input or usage failure; maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub fn run<I: IntoIterator<Item = String>>(argv: I) -> i32 {
    let args = std::iter::once("watchsys".to_string()).chain(argv);
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help and --version with success exits
            if e.exit_code() == 0 {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 2;
        }
    };
    let started = Instant::now();
    let (name, outcome) = dispatch(cli.command);
    match outcome {
        Ok(out) => {
            let report = json!({
                "command": name,
                "input": out.input,
                "result": out.result,
                "elapsed_ms": started.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&report).expect("report is serializable"));
            eprintln!("{}", out.summary);
            out.exit
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> (&'static str, Result<Outcome, InputError>) {
    match command {
        Command::Gen { family, n, seed, output } => ("gen", gen(family, n, seed, &output)),
        Command::Verify { graph, watchers, ell } => ("verify", do_verify(&graph, &watchers, ell)),
        Command::Solve { graph, r, ell, nodes, seconds, output } => {
            ("solve", solve(&graph, r, ell, budget(nodes, seconds), output.as_deref()))
        }
        Command::Construct { family, n, tree, graph, ell, output } => {
            ("construct", do_construct(family, n, tree, graph, ell, output.as_deref()))
        }
        Command::Bounds { graph } => ("bounds", do_bounds(&graph)),
        Command::Reduce { graph, k, output } => ("reduce", do_reduce(&graph, k, &output)),
        Command::VerifyEquivalence { graph, nodes, seconds } => {
            ("verify-equivalence", equivalence(&graph, budget(nodes, seconds)))
        }
        Command::Compare { graph, nodes, seconds } => {
            ("compare", compare(&graph, budget(nodes, seconds)))
        }
    }
}

fn budget(nodes: Option<u64>, seconds: Option<u64>) -> SolverBudget {
    let default = SolverBudget::default();
    SolverBudget::new(
        nodes.unwrap_or(default.node_limit),
        seconds.map_or(default.time_limit, Duration::from_secs),
    )
}

fn load_graph(path: &Path) -> Result<Graph, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("reading {}: {e}", path.display())))?;
    Graph::parse_edge_list(&text)
        .map_err(|e| InputError(format!("parsing {}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<WatchingSystem, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("reading {}: {e}", path.display())))?;
    WatchingSystem::from_json(&text)
        .map_err(|e| InputError(format!("parsing {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), InputError> {
    std::fs::write(path, contents)
        .map_err(|e| InputError(format!("writing {}: {e}", path.display())))
}

fn graph_digest(path: &Path, g: &Graph) -> Value {
    json!({ "path": path.display().to_string(), "n": g.order(), "m": g.num_edges() })
}

fn system_value(w: &WatchingSystem) -> Value {
    serde_json::from_str(&w.to_json()).expect("certificate serializes")
}

fn gen(family: GenFamily, n: usize, seed: Option<u64>, output: &Path) -> Result<Outcome, InputError> {
    let g = match family {
        GenFamily::Path => Graph::path(n),
        GenFamily::Cycle => Graph::cycle(n),
        GenFamily::Star => Graph::star(n),
        GenFamily::RandomTree => Graph::random_tree(n, seed.unwrap_or(0)),
        GenFamily::Complete => Graph::complete(n),
    }?;
    write_file(output, &g.to_edge_list())?;
    Ok(Outcome {
        input: json!({ "n": n, "seed": seed }),
        result: graph_digest(output, &g),
        exit: 0,
        summary: format!(
            "wrote graph with n={} m={} to {}",
            g.order(),
            g.num_edges(),
            output.display()
        ),
    })
}

fn do_verify(graph: &Path, watchers: &Path, ell: usize) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let system = load_system(watchers)?;
    let report = verify(&g, &system, ell)?;
    let valid = report.valid;
    Ok(Outcome {
        input: json!({
            "graph": graph_digest(graph, &g),
            "watchers": watchers.display().to_string(),
            "ell": ell,
        }),
        result: serde_json::to_value(&report).expect("report serializes"),
        exit: i32::from(!valid),
        summary: if valid {
            format!("valid: {} watchers identify all <= {ell}-subsets", report.size)
        } else {
            format!("invalid: {:?}", report.violation)
        },
    })
}

fn solve(
    graph: &Path,
    r: usize,
    ell: usize,
    budget: SolverBudget,
    output: Option<&Path>,
) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let input = json!({
        "graph": graph_digest(graph, &g),
        "r": r, "ell": ell,
        "nodes": budget.node_limit, "seconds": budget.time_limit.as_secs(),
    });
    match solver::watching_number(&g, r, ell, &budget) {
        Ok(res) => {
            if let Some(path) = output {
                write_file(path, &res.certificate.to_json())?;
            }
            Ok(Outcome {
                input,
                result: json!({
                    "optimum": res.optimum,
                    "lower_bound": res.lower_bound,
                    "explored": res.explored,
                    "certificate": system_value(&res.certificate),
                }),
                exit: 0,
                summary: format!("optimum {} ({} nodes explored)", res.optimum, res.explored),
            })
        }
        Err(SolveError::BudgetExhausted { explored, lower, upper }) => Ok(Outcome {
            input,
            result: json!({
                "status": "budget-exhausted",
                "explored": explored, "lower": lower, "upper": upper,
            }),
            exit: 1,
            summary: format!("budget exhausted; optimum within {lower}..={upper}"),
        }),
        Err(e) => Err(e.into()),
    }
}

fn do_construct(
    family: Option<ConstructFamily>,
    n: Option<usize>,
    tree: Option<PathBuf>,
    graph: Option<PathBuf>,
    ell: Level,
    output: Option<&Path>,
) -> Result<Outcome, InputError> {
    let (system, input) = match (family, tree, graph) {
        (Some(fam), None, None) => {
            let n = n.expect("clap enforces --n with --family");
            let system = match (fam, ell) {
                (ConstructFamily::Path, Level::One) => construct::path_system(n)?,
                (ConstructFamily::Path, Level::Two) => construct::path_12_system(n)?,
                (ConstructFamily::Cycle, Level::One) => construct::cycle_system(n)?,
                (ConstructFamily::Cycle, Level::Two) => construct::cycle_12_system(n)?,
                (ConstructFamily::Path, Level::Hermit) => {
                    construct::hermit_system(&Graph::path(n)?)
                }
                (ConstructFamily::Cycle, Level::Hermit) => {
                    construct::hermit_system(&Graph::cycle(n)?)
                }
            };
            let name = match fam {
                ConstructFamily::Path => "path",
                ConstructFamily::Cycle => "cycle",
            };
            (system, json!({ "family": name, "n": n, "ell": level_name(ell) }))
        }
        (None, Some(path), None) => {
            let t = load_graph(&path)?;
            let system = match ell {
                Level::One => construct::tree_2n3_system(&t)?,
                Level::Hermit => construct::hermit_system(&t),
                Level::Two => {
                    return Err(InputError(
                        "no level-2 tree construction exists; use --ell 1 or hermit".into(),
                    ))
                }
            };
            (system, json!({ "tree": graph_digest(&path, &t), "ell": level_name(ell) }))
        }
        (None, None, Some(path)) => {
            let g = load_graph(&path)?;
            let system = match ell {
                Level::One => construct::graph_2n3_system(&g)?,
                Level::Hermit => construct::hermit_system(&g),
                Level::Two => {
                    return Err(InputError(
                        "no level-2 graph construction exists; use --ell 1 or hermit".into(),
                    ))
                }
            };
            (system, json!({ "graph": graph_digest(&path, &g), "ell": level_name(ell) }))
        }
        _ => return Err(InputError("use exactly one of --family, --tree, --graph".into())),
    };
    if let Some(path) = output {
        write_file(path, &system.to_json())?;
    }
    let size = system.size();
    Ok(Outcome {
        input,
        result: json!({ "size": size, "certificate": system_value(&system) }),
        exit: 0,
        summary: format!("constructed watching system of size {size}"),
    })
}

fn level_name(ell: Level) -> &'static str {
    match ell {
        Level::One => "1",
        Level::Two => "2",
        Level::Hermit => "hermit",
    }
}

fn do_bounds(graph: &Path) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let report = solver::bounds(&g, &SolverBudget::default());
    let summary = format!(
        "lower {} uppers {:?}",
        report.lower,
        report.uppers.iter().map(|u| u.value).collect::<Vec<_>>()
    );
    Ok(Outcome {
        input: graph_digest(graph, &g),
        result: serde_json::to_value(&report).expect("bounds serialize"),
        exit: 0,
        summary,
    })
}

fn do_reduce(graph: &Path, k: Option<usize>, output: &Path) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let k = k.unwrap_or(g.order());
    let inst = reduce::vc_to_ws(&g, k)?;
    std::fs::create_dir_all(output)
        .map_err(|e| InputError(format!("creating {}: {e}", output.display())))?;
    let edges_path = output.join("gprime.edges");
    let map_path = output.join("gadgets.json");
    write_file(&edges_path, &inst.expanded.to_edge_list())?;
    let map = json!({ "edges": inst.gadgets });
    write_file(&map_path, &serde_json::to_string_pretty(&map).expect("gadget map serializes"))?;
    Ok(Outcome {
        input: json!({ "graph": graph_digest(graph, &g), "k": k }),
        result: json!({
            "k": k,
            "k_prime": inst.budget_k_prime,
            "expanded_n": inst.expanded.order(),
            "expanded_m": inst.expanded.num_edges(),
            "files": {
                "edges": edges_path.display().to_string(),
                "gadget_map": map_path.display().to_string(),
            },
        }),
        exit: 0,
        summary: format!(
            "expanded to n={} m={} with k'={}",
            inst.expanded.order(),
            inst.expanded.num_edges(),
            inst.budget_k_prime
        ),
    })
}

fn equivalence(graph: &Path, budget: SolverBudget) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let input = graph_digest(graph, &g);
    match reduce::equivalence_check(&g, &budget) {
        Ok(rep) => Ok(Outcome {
            result: json!({
                "vertex_cover": rep.vertex_cover,
                "edge_count": rep.edge_count,
                "watching_number": rep.watching_number,
                "holds": rep.holds,
                "cover_certificate": rep.cover_certificate.to_vec(),
                "system_certificate": system_value(&rep.system_certificate),
            }),
            exit: i32::from(!rep.holds),
            summary: format!(
                "vc = {}, m = {}, w(G') = {}: {}",
                rep.vertex_cover,
                rep.edge_count,
                rep.watching_number,
                if rep.holds { "equivalence holds" } else { "EQUIVALENCE VIOLATED" }
            ),
            input,
        }),
        Err(reduce::ReduceError::Inconclusive(e)) => Ok(Outcome {
            input,
            result: json!({ "status": "inconclusive", "reason": e.to_string() }),
            exit: 1,
            summary: format!("inconclusive: {e}"),
        }),
        Err(e) => Err(e.into()),
    }
}

fn compare(graph: &Path, budget: SolverBudget) -> Result<Outcome, InputError> {
    let g = load_graph(graph)?;
    let input = graph_digest(graph, &g);
    let n = g.order();
    let log_lower = if n == 0 { 0 } else { solver::ceil_log2(n + 1) };
    let gamma = match solver::domination_number(&g, &budget) {
        Ok(r) => Some(r.optimum),
        Err(SolveError::BudgetExhausted { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let w = match solver::watching_number(&g, 1, 1, &budget) {
        Ok(r) => Some(r.optimum),
        Err(SolveError::BudgetExhausted { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let identifying = match solver::identifying_number(&g, &budget) {
        Ok(r) => Some(json!(r.optimum)),
        Err(SolveError::NotIdentifiable { .. }) => Some(json!("not_identifiable")),
        Err(SolveError::BudgetExhausted { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let complete = gamma.is_some() && w.is_some() && identifying.is_some();
    let i_num = identifying.as_ref().and_then(Value::as_u64).map(|x| x as usize);
    let tight = match (gamma, w) {
        (Some(gamma), Some(w)) => json!({
            "log_lower_eq_w": log_lower == w,
            "gamma_eq_w": gamma == w,
            "w_eq_gamma_log": w == gamma * solver::ceil_log2(g.max_degree() + 2),
            "w_eq_identifying": i_num.map(|i| i == w),
        }),
        _ => Value::Null,
    };
    let summary = format!(
        "gamma = {gamma:?}, w = {w:?}, i = {}",
        i_num.map_or_else(|| "-".into(), |i| i.to_string())
    );
    Ok(Outcome {
        input,
        result: json!({
            "log_lower": log_lower,
            "gamma": gamma,
            "w": w,
            "identifying": identifying,
            "tight": tight,
        }),
        exit: i32::from(!complete),
        summary,
    })
}
