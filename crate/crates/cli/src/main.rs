use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gparking::classical::{cm, critical_maxima, tutte_complete};
use gparking::parking::{enumerate_parking_par, membership_tests, parse_int_list};
use gparking::{
    algorithm_a, bw_multiset, enumerate_parking, theta, tutte, weight, ColoredSpanningTree, Error,
    Multigraph, ParkingAnalysis, ParkingFunction, VertexRanking,
};

#[derive(Parser, Debug)]
#[command(name = "gparking", version, about = "G-parking functions and Tutte polynomials of multigraphs")]
struct Cli {
    /// Graph file: {"vertices": n+1, "edges": [[u,v], ...]}
    #[arg(short, long, global = true)]
    graph: Option<PathBuf>,

    /// Vertex ranking as tau(1),...,tau(n); defaults to the identity
    #[arg(short, long, global = true)]
    ranking: Option<String>,

    #[arg(short, long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Use several threads (count from GPARKING_THREADS)
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate, test, or decode G-parking functions
    Parking {
        #[command(subcommand)]
        action: ParkingAction,
    },
    /// Colored spanning trees
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
    /// Order, critical vertices, bridge vertices and weight of f
    Bridges {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Tutte polynomial of the graph
    Tutte {
        #[arg(short, long, default_value = "parking")]
        method: String,
    },
    /// The (b(f), w(f)) multiset, sorted
    Bw,
    /// Classical parking functions
    Classical {
        #[command(subcommand)]
        action: ClassicalAction,
    },
}

#[derive(Subcommand, Debug)]
enum ParkingAction {
    Enumerate,
    Check {
        /// Values f(0),...,f(n), comma separated, starting with -1
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(short, long, default_value = "burning")]
        test: String,
    },
    /// Theta: the parking function of a colored spanning tree
    FromTree {
        /// `v,parent,color;...` or a JSON array of triples
        tree: String,
    },
}

#[derive(Subcommand, Debug)]
enum TreeAction {
    /// Phi: the colored spanning tree of a parking function
    FromParking {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
}

#[derive(Subcommand, Debug)]
enum ClassicalAction {
    /// Critical maxima of a classical parking function
    Cm { alpha: String },
    /// Tutte polynomial of K_{n+1} from classical parking functions
    Tutte { n: usize },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.parallel);
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads(parallel: bool) {
    let threads = if parallel {
        std::env::var("GPARKING_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    } else {
        1
    };
    // ignore the error if a pool already exists
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn load_graph(cli: &Cli) -> Result<Multigraph, Failure> {
    let path = cli
        .graph
        .as_ref()
        .ok_or_else(|| Failure::Usage("this command needs --graph <FILE>".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Multigraph::from_json(&text)?)
}

fn load_ranking(cli: &Cli, g: &Multigraph) -> Result<VertexRanking, Failure> {
    let Some(text) = &cli.ranking else {
        return Ok(VertexRanking::identity(g.n()));
    };
    let ranks: Vec<usize> = parse_int_list(text)?
        .into_iter()
        .map(|r| usize::try_from(r).map_err(|_| Error::InvalidRanking(g.n())))
        .collect::<Result<_, _>>()?;
    let tau = VertexRanking::from_ranks(&ranks)?;
    tau.check_for(g)?;
    Ok(tau)
}

fn parse_labeling(text: &str) -> Result<Vec<i64>, Failure> {
    Ok(parse_int_list(text)?)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Parking { action } => {
            let g = load_graph(cli)?;
            match action {
                ParkingAction::Enumerate => {
                    let all = if cli.parallel {
                        enumerate_parking_par(&g)?
                    } else {
                        enumerate_parking(&g)?
                    };
                    Ok(if json {
                        serde_json::to_string(&all).expect("values serialize")
                    } else {
                        join(&all, "\n")
                    })
                }
                ParkingAction::Check { f, test } => {
                    let values = parse_labeling(f)?;
                    let tests = membership_tests();
                    let ok = tests.get(test)?.is_parking(&g, &values)?;
                    if json {
                        let out = json!({ "parking": ok }).to_string();
                        return if ok { Ok(out) } else { Err(Failure::Domain(out)) };
                    }
                    if ok {
                        Ok("G-parking function".into())
                    } else {
                        Err(Failure::Domain(Error::NotParking.to_string()))
                    }
                }
                ParkingAction::FromTree { tree } => {
                    let tau = load_ranking(cli, &g)?;
                    let t = ColoredSpanningTree::parse(&g, tree)?;
                    let f = theta(&g, &tau, &t)?;
                    Ok(if json {
                        serde_json::to_string(&f).expect("values serialize")
                    } else {
                        f.to_string()
                    })
                }
            }
        }
        Command::Tree {
            action: TreeAction::FromParking { f },
        } => {
            let g = load_graph(cli)?;
            let tau = load_ranking(cli, &g)?;
            let values = parse_labeling(f)?;
            let (t, order) = algorithm_a(&g, &tau, &values)?;
            Ok(if json {
                json!({
                    "tree": serde_json::from_str::<serde_json::Value>(&t.to_json()).expect("valid json"),
                    "order": order.with_root(),
                })
                .to_string()
            } else {
                format!("tree: {t}\norder: {order}")
            })
        }
        Command::Bridges { f } => {
            let g = load_graph(cli)?;
            let tau = load_ranking(cli, &g)?;
            let f = ParkingFunction::new(&g, parse_labeling(f)?)?;
            let analysis = ParkingAnalysis::new(&g, &tau)?;
            let k = analysis.index_of(&f)?;
            let critical = analysis.critical_vertices(k);
            let stats = analysis.bridge_stats(k);
            let w = weight(&g, &f);
            let order = analysis.order(k);
            Ok(if json {
                json!({
                    "order": order.with_root(),
                    "rea": analysis.rearranged(k),
                    "critical": critical,
                    "bridges": stats.bridge_vertices,
                    "b": stats.b,
                    "w": w,
                })
                .to_string()
            } else {
                format!(
                    "order: {order}\nrea: {}\ncritical: {}\nbridges: {}\nb: {}\nw: {w}",
                    join(analysis.rearranged(k), ","),
                    join(&critical, ","),
                    join(&stats.bridge_vertices, ","),
                    stats.b
                )
            })
        }
        Command::Tutte { method } => {
            let methods = tutte::methods();
            let strategy = methods.get(method)?;
            let g = load_graph(cli)?;
            let tau = load_ranking(cli, &g)?;
            let p = strategy.tutte(&g, &tau)?;
            Ok(if json { p.to_json() } else { p.to_string() })
        }
        Command::Bw => {
            let g = load_graph(cli)?;
            let tau = load_ranking(cli, &g)?;
            let pairs = bw_multiset(&g, &tau)?;
            Ok(if json {
                serde_json::to_string(&pairs).expect("pairs serialize")
            } else {
                pairs
                    .iter()
                    .map(|(b, w)| format!("{b} {w}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
        Command::Classical { action } => match action {
            ClassicalAction::Cm { alpha } => {
                let alpha = parse_labeling(alpha)?;
                let maxima = critical_maxima(&alpha)?;
                let count = cm(&alpha)?;
                Ok(if json {
                    json!({ "critical_maxima": maxima, "cm": count }).to_string()
                } else {
                    format!("critical maxima: {}\ncm: {count}", join(&maxima, ","))
                })
            }
            ClassicalAction::Tutte { n } => {
                if *n == 0 {
                    return Err(Failure::Usage("n must be at least 1".into()));
                }
                let p = tutte_complete(*n);
                Ok(if json { p.to_json() } else { p.to_string() })
            }
        },
    }
}
