//! `pwalk`: build permissible walk graphs from attributed hypergraphs and
//! run reports on them.
//!
//! Four subcommands form a file-based pipeline:
//!
//! * `build` — ingest a post table, arc list, or hypergraph document into
//!   validated hypergraph JSON.
//! * `permissible` — construct the permissible walk graph for an s value
//!   and predicate specs; writes JSON and Graphviz DOT.
//! * `analyze` — interaction matrices, components, downstream reachability,
//!   or activity traces from a walk-graph JSON.
//! * `synth` — seeded synthetic migration post table for experiments.
//!
//! Outputs are files; standard output carries a one-line summary per
//! command. Exit codes: 0 success, 1 input error, 2 configuration error.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use permissible_walks::analysis::{
    class_labels, components_to_json, downstream_neighbors, downstream_reachable,
    interaction_matrix, remove_isolated, support_hull, trace_evenly, trace_to_csv,
    weakly_connected_components,
};
use permissible_walks::attributes::{marginalize_edges, Marginalizer};
use permissible_walks::dot::graph_to_dot;
use permissible_walks::ingest::{hypergraph_from_posts, load_posts, synth_migration, write_posts};
use permissible_walks::json::{
    graph_from_json, graph_to_json, hypergraph_from_json, hypergraph_to_json,
};
use permissible_walks::linegraph::{attributed_s_line_graph, intersect, permissible_walk_graph};
use permissible_walks::multidigraph::load_arcs;
use permissible_walks::{
    parse_node_predicate, AttributeKind, Error as CoreError, Hypergraph, NodePredicate,
    TimeInterval, Value, WalkGraph,
};

#[derive(Parser)]
#[command(
    name = "pwalk",
    version,
    about = "Permissible walk graphs on attributed hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ingest data into validated hypergraph JSON
    Build(BuildArgs),
    /// Construct a permissible walk graph from hypergraph JSON
    Permissible(PermissibleArgs),
    /// Report on a permissible walk graph JSON
    Analyze(AnalyzeArgs),
    /// Generate a seeded synthetic migration post table
    Synth(SynthArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Input file
    input: PathBuf,
    /// Input format; inferred for `.json`, required for CSV inputs
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Drop hyperedges with fewer members before writing
    #[arg(long)]
    min_edge_size: Option<usize>,
    /// Output path (default: input with extension `hypergraph.json`)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// `user_id,thread_id,class,timestamp` post table
    PostsCsv,
    /// Hypergraph document produced by `build`
    HypergraphJson,
    /// `source,target,timestamp` arc list
    ArcsCsv,
}

#[derive(Args)]
struct PermissibleArgs {
    /// Hypergraph JSON
    input: PathBuf,
    /// Minimum shared-vertex count for the underlying line graph
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Predicate spec, repeatable; multiple specs are intersected.
    /// Forms: `attr:pred`, `and(attr1:pred1,attr2:pred2)`, or a bare
    /// predicate combined with `--attr`
    #[arg(long = "predicate")]
    predicates: Vec<String>,
    /// Default attribute for bare predicate specs
    #[arg(long)]
    attr: Option<String>,
    /// Drop hyperedges with fewer members before construction
    #[arg(long)]
    min_edge_size: Option<usize>,
    /// Carry this class attribute onto the graph nodes for later analysis
    #[arg(long)]
    class_attr: Option<String>,
    /// Remove nodes without any arc, reporting the count
    #[arg(long)]
    drop_isolated: bool,
    /// Output base path; writes `<base>.json` and `<base>.dot`
    /// (default: input with extension `permissible`)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Permissible walk graph JSON
    input: PathBuf,
    /// Report to produce
    mode: Mode,
    /// Node attribute holding the class label (interaction mode)
    #[arg(long, default_value = "class")]
    class_attr: String,
    /// Start node (downstream mode)
    #[arg(long)]
    node: Option<String>,
    /// Node attribute holding the interval (trace mode)
    #[arg(long, default_value = "time")]
    attr: String,
    /// Number of evenly spaced trace samples
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// Repeat interaction + components per s in `a..b`, thresholding arcs
    /// by their recorded overlap
    #[arg(long)]
    s_sweep: Option<String>,
    /// Output base path (default: input without its extension)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Class-by-class arc counts as CSV
    Interaction,
    /// Weakly connected components as JSON
    Components,
    /// Neighbors and reachable set of `--node` as JSON
    Downstream,
    /// Activity trace over node intervals as CSV
    Trace,
}

#[derive(Args)]
struct SynthArgs {
    /// Number of users
    #[arg(long, default_value_t = 200)]
    users: usize,
    /// Class label of threads active before the migration time
    #[arg(long, default_value = "A")]
    class_a: String,
    /// Class label of threads active from the migration time on
    #[arg(long, default_value = "B")]
    class_b: String,
    /// Time at which activity switches classes
    #[arg(long, default_value_t = 500.0)]
    migration_time: f64,
    /// RNG seed; identical seeds reproduce identical tables
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path
    #[arg(long, default_value = "synth.posts.csv")]
    out: PathBuf,
}

/// Failures split by exit code: bad data reads as an input error (1), a
/// request the tool cannot act on as a configuration error (2).
enum CliError {
    Input(String),
    Config(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Config(msg) => f.write_str(msg),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BadPredicateSpec { .. } => CliError::Config(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Input(_) => ExitCode::from(1),
                CliError::Config(_) => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Permissible(args) => cmd_permissible(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Synth(args) => cmd_synth(args),
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let format = match args.format {
        Some(f) => f,
        None => match args.input.extension().and_then(|e| e.to_str()) {
            Some("json") => InputFormat::HypergraphJson,
            _ => {
                return Err(CliError::Config(format!(
                    "cannot infer the format of {}; pass --format posts-csv, arcs-csv, or hypergraph-json",
                    args.input.display()
                )))
            }
        },
    };

    let text = read_text(&args.input)?;
    let mut h: Hypergraph = match format {
        InputFormat::PostsCsv => hypergraph_from_posts(&load_posts(text.as_bytes())?)?,
        InputFormat::HypergraphJson => hypergraph_from_json(&text)?,
        InputFormat::ArcsCsv => load_arcs::<f64, _>(text.as_bytes())?.to_hypergraph()?,
    };
    if let Some(k) = args.min_edge_size {
        h = h.filter_edges_by_size(k)?;
    }

    let out = args
        .out
        .unwrap_or_else(|| args.input.with_extension("hypergraph.json"));
    write_text(&out, &hypergraph_to_json(&h))?;
    println!(
        "hypergraph: {} vertices, {} edges, {} incidences -> {}",
        h.vertex_count(),
        h.edge_count(),
        h.incidence_count(),
        out.display()
    );
    Ok(())
}

/// Rolls incidence attributes up onto edges when a needed edge attribute is
/// absent: set union for set values, convex hull for intervals and
/// timestamps. Anything else is left for construction to report.
fn roll_up_missing(mut h: Hypergraph, attrs: &BTreeSet<String>) -> Result<Hypergraph> {
    for attr in attrs {
        if h.edge_ids().all(|e| h.edge_attrs(e).contains_key(attr)) {
            continue;
        }
        let kind = h.incidences().find_map(|(v, e)| {
            h.incidence_attrs(v, e)
                .and_then(|m| m.get(attr))
                .map(Value::kind)
        });
        let (m, how) = match kind {
            Some(AttributeKind::Set) => (Marginalizer::SetUnion, "set union"),
            Some(AttributeKind::Interval) | Some(AttributeKind::Timestamp) => {
                (Marginalizer::IntervalHull, "interval hull")
            }
            _ => continue,
        };
        let values = marginalize_edges(&h, attr, m)?;
        h = h.with_edge_attrs(attr, &values);
        println!("note: edge attribute '{attr}' rolled up from incidences ({how})");
    }
    Ok(h)
}

fn cmd_permissible(args: PermissibleArgs) -> Result<()> {
    let mut h: Hypergraph = hypergraph_from_json(&read_text(&args.input)?)?;
    if let Some(k) = args.min_edge_size {
        h = h.filter_edges_by_size(k)?;
    }

    let predicates: Vec<NodePredicate> = if args.predicates.is_empty() {
        vec![NodePredicate::always()]
    } else {
        args.predicates
            .iter()
            .map(|spec| parse_node_predicate(spec, args.attr.as_deref()))
            .collect::<std::result::Result<_, _>>()?
    };

    let mut needed: BTreeSet<String> = predicates
        .iter()
        .flat_map(|p| p.referenced_attrs().map(String::from))
        .collect();
    if let Some(attr) = &args.attr {
        needed.insert(attr.clone());
    }
    if let Some(attr) = &args.class_attr {
        needed.insert(attr.clone());
    }
    let h = roll_up_missing(h, &needed)?;

    if args.s == 0 {
        eprintln!("warning: s = 0 joins every pair of hyperedges; the line graph is complete");
    }
    let lg = attributed_s_line_graph(&h, args.s, needed.iter())?;

    let mut graphs = predicates
        .iter()
        .map(|pred| permissible_walk_graph(&lg, pred));
    let mut p: WalkGraph = graphs.next().expect("at least one predicate")?;
    for next in graphs {
        p = intersect(&p, &next?)?;
    }

    if args.drop_isolated {
        let (kept, removed) = remove_isolated(&p);
        p = kept;
        println!("removed {removed} isolated nodes");
    }

    let base = args
        .out
        .unwrap_or_else(|| args.input.with_extension("permissible"));
    let json_path = with_suffix(&base, ".json");
    let dot_path = with_suffix(&base, ".dot");
    write_text(&json_path, &graph_to_json(&p))?;
    write_text(&dot_path, &graph_to_dot(&p))?;
    println!(
        "permissible walk graph: {} nodes, {} arcs (s = {}) -> {}, {}",
        p.node_count(),
        p.arc_count(),
        args.s,
        json_path.display(),
        dot_path.display()
    );
    Ok(())
}

fn parse_sweep(spec: &str) -> Result<(usize, usize)> {
    let parse = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Config(format!("--s-sweep expects 'a..b', got '{spec}'")))
    };
    let (a, b) = spec
        .split_once("..")
        .ok_or_else(|| CliError::Config(format!("--s-sweep expects 'a..b', got '{spec}'")))?;
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(CliError::Config(format!(
            "--s-sweep range '{spec}' is empty"
        )));
    }
    Ok((a, b))
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut name = base.as_os_str().to_os_string();
    name.push(suffix);
    PathBuf::from(name)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<()> {
    let p: WalkGraph = graph_from_json(&read_text(&args.input)?)?;
    let base = args
        .out
        .clone()
        .unwrap_or_else(|| args.input.with_extension(""));

    if let Some(spec) = &args.s_sweep {
        if !matches!(args.mode, Mode::Interaction | Mode::Components) {
            return Err(CliError::Config(
                "--s-sweep applies to the interaction and components modes".to_string(),
            ));
        }
        let (lo, hi) = parse_sweep(spec)?;
        for s in lo..=hi {
            let ps = p.with_min_overlap(s)?;
            let labels = class_labels(&ps, &args.class_attr)?;
            let m = interaction_matrix(&ps, &labels)?;
            write_text(
                &with_suffix(&base, &format!(".s{s}.interaction.csv")),
                &m.to_csv(),
            )?;
            let components = weakly_connected_components(&ps);
            write_text(
                &with_suffix(&base, &format!(".s{s}.components.json")),
                &components_to_json(&components),
            )?;
        }
        println!(
            "s-sweep {lo}..{hi}: interaction + components per s -> {}.s<k>.*",
            base.display()
        );
        return Ok(());
    }

    match args.mode {
        Mode::Interaction => {
            let labels = class_labels(&p, &args.class_attr)?;
            let m = interaction_matrix(&p, &labels)?;
            let out = with_suffix(&base, ".interaction.csv");
            write_text(&out, &m.to_csv())?;
            println!(
                "interaction matrix: {} classes, {} arcs counted -> {}",
                m.classes().len(),
                m.total(),
                out.display()
            );
        }
        Mode::Components => {
            let components = weakly_connected_components(&p);
            let out = with_suffix(&base, ".components.json");
            write_text(&out, &components_to_json(&components))?;
            let largest = components.first().map_or(0, |c| c.size);
            println!(
                "components: {} (largest {largest}) -> {}",
                components.len(),
                out.display()
            );
        }
        Mode::Downstream => {
            let name = args.node.as_deref().ok_or_else(|| {
                CliError::Config("--node is required for downstream mode".to_string())
            })?;
            let id = p
                .node_by_name(name)
                .ok_or_else(|| CliError::Input(format!("unknown node '{name}'")))?;
            let to_names = |ids: BTreeSet<_>| -> Vec<String> {
                ids.into_iter()
                    .map(|e| p.node(e).unwrap().name.clone())
                    .collect()
            };
            let neighbors = to_names(downstream_neighbors(&p, id)?);
            let reachable = to_names(downstream_reachable(&p, id)?);
            let (n_direct, n_reachable) = (neighbors.len(), reachable.len());
            let report = serde_json::json!({
                "node": name,
                "neighbors": neighbors,
                "reachable": reachable,
            });
            let out = with_suffix(&base, ".downstream.json");
            write_text(
                &out,
                &serde_json::to_string_pretty(&report).expect("report serializes"),
            )?;
            println!(
                "downstream of {name}: {n_direct} direct, {n_reachable} reachable -> {}",
                out.display()
            );
        }
        Mode::Trace => {
            let mut intervals = Vec::new();
            for id in p.node_ids() {
                let node = p.node(id).expect("iterating own nodes");
                let value = node.attrs.get(&args.attr).ok_or_else(|| {
                    CliError::Input(format!(
                        "node '{}' lacks attribute '{}'",
                        node.name, args.attr
                    ))
                })?;
                match value {
                    Value::Interval(iv) => intervals.push(*iv),
                    Value::Timestamp(t) => intervals.push(TimeInterval::point(*t)?),
                    other => {
                        return Err(CliError::Input(format!(
                            "attribute '{}' on node '{}' has kind {}, need interval or timestamp",
                            args.attr,
                            node.name,
                            other.kind()
                        )))
                    }
                }
            }
            let rows = trace_evenly(&intervals, args.samples)?;
            let out = with_suffix(&base, ".trace.csv");
            write_text(&out, &trace_to_csv(&rows))?;
            let hull = support_hull(&intervals)?;
            println!(
                "trace: {} samples over {hull} -> {}",
                rows.len(),
                out.display()
            );
        }
    }
    Ok(())
}

fn cmd_synth(args: SynthArgs) -> Result<()> {
    if args.users < 2 {
        return Err(CliError::Config("--users must be at least 2".to_string()));
    }
    if args.class_a == args.class_b {
        return Err(CliError::Config(
            "--class-a and --class-b must differ".to_string(),
        ));
    }
    if !args.migration_time.is_finite() {
        return Err(CliError::Config(
            "--migration-time must be finite".to_string(),
        ));
    }

    let pa = synth_migration(
        args.users,
        &args.class_a,
        &args.class_b,
        args.migration_time,
        args.seed,
    );
    let file = fs::File::create(&args.out)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", args.out.display())))?;
    write_posts(&pa, file)?;

    let posts: usize = pa.cells().map(|(_, times)| times.len()).sum();
    println!(
        "posts: {} users, {} threads, {posts} posts -> {}",
        pa.n_users(),
        pa.n_threads(),
        args.out.display()
    );
    Ok(())
}
