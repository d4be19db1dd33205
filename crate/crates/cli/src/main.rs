use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mixgraph::convexity::convex_hull;
use mixgraph::decision::{complete_chi_s, decide_chi_s_two, is_clique, is_simple_clique, TwoColourOutcome};
use mixgraph::experiment::{run_experiment, ExperimentConfig, ExperimentReport};
use mixgraph::families;
use mixgraph::format::{parse_file, serialize, to_dot};
use mixgraph::search::{self, SearchConfig};
use mixgraph::twotree::{self, TwoTreeKind};
use mixgraph::{AdjacencyKind, Execution, MixedGraph, Partition, VertexMap};

#[derive(Debug, Parser)]
#[command(name = "mixgraph", version, about = "Simple colourings of (m,n)-mixed graphs")]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a yes/no answer is no.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Validate { file: PathBuf },
    /// Print the underlying (0,1)-graph.
    Underlying { file: PathBuf },
    /// Convex hull of a vertex set, stage by stage.
    Hull {
        file: PathBuf,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Decide whether the simple chromatic number is 2.
    #[command(name = "chi-s-2")]
    ChiS2 { file: PathBuf },
    /// Is every nonadjacent pair separated by a vertex between them?
    Clique { file: PathBuf },
    /// Does every pair of vertices have the whole graph as its hull?
    SimpleClique { file: PathBuf },
    /// Simple chromatic number. Complete graphs use the polynomial procedure
    /// unless --brute is given.
    ChiS {
        file: PathBuf,
        #[arg(long, conflicts_with = "complete")]
        brute: bool,
        #[arg(long)]
        complete: bool,
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Chromatic number by exhaustive search.
    Chi {
        file: PathBuf,
        #[arg(long, required = true)]
        brute: bool,
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Search for a homomorphism from G to H.
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Search for a simple homomorphism.
        #[arg(long)]
        simple: bool,
        /// Require every vertex of H to be hit (implies --simple).
        #[arg(long)]
        surjective: bool,
    },
    /// Print a generated graph.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Emit Graphviz instead of the graph format.
        #[arg(long)]
        dot: bool,
    },
    /// Colour a 2-tree into the directed 3-cycle or the red-C5 K5.
    #[command(name = "colour-2tree")]
    Colour2Tree { file: PathBuf },
    /// Print a derived 2-tree extension table.
    Table { kind: TreeKind },
    /// Sample random graphs and count simple cliques.
    Experiment {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run samples on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Oriented Cayley clique on Z_n, n odd and at least 5
    CayleyOriented { n: usize },
    /// 2-edge-coloured Cayley clique on Z_n, n at least 5
    #[command(name = "cayley-2ec")]
    Cayley2ec { n: usize },
    /// 2-edge-coloured graph H_n on 2n vertices
    Hn { n: usize },
    /// Oriented graph G_n on 2n vertices
    Gn { n: usize },
    /// Transitive tournament on k vertices
    Transitive { k: usize },
    /// Directed k-cycle
    Cycle { k: usize },
    /// Random (m,n)-graph on v vertices, each pair adjacent with probability p
    Random { m: u32, n: u32, v: usize, p: f64, #[arg(default_value_t = 0)] seed: u64 },
    /// Random 2-tree on v vertices
    TwoTree { v: usize, kind: TreeKind, #[arg(default_value_t = 0)] seed: u64 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TreeKind {
    Oriented,
    #[value(name = "2ec")]
    TwoEdgeColoured,
}

impl From<TreeKind> for TwoTreeKind {
    fn from(k: TreeKind) -> Self {
        match k {
            TreeKind::Oriented => TwoTreeKind::Oriented,
            TreeKind::TwoEdgeColoured => TwoTreeKind::TwoEdgeColoured,
        }
    }
}

/// What a command prints, and whether its answer was positive.
struct Report {
    text: String,
    json: Value,
    positive: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, positive: true }
    }

    fn answer(mut self, positive: bool) -> Self {
        self.positive = positive;
        self
    }
}

fn load(path: &Path) -> Result<MixedGraph> {
    Ok(parse_file(path)?)
}

fn blocks_json(p: &Partition) -> Value {
    json!(p.blocks())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn outcome_name(o: TwoColourOutcome) -> String {
    match o {
        TwoColourOutcome::SingleVertex => "single-vertex".into(),
        TwoColourOutcome::TwoVertices => "two-vertices".into(),
        TwoColourOutcome::Disconnected => "disconnected".into(),
        TwoColourOutcome::EdgeCut { colour } => format!("edge-cut {colour}"),
        TwoColourOutcome::ArcCut { colour } => format!("arc-cut {colour}"),
        TwoColourOutcome::NoCut => "no-cut".into(),
    }
}

fn map_report(command: &str, map: &VertexMap, extra: &str) -> Report {
    let p = Partition::from_map(map);
    Report::new(
        format!("{extra}map: {:?}\npartition: {p}", map.image()),
        json!({"command": command, "answer": true, "map": map.image(), "k": map.image_size(), "partition": blocks_json(&p)}),
    )
}

fn run(cli: &Cli) -> Result<Report> {
    Ok(match &cli.command {
        Command::Validate { file } => {
            let g = load(file)?;
            Report::new(
                format!(
                    "valid ({},{})-mixed graph: {} vertices, {} adjacencies",
                    g.arc_colours(),
                    g.edge_colours(),
                    g.order(),
                    g.adjacency_count()
                ),
                json!({"command": "validate", "answer": true, "m": g.arc_colours(), "n": g.edge_colours(),
                       "order": g.order(), "adjacencies": g.adjacency_count(), "complete": g.is_complete()}),
            )
        }
        Command::Underlying { file } => {
            let u = load(file)?.underlying();
            let text = serialize(&u);
            Report::new(text.trim_end(), json!({"command": "underlying", "graph": text}))
        }
        Command::Hull { file, set } => {
            let g = load(file)?;
            let trace = convex_hull(&g, set)?;
            let mut text = String::new();
            for (i, stage) in trace.stages().iter().enumerate() {
                text.push_str(&format!("stage {i}: {stage:?}\n"));
                if let Some(added) = trace.additions().get(i) {
                    for step in added {
                        text.push_str(&format!("  + {} between {} and {}\n", step.vertex, step.witness.0, step.witness.1));
                    }
                }
            }
            text.push_str(&format!("hull: {:?}", trace.final_set()));
            let additions: Vec<Vec<Value>> = trace
                .additions()
                .iter()
                .map(|a| a.iter().map(|s| json!({"vertex": s.vertex, "witness": [s.witness.0, s.witness.1]})).collect())
                .collect();
            Report::new(
                text,
                json!({"command": "hull", "hull": trace.final_set(), "stages": trace.stages(), "additions": additions,
                       "full": trace.len() == g.order()}),
            )
        }
        Command::ChiS2 { file } => {
            let g = load(file)?;
            let c = decide_chi_s_two(&g);
            let mut text = format!("chi_s = 2: {}\noutcome: {}", yes_no(c.answer), outcome_name(c.outcome));
            if let Some(p) = &c.partition {
                text.push_str(&format!("\npartition: {p}"));
            }
            Report::new(
                text,
                json!({"command": "chi-s-2", "answer": c.answer, "outcome": outcome_name(c.outcome),
                       "partition": c.partition.as_ref().map(blocks_json),
                       "edge_colour_connected": c.edge_colour_connected,
                       "arc_colour_strongly_connected": c.arc_colour_strongly_connected}),
            )
            .answer(c.answer)
        }
        Command::Clique { file } => {
            let answer = is_clique(&load(file)?);
            Report::new(format!("clique: {}", yes_no(answer)), json!({"command": "clique", "answer": answer}))
                .answer(answer)
        }
        Command::SimpleClique { file } => {
            let g = load(file)?;
            let witness = mixgraph::decision::non_full_hull_pair(&g);
            let answer = witness.is_none();
            debug_assert_eq!(answer, is_simple_clique(&g));
            let mut text = format!("simple clique: {}", yes_no(answer));
            if let Some((u, v)) = witness {
                text.push_str(&format!("\nhull of {{{u}, {v}}} is not the whole graph"));
            }
            Report::new(text, json!({"command": "simple-clique", "answer": answer, "pair": witness.map(|(u, v)| [u, v])}))
                .answer(answer)
        }
        Command::ChiS { file, brute, complete, budget } => {
            let g = load(file)?;
            if *complete || (!*brute && g.is_complete()) {
                let r = complete_chi_s(&g)?;
                let p = Partition::from_map(&r.colouring);
                Report::new(
                    format!("chi_s = {} (complete)\npartition: {p}", r.k),
                    json!({"command": "chi-s", "method": "complete", "k": r.k, "partition": blocks_json(&p),
                           "map": r.colouring.image(), "reductions": r.reductions.len()}),
                )
            } else {
                let config = SearchConfig { budget: *budget, ..SearchConfig::default() };
                let r = search::brute_chi_s_with(&g, &config)?;
                Report::new(
                    format!("chi_s = {} (brute)\npartition: {}", r.k, r.witness),
                    json!({"command": "chi-s", "method": "brute", "k": r.k, "partition": blocks_json(&r.witness),
                           "map": r.witness.labels()}),
                )
            }
        }
        Command::Chi { file, brute: _, budget } => {
            let g = load(file)?;
            let config = SearchConfig { budget: *budget, ..SearchConfig::default() };
            let r = search::brute_chi_with(&g, &config)?;
            Report::new(
                format!("chi = {} (brute)\npartition: {}", r.k, r.witness),
                json!({"command": "chi", "method": "brute", "k": r.k, "partition": blocks_json(&r.witness),
                       "map": r.witness.labels()}),
            )
        }
        Command::Hom { g, h, simple, surjective } => {
            let (g, h) = (load(g)?, load(h)?);
            let found = if *surjective {
                search::find_surjective_simple_homomorphism(&g, &h)
            } else if *simple {
                search::find_simple_homomorphism(&g, &h)
            } else {
                search::find_homomorphism(&g, &h)
            };
            let text = match &found {
                Some(map) => format!("homomorphism: yes\nmap: {:?}", map.image()),
                None => "homomorphism: no".into(),
            };
            Report::new(text, json!({"command": "hom", "answer": found.is_some(), "map": found.as_ref().map(|m| m.image())}))
                .answer(found.is_some())
        }
        Command::Gen { family, dot } => {
            let g = match *family {
                Family::CayleyOriented { n } => families::cayley_oriented_clique(n)?,
                Family::Cayley2ec { n } => families::cayley_2ec_clique(n)?,
                Family::Hn { n } => families::h_n(n)?,
                Family::Gn { n } => families::g_n(n)?,
                Family::Transitive { k } => families::transitive_tournament(k)?,
                Family::Cycle { k } => families::directed_cycle(k)?,
                Family::Random { m, n, v, p, seed } => families::random_mixed(m, n, v, p, seed)?,
                Family::TwoTree { v, kind, seed } => twotree::random_2tree(v, kind.into(), seed)?,
            };
            let text = if *dot { to_dot(&g) } else { serialize(&g) };
            Report::new(text.trim_end(), json!({"command": "gen", "graph": text}))
        }
        Command::Colour2Tree { file } => {
            let g = load(file)?;
            let arcs = g.adjacencies().iter().any(|a| a.kind == AdjacencyKind::Arc);
            let (map, target) = if arcs {
                (twotree::colour_oriented_2tree(&g)?, twotree::oriented_target())
            } else {
                (twotree::colour_2ec_2tree(&g)?, twotree::red_cycle_target())
            };
            if !search::is_simple_homomorphism(&g, &target, &map) {
                bail!("internal error: 2-tree colouring failed validation");
            }
            let name = if arcs { "directed 3-cycle" } else { "K5 with red C5" };
            map_report("colour-2tree", &map, &format!("target: {name}\n"))
        }
        Command::Table { kind } => {
            let table = match kind {
                TreeKind::Oriented => twotree::oriented_table(),
                TreeKind::TwoEdgeColoured => twotree::two_edge_coloured_table(),
            };
            let rows: Vec<Value> = table
                .rows()
                .iter()
                .map(|r| json!({"to_first": r.to_first.to_string(), "to_second": r.to_second.to_string(),
                                "second_image": r.second_image, "image": r.image}))
                .collect();
            Report::new(table.to_string().trim_end(), json!({"command": "table", "rows": rows}))
        }
        Command::Experiment { m, n, v, p, samples, seed, sequential } => {
            let config = ExperimentConfig { m: *m, n: *n, order: *v, p: *p, samples: *samples, seed: *seed };
            let exec = if *sequential { Execution::Sequential } else { Execution::Parallel };
            let r = run_experiment(&config, exec).context("experiment")?;
            Report::new(
                format!("{}\n{}", ExperimentReport::CSV_HEADER, r.csv_row()),
                json!({"command": "experiment", "m": m, "n": n, "v": v, "p": p, "samples": samples, "seed": seed,
                       "simple_cliques": r.simple_cliques, "cliques": r.cliques, "chi_s_two": r.chi_s_two,
                       "simple_clique_fraction": r.simple_clique_fraction()}),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                println!("{}", report.text);
            }
            if cli.strict && !report.positive {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
