//! Command-line surface: generate, label, verify, factor, oracle, demo.
//!
//! stdout carries machine-readable output only; diagnostics go to stderr.
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use antimagic::construct::label_antimagic;
use antimagic::formats::{export, parse_graph, Format, GraphDocument};
use antimagic::generate::{gen_named, gen_regular_bipartite, Family};
use antimagic::graph::{BipartiteGraph, Labeling, SumProfile};
use antimagic::oracle::{brute_force_search, count_antimagic, SearchOutcome, SimpleGraph};
use antimagic::verify::{verify_antimagic, StageReport};

#[derive(Parser)]
#[command(
    name = "antimagic",
    about = "Antimagic edge labelings of regular bipartite graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Edgelist,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycle,
    CompleteBipartite,
    Hypercube3,
    Crown,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::CompleteBipartite => Family::CompleteBipartite,
            FamilyArg::Hypercube3 => Family::Hypercube3,
            FamilyArg::Crown => Family::Crown,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a k-regular bipartite graph (random or from a named family)
    /// and print it in edge-list format.
    Gen {
        /// Part size.
        #[arg(long)]
        n: usize,
        /// Degree (random graphs only).
        #[arg(long)]
        k: Option<usize>,
        /// Seed for random generation; all randomness flows from it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Named family instead of a random graph.
        #[arg(long)]
        family: Option<FamilyArg>,
    },
    /// Construct an antimagic labeling for the given graph.
    Label {
        /// Input graph in edge-list format.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Include per-stage reports in the JSON output.
        #[arg(long)]
        stage_report: bool,
    },
    /// Check a labeling; exit 0 iff antimagic, printing a JSON conflict
    /// report otherwise.
    Verify {
        /// Input graph in edge-list format.
        #[arg(long = "in")]
        input: PathBuf,
        /// Labels: either whitespace-separated integers (one per edge id)
        /// or the JSON produced by `label --format json`.
        #[arg(long)]
        labels: PathBuf,
    },
    /// Dump a 1-factorization as JSON (debugging aid).
    Factor {
        /// Input graph in edge-list format.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustive search over labelings of a tiny graph.
    Oracle {
        /// Input graph in edge-list format.
        #[arg(long = "in")]
        input: PathBuf,
        /// Assignment budget for the search.
        #[arg(long, default_value_t = antimagic::oracle::DEFAULT_BUDGET)]
        budget: u64,
        /// Count all antimagic labelings instead of searching for one.
        #[arg(long)]
        count: bool,
    },
    /// Print worked small examples: cycle labelings, pair and triple
    /// partitions, and a full 3-regular construction.
    Demo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gen { n, k, seed, family } => {
            let graph = match (family, k) {
                (Some(family), None) => gen_named(family.into(), n).map_err(|e| e.to_string())?,
                (Some(_), Some(_)) => {
                    return Err("--family fixes the degree; do not also pass --k".into());
                }
                (None, Some(k)) => gen_regular_bipartite(n, k, seed).map_err(|e| e.to_string())?,
                (None, None) => return Err("pass either --k or --family".into()),
            };
            print!(
                "{}",
                export(&graph, None, Format::EdgeList).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Label {
            input,
            format,
            stage_report,
        } => {
            let graph = read_graph(&input)?;
            let outcome = match label_antimagic(&graph) {
                Ok(outcome) => outcome,
                Err(antimagic::Error::RepairBudgetExhausted { conflicts }) => {
                    eprintln!("labeling failed verification: {conflicts} conflicts remain");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.to_string()),
            };
            if let Some(swaps) = outcome.repair_swaps {
                eprintln!("note: repair fallback applied {swaps} swaps");
            }
            match format {
                OutputFormat::Json => {
                    let doc = LabeledDocument::build(
                        &graph,
                        &outcome.labeling,
                        stage_report.then_some(outcome.stages),
                    )?;
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("serializable")
                    );
                }
                OutputFormat::Edgelist | OutputFormat::Dot if stage_report => {
                    return Err("--stage-report requires --format json".into());
                }
                OutputFormat::Edgelist => {
                    print!(
                        "{}",
                        export(&graph, Some(&outcome.labeling), Format::EdgeList)
                            .map_err(|e| e.to_string())?
                    );
                    for id in 0..graph.edge_count() {
                        println!("{}", outcome.labeling.get(id).expect("complete"));
                    }
                }
                OutputFormat::Dot => {
                    print!(
                        "{}",
                        export(&graph, Some(&outcome.labeling), Format::Dot)
                            .map_err(|e| e.to_string())?
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, labels } => {
            let graph = read_graph(&input)?;
            let labeling = read_labels(&labels, &graph)?;
            let report = verify_antimagic(&graph, &labeling).map_err(|e| e.to_string())?;
            if report.is_antimagic() {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Factor { input } => {
            let graph = read_graph(&input)?;
            let factorization =
                antimagic::factorize::one_factorize(&graph).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct FactorDump {
                factors: Vec<Vec<usize>>,
            }
            let dump = FactorDump {
                factors: factorization
                    .factors()
                    .iter()
                    .map(|m| m.edge_ids().to_vec())
                    .collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&dump).expect("serializable")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            input,
            budget,
            count,
        } => {
            let graph = read_graph(&input)?;
            let simple = SimpleGraph::from_bipartite(&graph);
            #[derive(Serialize)]
            struct OracleOut {
                #[serde(skip_serializing_if = "Option::is_none")]
                labels: Option<Vec<u64>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                count: Option<u64>,
                antimagic_exists: bool,
            }
            let out = if count {
                let c = count_antimagic(&simple).map_err(|e| e.to_string())?;
                OracleOut {
                    labels: None,
                    count: Some(c),
                    antimagic_exists: c > 0,
                }
            } else {
                match brute_force_search(&simple, budget).map_err(|e| e.to_string())? {
                    SearchOutcome::Found(labels) => OracleOut {
                        labels: Some(labels),
                        count: None,
                        antimagic_exists: true,
                    },
                    SearchOutcome::NoneExists => OracleOut {
                        labels: None,
                        count: None,
                        antimagic_exists: false,
                    },
                }
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Demo => {
            demo();
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct LabeledDocument {
    n: usize,
    k: usize,
    edges: Vec<[usize; 2]>,
    labels: Vec<u64>,
    #[serde(rename = "sums_A")]
    sums_a: Vec<u64>,
    #[serde(rename = "sums_B")]
    sums_b: Vec<u64>,
    antimagic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    stages: Option<Vec<StageReport>>,
}

impl LabeledDocument {
    fn build(
        graph: &BipartiteGraph,
        labeling: &Labeling,
        stages: Option<Vec<StageReport>>,
    ) -> Result<Self, String> {
        let base = GraphDocument::build(graph, Some(labeling)).map_err(|e| e.to_string())?;
        let report = verify_antimagic(graph, labeling).map_err(|e| e.to_string())?;
        Ok(Self {
            n: base.n,
            k: base.k,
            edges: base.edges,
            labels: base.labels.expect("labeling supplied"),
            sums_a: base.sums_a.expect("labeling supplied"),
            sums_b: base.sums_b.expect("labeling supplied"),
            antimagic: report.is_antimagic(),
            stages,
        })
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_labels(path: &Path, graph: &BipartiteGraph) -> Result<Labeling, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let values: Vec<u64> = if text.trim_start().starts_with('{') {
        let doc: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        doc.get("labels")
            .and_then(|l| l.as_array())
            .ok_or_else(|| format!("{}: JSON input lacks a labels array", path.display()))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .ok_or_else(|| format!("{}: non-integer label", path.display()))
            })
            .collect::<Result<_, _>>()?
    } else {
        text.split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| format!("{}: invalid label `{tok}`", path.display()))
            })
            .collect::<Result<_, _>>()?
    };
    if values.len() != graph.edge_count() {
        return Err(format!(
            "{}: {} labels for {} edges",
            path.display(),
            values.len(),
            graph.edge_count()
        ));
    }
    let mut labeling = Labeling::new();
    for (edge, &label) in values.iter().enumerate() {
        labeling
            .assign(edge, label)
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(labeling)
}

fn demo() {
    use antimagic::construct::{cycle_vertex_sums, label_cycle};
    use antimagic::partitions::{pair_partition, triple_partition_mod3, triple_partition_mod4};

    println!("# cycle labelings (labels in traversal order, then vertex sums)");
    for len in [3usize, 4, 5, 6] {
        let labels = label_cycle(len);
        let sums = cycle_vertex_sums(&labels);
        println!("C{len}: labels {labels:?} sums {sums:?}");
    }

    println!("\n# pairs of 1..12 summing to 13, classified mod 3");
    for pair in pair_partition(12).expect("12 is even") {
        println!(
            "({}, {}) {:?} against residue {}",
            pair.low, pair.high, pair.kind, pair.residue_a
        );
    }

    println!("\n# triples of 1..3n covering all residue classes mod 3");
    for n in [2u64, 3] {
        let triples = triple_partition_mod3(n).expect("n >= 1");
        let rendered: Vec<String> = triples
            .iter()
            .map(|t| format!("{:?} sum {}", t.labels, t.target_sum))
            .collect();
        println!("n={n}: {}", rendered.join(", "));
    }

    println!("\n# triples of the non-multiples of 4 below 4n");
    for n in [2u64, 3] {
        let triples = triple_partition_mod4(n).expect("n >= 1");
        let rendered: Vec<String> = triples
            .iter()
            .map(|t| format!("{:?} sum {}", t.labels, t.target_sum))
            .collect();
        println!("n={n}: {}", rendered.join(", "));
    }

    println!("\n# full 3-regular construction on K_{{3,3}}");
    let k33 = gen_named(Family::CompleteBipartite, 3).expect("valid family");
    let outcome = label_antimagic(&k33).expect("construction succeeds");
    let sums = SumProfile::partial(&k33, &outcome.labeling);
    let labels: Vec<u64> = (0..9)
        .map(|e| outcome.labeling.get(e).expect("complete"))
        .collect();
    println!("labels by edge id: {labels:?}");
    println!("A sums {:?}, B sums {:?}", sums.sums_a, sums.sums_b);

    println!("\n# composed 2-regular labeling on C4 + C6");
    let union = parse_graph("bipartite 5 2\n0 0\n0 1\n1 1\n1 0\n2 2\n3 2\n3 3\n4 3\n4 4\n2 4\n")
        .expect("valid edge list");
    let outcome = label_antimagic(&union).expect("construction succeeds");
    let labels: Vec<u64> = (0..10)
        .map(|e| outcome.labeling.get(e).expect("complete"))
        .collect();
    let sums = SumProfile::partial(&union, &outcome.labeling);
    println!("labels by edge id: {labels:?}");
    println!("A sums {:?}, B sums {:?}", sums.sums_a, sums.sums_b);
}
