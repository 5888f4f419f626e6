//! `artin`: classify presentation graphs and certify AH / WM / IC claims.
//!
//! Exit codes: 0 proven or success, 1 refuted (or a checked property
//! fails), 2 unknown, 64 usage error, 65 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use artin_core::batch::{batch_certify, certify, ClaimKind};
use artin_core::corpus::{read_graph_file, Family, LabelRule, NamedFamily};
use artin_core::cover::{CompleteCover, FlagReport};
use artin_core::coxeter::{class_profile, spherical_decomposition, CoxeterType};
use artin_core::engine::{certify_wm_subgroup, CertificateDocument, RuleConfig};
use artin_core::format::{document_to_json, to_text, GraphDocument};
use artin_core::graph::{PresentationGraph, VertexSet};
use artin_core::par::Execution;
use artin_core::structure::{
    enumerate_visual_splittings, irreducible_factors, is_2convex, SplittingMode,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const USAGE: u8 = 64;
const INPUT: u8 = 65;

#[derive(Parser)]
#[command(name = "artin", version, about = "Certificates for Artin groups from presentation graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class flags, dimension, factors and Coxeter components.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List visual splittings.
    Splittings {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Pairs)]
        mode: Mode,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test 2-convexity of a vertex set.
    Convex {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        omega: Vec<String>,
    },
    /// Complete covers and their link complexes.
    Cover {
        #[command(subcommand)]
        action: CoverAction,
    },
    /// Certify a claim.
    Certify {
        claim: ClaimArg,
        file: PathBuf,
        /// Proper vertex subset for the weak malnormality of one subgroup.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<String>>,
        #[command(flatten)]
        rules: RuleArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit a graph family: path, cycle, complete, wheel, random or
    /// catalog:<type>.
    Gen {
        family: String,
        /// Vertex count (rim size for wheels); not used for catalog types.
        n: Option<usize>,
        /// `3` for a constant label, `2,3,inf` for a seeded uniform draw.
        #[arg(long, default_value = "3")]
        labels: String,
        #[arg(long, requires = "spoke")]
        rim: Option<u32>,
        #[arg(long, requires = "rim")]
        spoke: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Artin)]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify every graph file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = ClaimArg::Ah)]
        claim: ClaimArg,
        #[command(flatten)]
        rules: RuleArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Process files one at a time.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum CoverAction {
    /// Flagness of the link complex. Default cover: the cover key of a JSON
    /// file if present, otherwise all cliques.
    Check {
        file: PathBuf,
        /// Cliques plus all subsets of this vertex set.
        #[arg(long, value_delimiter = ',', conflicts_with = "explicit")]
        omega: Option<Vec<String>>,
        /// A named explicit cover.
        #[arg(long, value_enum)]
        explicit: Option<Preset>,
        /// Take the downward closure of the file's cover (plus edges).
        #[arg(long)]
        close: bool,
    },
}

#[derive(Args)]
struct RuleArgs {
    /// Skip a rule by name (repeatable).
    #[arg(long = "disable-rule", value_name = "RULE")]
    disable: Vec<String>,
    /// Candidate splittings per search.
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Artin,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Pairs,
    MinSep,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Empty set, singletons and edges.
    Hollow,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Ah,
    Wm,
    Ic,
}

impl From<ClaimArg> for ClaimKind {
    fn from(c: ClaimArg) -> Self {
        match c {
            ClaimArg::Ah => ClaimKind::Ah,
            ClaimArg::Wm => ClaimKind::Wm,
            ClaimArg::Ic => ClaimKind::Ic,
        }
    }
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn input(message: impl ToString) -> Failure {
    Failure {
        code: INPUT,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("artin: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Classify { file, format } => classify(&load(&file)?.graph, format),
        Command::Splittings {
            file,
            mode,
            limit,
            format,
        } => splittings(&load(&file)?.graph, mode, limit, format),
        Command::Convex { file, omega } => {
            let graph = load(&file)?.graph;
            let set = vertex_set(&graph, &omega)?;
            let convex = is_2convex(&graph, set).map_err(input)?;
            println!(
                "{} is {}2-convex",
                graph.format_set(set),
                if convex { "" } else { "not " }
            );
            Ok(if convex { 0 } else { 1 })
        }
        Command::Cover {
            action:
                CoverAction::Check {
                    file,
                    omega,
                    explicit,
                    close,
                },
        } => cover_check(&load(&file)?, omega, explicit, close),
        Command::Certify {
            claim,
            file,
            subset,
            rules,
            format,
        } => {
            let config = rule_config(&rules)?;
            let graph = load(&file)?.graph;
            let cert = match (claim, subset) {
                (ClaimArg::Wm, Some(names)) => {
                    let set = vertex_set(&graph, &names)?;
                    certify_wm_subgroup(&graph, set, &config).map_err(input)?
                }
                (_, Some(_)) => return Err(usage("--subset applies to `certify wm` only")),
                (claim, None) => certify(&graph, claim.into(), &config).map_err(input)?,
            };
            let verdict = cert.verdict;
            let doc = CertificateDocument::new(&graph, cert);
            match format {
                Format::Text => print!("{}", doc.certificate.render_text()),
                Format::Json => print!("{}", doc.to_json()),
            }
            Ok(verdict.exit_code())
        }
        Command::Gen {
            family,
            n,
            labels,
            rim,
            spoke,
            seed,
            format,
            output,
        } => {
            let family = parse_family(&family, n)?;
            let labels = match (rim, spoke) {
                (Some(rim), Some(spoke)) => LabelRule::RimSpoke { rim, spoke },
                _ => labels.parse().map_err(|e| usage(format!("{e}")))?,
            };
            let mut named = NamedFamily::new(family, labels);
            named.seed = seed;
            let graph = named.generate().map_err(|e| usage(e.to_string()))?;
            let text = match format {
                GraphFormat::Artin => to_text(&graph),
                GraphFormat::Json => document_to_json(&graph, None),
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| input(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Batch {
            dir,
            claim,
            rules,
            format,
            sequential,
        } => {
            let config = rule_config(&rules)?;
            let execution = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let report = batch_certify(&dir, claim.into(), &config, execution)
                .map_err(|e| input(format!("{}: {e}", dir.display())))?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<GraphDocument, Failure> {
    read_graph_file(path).map_err(input)
}

fn vertex_set(graph: &PresentationGraph, names: &[String]) -> Result<VertexSet, Failure> {
    let names: Vec<&str> = names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
    graph.vertex_set(&names).map_err(input)
}

fn rule_config(args: &RuleArgs) -> Result<RuleConfig, Failure> {
    let mut config = RuleConfig::default();
    for name in &args.disable {
        config = config.disable(name).map_err(|e| usage(e.to_string()))?;
    }
    if let Some(budget) = args.budget {
        config = config.with_budget(budget);
    }
    Ok(config)
}

fn parse_family(name: &str, n: Option<usize>) -> Result<Family, Failure> {
    if let Some(kind) = name.strip_prefix("catalog:") {
        let kind: CoxeterType = kind.parse().map_err(|e| usage(format!("{e}")))?;
        return Ok(Family::Catalog(kind));
    }
    let n = n.ok_or_else(|| usage(format!("`{name}` needs a vertex count")))?;
    Ok(match name {
        "path" => Family::Path(n),
        "cycle" => Family::Cycle(n),
        "complete" => Family::Complete(n),
        "wheel" => Family::Wheel(n),
        "random" => Family::Random(n),
        other => return Err(usage(format!("unknown family `{other}`"))),
    })
}

fn classify(graph: &PresentationGraph, format: Format) -> Result<u8, Failure> {
    if graph.is_empty() {
        return Err(input("the graph has no vertices"));
    }
    let profile = class_profile(graph);
    let factors: Vec<Vec<String>> = irreducible_factors(graph)
        .map_err(input)?
        .factors()
        .iter()
        .map(|f| graph.set_names(*f))
        .collect();
    let components: Vec<(String, Vec<String>)> = spherical_decomposition(graph)
        .into_iter()
        .map(|c| (c.kind.canonical().to_string(), graph.set_names(c.vertices)))
        .collect();
    match format {
        Format::Text => {
            println!("vertices: {}", graph.names().join(" "));
            println!("edges: {}", graph.edge_count());
            println!("flags: {}", profile.flag_names().join(","));
            println!("dimension: {}", profile.dimension);
            let shown: Vec<String> = factors.iter().map(|f| format!("{{{}}}", f.join(","))).collect();
            println!("factors: {}", shown.join(" "));
            for (kind, verts) in &components {
                println!("component {kind}: {{{}}}", verts.join(","));
            }
        }
        Format::Json => {
            let value = json!({
                "vertices": graph.names(),
                "edges": graph.edge_count(),
                "profile": profile,
                "factors": factors,
                "components": components
                    .iter()
                    .map(|(kind, verts)| json!({"type": kind, "vertices": verts}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(0)
}

fn splittings(
    graph: &PresentationGraph,
    mode: Mode,
    limit: Option<usize>,
    format: Format,
) -> Result<u8, Failure> {
    let mode = match mode {
        Mode::Pairs => SplittingMode::NonadjacentPairs,
        Mode::MinSep => SplittingMode::MinimalSeparators,
        Mode::All => SplittingMode::All,
    };
    let list = enumerate_visual_splittings(graph, mode, limit).map_err(input)?;
    match format {
        Format::Text => {
            for sp in &list.splittings {
                println!(
                    "Ω={} Γ1={} Γ2={}",
                    graph.format_set(sp.omega()),
                    graph.format_set(sp.gamma1()),
                    graph.format_set(sp.gamma2())
                );
            }
            println!("{} splitting(s)", list.splittings.len());
            if list.truncated {
                println!("truncated at the limit");
            }
            if list.coarsened {
                println!("some separators were only split one component against the rest");
            }
        }
        Format::Json => {
            let rows: Vec<_> = list
                .splittings
                .iter()
                .map(|sp| {
                    json!({
                        "omega": graph.set_names(sp.omega()),
                        "gamma1": graph.set_names(sp.gamma1()),
                        "gamma2": graph.set_names(sp.gamma2()),
                    })
                })
                .collect();
            let value = json!({
                "splittings": rows,
                "truncated": list.truncated,
                "coarsened": list.coarsened,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(0)
}

fn cover_check(
    doc: &GraphDocument,
    omega: Option<Vec<String>>,
    explicit: Option<Preset>,
    close: bool,
) -> Result<u8, Failure> {
    let graph = &doc.graph;
    let cover = match (omega, explicit, &doc.cover) {
        (Some(names), _, _) => CompleteCover::cliques_plus_subgraphs_of(graph, vertex_set(graph, &names)?)
            .map_err(input)?,
        (None, Some(Preset::Hollow), _) => CompleteCover::hollow(graph),
        (None, None, Some(members)) => {
            let sets = members
                .iter()
                .map(|m| vertex_set(graph, m))
                .collect::<Result<Vec<_>, _>>()?;
            if close {
                CompleteCover::explicit_closure(graph, sets)
            } else {
                CompleteCover::explicit(graph, sets)
            }
        }
        (None, None, None) => CompleteCover::cliques(graph),
    };
    let link = cover
        .link_complex()
        .map_err(|e| input(format!("invalid cover: {}", describe_violation(graph, &e))))?;
    match link.is_flag() {
        FlagReport::Flag => {
            println!("flag");
            Ok(0)
        }
        FlagReport::NotFlag { witness } => {
            println!("not flag, witness {}", graph.format_set(witness));
            Ok(1)
        }
    }
}

fn describe_violation(graph: &PresentationGraph, v: &artin_core::cover::CoverViolation) -> String {
    use artin_core::cover::CoverViolation as V;
    match v {
        V::MissingEmpty => "the empty set is missing".into(),
        V::MissingEdge((i, j)) => format!("edge {{{},{}}} is not covered", graph.name(*i), graph.name(*j)),
        V::NotHereditary { member, missing } => format!(
            "{} is a member but its subset {} is not",
            graph.format_set(*member),
            graph.format_set(*missing)
        ),
        V::NotASubset(set) => format!("{set:?} is not a vertex set of the graph"),
    }
}
