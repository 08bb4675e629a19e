use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gallery_core::building::{building_disjoint_paths, building_parameters};
use gallery_core::connectivity::{
    distance_two_pairs, liu_pairs, liu_report, local_connectivity_count, local_connectivity_with,
    vertex_connectivity, verify_disjoint_family, Bound, ConnectivityReport, LocalOptions, PathFamily,
};
use gallery_core::coxeter::coxeter_disjoint_fan;
use gallery_core::lattice::{lattice_disjoint_paths, q_of_lattice};
use gallery_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dot::to_dot;
use crate::error::CliError;
use crate::formats::{to_json_string, CertificateJson, GraphJson, PathFamilyJson, PathsOutput};
use crate::object::{read_json, BallArgs, Object, ObjectChoice};

#[derive(Debug, Parser)]
#[command(name = "gallery", version, about = "Chamber graphs, disjoint galleries and connectivity certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for pair sampling, recorded in every artifact
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the result here instead of stdout
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "GALLERY_MAX_VERTICES")]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true, env = "GALLERY_MAX_CHAMBERS")]
    pub max_chambers: Option<usize>,
    #[arg(long, global = true, env = "GALLERY_MAX_ELEMENTS")]
    pub max_elements: Option<usize>,
    #[arg(long, global = true, env = "GALLERY_MAX_LATTICE_ELEMENTS")]
    pub max_lattice_elements: Option<usize>,
}

impl GlobalArgs {
    pub fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_vertices: self.max_vertices.unwrap_or(d.max_vertices),
            max_chambers: self.max_chambers.unwrap_or(d.max_chambers),
            max_elements: self.max_elements.unwrap_or(d.max_elements),
            max_lattice_elements: self.max_lattice_elements.unwrap_or(d.max_lattice_elements),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct the object and emit its chamber graph as JSON
    Build(ObjectArgs),
    /// Report q parameters and regularity
    Params(ObjectArgs),
    /// Construct disjoint galleries between two chambers at distance two
    Paths(PathsArgs),
    /// Liu's criterion, exact connectivity or one local value
    Connectivity(ConnectivityArgs),
    /// Certify a path family against the object's chamber graph
    Verify(VerifyArgs),
    /// Write the chamber graph as DOT or JSON, or the object itself
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct ObjectArgs {
    #[command(flatten)]
    pub choice: ObjectChoice,
    #[command(flatten)]
    pub ball: BallArgs,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// First chamber: id, name, Coxeter word or JSON basis matrices
    #[arg(long, requires = "to")]
    pub from: Option<String>,
    #[arg(long, requires = "from")]
    pub to: Option<String>,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    #[command(flatten)]
    pub pair: PairArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Liu,
    Exact,
    Local,
}

#[derive(Debug, Args)]
pub struct ConnectivityArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    #[arg(long, value_enum, default_value = "liu")]
    pub mode: Mode,
    /// Threshold for Liu's criterion; defaults to the minimum degree
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub pair: PairArgs,
    /// Accept truncated balls and report lower bounds
    #[arg(long)]
    pub allow_incomplete: bool,
    #[arg(long, default_value_t = 1)]
    pub margin: usize,
    /// Worker threads for per-pair flows
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    /// Path family JSON
    #[arg(long)]
    pub family: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Object,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: Format,
}

fn load(args: &ObjectArgs, global: &GlobalArgs) -> Result<Object, CliError> {
    Object::load(&args.choice, &args.ball, &global.limits())
}

/// Runs one command and returns the text of its artifact.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Build(args) => {
            let obj = load(args, g)?;
            Ok(to_json_string(&GraphJson::from_graph(obj.graph(), Some(g.seed))))
        }
        Command::Params(args) => params(&load(args, g)?, g.seed),
        Command::Paths(args) => paths(&load(&args.object, g)?, &args.pair, g.seed),
        Command::Connectivity(args) => connectivity(&load(&args.object, g)?, args, g.seed),
        Command::Verify(args) => verify(&load(&args.object, g)?, args, g.seed),
        Command::Export(args) => {
            let obj = load(&args.object, g)?;
            Ok(match args.format {
                Format::Dot => to_dot(obj.graph(), g.seed),
                Format::Json => to_json_string(&GraphJson::from_graph(obj.graph(), Some(g.seed))),
                Format::Object => {
                    let mut doc = obj.descriptor();
                    doc["seed"] = json!(g.seed);
                    to_json_string(&doc)
                }
            })
        }
    }
}

fn params(obj: &Object, seed: u64) -> Result<String, CliError> {
    let graph = obj.graph();
    let mut doc = json!({
        "object": obj.kind(),
        "vertices": graph.vertex_count(),
        "edges": graph.edge_count(),
        "regular_degree": graph.regular_degree(),
        "min_degree": graph.min_degree(),
        "max_degree": graph.max_degree(),
        "complete": graph.is_complete(),
        "seed": seed,
    });
    match obj {
        Object::Coxeter { system, ball } => {
            doc["rank"] = json!(system.rank());
            doc["two_finite"] = json!(system.is_two_finite());
            doc["max_length"] = json!(ball.words.iter().map(|w| w.len()).max());
        }
        Object::Building(b) => {
            let p = building_parameters(b)?;
            doc["n"] = json!(b.dimension());
            doc["p"] = json!(b.field().order());
            doc["q_s"] = json!(p.q);
            doc["q"] = json!(p.total);
        }
        Object::Lattice { lattice, .. } => {
            let w = q_of_lattice(lattice)?;
            doc["elements"] = json!(lattice.len());
            doc["rank"] = json!(lattice.rank());
            doc["q"] = json!(w.q);
            doc["q_witness"] = json!(lattice.label(w.witness));
            doc["length_two_minimum"] = json!(w.full_min - 1);
            doc["local_width_from_rank_two"] = json!(w.rank_two_suffices());
            doc["guaranteed_paths"] = json!(w.q * (lattice.rank() - 1));
        }
        Object::Graph(_) => {}
    }
    Ok(to_json_string(&doc))
}

/// The requested pair, or one sampled from the distance-two pairs (away from
/// the boundary of a truncated ball).
fn choose_pair(obj: &Object, pair: &PairArgs, seed: u64) -> Result<(usize, usize), CliError> {
    if let (Some(a), Some(b)) = (&pair.from, &pair.to) {
        return Ok((obj.resolve_vertex(a)?, obj.resolve_vertex(b)?));
    }
    let graph = obj.graph();
    let mut pairs = distance_two_pairs(graph);
    if !graph.is_complete() {
        let deep = graph.deep_interior(1);
        pairs.retain(|&(u, v)| deep[u] && deep[v]);
    }
    if pairs.is_empty() {
        return Err(CliError::Other("no pair at distance two to sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(pairs[rng.gen_range(0..pairs.len())])
}

fn construct(obj: &Object, u: usize, v: usize) -> Result<PathFamily, CliError> {
    match obj {
        Object::Coxeter { system, ball } => {
            let fan = coxeter_disjoint_fan(system, ball.word(u), ball.word(v))?;
            fan.to_path_family(ball)
                .ok_or_else(|| CliError::Other("family leaves the ball; increase --radius".into()))
        }
        Object::Building(b) => Ok(building_disjoint_paths(b, u, v)?),
        Object::Lattice { lattice, chambers } => Ok(lattice_disjoint_paths(lattice, chambers, u, v)?.family),
        Object::Graph(g) => Ok(local_connectivity_with(g, u, v, LocalOptions::default())?.family),
    }
}

fn violation(family: &PathFamily, v: impl std::fmt::Display) -> CliError {
    CliError::Verification {
        message: format!("path family rejected: {v}"),
        detail: json!({ "source": family.source, "target": family.target, "violation": v.to_string() }),
    }
}

fn paths(obj: &Object, pair: &PairArgs, seed: u64) -> Result<String, CliError> {
    let (u, v) = choose_pair(obj, pair, seed)?;
    let family = construct(obj, u, v)?;
    let cert = verify_disjoint_family(obj.graph(), &family).map_err(|e| violation(&family, e))?;
    let names = family
        .paths
        .iter()
        .map(|p| p.iter().map(|&x| obj.vertex_name(x)).collect())
        .collect();
    Ok(to_json_string(&PathsOutput {
        family: PathFamilyJson::from(&family),
        names,
        certificate: cert.into(),
        seed,
    }))
}

fn bound_name(b: Bound) -> &'static str {
    match b {
        Bound::Exact => "exact",
        Bound::LowerBound => "lower-bound",
    }
}

fn report_json(r: &ConnectivityReport, seed: u64) -> Value {
    json!({
        "method": r.method.as_str(),
        "lower": r.lower,
        "upper": r.upper,
        "kappa": r.kappa(),
        "bound": bound_name(r.bound),
        "threshold": r.threshold,
        "passed": r.passed,
        "separating_set": r.separating_set,
        "failing_pair": r.failing_pair.map(|f| json!({ "u": f.u, "v": f.v, "paths": f.paths })),
        "pairs_checked": r.pairs_checked,
        "seed": seed,
    })
}

fn connectivity(obj: &Object, args: &ConnectivityArgs, seed: u64) -> Result<String, CliError> {
    let graph = obj.graph();
    let opts = LocalOptions {
        allow_incomplete: args.allow_incomplete,
        margin: args.margin,
    };
    let doc = match args.mode {
        Mode::Exact => report_json(&vertex_connectivity(graph)?, seed),
        Mode::Liu => {
            let k = args.k.unwrap_or_else(|| graph.min_degree());
            let (pairs, bound) = liu_pairs(graph, k, opts)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(args.jobs.max(1))
                .build()
                .map_err(CliError::other)?;
            // every pair is computed; the report stops at the first failure
            // in pair order, so the result does not depend on scheduling
            let counts: Vec<usize> = pool.install(|| {
                pairs
                    .par_iter()
                    .map(|&(u, v)| local_connectivity_count(graph, u, v, k))
                    .collect()
            });
            report_json(&liu_report(graph, k, bound, &pairs, &counts), seed)
        }
        Mode::Local => {
            let (u, v) = choose_pair(obj, &args.pair, seed)?;
            let local = local_connectivity_with(graph, u, v, opts)?;
            json!({
                "method": "local",
                "source": u,
                "target": v,
                "paths": local.count,
                "bound": bound_name(local.bound),
                "cut": local.cut,
                "direct_edge": local.direct_edge,
                "family": PathFamilyJson::from(&local.family),
                "seed": seed,
            })
        }
    };
    Ok(to_json_string(&doc))
}

fn verify(obj: &Object, args: &VerifyArgs, seed: u64) -> Result<String, CliError> {
    let doc: PathFamilyJson = read_json(&args.family)?;
    let family = doc.to_family();
    let cert = verify_disjoint_family(obj.graph(), &family).map_err(|e| violation(&family, e))?;
    let mut out = serde_json::to_value(CertificateJson::from(cert)).expect("serializes");
    out["source"] = json!(family.source);
    out["target"] = json!(family.target);
    out["seed"] = json!(seed);
    Ok(to_json_string(&out))
}
