//! Subcommand implementations. Every command returns its process exit code:
//! 0 for success / predicate-true, 1 for predicate-false or law violations;
//! usage and validation problems surface as `Err(message)` and exit 2.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use rough_cayley::graph::{
    all_connection_sets, generates, inverse_pair_orbits, is_minimal_cayley_set, ConnectionSet,
    Graph,
};
use rough_cayley::group::{ElementSet, FiniteGroup};
use rough_cayley::groupfile::GroupFile;
use rough_cayley::laws::{fleet_acceptance, fleet_default, run_suite, LawOptions, SuiteReport};
use rough_cayley::rough::{
    rough_edge_cayley, rough_pseudo, rough_vertex_pseudo, Family, RoughGraphPair, Side,
};

use crate::dot;
use crate::groupspec::{parse_labels, GroupArg};
use crate::report::{self, ReportInputs};

/// Orders past this would need 2^(n/2)-ish subset enumerations.
const EXHAUSTIVE_ORDER_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "rough-cayley",
    version,
    about = "Rough approximations of finite-group subsets and their Cayley / pseudo-Cayley graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List normal subgroups and valid connection sets of a group.
    Enumerate(EnumerateArgs),
    /// Compute a rough approximation pair and report on both graphs.
    Approx(ApproxArgs),
    /// Evaluate a single predicate; exit 0 if true, 1 if false.
    Check(CheckArgs),
    /// Run the law suites over one group or a fleet.
    Lawsuite(LawsuiteArgs),
    /// Write a group to the group file format.
    Export(ExportArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Sample this many connection sets instead of enumerating (required
    /// beyond order 16).
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for sampling reproducibility.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the listing as JSON to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ApproxArgs {
    /// Approximation family: edge, vertex, or full.
    #[arg(value_name = "FAMILY")]
    family_positional: Option<String>,
    #[command(flatten)]
    group: GroupArg,
    /// Approximation family (alternative to the positional argument).
    #[arg(long = "family", value_name = "FAMILY")]
    family_flag: Option<String>,
    /// Normal subgroup N as comma-separated element labels.
    #[arg(long = "N", value_name = "LABELS")]
    modulus: Option<String>,
    /// Connection set S as comma-separated element labels.
    #[arg(long = "S", value_name = "LABELS")]
    connection: Option<String>,
    /// Vertex set R as comma-separated element labels (vertex/full only).
    #[arg(long = "R", value_name = "LABELS")]
    vertices: Option<String>,
    /// Require S ⊆ R when validating pseudo-Cayley inputs.
    #[arg(long)]
    strict: bool,
    /// Write lower.dot / original.dot / upper.dot into this directory.
    #[arg(long, value_name = "DIR")]
    dot: Option<PathBuf>,
    /// Write the analysis report as JSON to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Predicate to evaluate.
    #[arg(value_name = "PREDICATE")]
    predicate: Predicate,
    #[command(flatten)]
    group: GroupArg,
    /// Approximation family for rough predicates.
    #[arg(long = "family", value_name = "FAMILY")]
    family: Option<String>,
    /// Which approximation side a rough predicate inspects.
    #[arg(long = "side", value_name = "SIDE")]
    side: Option<String>,
    #[arg(long = "N", value_name = "LABELS")]
    modulus: Option<String>,
    #[arg(long = "S", value_name = "LABELS")]
    connection: Option<String>,
    #[arg(long = "R", value_name = "LABELS")]
    vertices: Option<String>,
    /// Require S ⊆ R when validating pseudo-Cayley inputs.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    /// The graph (G;S) or (R;S) is connected.
    Connected,
    /// S generates the whole group.
    Generates,
    /// S is a minimal Cayley set for the group.
    Minimal,
    /// The graph is connected with edge connectivity = minimum degree.
    OptimalConnected,
    /// The chosen approximation side is rough generating.
    Generating,
    /// The chosen approximation side is rough optimal.
    Optimal,
    /// R is definable: lower and upper approximations coincide.
    Definable,
    /// Some orbit ⟨S⟩∘r fills R and the lower approximation is nonempty.
    OrbitDefinable,
}

#[derive(Args)]
struct LawsuiteArgs {
    /// Group spec, `fleet:default`, or `fleet:acceptance`.
    #[command(flatten)]
    group: GroupArg,
    /// Seeded-random configurations per law family for orders above 8.
    #[arg(long)]
    sample: Option<usize>,
    /// Seed for sampling reproducibility.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write every suite report as JSON to this file.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Write the group file here instead of stdout.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Approx(args) => cmd_approx(args),
        Command::Check(args) => cmd_check(args),
        Command::Lawsuite(args) => cmd_lawsuite(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|err| format!("cannot create {}: {err}", parent.display()))?;
        }
    }
    std::fs::write(path, contents).map_err(|err| format!("cannot write {}: {err}", path.display()))
}

fn sorted_sets(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.sort_by(|a, b| a.cmp_by_size_then_members(b));
    sets
}

// ---- enumerate ----------------------------------------------------------

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32, String> {
    let (spec, group) = args.group.load()?;
    let normals = sorted_sets(group.normal_subgroups());

    let (connections, sampled) = if group.order() <= EXHAUSTIVE_ORDER_LIMIT {
        (sorted_sets(all_connection_sets(&group)), false)
    } else {
        let Some(count) = args.sample else {
            return Err(format!(
                "order {} exceeds the exhaustive enumeration limit of {EXHAUSTIVE_ORDER_LIMIT}; \
                 pass --sample <k> (with --seed for reproducibility) to draw that many \
                 connection sets instead",
                group.order()
            ));
        };
        let orbits = inverse_pair_orbits(&group);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
        let mut draws: Vec<ElementSet> = (0..count)
            .map(|_| {
                let mut set = ElementSet::EMPTY;
                for &orbit in &orbits {
                    if rng.random::<bool>() {
                        set |= orbit;
                    }
                }
                set
            })
            .collect();
        draws.sort_by(|a, b| a.cmp_by_size_then_members(b));
        draws.dedup();
        (draws, true)
    };

    let mut out = String::new();
    let _ = writeln!(out, "group {spec} (order {})", group.order());
    let _ = writeln!(out, "normal subgroups ({}):", normals.len());
    for &n in &normals {
        let _ = writeln!(out, "  {}", group.format_set(n));
    }
    if sampled {
        let _ = writeln!(
            out,
            "connection sets ({} sampled, seed {}):",
            connections.len(),
            args.seed
        );
    } else {
        let _ = writeln!(out, "connection sets ({}):", connections.len());
    }
    for &s in &connections {
        let _ = writeln!(out, "  {}", group.format_set(s));
    }
    print!("{out}");

    if let Some(path) = &args.json {
        let labels = |set: ElementSet| -> Vec<String> {
            set.iter().map(|v| group.label(v).to_string()).collect()
        };
        let doc = serde_json::json!({
            "schema": 1,
            "group": {"spec": spec, "order": group.order()},
            "normal_subgroups": normals.iter().map(|&n| labels(n)).collect::<Vec<_>>(),
            "connection_sets": connections.iter().map(|&s| labels(s)).collect::<Vec<_>>(),
            "sampled": sampled,
        });
        write_file(path, &format!("{:#}\n", doc))?;
    }
    Ok(0)
}

// ---- approx -------------------------------------------------------------

fn parse_family(positional: &Option<String>, flag: &Option<String>) -> Result<Family, String> {
    let text = match (positional, flag) {
        (Some(_), Some(_)) => {
            return Err("give the family either positionally or via --family, not both".into())
        }
        (Some(text), None) | (None, Some(text)) => text,
        (None, None) => return Err("no family given (positional or --family)".into()),
    };
    text.parse()
}

struct Configured {
    spec: String,
    group: FiniteGroup,
    family: Family,
    modulus: ElementSet,
    connection: ConnectionSet,
    vertices: Option<ElementSet>,
}

impl Configured {
    fn pair(&self, strict: bool) -> Result<RoughGraphPair, String> {
        let result = match (self.family, self.vertices) {
            (Family::Edge, None) => {
                rough_edge_cayley(&self.group, self.modulus, &self.connection)
            }
            (Family::Edge, Some(_)) => {
                return Err("the edge family works on (G;S); drop --R".into())
            }
            (Family::Vertex, Some(r)) => {
                rough_vertex_pseudo(&self.group, self.modulus, r, &self.connection, strict)
            }
            (Family::Full, Some(r)) => {
                rough_pseudo(&self.group, self.modulus, r, &self.connection, strict)
            }
            (family, None) => return Err(format!("the {family} family requires --R")),
        };
        result.map_err(|err| err.to_string())
    }

    /// The graph being approximated: (G;S) for the edge family, (R;S)
    /// otherwise.
    fn original(&self, strict: bool) -> Result<Graph, String> {
        match self.vertices {
            None => Graph::cayley(&self.group, &self.connection),
            Some(r) => Graph::pseudo_cayley(&self.group, r, &self.connection, strict),
        }
        .map_err(|err| err.to_string())
    }
}

fn configure(
    group_arg: &GroupArg,
    family: Family,
    modulus: &Option<String>,
    connection: &Option<String>,
    vertices: &Option<String>,
) -> Result<Configured, String> {
    let (spec, group) = group_arg.load()?;
    let modulus = match modulus {
        Some(text) => parse_labels(&group, Some(text))?,
        None => return Err("--N is required".into()),
    };
    let connection_set = parse_labels(&group, connection.as_deref())?;
    let connection =
        ConnectionSet::new(&group, connection_set).map_err(|err| err.to_string())?;
    let vertices = match vertices {
        Some(text) => Some(parse_labels(&group, Some(text))?),
        None => None,
    };
    Ok(Configured {
        spec,
        group,
        family,
        modulus,
        connection,
        vertices,
    })
}

fn cmd_approx(args: ApproxArgs) -> Result<i32, String> {
    let family = parse_family(&args.family_positional, &args.family_flag)?;
    let configured = configure(
        &args.group,
        family,
        &args.modulus,
        &args.connection,
        &args.vertices,
    )?;
    let pair = configured.pair(args.strict)?;
    let original = configured.original(args.strict)?;

    let report = report::build(
        &ReportInputs {
            group: &configured.group,
            spec: &configured.spec,
            modulus: configured.modulus,
            connection: &configured.connection,
            vertices: configured.vertices,
            strict: args.strict,
        },
        &pair,
    )?;
    print!("{}", report.to_text());

    if let Some(dir) = &args.dot {
        std::fs::create_dir_all(dir)
            .map_err(|err| format!("cannot create {}: {err}", dir.display()))?;
        for (name, graph) in [
            ("lower", &pair.lower),
            ("original", &original),
            ("upper", &pair.upper),
        ] {
            let text = dot::render(name, &configured.group, graph);
            write_file(&dir.join(format!("{name}.dot")), &text)?;
        }
    }
    if let Some(path) = &args.json {
        write_file(path, &report.to_json())?;
    }
    Ok(0)
}

// ---- check --------------------------------------------------------------

fn cmd_check(args: CheckArgs) -> Result<i32, String> {
    let verdict = evaluate_predicate(&args)?;
    println!("{verdict}");
    Ok(if verdict { 0 } else { 1 })
}

fn evaluate_predicate(args: &CheckArgs) -> Result<bool, String> {
    let (_, group) = args.group.load()?;
    let connection_labels = || parse_labels(&group, args.connection.as_deref());
    let require_modulus = || -> Result<ElementSet, String> {
        match &args.modulus {
            Some(text) => parse_labels(&group, Some(text)),
            None => Err("--N is required for this predicate".into()),
        }
    };
    let require_vertices = || -> Result<ElementSet, String> {
        match &args.vertices {
            Some(text) => parse_labels(&group, Some(text)),
            None => Err("--R is required for this predicate".into()),
        }
    };
    let build_graph = || -> Result<Graph, String> {
        let connection =
            ConnectionSet::new(&group, connection_labels()?).map_err(|err| err.to_string())?;
        match &args.vertices {
            None => Graph::cayley(&group, &connection).map_err(|err| err.to_string()),
            Some(text) => {
                let r = parse_labels(&group, Some(text))?;
                Graph::pseudo_cayley(&group, r, &connection, args.strict)
                    .map_err(|err| err.to_string())
            }
        }
    };

    match args.predicate {
        Predicate::Connected => build_graph()?.is_connected().map_err(|err| err.to_string()),
        Predicate::Generates => Ok(generates(&group, connection_labels()?)),
        Predicate::Minimal => {
            let connection =
                ConnectionSet::new(&group, connection_labels()?).map_err(|err| err.to_string())?;
            Ok(is_minimal_cayley_set(&group, &connection))
        }
        Predicate::OptimalConnected => Ok(build_graph()?.is_optimal_connected()),
        Predicate::Generating | Predicate::Optimal => {
            let family: Family = match &args.family {
                Some(text) => text.parse()?,
                None => return Err("--family is required for rough predicates".into()),
            };
            let side: Side = match &args.side {
                Some(text) => text.parse()?,
                None => return Err("--side is required for rough predicates".into()),
            };
            let configured = configure(
                &args.group,
                family,
                &args.modulus,
                &args.connection,
                &args.vertices,
            )?;
            // Surface configuration errors (and honor --strict) up front.
            configured.pair(args.strict)?;
            let optimal = matches!(args.predicate, Predicate::Optimal);
            rough_side_predicate(&configured, side, optimal)
        }
        Predicate::Definable => {
            let n = require_modulus()?;
            let r = require_vertices()?;
            rough_cayley::approx::is_definable(&group, n, r).map_err(|err| err.to_string())
        }
        Predicate::OrbitDefinable => {
            let n = require_modulus()?;
            let r = require_vertices()?;
            let connection =
                ConnectionSet::new(&group, connection_labels()?).map_err(|err| err.to_string())?;
            rough_cayley::rough::is_definable_by_orbit(&group, n, r, &connection)
                .map_err(|err| err.to_string())
        }
    }
}

fn rough_side_predicate(
    configured: &Configured,
    side: Side,
    optimal: bool,
) -> Result<bool, String> {
    use rough_cayley::rough as r;
    let (group, n, s) = (&configured.group, configured.modulus, &configured.connection);
    let result = match (configured.family, configured.vertices, optimal) {
        (Family::Edge, None, false) => r::is_edge_rough_generating(group, n, s, side),
        (Family::Edge, None, true) => r::is_edge_rough_optimal(group, n, s, side),
        (Family::Edge, Some(_), _) => {
            return Err("the edge family works on (G;S); drop --R".into())
        }
        (Family::Vertex, Some(rv), false) => r::is_vertex_rough_generating(group, n, rv, s, side),
        (Family::Vertex, Some(rv), true) => r::is_vertex_rough_optimal(group, n, rv, s, side),
        (Family::Full, Some(rv), false) => r::is_rough_generating(group, n, rv, s, side),
        (Family::Full, Some(rv), true) => r::is_rough_optimal(group, n, rv, s, side),
        (family, None, _) => return Err(format!("the {family} family requires --R")),
    };
    result.map_err(|err| err.to_string())
}

// ---- lawsuite -----------------------------------------------------------

fn cmd_lawsuite(args: LawsuiteArgs) -> Result<i32, String> {
    let spec = args.group.spec()?;
    let fleet: Vec<(String, FiniteGroup)> = match spec {
        "fleet:default" => fleet_default(),
        "fleet:acceptance" => fleet_acceptance(),
        _ => {
            let (name, group) = args.group.load()?;
            vec![(name, group)]
        }
    };
    for (name, group) in &fleet {
        if group.order() > EXHAUSTIVE_ORDER_LIMIT {
            return Err(format!(
                "{name} has order {}, above the law-sweep limit of {EXHAUSTIVE_ORDER_LIMIT}; \
                 run the suite on a smaller group",
                group.order()
            ));
        }
    }

    let defaults = LawOptions::default();
    let options = LawOptions {
        samples: args.sample.unwrap_or(defaults.samples),
        seed: args.seed.unwrap_or(defaults.seed),
        ..defaults
    };

    // Independent groups run in parallel; collection preserves fleet order.
    let reports: Vec<SuiteReport> = fleet
        .par_iter()
        .map(|(name, group)| run_suite(name, group, &options))
        .collect();

    let mut out = String::new();
    for report in &reports {
        let mode = if report.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        };
        let _ = writeln!(
            out,
            "== {} (order {}, {mode} sweep) ==",
            report.group_name, report.order
        );
        for law in &report.outcomes {
            if law.violations == 0 {
                let _ = writeln!(
                    out,
                    "pass  {:<8} cases={:<8} {}",
                    law.code, law.cases, law.description
                );
            } else {
                let _ = writeln!(
                    out,
                    "FAIL  {:<8} cases={:<8} violations={} {}",
                    law.code, law.cases, law.violations, law.description
                );
                for witness in &law.witnesses {
                    let _ = writeln!(out, "      witness: {witness}");
                }
            }
        }
        let _ = writeln!(
            out,
            "{}: {} laws, {} cases, {} violations",
            report.group_name,
            report.outcomes.len(),
            report.total_cases(),
            report.total_violations()
        );
    }
    let total_violations: u64 = reports.iter().map(|r| r.total_violations()).sum();
    let total_cases: u64 = reports.iter().map(|r| r.total_cases()).sum();
    let _ = writeln!(
        out,
        "lawsuite: {} groups, {} cases, {} violations",
        reports.len(),
        total_cases,
        total_violations
    );
    print!("{out}");

    if let Some(path) = &args.json {
        let doc = serde_json::json!({
            "schema": 1,
            "seed": options.seed,
            "samples": options.samples,
            "suites": reports.iter().map(|report| serde_json::json!({
                "group": report.group_name,
                "order": report.order,
                "exhaustive": report.exhaustive,
                "laws": report.outcomes.iter().map(|law| serde_json::json!({
                    "code": law.code,
                    "description": law.description,
                    "cases": law.cases,
                    "violations": law.violations,
                    "witnesses": law.witnesses,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        write_file(path, &format!("{:#}\n", doc))?;
    }

    Ok(if total_violations == 0 { 0 } else { 1 })
}

// ---- export -------------------------------------------------------------

fn cmd_export(args: ExportArgs) -> Result<i32, String> {
    let (_, group) = args.group.load()?;
    let text = GroupFile::from_group(&group).render();
    match &args.json {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_resolution_requires_exactly_one_source() {
        assert!(parse_family(&None, &None).is_err());
        assert!(parse_family(&Some("edge".into()), &Some("full".into())).is_err());
        assert_eq!(
            parse_family(&Some("vertex".into()), &None).unwrap(),
            Family::Vertex
        );
        assert!(parse_family(&Some("sideways".into()), &None).is_err());
    }
}
