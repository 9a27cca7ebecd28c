use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Serialize;
use superdom::formulas::{gamma_sp_formula, FamilySpec};
use superdom::graph::io::parse_graph6_corpus;
use superdom::harness::{
    check_all_bounds, check_cartesian_bounds, connected_labeled, exhaustive_sweep, vizing_like_scan, RandomCorpus,
    SweepMode,
};
use superdom::invariants::{compute_invariant, InvariantEntry, InvariantKind};
use superdom::superdom::{enumerate_min_superdom_sets, enumerate_pstar, gamma_sp_bnb, lambda, universal_vertex_checks};
use superdom::{Error, LambdaWitness, SuperDomOutcome, VertexSet};

use crate::input::{load_source, parse_vertex_list, GraphInput};
use crate::output::{self, bound_line, identity_line, BoundRow};
use crate::{exit, Common, Format};

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Invariants to compute, comma separated: gamma_sp, gamma, gamma_s,
    /// matching, vertex_cover, independence, two_packing, or `all`
    #[arg(long, value_delimiter = ',', default_value = "gamma_sp")]
    invariants: Vec<String>,
}

#[derive(Serialize)]
struct ComputeReport<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    superdom: &'a SuperDomOutcome,
    /// Closed-form value when the input is a family the formulas cover.
    formula: Option<usize>,
    invariants: Vec<InvariantEntry>,
}

#[derive(Serialize)]
struct ValueRow<'a> {
    name: &'a str,
    value: Option<usize>,
    certificate: String,
    method: &'a str,
}

fn parse_kinds(names: &[String]) -> Result<Vec<InvariantKind>> {
    let mut kinds = Vec::new();
    for name in names {
        if name.trim() == "all" {
            kinds.extend(InvariantKind::ALL);
        } else {
            kinds.push(name.parse()?);
        }
    }
    kinds.sort();
    kinds.dedup();
    Ok(kinds)
}

fn formula_value(family: Option<&FamilySpec>, common: &Common) -> Result<Option<usize>> {
    let Some(spec) = family else { return Ok(None) };
    match gamma_sp_formula(spec, &common.solver()) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotApplicable(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn compute(args: &ComputeArgs, common: &Common) -> Result<u8> {
    let loaded = args.input.load()?;
    let g = &loaded.graph;
    let config = common.solver();
    let kinds = parse_kinds(&args.invariants)?;
    let outcome = gamma_sp_bnb(g, &config)?;
    let formula = formula_value(loaded.family.as_ref(), common)?;
    let invariants = kinds
        .iter()
        .filter(|&&k| k != InvariantKind::GammaSp)
        .map(|&k| compute_invariant(g, k, &config))
        .collect::<superdom::Result<Vec<_>>>()?;

    match common.format {
        Format::Json => output::json(&ComputeReport {
            graph: &loaded.name,
            n: g.order(),
            m: g.size(),
            superdom: &outcome,
            formula,
            invariants: invariants.clone(),
        })?,
        Format::Csv => {
            let mut rows = vec![ValueRow {
                name: "gamma_sp",
                value: outcome.value(),
                certificate: outcome.certificate.set.to_string(),
                method: if outcome.exact { "exact" } else { "interval" },
            }];
            if let Some(v) = formula {
                rows.push(ValueRow {
                    name: "gamma_sp",
                    value: Some(v),
                    certificate: String::new(),
                    method: "formula",
                });
            }
            for e in &invariants {
                rows.push(ValueRow {
                    name: e.name.name(),
                    value: Some(e.value),
                    certificate: serde_json::to_string(&e.certificate)?,
                    method: "exact",
                });
            }
            output::csv_rows(rows)?;
        }
        Format::Human => {
            say!("graph {}: n = {}, m = {}", loaded.name, g.order(), g.size());
            match outcome.value() {
                Some(v) => say!("gamma_sp = {v}"),
                None => say!(
                    "gamma_sp in [{}, {}] (search stopped early)",
                    outcome.lower, outcome.upper
                ),
            }
            let c = &outcome.certificate;
            say!("  D  = {}", c.set);
            say!("  D* = {}", c.witnesses);
            let pairs: Vec<String> = c.assignment.iter().map(|(u, w)| format!("{u}<-{w}")).collect();
            say!("  witnesses: {}", pairs.join(" "));
            if let Some(v) = formula {
                say!("formula value = {v}");
            }
            for e in &invariants {
                say!("{} = {}  {}", e.name, e.value, serde_json::to_string(&e.certificate)?);
            }
        }
    }

    if !outcome.exact {
        return Ok(exit::TIMEOUT);
    }
    if formula.is_some_and(|v| Some(v) != outcome.value()) {
        eprintln!("formula and solver disagree");
        return Ok(exit::VIOLATION);
    }
    Ok(exit::OK)
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
}

pub fn verify(args: &VerifyArgs, common: &Common) -> Result<u8> {
    let loaded = args.input.load()?;
    let report = check_all_bounds(loaded.name.clone(), &loaded.graph, &common.solver())?;
    match common.format {
        Format::Json => output::json(&report)?,
        Format::Csv => output::csv_rows(
            report
                .entries
                .iter()
                .map(|e| BoundRow::new(&report.graph_id, e))
                .chain(report.identities.iter().map(|c| BoundRow::identity(&report.graph_id, c))),
        )?,
        Format::Human => {
            say!("graph {}: n = {}, m = {}", report.graph_id, report.n, report.m);
            if let Some(why) = &report.skipped {
                say!("skipped: {why}");
            } else {
                say!("gamma_sp = {}", report.gamma_sp.unwrap_or_default());
                for e in &report.entries {
                    say!("{}", bound_line(e));
                }
                for c in &report.identities {
                    say!("{}", identity_line(c));
                }
                let tight = report.tight();
                say!(
                    "{} violation(s); tight: {}",
                    report.violations().count() + report.identity_failures().count(),
                    if tight.is_empty() { "none".to_string() } else { tight.join(", ") }
                );
            }
        }
    }
    Ok(if report.skipped.is_some() {
        exit::TIMEOUT
    } else if report.is_clean() {
        exit::OK
    } else {
        exit::VIOLATION
    })
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// First factor: a family spec, `g6:<code>` or `file:<path>`
    #[arg(long)]
    left: String,
    /// Second factor, same forms as --left
    #[arg(long)]
    right: String,
}

pub fn product(args: &ProductArgs, common: &Common) -> Result<u8> {
    let left = load_source(&args.left)?;
    let right = load_source(&args.right)?;
    let report = check_cartesian_bounds(&left.graph, &right.graph, &common.solver())?;
    let formula = match (left.family, right.family) {
        (Some(a), Some(b)) => formula_value(Some(&FamilySpec::cartesian(a, b)), common)?,
        _ => None,
    };
    let id = format!("({})x({})", left.name, right.name);
    match common.format {
        Format::Json => {
            #[derive(Serialize)]
            struct ProductOut<'a> {
                product: &'a str,
                formula: Option<usize>,
                #[serde(flatten)]
                report: &'a superdom::harness::CartesianReport,
            }
            output::json(&ProductOut {
                product: &id,
                formula,
                report: &report,
            })?
        }
        Format::Csv => output::csv_rows(report.entries.iter().map(|e| BoundRow::new(&id, e)))?,
        Format::Human => {
            say!(
                "product {id}: n = {}, n' = {}, gamma_sp(G) = {}, gamma_sp(H) = {}",
                report.n, report.n_prime, report.gamma_sp_g, report.gamma_sp_h
            );
            match report.gamma_sp_product {
                Some(v) => say!("gamma_sp(G□H) = {v}"),
                None => say!("gamma_sp(G□H) unknown (bounds only)"),
            }
            if let Some(v) = formula {
                say!("formula value = {v}");
            }
            for e in &report.entries {
                say!("{}", bound_line(e));
            }
        }
    }
    let mismatch = formula.is_some() && report.gamma_sp_product.is_some() && formula != report.gamma_sp_product;
    Ok(if report.violations().next().is_some() || mismatch {
        exit::VIOLATION
    } else {
        exit::OK
    })
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true))]
pub struct SweepArgs {
    /// Every labeled graph up to this order (at most 6)
    #[arg(long, group = "mode")]
    all_labeled: Option<usize>,
    /// Smallest order for --all-labeled
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    /// Skip graphs with isolated vertices (--all-labeled)
    #[arg(long)]
    isolate_free: bool,
    /// graph6 corpus file, one graph per line
    #[arg(long, group = "mode")]
    g6_file: Option<PathBuf>,
    /// Number of seeded random graphs
    #[arg(long, group = "mode", requires = "seed")]
    random: Option<usize>,
    #[arg(long, default_value_t = 7)]
    n_min: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    /// Edge probabilities, cycled over the corpus
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    densities: Vec<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Include every per-graph report in the output
    #[arg(long)]
    reports: bool,
}

pub fn sweep(args: &SweepArgs, common: &Common) -> Result<u8> {
    let mode = if let Some(n_max) = args.all_labeled {
        SweepMode::AllLabeled {
            n_min: args.min_n,
            n_max,
            isolate_free: args.isolate_free,
        }
    } else if let Some(path) = &args.g6_file {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut graphs = Vec::new();
        let mut bad = 0;
        for (i, parsed) in parse_graph6_corpus(&text).into_iter().enumerate() {
            match parsed {
                Ok(g) => graphs.push((format!("{}:{}", path.display(), i + 1), g)),
                Err((line, e)) => {
                    eprintln!("{}:{line}: {e}", path.display());
                    bad += 1;
                }
            }
        }
        if bad > 0 {
            bail!(Error::Parse(format!("{bad} line(s) of the corpus failed to parse")));
        }
        SweepMode::Corpus(graphs)
    } else if let Some(count) = args.random {
        SweepMode::Random(RandomCorpus {
            count,
            n_min: args.n_min,
            n_max: args.n_max,
            densities: args.densities.clone(),
            seed: args.seed.expect("clap enforces --seed with --random"),
        })
    } else {
        unreachable!("clap requires one sweep mode")
    };
    let outcome = exhaustive_sweep(&mode, &common.solver(), common.workers())?;
    let summary = &outcome.summary;
    match common.format {
        Format::Json => {
            if args.reports {
                output::json(&outcome)?
            } else {
                output::json(summary)?
            }
        }
        Format::Csv => {
            if args.reports {
                output::csv_rows(outcome.reports.iter().flat_map(|r| {
                    r.entries
                        .iter()
                        .map(|e| BoundRow::new(&r.graph_id, e))
                        .chain(r.identities.iter().map(|c| BoundRow::identity(&r.graph_id, c)))
                }))?
            } else {
                #[derive(Serialize)]
                struct StatRow<'a> {
                    bound: &'a str,
                    applicable: usize,
                    holds: usize,
                    violated: usize,
                    tight: usize,
                }
                output::csv_rows(summary.per_bound.iter().chain(&summary.identities).map(|(name, s)| StatRow {
                    bound: name,
                    applicable: s.applicable,
                    holds: s.holds,
                    violated: s.violated,
                    tight: s.tight,
                }))?
            }
        }
        Format::Human => {
            say!(
                "{} graph(s), {} skipped, {} violation(s), {} identity failure(s)",
                summary.graphs,
                summary.skipped,
                summary.violations.len(),
                summary.identity_failures.len()
            );
            say!("{:<28} {:>10} {:>10} {:>8}", "bound", "applicable", "violated", "tight");
            for (name, s) in summary.per_bound.iter().chain(&summary.identities) {
                say!("{name:<28} {:>10} {:>10} {:>8}", s.applicable, s.violated, s.tight);
            }
            for v in summary.violations.iter().chain(&summary.identity_failures) {
                say!("VIOLATION {} {} lhs={:?} rhs={:?}", v.graph_id, v.bound, v.lhs, v.rhs);
            }
        }
    }
    Ok(if !summary.is_clean() {
        exit::VIOLATION
    } else if summary.skipped > 0 {
        exit::TIMEOUT
    } else {
        exit::OK
    })
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Only list P(S) for this minimum super dominating set, e.g. `0,2,4`
    #[arg(long)]
    set: Option<String>,
}

#[derive(Serialize)]
struct FamilyEntry {
    set: VertexSet,
    pstar: Vec<VertexSet>,
}

#[derive(Serialize)]
struct EnumerateReport {
    gamma_sp: usize,
    sets: Vec<FamilyEntry>,
    lambda: Option<LambdaWitness>,
    universal: Option<superdom::superdom::UniversalReport>,
}

pub fn enumerate(args: &EnumerateArgs, common: &Common) -> Result<u8> {
    let loaded = args.input.load()?;
    let g = &loaded.graph;
    let config = common.solver();
    let report = if let Some(set) = &args.set {
        let s = VertexSet::from_vertices(g.order(), parse_vertex_list(set)?.into_iter().filter(|&v| v < g.order()));
        if parse_vertex_list(set)?.iter().any(|&v| v >= g.order()) {
            bail!(Error::VertexOutOfRange {
                vertex: parse_vertex_list(set)?.into_iter().max().unwrap_or(0),
                n: g.order(),
            });
        }
        let pstar = enumerate_pstar(g, &s, &config)?;
        EnumerateReport {
            gamma_sp: s.len(),
            sets: vec![FamilyEntry { set: s, pstar }],
            lambda: None,
            universal: None,
        }
    } else {
        let sets = enumerate_min_superdom_sets(g, &config)?;
        let entries = sets
            .into_iter()
            .map(|s| {
                let pstar = enumerate_pstar(g, &s, &config)?;
                Ok(FamilyEntry { set: s, pstar })
            })
            .collect::<superdom::Result<Vec<_>>>()?;
        let (_, witness) = lambda(g, &config)?;
        let universal = match universal_vertex_checks(g, &config) {
            Ok(r) => Some(r),
            Err(Error::NotApplicable(_)) => None,
            Err(e) => return Err(e.into()),
        };
        EnumerateReport {
            gamma_sp: entries.first().map_or(0, |e| e.set.len()),
            sets: entries,
            lambda: Some(witness),
            universal,
        }
    };
    match common.format {
        Format::Json => output::json(&report)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                set: String,
                pstar: String,
            }
            output::csv_rows(report.sets.iter().flat_map(|e| {
                e.pstar.iter().map(|p| Row {
                    set: e.set.to_string(),
                    pstar: p.to_string(),
                })
            }))?
        }
        Format::Human => {
            say!("gamma_sp = {}, |S(G)| listed = {}", report.gamma_sp, report.sets.len());
            for e in &report.sets {
                let ps: Vec<String> = e.pstar.iter().map(|p| p.to_string()).collect();
                say!("S = {}  P(S) = [{}]", e.set, ps.join(", "));
            }
            if let Some(w) = &report.lambda {
                say!("lambda = {} (S = {}, S* = {}, X = {})", w.value, w.set, w.witnesses, w.free);
            }
            if let Some(u) = &report.universal {
                say!(
                    "universal vertices {:?}: hypothesis {}, degree-one count {}, lambda >= I: {}",
                    u.universal,
                    u.universal_free,
                    u.degree_one,
                    u.lambda_covers_degree_one.map_or("n/a".to_string(), |b| b.to_string())
                );
            }
        }
    }
    let universal_broken = report
        .universal
        .as_ref()
        .is_some_and(|u| !u.blocked_forces_n_minus_one || u.lambda_covers_degree_one == Some(false));
    Ok(if universal_broken { exit::VIOLATION } else { exit::OK })
}

#[derive(Debug, Args)]
pub struct VizingArgs {
    /// Largest factor order; every connected labeled graph up to it is used
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Use the graphs of this graph6 file instead
    #[arg(long)]
    g6_file: Option<PathBuf>,
}

pub fn vizing(args: &VizingArgs, common: &Common) -> Result<u8> {
    let corpus = match &args.g6_file {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_graph6_corpus(&text)
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    r.map(|g| (format!("{}:{}", path.display(), i + 1), g))
                        .map_err(|(line, e)| Error::Parse(format!("{}:{line}: {e}", path.display())))
                })
                .collect::<superdom::Result<Vec<_>>>()?
        }
        None => connected_labeled(args.max_n)?,
    };
    let report = vizing_like_scan(&corpus, &common.solver(), common.workers())?;
    match common.format {
        Format::Json => output::json(&report)?,
        Format::Csv => output::csv_rows(report.pairs.iter())?,
        Format::Human => {
            say!(
                "{} graph(s), {} pair(s) checked, {} skipped, {} counterexample(s)",
                corpus.len(),
                report.pairs_checked,
                report.pairs_skipped,
                report.counterexamples.len()
            );
            for c in &report.counterexamples {
                say!("COUNTEREXAMPLE {} x {}: {}", c.g_id, c.h_id, serde_json::to_string(c)?);
            }
        }
    }
    Ok(if report.counterexamples.is_empty() {
        exit::OK
    } else {
        exit::VIOLATION
    })
}
